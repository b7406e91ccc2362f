"""Shared pytest setup: the repo root is on sys.path via this file's location."""


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: long sweeps (oracle at n = 12, construction up to n = 400); deselect with -m 'not slow'"
    )
