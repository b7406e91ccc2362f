"""
File: cli.py
Created: 2026-10-19
Purpose: Command-line front end for the minimum-perimeter polyomino tools.

    python cli.py compute N
    python cli.py table FROM TO [--format csv|bfile]
    python cli.py verify
    python cli.py enumerate N [--format ascii|svg] [--out-dir DIR] [--cap CAP]
    python cli.py oracle NMAX [--cap CAP]

Input: command-line arguments only
Output: plain text on stdout (one line per result), renderings under --out-dir,
        [INFO]/[WARN]/[ERROR] messages on stderr
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

from counting import classify, count_extremal, max_common_edges, min_perimeter, tabulate
from known_values import KNOWN_VALUES, KnownValuesCorpus
from oracle import LEMMA_CORPUS_MAX, ORACLE_CAP, check_lemmas, compare_order, enumerate_free
from shapes import FILE_EXTENSIONS, SHAPES_CAP, CapExceededError, enumerate_extremal_report, render

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s [%(levelname)s] %(message)s'


@dataclass(frozen=True)
class ListVerdict:
    name: str
    checked: int
    passed: int
    first_mismatch: Optional[tuple] = None  # (n, published, computed)

    @property
    def ok(self) -> bool:
        return self.passed == self.checked

    def __str__(self) -> str:
        line = f"{self.name}: {self.passed}/{self.checked} {'OK' if self.ok else 'FAIL'}"
        if self.first_mismatch:
            n, published, computed = self.first_mismatch
            line += f" (first mismatch n={n}: published {published}, computed {computed})"
        return line


def verify_corpus(corpus: KnownValuesCorpus) -> List[ListVerdict]:
    """Recompute every published value; one verdict per list."""
    verdicts = []
    for name, entries in corpus.indexed().items():
        passed = 0
        first = None
        for _, (n, published) in sorted(entries.items()):
            computed = count_extremal(n)
            if computed == published:
                passed += 1
            elif first is None:
                first = (n, published, computed)
                logger.warning(f"[WARN] {name}: e({n}) published {published}, computed {computed}")
        verdicts.append(ListVerdict(name, len(entries), passed, first))
    return verdicts


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_compute(args) -> int:
    n = args.n
    print(f"{n} {min_perimeter(n)} {max_common_edges(n)} {classify(n).case_tag} {count_extremal(n)}")
    return 0


def cmd_table(args) -> int:
    table = tabulate(args.start, args.to)
    if args.format == "csv":
        table[["n", "p", "B", "e"]].to_csv(sys.stdout, index=False, lineterminator="\n")
    else:
        for n, e in zip(table["n"], table["e"]):
            print(f"{n} {e}")
    return 0


def cmd_verify(args) -> int:
    verdicts = verify_corpus(KNOWN_VALUES)
    print("; ".join(str(v) for v in verdicts))
    return 0 if all(v.ok for v in verdicts) else 1


def cmd_enumerate(args) -> int:
    report = enumerate_extremal_report(args.n, cap=args.cap, progress=args.progress)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    ext = FILE_EXTENSIONS[args.format]
    for index, shape in enumerate(report.shapes, 1):
        text = render(shape, args.format)
        if not text.endswith("\n"):
            text += "\n"
        (out_dir / f"poly_{args.n}_{index}.{ext}").write_text(text)
    logger.info(f"[OK] Wrote {report.count} file(s) to {out_dir}")
    print(report.count)
    return 0


def cmd_oracle(args) -> int:
    if args.n_max > args.cap:
        raise CapExceededError(args.n_max, args.cap, "oracle run")
    enumerate_free(args.n_max, cap=args.cap, progress=args.progress)

    all_agree = True
    for n in range(1, args.n_max + 1):
        row = compare_order(n, cap=args.cap)
        (fp, fb, fe), (bp, bb, be) = row.formula, row.brute_force
        status = "OK" if row.agrees else "MISMATCH"
        print(f"{n} p={fp}/{bp} B={fb}/{bb} e={fe}/{be} shapes={'same' if row.shape_sets_match else 'differ'} {status}")
        all_agree = all_agree and row.agrees

    lemma_max = min(args.n_max, LEMMA_CORPUS_MAX)
    if lemma_max >= 2:
        report = check_lemmas(lemma_max, cap=args.cap)
        print(f"lemmas n<={lemma_max}: {report.summary()} {'OK' if report.ok else 'FAIL'}")
        all_agree = all_agree and report.ok
    return 0 if all_agree else 1


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Minimum-perimeter polyominoes: counts, tables, shapes and checks')
    parser.add_argument('--verbose', action='store_true', help='Debug logging on stderr')
    parser.add_argument('--no-progress', dest='progress', action='store_false',
                        help='Hide tqdm progress bars')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('compute', help='Print "n p B case e" for one n')
    p.add_argument('n', type=positive_int)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser('table', help='Tabulate a range of n')
    p.add_argument('start', metavar='FROM', type=positive_int)
    p.add_argument('to', metavar='TO', type=positive_int)
    p.add_argument('--format', choices=['csv', 'bfile'], default='csv')
    p.set_defaults(func=cmd_table)

    p = sub.add_parser('verify', help='Check e(n) against the published value lists')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('enumerate', help='Write every minimum-perimeter n-omino to files')
    p.add_argument('n', type=positive_int)
    p.add_argument('--format', choices=sorted(FILE_EXTENSIONS), default='ascii')
    p.add_argument('--out-dir', default='.', help='Output directory (default: current)')
    p.add_argument('--cap', type=positive_int, default=SHAPES_CAP,
                   help=f'Largest n to enumerate (default: {SHAPES_CAP})')
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser('oracle', help='Compare formulas with brute force for n <= NMAX')
    p.add_argument('n_max', metavar='NMAX', type=positive_int)
    p.add_argument('--cap', type=positive_int, default=ORACLE_CAP,
                   help=f'Largest n for brute force (default: {ORACLE_CAP})')
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == 'table' and args.to < args.start:
        parser.error(f"table: TO ({args.to}) must be >= FROM ({args.start})")

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )

    try:
        return args.func(args)
    except (CapExceededError, ValueError) as e:
        print(f"[ERROR] {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
