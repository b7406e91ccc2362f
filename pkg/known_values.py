"""
File: known_values.py
Created: 2026-10-19
Purpose: Published values of e(n), the number of free polyominoes with n cells and
         minimum perimeter, embedded as constants so `cli.py verify` runs offline.
Input: none
Output: KNOWN_VALUES (a KnownValuesCorpus)

Provenance: the three value lists printed with the closed-form count of minimum-perimeter
polyominoes (e(n) for n <= 144, e(s^2+1) and e(s^2+s+1) for s <= 49), copied digit for digit.
"""

from dataclasses import dataclass
from typing import Dict, Tuple


@dataclass(frozen=True)
class KnownValuesCorpus:
    e_list: Tuple[int, ...]       # e(n), n = 1..
    e_sq_plus_1: Tuple[int, ...]  # e(s^2 + 1), s = 1..
    e_sq_s_1: Tuple[int, ...]     # e(s^2 + s + 1), s = 1..

    def indexed(self) -> Dict[str, Dict[int, Tuple[int, int]]]:
        """list name -> {position: (n, published value)}, positions 1-based."""
        return {
            "e_list": {i: (i, v) for i, v in enumerate(self.e_list, 1)},
            "e_sq_plus_1": {s: (s * s + 1, v) for s, v in enumerate(self.e_sq_plus_1, 1)},
            "e_sq_s_1": {s: (s * s + s + 1, v) for s, v in enumerate(self.e_sq_s_1, 1)},
        }


E_LIST = (
    1, 1, 2, 1, 1, 1, 4, 2, 1, 6, 1, 1, 11, 4, 2, 1, 11, 6, 1, 1, 28, 11, 4, 2, 1, 35, 11,
    6, 1, 1, 65, 28, 11, 4, 2, 1, 73, 35, 11, 6, 1, 1, 147, 65, 28, 11, 4, 2, 1, 182, 73,
    35, 11, 6, 1, 1, 321, 147, 65, 28, 11, 4, 2, 1, 374, 182, 73, 35, 11, 6, 1, 1, 678, 321,
    147, 65, 28, 11, 4, 2, 1, 816, 374, 182, 73, 35, 11, 6, 1, 1, 1382, 678, 321, 147, 65,
    28, 11, 4, 2, 1, 1615, 816, 374, 182, 73, 35, 11, 6, 1, 1, 2738, 1382, 678, 321, 147,
    65, 28, 11, 4, 2, 1, 3244, 1615, 816, 374, 182, 73, 35, 11, 6, 1, 1, 5289, 2738, 1382,
    678, 321, 147, 65, 28, 11, 4, 2, 1,
)

E_SQ_PLUS_1 = (
    1, 1, 6, 11, 35, 73, 182, 374, 816, 1615, 3244, 6160, 11678, 21353, 38742, 68541,
    120082, 206448, 351386, 589237, 978626, 1605582, 2610694, 4201319, 6705559, 10607058,
    16652362, 25937765, 40122446, 61629301, 94066442, 142668403, 215124896, 322514429,
    480921808, 713356789, 1052884464, 1546475040, 2261006940, 3290837242, 4769203920,
    6882855246, 9893497078, 14165630358, 20206501603, 28718344953, 40672085930, 57404156326,
    80751193346,
)

E_SQ_S_1 = (
    2, 4, 11, 28, 65, 147, 321, 678, 1382, 2738, 5289, 9985, 18452, 33455, 59616, 104556,
    180690, 308058, 518648, 863037, 1420480, 2314170, 3734063, 5970888, 9466452, 14887746,
    23235296, 36000876, 55395893, 84680624, 128636339, 194239572, 291620864, 435422540,
    646713658, 955680734, 1405394420, 2057063947, 2997341230, 4348440733, 6282115350,
    9038897722, 12954509822, 18496005656, 26311093101, 37295254695, 52682844248,
    74170401088, 104083151128,
)

KNOWN_VALUES = KnownValuesCorpus(e_list=E_LIST, e_sq_plus_1=E_SQ_PLUS_1, e_sq_s_1=E_SQ_S_1)
