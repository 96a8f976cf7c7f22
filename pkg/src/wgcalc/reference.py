"""Published reference values used by ``verify-all``.

Scaled tables list ``d!^2 Wg(d, mu)`` for ``mu`` of ``d`` in table order
(parts written increasingly, lexicographic), as ``(parts, numerator)`` over a
common denominator.
"""

from __future__ import annotations

from fractions import Fraction

from .partitions import Partition

__all__ = ["SCALED_TABLES", "scaled_reference", "S4_CONNECTION", "S5_TOP_PRODUCTS", "TOP_S4", "TOP_S5"]

_RAW = {
    2: (3, [((1, 1), 4), ((2,), -2)]),
    3: (10, [((1, 1, 1), 21), ((1, 2), -9), ((3,), 6)]),
    4: (35, [((1, 1, 1, 1), 134), ((1, 1, 2), -48), ((1, 3), 29), ((2, 2), 22), ((4,), -20)]),
    5: (126, [
        ((1, 1, 1, 1, 1), 1015), ((1, 1, 1, 2), -299), ((1, 1, 3), 160), ((1, 2, 2), 115),
        ((1, 4), -101), ((2, 3), -74), ((5,), 70),
    ]),
    6: (1617, [
        ((1,) * 6, 31524), ((1, 1, 1, 1, 2), -7614), ((1, 1, 1, 3), 3540), ((1, 1, 2, 2), 2396),
        ((1, 1, 4), -2004), ((1, 2, 3), -1377), ((1, 5), 1274), ((2, 2, 2), -1014),
        ((2, 4), 922), ((3, 3), 900), ((6,), -882),
    ]),
    7: (3432, [
        ((1,) * 7, 184849), ((1, 1, 1, 1, 1, 2), -36957), ((1, 1, 1, 1, 3), 14770),
        ((1, 1, 1, 2, 2), 9401), ((1, 1, 1, 4), -7369), ((1, 1, 2, 3), -4704),
        ((1, 1, 5), 4214), ((1, 2, 2, 2), -3261), ((1, 2, 4), 2849), ((1, 3, 3), 2758),
        ((1, 6), -2676), ((2, 2, 3), 2030), ((2, 5), -1922), ((3, 4), -1870), ((7,), 1848),
    ]),
    8: (19305, [
        ((1,) * 8, 3245092), ((1,) * 6 + (2,), -546368), ((1,) * 5 + (3,), 187642),
        ((1, 1, 1, 1, 2, 2), 112828), ((1, 1, 1, 1, 4), -81680), ((1, 1, 1, 2, 3), -48224),
        ((1, 1, 1, 5), 41332), ((1, 1, 2, 2, 2), -31296), ((1, 1, 2, 4), 25824),
        ((1, 1, 3, 3), 24718), ((1, 1, 6), -23616), ((1, 2, 2, 3), 17122),
        ((1, 2, 5), -15808), ((1, 3, 4), -15224), ((1, 7), 14949), ((2, 2, 2, 2), 12276),
        ((2, 2, 4), -11152), ((2, 3, 3), -10880), ((2, 6), 10674), ((3, 5), 10387),
        ((4, 4), 10348), ((8,), -10296),
    ]),
}


def scaled_reference(d: int) -> list[tuple[Partition, Fraction]]:
    den, rows = _RAW[d]
    return [(Partition.from_parts(parts), Fraction(num, den)) for parts, num in rows]


SCALED_TABLES = {d: scaled_reference(d) for d in _RAW}

# C_a * C_b in S_4 for a, b among [2,1,1], [3,1], [2,2], [4]
S4_CONNECTION = {
    ((2, 1, 1), (2, 1, 1)): {(1, 1, 1, 1): 6, (3, 1): 3, (2, 2): 2},
    ((2, 1, 1), (3, 1)): {(2, 1, 1): 4, (4,): 4},
    ((2, 1, 1), (2, 2)): {(2, 1, 1): 1, (4,): 2},
    ((2, 1, 1), (4,)): {(3, 1): 3, (2, 2): 4},
    ((3, 1), (3, 1)): {(1, 1, 1, 1): 8, (3, 1): 4, (2, 2): 8},
    ((3, 1), (2, 2)): {(3, 1): 3},
    ((3, 1), (4,)): {(2, 1, 1): 4, (4,): 4},
    ((2, 2), (2, 2)): {(1, 1, 1, 1): 3, (2, 2): 2},
    ((2, 2), (4,)): {(2, 1, 1): 2, (4,): 1},
    ((4,), (4,)): {(1, 1, 1, 1): 6, (3, 1): 3, (2, 2): 2},
}

# length-additive parts of C_a * C_b in S_5; omitted pairs vanish
_A, _B, _C, _D, _E, _F = (2, 1, 1, 1), (3, 1, 1), (2, 2, 1), (4, 1), (3, 2), (5,)
S5_TOP_PRODUCTS = {
    (_A, _A): {_B: 3, _C: 2},
    (_A, _B): {_D: 4, _E: 1},
    (_A, _C): {_D: 2, _E: 3},
    (_A, _D): {_F: 5},
    (_A, _E): {_F: 5},
    (_B, _B): {_F: 5},
    (_B, _C): {_F: 5},
    (_C, _C): {_F: 5},
}

TOP_S4 = {(2, 1, 1): -1, (3, 1): 2, (2, 2): 1, (4,): -5}
TOP_S5 = {_A: -1, _B: 2, _C: 1, _D: -5, _E: -2, _F: 14}
