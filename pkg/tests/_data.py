"""Shared worked-example inputs: quandle tables, cocycles and endomorphisms.

All element labels are 1-based.  Cocycle expressions use the parse_cochain
grammar so the tests exercise the parser on realistic input.
"""

from quandlequiver.algebra import QuandleMap, validate_quandle
from quandlequiver.chain import parse_cochain

# connected 4-element quandle
Q4A = validate_quandle(
    [
        [1, 3, 4, 2],
        [4, 2, 1, 3],
        [2, 4, 3, 1],
        [3, 1, 2, 4],
    ]
)

# 4-element quandle with a single non-trivial column
Q4B = validate_quandle(
    [
        [1, 1, 1, 1],
        [4, 2, 2, 2],
        [3, 3, 3, 3],
        [2, 4, 4, 4],
    ]
)

# 6-element quandle used for the batch tables
Q6 = validate_quandle(
    [
        [1, 3, 2, 5, 4, 1],
        [3, 2, 1, 6, 2, 4],
        [2, 1, 3, 3, 6, 5],
        [5, 6, 4, 4, 1, 2],
        [4, 5, 6, 1, 5, 3],
        [6, 4, 5, 2, 3, 6],
    ]
)

# 3-element quandle: column 3 swaps 1 and 2
Q3 = validate_quandle(
    [
        [1, 1, 2],
        [2, 2, 1],
        [3, 3, 3],
    ]
)

# dihedral quandle of order 4 (x > y = 2y - x mod 4)
Q4D = validate_quandle(
    [
        [1, 3, 1, 3],
        [4, 2, 4, 2],
        [3, 1, 3, 1],
        [2, 4, 2, 4],
    ]
)


def dihedral_quandle(n: int):
    """x > y = 2y - x mod n on labels 1..n."""
    return validate_quandle(
        [[((2 * y - x - 1) % n) + 1 for y in range(1, n + 1)] for x in range(1, n + 1)]
    )


def trivial_quandle(n: int):
    """x > y = x."""
    return validate_quandle([[x] * n for x in range(1, n + 1)])


# Z/4 cocycle on Q4B
PHI_Z4_Q4B = parse_cochain(
    "x(1,2)+2x(1,3)+x(1,4)+2x(2,1)+3x(3,2)+3x(3,4)+x(4,1)", 4, 4
)

# Z/3 cocycle on Q6
PHI_Z3_Q6 = parse_cochain(
    "2x(1,2)+2x(1,3)+2x(1,4)+2x(1,5)+x(2,3)+2x(2,4)+x(3,2)+2x(3,5)"
    "+2x(4,2)+x(4,5)+2x(5,3)+x(5,4)+x(6,2)+x(6,3)+x(6,4)+x(6,5)",
    6,
    3,
)

# Z/4 cocycle on Q6 used for the batch tables
PHI_Z4_Q6 = parse_cochain(
    "x(1,3)+3x(1,4)+2x(1,5)+3x(2,1)+3x(2,3)+2x(2,4)+x(2,5)"
    "+x(3,1)+3x(3,5)+3x(3,6)+x(4,1)+x(4,2)+2x(4,5)+3x(4,6)"
    "+3x(5,1)+x(5,4)+x(5,6)+3x(6,2)+3x(6,4)+x(6,5)",
    6,
    4,
)

# Z/5 cocycle on Q3
PHI_Z5_Q3 = parse_cochain("2x(1,3)+3x(2,3)+4x(3,1)+4x(3,2)", 3, 5)

F_Q4B = QuandleMap(4, 4, (4, 3, 3, 3))
F_Q6 = QuandleMap(6, 6, (2, 4, 6, 6, 4, 2))
F1_Q6 = QuandleMap(6, 6, (1, 2, 3, 3, 2, 1))
F2_Q6 = QuandleMap(6, 6, (1, 5, 4, 3, 2, 6))
F3_Q6 = QuandleMap(6, 6, (3, 1, 2, 5, 6, 4))
F_Q3_FOLD = QuandleMap(3, 3, (1, 1, 2))
F_Q3_SWAP = QuandleMap(3, 3, (2, 1, 3))
F_Q4D = QuandleMap(4, 4, (4, 2, 4, 2))
