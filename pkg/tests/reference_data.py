"""Independently tabulated expected values used across the test suite.

Moment rows, polynomial coefficient lists, and orthogonal polynomials are
reference tables; every entry was cross-checked against at least one
independent computational route before being frozen here.
"""

from fractions import Fraction

F = Fraction

# d(m, n) for n = 0.. (row lengths as tabulated)
MOMENT_ROWS = {
    2: [1, 2, 7, 29, 131, 625, 3099, 15818, 82595],
    3: [1, 3, 15, 87, 544, 3566, 24165, 167904],
    4: [1, 4, 26, 194, 1551, 12944, 111313, 979009],
    5: [1, 5, 40, 365, 3555, 36045, 375797, 4000226, 43279506],
    6: [1, 6, 57, 615, 7064, 84307, 1033089, 12909546, 163799094],
    7: [1, 7, 77, 959, 12691, 174265, 2454221, 35215061, 512675782],
    8: [1, 8, 100, 1412, 21154, 328496, 5227522, 84698378, 1391557207],
    9: [1, 9, 126, 1989, 33276, 576564, 10230750, 184733379, 3380878107],
    10: [1, 10, 155, 2705, 49985, 955965, 18713619, 372615462, 7517051642],
}

# d(., n) as polynomials in m, ascending coefficients (constant term first)
MOMENT_POLYNOMIALS = {
    0: (F(1),),
    1: (F(0), F(1)),
    2: (F(0), F(1, 2), F(3, 2)),
    3: (F(0), F(1, 2), F(2), F(5, 2)),
    4: (F(0), F(7, 12), F(25, 8), F(71, 12), F(35, 8)),
    5: (F(0), F(2, 3), F(5), F(311, 24), F(31, 2), F(63, 8)),
    6: (F(0), F(13, 20), F(91, 12), F(429, 16), F(2135, 48), F(3043, 80), F(231, 16)),
    7: (
        F(0), F(9, 20), F(51, 5), F(2453, 48), F(685, 6), F(4099, 30), F(2689, 30),
        F(429, 16),
    ),
}

# monic orthogonal polynomials for the 2-fold power, ascending coefficients
ORTHOGONAL_POLYS_M2 = {
    1: (F(0), F(1)),
    3: (F(0), F(-7, 2), F(0), F(1)),
    4: (F(3), F(0), F(-5), F(0), F(1)),
    5: (F(0), F(76, 9), F(0), F(-59, 9), F(0), F(1)),
    6: (F(-100, 21), F(0), F(344, 21), F(0), F(-57, 7), F(0), F(1)),
    7: (F(0), F(-452, 25), F(0), F(668, 25), F(0), F(-243, 25), F(0), F(1)),
    8: (
        F(681, 92), F(0), F(-2003, 46), F(0), F(14491, 368), F(0), F(-4149, 368), F(0),
        F(1),
    ),
    9: (
        F(0), F(8039, 227), F(0), F(-77127, 908), F(0), F(49429, 908), F(0),
        F(-2911, 227), F(0), F(1),
    ),
    10: (
        F(-59841, 5177), F(0), F(535355, 5177), F(0), F(-758082, 5177), F(0),
        F(372967, 5177), F(0), F(-74473, 5177), F(0), F(1),
    ),
}

# the tabulated degree-2 entry breaks the even/odd parity pattern; the value
# derived from the moments is x^2 - 2
P2_PRINTED = (F(0), F(-1), F(1))
P2_DERIVED = (F(-2), F(0), F(1))
