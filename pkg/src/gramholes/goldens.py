"""Golden matrices and factored determinants used as regression targets.

Polynomials are strings in the package's text grammar; factored forms are
``(sign, [(factor, exponent), ...])``.  Matrices agree with the computed ones
only up to a simultaneous permutation of rows and columns.
"""

from __future__ import annotations

G1_MATRIX = (
    ('d', 'y2', 'x2', 'z2'),
    ('y1', 'z1', 'z3', 'x1'),
    ('x1', 'z3', 'z1', 'y1'),
    ('z2', 'x2', 'y2', 'd'),
)

DET_G1_FACTORS = (1, [("(d+z2)*(z1+z3)-(x1+y1)*(x2+y2)", 1), ("(d-z2)*(z1-z3)-(x1-y1)*(x2-y2)", 1)])

G2_MATRIX = (
    ('d^2', 'd*y2', 'd*x2', 'd*z2', 'z2', 'x2', 'y2', 'd', 'y2*z2', 'x2*z2', 'z2^2', 'z2', 'x2', 'y2', 'y2^2', 'x2^2', 'z2', 'z2'),
    ('d*y1', 'd*z1', 'd*z3', 'd*x1', 'x1', 'z3', 'z1', 'y1', 'x1*y2', 'x1*x2', 'x1*z2', 'x1', 'z3', 'z1', 'y2*z1', 'x2*z3', 'x1', 'x1'),
    ('d*x1', 'd*z3', 'd*z1', 'd*y1', 'y1', 'z1', 'z3', 'x1', 'y1*y2', 'x2*y1', 'y1*z2', 'y1', 'z1', 'z3', 'y2*z3', 'x2*z1', 'y1', 'y1'),
    ('d*z2', 'd*x2', 'd*y2', 'd^2', 'd', 'y2', 'x2', 'z2', 'd*y2', 'd*x2', 'd*z2', 'd', 'y2', 'x2', 'x2*y2', 'x2*y2', 'd', 'd'),
    ('z2', 'x2', 'y2', 'd', 'd^2', 'd*y2', 'd*x2', 'd*z2', 'y2', 'x2', 'z2', 'z2^2', 'x2*z2', 'y2*z2', 'z2', 'z2', 'x2^2', 'y2^2'),
    ('x1', 'z3', 'z1', 'y1', 'd*y1', 'd*z1', 'd*z3', 'd*x1', 'z1', 'z3', 'x1', 'x1*z2', 'x1*x2', 'x1*y2', 'x1', 'x1', 'x2*z3', 'y2*z1'),
    ('y1', 'z1', 'z3', 'x1', 'd*x1', 'd*z3', 'd*z1', 'd*y1', 'z3', 'z1', 'y1', 'y1*z2', 'x2*y1', 'y1*y2', 'y1', 'y1', 'x2*z1', 'y2*z3'),
    ('d', 'y2', 'x2', 'z2', 'd*z2', 'd*x2', 'd*y2', 'd^2', 'x2', 'y2', 'd', 'd*z2', 'd*x2', 'd*y2', 'd', 'd', 'x2*y2', 'x2*y2'),
    ('y1*z2', 'x2*y1', 'y1*y2', 'd*y1', 'y1', 'z1', 'z3', 'x1', 'd*z1', 'd*z3', 'd*x1', 'y1', 'z1', 'z3', 'x2*z1', 'y2*z3', 'y1', 'y1'),
    ('x1*z2', 'x1*x2', 'x1*y2', 'd*x1', 'x1', 'z3', 'z1', 'y1', 'd*z3', 'd*z1', 'd*y1', 'x1', 'z3', 'z1', 'x2*z3', 'y2*z1', 'x1', 'x1'),
    ('z2^2', 'x2*z2', 'y2*z2', 'd*z2', 'z2', 'x2', 'y2', 'd', 'd*x2', 'd*y2', 'd^2', 'z2', 'x2', 'y2', 'x2^2', 'y2^2', 'z2', 'z2'),
    ('z2', 'x2', 'y2', 'd', 'z2^2', 'x2*z2', 'y2*z2', 'd*z2', 'y2', 'x2', 'z2', 'd^2', 'd*y2', 'd*x2', 'z2', 'z2', 'y2^2', 'x2^2'),
    ('x1', 'z3', 'z1', 'y1', 'x1*z2', 'x1*x2', 'x1*y2', 'd*x1', 'z1', 'z3', 'x1', 'd*y1', 'd*z1', 'd*z3', 'x1', 'x1', 'y2*z1', 'x2*z3'),
    ('y1', 'z1', 'z3', 'x1', 'y1*z2', 'x2*y1', 'y1*y2', 'd*y1', 'z3', 'z1', 'y1', 'd*x1', 'd*z3', 'd*z1', 'y1', 'y1', 'y2*z3', 'x2*z1'),
    ('y1^2', 'y1*z1', 'y1*z3', 'x1*y1', 'z2', 'x2', 'y2', 'd', 'x1*z1', 'x1*z3', 'x1^2', 'z2', 'x2', 'y2', 'z1^2', 'z3^2', 'z2', 'z2'),
    ('x1^2', 'x1*z3', 'x1*z1', 'x1*y1', 'z2', 'x2', 'y2', 'd', 'y1*z3', 'y1*z1', 'y1^2', 'z2', 'x2', 'y2', 'z3^2', 'z1^2', 'z2', 'z2'),
    ('z2', 'x2', 'y2', 'd', 'x1^2', 'x1*z3', 'x1*z1', 'x1*y1', 'y2', 'x2', 'z2', 'y1^2', 'y1*z1', 'y1*z3', 'z2', 'z2', 'z1^2', 'z3^2'),
    ('z2', 'x2', 'y2', 'd', 'y1^2', 'y1*z1', 'y1*z3', 'x1*y1', 'y2', 'x2', 'z2', 'x1^2', 'x1*z3', 'x1*z1', 'z2', 'z2', 'z3^2', 'z1^2'),
)

# quadratic factors of det G1 in expanded form
QUAD_A = '-x1*x2+x2*y1+x1*y2-y1*y2+d*z1-z1*z2-d*z3+z2*z3'
QUAD_B = '-x1*x2-x2*y1-x1*y2-y1*y2+d*z1+z1*z2+d*z3+z2*z3'
CUBIC_C = '-x1*x2*z1-y1*y2*z1+d*z1^2+x2*y1*z3+x1*y2*z3-d*z3^2'
SEXTIC_D = (
        '8*d^2-2*d^4-8*x1^2+2*d^2*x1^2-8*x2^2+2*d^2*x2^2+2*x1^2*x2^2+8*d*x1*y1'
        '-2*d^3*x1*y1-2*d*x1*x2^2*y1-8*y1^2+2*d^2*y1^2+2*x2^2*y1^2+8*d*x2*y2'
        '-2*d^3*x2*y2-2*d*x1^2*x2*y2+2*d^2*x1*x2*y1*y2-2*d*x2*y1^2*y2-8*y2^2+2*d^2*y2^2'
        '+2*x1^2*y2^2-2*d*x1*y1*y2^2+2*y1^2*y2^2+2*d*x1*x2*z1-d^3*x1*x2*z1-4*x2*y1*z1'
        '+2*d^2*x2*y1*z1-4*x1*y2*z1+2*d^2*x1*y2*z1+2*d*y1*y2*z1-d^3*y1*y2*z1+8*z1^2'
        '-6*d^2*z1^2+d^4*z1^2-8*d^2*z2+2*d^4*z2+d*x1*x2*z1*z2-2*x2*y1*z1*z2'
        '-2*x1*y2*z1*z2+d*y1*y2*z1*z2+4*z1^2*z2-d^2*z1^2*z2+8*z2^2-2*d^2*z2^2'
        '-4*x1*x2*z3+2*d^2*x1*x2*z3+2*d*x2*y1*z3-d^3*x2*y1*z3+2*d*x1*y2*z3-d^3*x1*y2*z3'
        '-4*y1*y2*z3+2*d^2*y1*y2*z3-2*x1*x2*z2*z3+d*x2*y1*z2*z3+d*x1*y2*z2*z3'
        '-2*y1*y2*z2*z3+8*z3^2-6*d^2*z3^2+d^4*z3^2+4*z2*z3^2-d^2*z2*z3^2'
    )
SEXTIC_E = (
        '8*d^2-2*d^4-8*x1^2+2*d^2*x1^2-8*x2^2+2*d^2*x2^2+2*x1^2*x2^2-8*d*x1*y1'
        '+2*d^3*x1*y1+2*d*x1*x2^2*y1-8*y1^2+2*d^2*y1^2+2*x2^2*y1^2-8*d*x2*y2'
        '+2*d^3*x2*y2+2*d*x1^2*x2*y2+2*d^2*x1*x2*y1*y2+2*d*x2*y1^2*y2-8*y2^2+2*d^2*y2^2'
        '+2*x1^2*y2^2+2*d*x1*y1*y2^2+2*y1^2*y2^2+2*d*x1*x2*z1-d^3*x1*x2*z1+4*x2*y1*z1'
        '-2*d^2*x2*y1*z1+4*x1*y2*z1-2*d^2*x1*y2*z1+2*d*y1*y2*z1-d^3*y1*y2*z1+8*z1^2'
        '-6*d^2*z1^2+d^4*z1^2+8*d^2*z2-2*d^4*z2-d*x1*x2*z1*z2-2*x2*y1*z1*z2'
        '-2*x1*y2*z1*z2-d*y1*y2*z1*z2-4*z1^2*z2+d^2*z1^2*z2+8*z2^2-2*d^2*z2^2'
        '+4*x1*x2*z3-2*d^2*x1*x2*z3+2*d*x2*y1*z3-d^3*x2*y1*z3+2*d*x1*y2*z3-d^3*x1*y2*z3'
        '+4*y1*y2*z3-2*d^2*y1*y2*z3-2*x1*x2*z2*z3-d*x2*y1*z2*z3-d*x1*y2*z2*z3'
        '-2*y1*y2*z2*z3+8*z3^2-6*d^2*z3^2+d^4*z3^2-4*z2*z3^2+d^2*z2*z3^2'
    )

# Factored det G2 as recorded.  Its overall sign disagrees with the
# determinant of G2_MATRIX and with the top-degree part HIGH_G2_FACTORS.
DET_G2_FACTORS = (-1, [("d", 2), (QUAD_A, 4), (QUAD_B, 4), (CUBIC_C, 2), (SEXTIC_D, 1), (SEXTIC_E, 1)])

QUARTIC_F = "-2*x1*x2*y1*y2+d*x1*x2*z1+d*y1*y2*z1-d^2*z1^2+d*x2*y1*z3+d*x1*y2*z3-d^2*z3^2"

HIGH_G2_FACTORS = (
    1,
    [
        ("d", 6),
        ("x1*x2+x2*y1+x1*y2+y1*y2-d*z1-z1*z2-d*z3-z2*z3", 4),
        (QUAD_A, 4),
        (CUBIC_C, 2),
        (QUARTIC_F, 2),
    ],
)

QUARTIC_F3 = "2*x1*x2*y1*y2-d*x1*x2*z1-d*y1*y2*z1+d^2*z1^2-d*x2*y1*z3-d*x1*y2*z3+d^2*z3^2"
QUINTIC_W = "x1*x2*y1*y2*z1-d*x1*x2*z1^2-d*y1*y2*z1^2+d^2*z1^3-x1*x2*y1*y2*z3+d*x2*y1*z3^2+d*x1*y2*z3^2-d^2*z3^3"
QUINTIC_WBAR = "x1*x2*y1*y2*z1-d*x1*x2*z1^2-d*y1*y2*z1^2+d^2*z1^3+x1*x2*y1*y2*z3-d*x2*y1*z3^2-d*x1*y2*z3^2+d^2*z3^3"

HIGH_G3_FACTORS = (
    1,
    [
        ("d", 66),
        (QUAD_A, 15),
        (QUAD_B, 15),
        (CUBIC_C, 12),
        (QUARTIC_F3, 12),
        (QUINTIC_W, 3),
        (QUINTIC_WBAR, 3),
    ],
)

# det G3 with x1 = x2 = y1 = y2 = z2 = 0
G3_SPECIAL_SUBST = {"x1": 0, "x2": 0, "y1": 0, "y2": 0, "z2": 0}
G3_SPECIAL_FACTORS = (
    1,
    [
        ("-2+d", 16),
        ("-1+d", 4),
        ("d", 60),
        ("1+d", 4),
        ("2+d", 16),
        ("-3+d^2", 6),
        ("z1-z3", 30),
        ("z1+z3", 30),
        ("z1^2-z1*z3+z3^2", 1),
        ("z1^2+z1*z3+z3^2", 1),
        ("-2*d^2-2*z1^2+d^2*z1^2-2*z3^2+d^2*z3^2", 12),
        ("-3*d^2-z1^2+d^2*z1^2+z1*z3-d^2*z1*z3-z3^2+d^2*z3^2", 2),
        ("-3*d^2-z1^2+d^2*z1^2-z1*z3+d^2*z1*z3-z3^2+d^2*z3^2", 2),
    ],
)

G1_THREE_HOLES_MATRIX = (
    ('d', 'x{-3}', 'x{-2}', 'x{-2,-3}', 'x{-1}', 'x{-1,-3}', 'x{-1,-2}', 'x{1,2,3}'),
    ('x{3}', 'x{3,-3}', 'x{-2,3}', 'x{1,-1,2}', 'x{-1,3}', 'x{1,2,-2}', 'x{1,2,-3}', 'x{1,2}'),
    ('x{2}', 'x{2,-3}', 'x{2,-2}', 'x{1,-1,3}', 'x{-1,2}', 'x{1,-2,3}', 'x{1,3,-3}', 'x{1,3}'),
    ('x{2,3}', 'x{1,-1,-2}', 'x{1,-1,-3}', 'x{1,-1}', 'x{1,-2,-3}', 'x{1,-2}', 'x{1,-3}', 'x{1}'),
    ('x{1}', 'x{1,-3}', 'x{1,-2}', 'x{1,-2,-3}', 'x{1,-1}', 'x{1,-1,-3}', 'x{1,-1,-2}', 'x{2,3}'),
    ('x{1,3}', 'x{1,3,-3}', 'x{1,-2,3}', 'x{-1,2}', 'x{1,-1,3}', 'x{2,-2}', 'x{2,-3}', 'x{2}'),
    ('x{1,2}', 'x{1,2,-3}', 'x{1,2,-2}', 'x{1,-3}', 'x{1,-1,2}', 'x{-2,3}', 'x{3,-3}', 'x{3}'),
    ('x{1,2,3}', 'x{-1,-2}', 'x{-1,-3}', 'x{-1}', 'x{-2,-3}', 'x{-2}', 'x{-3}', 'd'),
)

# det of the three-hole G1 with every singleton and pair variable set to 0
THREE_HOLES_SPECIAL_FACTORS = (
    -1,
    [
        ("d-x{1,2,3}", 1),
        ("d+x{1,2,3}", 1),
        (
            "x{1,2,-2}*x{1,-1,3}*x{1,-1,-2}+x{1,3,-3}*x{1,-1,2}*x{1,-1,-3}"
            "-x{1,2,-3}*x{1,-1,3}*x{1,-1,-3}-x{1,-1,-2}*x{1,-1,-2}*x{1,-2,3}"
            "-x{1,2,-2}*x{1,3,-3}*x{1,-2,-3}+x{1,2,-3}*x{1,-2,3}*x{1,-2,-3}",
            2,
        ),
    ],
)
