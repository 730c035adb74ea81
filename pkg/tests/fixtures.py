"""Golden coefficient fixtures for the published low-dimension identities.

Each identity is a list of SPoly coefficients, index j multiplying
M^(p+q-j), normalized so the S1^(2pq) monomial of the top coefficient is
+1 (OSp cases: leading graded-lex monomial +1).
"""

from fractions import Fraction as F

from superch import SPoly


def _syms(n):
    return SPoly.symbols(n)


def identity_11():
    s1, s2 = _syms(2)
    return [
        s1 ** 2,
        -s1 * s2,
        (s2 ** 2 - s1 ** 4) * F(1, 4),
    ]


def identity_21():
    s1, s2, s3 = _syms(3)
    return [
        (s1 ** 2 - s2) ** 2,
        (s1 ** 2 - s2) * (s1 ** 3 + 3 * s1 * s2 - 4 * s3) * F(-1, 3),
        (
            s1 ** 6 - 9 * s1 ** 4 * s2 + 16 * s1 ** 3 * s3
            - 9 * s1 ** 2 * s2 ** 2 + 9 * s2 ** 3 - 8 * s3 ** 2
        ) * F(-1, 18),
        (s1 ** 4 - 4 * s1 * s3 + 3 * s2 ** 2)
        * (s1 ** 3 - 3 * s1 * s2 + 2 * s3) * F(1, 18),
    ]


def identity_12():
    s1, s2, s3 = _syms(3)
    return [
        (s1 ** 2 + s2) ** 2,
        (s1 ** 2 + s2) * (s1 ** 3 - 3 * s1 * s2 - 4 * s3) * F(1, 3),
        (
            s1 ** 6 + 9 * s1 ** 4 * s2 + 16 * s1 ** 3 * s3
            - 9 * s1 ** 2 * s2 ** 2 - 9 * s2 ** 3 - 8 * s3 ** 2
        ) * F(-1, 18),
        (s1 ** 4 - 4 * s1 * s3 + 3 * s2 ** 2)
        * (s1 ** 3 + 3 * s1 * s2 + 2 * s3) * F(-1, 18),
    ]


def identity_31():
    s1, s2, s3, s4 = _syms(4)
    c0 = (s1 ** 3 - 3 * s1 * s2 + 2 * s3) ** 2
    c1 = (s1 ** 3 - 3 * s1 * s2 + 2 * s3) * (
        s1 ** 4 - 4 * s1 * s3 - 3 * s2 ** 2 + 6 * s4
    ) * F(-1, 2)
    c2 = (
        s1 ** 8
        + 4 * s1 ** 6 * s2
        - 32 * s1 ** 5 * s3
        - 6 * s1 ** 4 * (s2 ** 2 - 6 * s4)
        + 64 * s1 ** 3 * s2 * s3
        - 4 * s1 ** 2 * (9 * s2 ** 3 + 18 * s2 * s4 + 8 * s3 ** 2)
        + 96 * s1 * s2 ** 2 * s3
        + 9 * s2 ** 4
        - 32 * s2 * s3 ** 2
        + 36 * s4 ** 2
        - 36 * s2 ** 2 * s4
    ) * F(1, 16)
    c3 = (
        s1 ** 9
        - 12 * s1 ** 7 * s2
        + 24 * s1 ** 6 * s3
        + 18 * s1 ** 5 * (s2 ** 2 - 2 * s4)
        + 24 * s1 ** 4 * s2 * s3
        - 12 * s1 ** 3 * (3 * s2 ** 3 - 6 * s2 * s4 + 8 * s3 ** 2)
        - 72 * s1 ** 2 * s3 * (s2 ** 2 - 2 * s4)
        - 8 * s3 * (9 * s2 ** 3 - 18 * s2 * s4 + 8 * s3 ** 2)
        + 3 * s1 * (27 * s2 ** 4 - 36 * s2 ** 2 * s4 + 32 * s2 * s3 ** 2 - 36 * s4 ** 2)
    ) * F(1, 48)
    c4 = (
        (s1 ** 4 - 6 * s1 ** 2 * s2 + 3 * s2 ** 2 + 8 * s1 * s3 - 6 * s4)
        * (
            s1 ** 6
            - 3 * s1 ** 4 * s2
            + 9 * s1 ** 2 * s2 ** 2
            + 9 * s2 ** 3
            - 24 * s1 * s2 * s3
            - 8 * s1 ** 3 * s3
            + 16 * s3 ** 2
            + 18 * s4 * (s1 ** 2 - s2)
        )
    ) * F(-1, 96)
    return [c0, c1, c2, c3, c4]


def identity_22():
    s1, s2, s3, s4 = _syms(4)
    c0 = (s1 ** 4 - 4 * s1 * s3 + 3 * s2 ** 2) ** 2
    c1 = -2 * (s1 ** 4 - 4 * s1 * s3 + 3 * s2 ** 2) * (
        s1 ** 3 * s2 - 3 * s1 * s4 + 2 * s2 * s3
    )
    c2 = (
        s1 ** 10 * F(-1, 12)
        + s1 ** 6 * s2 ** 2 * F(3, 2)
        + s1 ** 4 * (4 * s3 ** 2 - 9 * s2 * s4)
        - s1 * s3 ** 3 * F(32, 3)
        + s1 ** 2 * (s2 ** 4 + 4 * s4 ** 2) * F(9, 4)
        + 3 * s2 ** 2 * (4 * s3 ** 2 - 3 * s2 * s4)
    )
    c3 = (
        s1 ** 9 * s2 * F(1, 12)
        - s1 ** 7 * s4
        + s1 * (8 * s3 ** 2 * s4 - s2 ** 5 * F(9, 4) - 9 * s2 * s4 ** 2)
        + 2 * s1 ** 6 * s2 * s3
        + 2 * s1 ** 4 * s3 * s4
        + s1 ** 3 * s2 * (3 * s2 * s4 - 8 * s3 ** 2)
        + 6 * s1 ** 2 * s2 ** 3 * s3
        - s1 ** 5 * s2 ** 3 * F(3, 2)
        + s2 * s3 * (9 * s2 * s4 - 8 * s3 ** 2) * F(2, 3)
    )
    c4 = (
        (s1 ** 6 + 9 * s1 ** 2 * s2 ** 2 - 8 * s1 ** 3 * s3 + 16 * s3 ** 2 - 18 * s2 * s4) ** 2
        - 9 * (s1 ** 4 * s2 - 3 * s2 ** 3 + 8 * s1 * s2 * s3 - 6 * s1 ** 2 * s4) ** 2
    ) * F(1, 144)
    return [c0, c1, c2, c3, c4]


def identity_22_osp():
    s1, s2, s3, s4 = _syms(4)
    zero = SPoly.zero(4)
    return [
        s2 ** 2,
        zero,
        -s2 * s4,
        zero,
        (4 * s4 ** 2 - s2 ** 4) * F(1, 16),
    ]


def identity_24_osp():
    s1, s2, s3, s4, s5, s6 = _syms(6)
    zero = SPoly.zero(6)
    c0 = (s2 ** 2 + 2 * s4) ** 2
    c2 = (s2 ** 2 + 2 * s4) * (s2 ** 3 - 6 * s2 * s4 - 16 * s6) * F(1, 6)
    c4 = (
        s2 ** 6
        + 18 * s2 ** 4 * s4
        - 36 * s2 ** 2 * s4 ** 2
        + 64 * s2 ** 3 * s6
        - 72 * s4 ** 3
        - 128 * s6 ** 2
    ) * F(-1, 72)
    c6 = (
        s2 ** 7
        + 6 * s2 ** 5 * s4
        + 12 * s2 ** 3 * s4 ** 2
        + 72 * s2 * s4 ** 3
        - 8 * s2 ** 4 * s6
        - 96 * s2 ** 2 * s4 * s6
        + 96 * s4 ** 2 * s6
        - 128 * s2 * s6 ** 2
    ) * F(-1, 144)
    return [c0, zero, c2, zero, c4, zero, c6]


def factors_21():
    """The published degree-2 and degree-1 matrix-polynomial factors."""
    s1, s2, s3 = _syms(3)
    p2 = [
        s1 ** 2 - s2,
        (s1 ** 3 - s3) * F(-2, 3),
        (s1 ** 4 - 4 * s1 * s3 + 3 * s2 ** 2) * F(1, 6),
    ]
    p1 = [
        s1 ** 2 - s2,
        (s1 ** 3 - 3 * s1 * s2 + 2 * s3) * F(1, 3),
    ]
    return p2, p1


GOLDEN = {
    (1, 1): identity_11,
    (2, 1): identity_21,
    (1, 2): identity_12,
    (3, 1): identity_31,
    (2, 2): identity_22,
}
