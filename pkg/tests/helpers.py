"""Shared builders for the test suite.

Symbolic pairs put the fields first, then the homogenizing variable,
then the free coefficients, so every test uses one fixed ring layout.
"""

from fractions import Fraction

from hamforms import AltForm, HamPair, Poly, SkewMatrix

# two-field pair: u1 u2 | u3 hom | g12 a12 b1 b2
N2_VARS = 7
N2_SYM = {"g0_12": 4, "a12": 5, "b1": 6, "b2": 7}

# four-field pair: u1..u4 | u5 hom | g0 (6 entries) | A (6) | B (4)
N4_VARS = 21
N4_G0 = {(1, 2): 6, (1, 3): 7, (1, 4): 8, (2, 3): 9, (2, 4): 10, (3, 4): 11}
N4_A = {(1, 2): 12, (1, 3): 13, (1, 4): 14, (2, 3): 15, (2, 4): 16,
        (3, 4): 17}
N4_B = (18, 19, 20, 21)


def sym(nvars, i):
    return Poly.var(nvars, i)


def generic_pair_n2(unit_metric=False):
    """Two fields with free coefficients; metric slot 1 when requested."""
    nv = N2_VARS
    g = Fraction(1) if unit_metric else sym(nv, N2_SYM["g0_12"])
    return HamPair(
        AltForm(3, 2),
        SkewMatrix(2, {(1, 2): g}),
        SkewMatrix(2, {(1, 2): sym(nv, N2_SYM["a12"])}),
        (sym(nv, N2_SYM["b1"]), sym(nv, N2_SYM["b2"])),
        nvars=nv,
    )


def generic_pair_n4():
    """Four fields: unit cubic block, free constant blocks."""
    nv = N4_VARS
    return HamPair(
        AltForm(3, 4, {(1, 2, 3): Fraction(1)}),
        SkewMatrix(4, {k: sym(nv, v) for k, v in N4_G0.items()}),
        SkewMatrix(4, {k: sym(nv, v) for k, v in N4_A.items()}),
        tuple(sym(nv, v) for v in N4_B),
        nvars=nv,
    )


def pairs_equal(p, q):
    return (p.N == q.N and p.mcubic == q.mcubic and p.mconst == q.mconst
            and p.wskew == q.wskew and tuple(p.wconst) == tuple(q.wconst))
