"""
The line congruence attached to a two-field pair
================================================

A pair assigns to every point of field space a line in projective
3-space: the span of (u, V(u)) and the two homogenizing directions.
Its six line coordinates (the 2x2 minors of the spanning points)
satisfy the linear equations cut out by the structure three-form,
and those equations are one short of independent.  This script
prints the whole picture for the unit-metric two-field pair with
free rotation a and shift (b1, b2).
"""

from fractions import Fraction

from hamforms import (
    AltForm,
    HamPair,
    Poly,
    SkewMatrix,
    annihilation_check,
    congruence_matrix,
    congruence_rank,
    form_from_pair,
    grassmann_check,
    pair_columns,
    plucker_coords,
    plucker_homogeneous,
)

NV = 7
a12 = Poly.var(NV, 5)
b1 = Poly.var(NV, 6)
b2 = Poly.var(NV, 7)

pair = HamPair(
    AltForm(3, 2),
    SkewMatrix(2, {(1, 2): Fraction(1)}),
    SkewMatrix(2, {(1, 2): a12}),
    (b1, b2),
    nvars=NV,
)
sf = form_from_pair(pair)

# Line coordinates in the affine chart where the homogenizing
# coordinate is 1.  Slots u5, u6, u7 of the ring are a, b1, b2.
print("line coordinates of the pair (a = u5, b1 = u6, b2 = u7):")
for key, val in plucker_coords(pair).items():
    print("    p%d%d = %s" % (key[0], key[1], val))
print()

# The congruence system: one row per coordinate differential, one
# column per increasing index pair.
cols = pair_columns(4)
print("congruence matrix, columns", " ".join("p%d%d" % c for c in cols), ":")
for row in congruence_matrix(sf).rows:
    print("    [%s]" % ", ".join(str(v) for v in row))
print()

# Four equations, rank three.  The certificate is a row dependency:
# summing the rows with these weights gives zero identically.
info = congruence_rank(sf)
print("rank %d of %d rows; dependency certificate:" % (info["rank"], info["rows"]))
print("    [%s]" % ", ".join(str(v) for v in info["certificate"]))
print()

# Both defining checks vanish identically in the symbolic ring:
# contracting the three-form against the line coordinates, and the
# quadric relations that make six numbers an actual line.
print("contraction against the form vanishes:",
      annihilation_check(sf, plucker_coords(pair))["ok"])
print("line quadric relations vanish:       ",
      grassmann_check(plucker_coords(pair), 4)["ok"])
print()

# The same line in homogeneous coordinates: quadratic polynomials
# with the homogenizing field restored, all sharing a common factor.
print("homogeneous line coordinates:")
for key, val in plucker_homogeneous(pair).items():
    print("    p%d%d = %s" % (key[0], key[1], val))
