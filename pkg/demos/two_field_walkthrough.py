"""
From a three-form on four coordinates to a two-field system and back
====================================================================

The smallest interesting case: two field variables.  A pair (metric,
right-hand side) packs into an alternating three-form on four
coordinates, and the three-form unpacks into the same pair.  This
script builds the generic two-field pair with free symbolic
coefficients, walks one direction, then the other, and checks the
round trip closes.
"""

from fractions import Fraction

from hamforms import (
    AltForm,
    HamPair,
    Poly,
    SkewMatrix,
    check_compat,
    form_from_pair,
    format_system,
    pair_from_form,
)

# Ring layout: u1 u2 | u3 (homogenizing slot) | g12 a12 b1 b2.
# The coefficients stay symbolic so every printed identity is exact
# for all values at once.
NV = 7
g12 = Poly.var(NV, 4)
a12 = Poly.var(NV, 5)
b1 = Poly.var(NV, 6)
b2 = Poly.var(NV, 7)

pair = HamPair(
    AltForm(3, 2),                       # no cubic part with two fields
    SkewMatrix(2, {(1, 2): g12}),        # constant metric block
    SkewMatrix(2, {(1, 2): a12}),        # rotational part of the rhs
    (b1, b2),                            # constant shift of the rhs
    nvars=NV,
)

print("the conservation-law system, with the free names spelled out:")
for line in format_system(pair, names=["u1", "u2", "u3", "g", "a", "b1", "b2"]):
    print("   ", line)
print()

# The rhs is forced by the data: metric * flux = covector, solved
# exactly.  Compatibility is the pair of polynomial identities that
# make the operator and system fit together; both must vanish.
rep = check_compat(pair, mode="symbolic")
print("compatibility residuals all zero:", rep["all_zero"])
print()

# Pack the pair into a single three-form on N + 2 = 4 coordinates.
sf = form_from_pair(pair)
print("the structure three-form:")
print("   ", sf.form.format())
print("    (ring slots u4..u7 are the free names g, a, b1, b2)")
print()

# Each block of the pair is one slice of the form's coefficients:
# metric entries sit against the last two indices, the rotational
# entries against the second-to-last, the shift against the last.
print("metric slot      (1,2,3):", sf.form.get(1, 2, 3))
print("rotation slot    (1,2,4):", sf.form.get(1, 2, 4))
print("shift slots (1,3,4),(2,3,4):", sf.form.get(1, 3, 4), ",",
      sf.form.get(2, 3, 4))
print()

# And back.  Unpacking the form reproduces the pair on the nose.
# (The ring size rides along because the blocks are symbolic.)
back = pair_from_form(sf, nvars=NV)
assert back.mconst == pair.mconst
assert back.wskew == pair.wskew
assert tuple(back.wconst) == tuple(pair.wconst)
print("round trip closes: True")

# A numeric instance of the same picture, for concreteness.
num = HamPair(
    AltForm(3, 2),
    SkewMatrix(2, {(1, 2): Fraction(1)}),
    SkewMatrix(2, {(1, 2): Fraction(2)}),
    (Fraction(3), Fraction(-1, 2)),
)
print()
print("a numeric instance:")
for line in format_system(num):
    print("   ", line)
print("its three-form:", form_from_pair(num).form.format())
