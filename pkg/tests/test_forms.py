"""Alternating forms with exact coefficients.

Oracle: the wedge product is recomputed from the full antisymmetrization
of the tensor product, (p+q)!/(p! q!) shuffles expanded by brute force.
"""

from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest

from hamforms import AltForm, DimensionMismatch, Lcg, Matrix, contract_bivector
from hamforms import pullback_linear, wedge
from hamforms.forms import perm_sign


def random_form(rng, degree, dim, nterms=4):
    comps = {}
    for _ in range(nterms):
        idx = []
        while len(idx) < degree:
            i = rng.randint(1, dim)
            if i not in idx:
                idx.append(i)
        comps[tuple(sorted(idx))] = rng.fraction()
    return AltForm(degree, dim, comps)


def dense_component(form, idx):
    return form.get(*idx)


def wedge_by_antisymmetrization(a, b):
    """Full alternation of the tensor product, no pair shortcuts."""
    p, q = a.degree, b.degree
    dim = a.dim
    norm = Fraction(1, factorial(p) * factorial(q))
    comps = {}
    from itertools import combinations
    for idx in combinations(range(1, dim + 1), p + q):
        total = Fraction(0)
        for perm in permutations(idx):
            s = perm_sign(perm)
            # perm of an increasing tuple is never degenerate
            total += s * dense_component(a, perm[:p]) * \
                dense_component(b, perm[p:])
        val = norm * total
        if val:
            comps[idx] = val
    out = AltForm(p + q, dim)
    out.comps = comps
    return out


def test_constructor_folds_signs():
    f = AltForm(2, 3, {(2, 1): Fraction(5)})
    assert f.get(1, 2) == -5
    assert f.get(2, 1) == 5
    g = AltForm(2, 3, {(1, 2): Fraction(1), (2, 1): Fraction(1)})
    assert g.is_zero()


def test_constructor_rejects_bad_indices():
    with pytest.raises(ValueError):
        AltForm(2, 3, {(1, 4): Fraction(1)})
    with pytest.raises(ValueError):
        AltForm(2, 3, {(1,): Fraction(1)})
    assert AltForm(2, 3, {(1, 1): Fraction(9)}).is_zero()


def test_wedge_against_antisymmetrization():
    rng = Lcg(31)
    cases = [(1, 1, 4), (1, 2, 4), (2, 2, 5), (1, 3, 5), (2, 1, 4)]
    for pdeg, qdeg, dim in cases:
        a = random_form(rng, pdeg, dim)
        b = random_form(rng, qdeg, dim)
        assert wedge(a, b) == wedge_by_antisymmetrization(a, b)


def test_wedge_graded_anticommutativity():
    rng = Lcg(32)
    for pdeg, qdeg in [(1, 1), (1, 2), (2, 2), (1, 3)]:
        a = random_form(rng, pdeg, 5)
        b = random_form(rng, qdeg, 5)
        lhs = wedge(a, b)
        rhs = wedge(b, a)
        if (pdeg * qdeg) % 2:
            rhs = -rhs
        assert lhs == rhs


def test_wedge_bilinear():
    rng = Lcg(33)
    a = random_form(rng, 1, 4)
    b = random_form(rng, 2, 4)
    c = random_form(rng, 2, 4)
    assert wedge(a, b + c) == wedge(a, b) + wedge(a, c)


def test_wedge_associative():
    rng = Lcg(34)
    a = random_form(rng, 1, 5)
    b = random_form(rng, 1, 5)
    c = random_form(rng, 2, 5)
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


def test_pullback_identity():
    rng = Lcg(35)
    f = random_form(rng, 3, 4)
    assert pullback_linear(f, Matrix.identity(4)) == f


def test_pullback_functorial():
    rng = Lcg(36)
    f = random_form(rng, 3, 4)
    for _ in range(5):
        m1 = Matrix([[rng.fraction() for _ in range(4)] for _ in range(4)])
        m2 = Matrix([[rng.fraction() for _ in range(4)] for _ in range(4)])
        via_product = pullback_linear(f, m1 @ m2)
        via_steps = pullback_linear(pullback_linear(f, m1), m2)
        assert via_product == via_steps


def test_pullback_swap_and_scale():
    # swapping the last two coordinates of du^123 + du^124 swaps the terms
    f = AltForm(3, 4, {(1, 2, 3): Fraction(1), (1, 2, 4): Fraction(2)})
    swap = Matrix.from_strings([
        ["1", "0", "0", "0"],
        ["0", "1", "0", "0"],
        ["0", "0", "0", "1"],
        ["0", "0", "1", "0"],
    ])
    g = pullback_linear(f, swap)
    assert g.get(1, 2, 3) == 2 and g.get(1, 2, 4) == 1
    # uniform scaling acts on a three-form by the cube of the factor
    c = Fraction(3)
    scale = Matrix([[c if i == j else Fraction(0) for j in range(4)]
                    for i in range(4)])
    h = pullback_linear(f, scale)
    assert h == f.scale(c ** 3)


def test_pullback_respects_wedge():
    rng = Lcg(37)
    a = random_form(rng, 1, 4)
    b = random_form(rng, 2, 4)
    m = Matrix([[rng.fraction() for _ in range(4)] for _ in range(4)])
    assert pullback_linear(wedge(a, b), m) == \
        wedge(pullback_linear(a, m), pullback_linear(b, m))


def test_contract_bivector_basics():
    f = AltForm(3, 3, {(1, 2, 3): Fraction(1)})
    assert contract_bivector(f, {(2, 3): Fraction(1)}) == \
        (Fraction(1), Fraction(0), Fraction(0))
    assert contract_bivector(f, {(1, 3): Fraction(1)}) == \
        (Fraction(0), Fraction(-1), Fraction(0))


def test_contract_bivector_linear():
    rng = Lcg(38)
    f = random_form(rng, 3, 4)
    p = {(i, j): rng.fraction() for i in range(1, 5) for j in range(i + 1, 5)}
    q = {(i, j): rng.fraction() for i in range(1, 5) for j in range(i + 1, 5)}
    both = {k: p[k] + q[k] for k in p}
    left = contract_bivector(f, both)
    right = tuple(x + y for x, y in
                  zip(contract_bivector(f, p), contract_bivector(f, q)))
    assert left == right


def test_mismatched_dims_rejected():
    a = AltForm(1, 3, {(1,): Fraction(1)})
    b = AltForm(1, 4, {(1,): Fraction(1)})
    with pytest.raises(DimensionMismatch):
        wedge(a, b)
    with pytest.raises(DimensionMismatch):
        pullback_linear(a, Matrix.identity(4))


def test_format():
    f = AltForm(3, 4, {(1, 2, 3): Fraction(1), (1, 3, 4): Fraction(-2)})
    text = f.format()
    assert "du1^du2^du3" in text and "du1^du3^du4" in text and "-2" in text
