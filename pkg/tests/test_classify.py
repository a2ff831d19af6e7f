"""Splitting two-forms, invariants, canonical models, and the stabilizer."""

from fractions import Fraction

import pytest

from hamforms import (
    AltForm,
    HamPair,
    Lcg,
    Matrix,
    NotInThetaEta,
    NullSystemOrbit,
    RatFunc,
    SkewMatrix,
    StructureForm,
    WrongTBlock,
    canonical_form_n2,
    canonical_n2_pair,
    canonical_n4_pair,
    check_compat,
    classify_n2,
    classify_n4,
    eta_form,
    eta_matrix,
    form_as_skew,
    form_from_pair,
    format_system,
    pullback_linear,
    q_form,
    skew_as_form,
    stabilizer_audit,
    symplectic_split,
)
from hamforms.classify import eta_gram
from hamforms.sampling import random_skew, random_symplectic

from helpers import pairs_equal


def test_split_of_reference_form():
    s = symplectic_split(eta_form())
    assert s.theta_eta == 1 and s.theta.is_zero()


def test_split_single_component():
    f = AltForm(2, 4, {(1, 2): Fraction(1)})
    s = symplectic_split(f)
    assert s.theta_eta == Fraction(1, 2)
    assert s.components["theta0"] == Fraction(1, 2)
    assert s.reconstruct() == f


def test_split_symbolic():
    nv = 2
    te, t13 = RatFunc.var(nv, 1), RatFunc.var(nv, 2)
    f = AltForm(2, 4, {(1, 2): te, (3, 4): te, (1, 3): t13,
                       (2, 4): RatFunc.from_const(nv, 1)})
    s = symplectic_split(f)
    assert s.theta_eta == te
    assert s.components["theta13"] == t13 and s.components["theta24"] == 1
    assert s.components["theta0"] == 0 and s.components["theta14"] == 0
    assert q_form(s.theta) == -2 * t13


def test_q_is_twice_pfaffian():
    from hamforms import pfaffian
    rng = Lcg(424242)
    for _ in range(25):
        raw = random_skew(rng, 4, max_num=9)
        th = symplectic_split(skew_as_form(raw)).theta
        qv = q_form(th)
        t0, t13, t14 = th.get(1, 2), th.get(1, 3), th.get(1, 4)
        t23, t24 = th.get(2, 3), th.get(2, 4)
        assert qv == -2 * t0 * t0 - 2 * t13 * t24 + 2 * t14 * t23
        assert qv == 2 * pfaffian(form_as_skew(th))


def test_q_rejects_outside_domain():
    with pytest.raises(NotInThetaEta):
        q_form(skew_as_form(SkewMatrix(4, {(1, 2): Fraction(1)})))


def test_q_invariant_under_symplectic_pullback():
    rng = Lcg(424243)
    for _ in range(10):
        raw = random_skew(rng, 4, max_num=7)
        th = symplectic_split(skew_as_form(raw)).theta
        cmat = random_symplectic(rng, eta_gram())
        assert q_form(pullback_linear(th, cmat)) == q_form(th)


def test_classify_two_fields_symbolic():
    nv = 4
    g, a12, b1, b2 = (RatFunc.var(nv, i) for i in (1, 2, 3, 4))
    sf = StructureForm.from_comps(2, {(1, 2, 3): g, (1, 2, 4): a12,
                                      (1, 3, 4): b1, (2, 3, 4): b2})
    res = classify_n2(sf)
    assert res.log["pullback_matches"]
    assert res.N == 2 and res.invariants == ()
    assert res.canonical_form.form == canonical_form_n2()
    assert format_system(res.canonical_pair) == ["u1_t = u1_x",
                                                 "u2_t = u2_x"]
    v = res.canonical_pair.flux
    assert v[0] == RatFunc.var(2, 1) and v[1] == RatFunc.var(2, 2) + 1


def test_classify_two_fields_fixed_point():
    res = classify_n2(StructureForm(2, canonical_form_n2()))
    assert res.log["already_canonical"]
    ident = Matrix.identity(4)
    elt = res.log["element"]
    assert all(elt[i, j] == ident[i, j] for i in range(4) for j in range(4))


def test_classify_two_fields_numeric():
    sf = StructureForm.from_comps(2, {(1, 2, 3): Fraction(1),
                                      (1, 2, 4): Fraction(2),
                                      (1, 3, 4): Fraction(3),
                                      (2, 3, 4): Fraction(5)})
    res = classify_n2(sf)
    assert res.log["pullback_matches"] and res.log["det"] == 1


def test_classify_two_fields_null_orbit():
    sf = StructureForm.from_comps(2, {(1, 2, 3): Fraction(1),
                                      (1, 3, 4): Fraction(3)})
    with pytest.raises(NullSystemOrbit):
        classify_n2(sf)


def test_classify_four_fields():
    j4 = eta_matrix()
    pair = HamPair(
        AltForm(3, 4), j4,
        SkewMatrix(4, {(1, 2): Fraction(1), (3, 4): Fraction(1)}),
        (Fraction(2), Fraction(0), Fraction(-1), Fraction(7)),
    )
    res = classify_n4(form_from_pair(pair))
    assert res.invariants == (1, 0)
    assert format_system(res.canonical_pair) == [
        "u1_t = u1_x - u4_x", "u2_t = u2_x",
        "u3_t = u2_x + u3_x", "u4_t = u4_x"]
    assert res.log["shift_dropped"] == (2, 0, -1, 7)
    assert check_compat(res.canonical_pair, mode="symbolic")["all_zero"]


def test_classify_four_fields_nilpotent_part():
    j4 = eta_matrix()
    pair = HamPair(AltForm(3, 4), j4, SkewMatrix(4, {(2, 4): Fraction(1)}),
                   (Fraction(0),) * 4)
    res = classify_n4(form_from_pair(pair))
    assert res.invariants == (0, 0)
    assert format_system(res.canonical_pair) == [
        "u1_t = -u4_x", "u2_t = 0", "u3_t = u2_x", "u4_t = 0"]


def test_classify_four_fields_wrong_cubic_block():
    j4 = eta_matrix()
    bad = HamPair(AltForm(3, 4, {(1, 2, 3): Fraction(1)}), j4,
                  SkewMatrix(4, {(2, 4): Fraction(1)}), (Fraction(0),) * 4)
    with pytest.raises(WrongTBlock):
        classify_n4(form_from_pair(bad))


def test_canonical_four_field_system():
    nv = 7
    te, t13 = RatFunc.var(nv, 6), RatFunc.var(nv, 7)
    cp = canonical_n4_pair(te, t13, nvars=nv)
    names = ["u1", "u2", "u3", "u4", "u5", "a", "b"]
    assert format_system(cp, names=names) == [
        "u1_t = a*u1_x - u4_x",
        "u2_t = a*u2_x + b*u3_x",
        "u3_t = u2_x + a*u3_x",
        "u4_t = -b*u1_x + a*u4_x",
    ]
    assert check_compat(cp, mode="symbolic")["all_zero"]


def test_invariants_stable_under_symplectic_change():
    rng = Lcg(424244)
    j4 = eta_matrix()
    for _ in range(5):
        raw = random_skew(rng, 4, max_num=5)
        b = [rng.fraction(5) for _ in range(4)]
        p0 = HamPair(AltForm(3, 4), j4, raw, b)
        r0 = classify_n4(form_from_pair(p0))
        cmat = random_symplectic(rng, eta_gram())
        pulled = form_as_skew(pullback_linear(skew_as_form(raw), cmat))
        p1 = HamPair(AltForm(3, 4), j4, pulled, b)
        r1 = classify_n4(form_from_pair(p1))
        assert r0.invariants == r1.invariants


def test_canonical_pairs_construct():
    p2 = canonical_n2_pair()
    assert p2.N == 2 and pairs_equal(p2, canonical_n2_pair())
    p4 = canonical_n4_pair(Fraction(2), Fraction(-3))
    assert p4.N == 4
    assert check_compat(p4, mode="symbolic")["all_zero"]


def test_stabilizer_audit():
    rep = stabilizer_audit()
    assert rep["ok"]
    assert rep["dimension"] == 14
    assert len(rep["generators"]) == 14
    assert all(g["first_order_ok"] for g in rep["generators"])
    assert rep["exact"] == {"transvection": True, "shear": True,
                            "torus": True}
    assert not rep["negative_control_preserved"]
