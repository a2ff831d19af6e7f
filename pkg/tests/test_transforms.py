"""Projective, exchange, and reciprocal symmetries."""

from fractions import Fraction

import pytest

from hamforms import (
    AltForm,
    DegenerateImage,
    HamPair,
    Lcg,
    Matrix,
    ProjectiveMap,
    ReciprocalMap,
    SkewMatrix,
    StructureForm,
    ValidationError,
    apply_projective,
    apply_reciprocal,
    apply_xt_exchange,
    canonical_n2_pair,
    check_compat,
    form_from_pair,
    pair_from_form,
    pullback_linear,
)
from hamforms.sampling import random_invertible

from helpers import pairs_equal


def test_identity_map():
    rng = Lcg(90901)
    for n in (2, 4):
        p = HamPair.random(rng, n)
        q, rep = apply_projective(p, ProjectiveMap.identity(n))
        assert pairs_equal(p, q)
        assert rep["denominator"] == 1
        assert rep["conformal_ok"] and rep["affine_shape_ok"]


def test_translation_roundtrip():
    rng = Lcg(90902)
    p = HamPair.random(rng, 4)
    rows = [list(r) for r in Matrix.identity(5).rows]
    for i, c in enumerate((1, -2, 3, 5)):
        rows[i][4] = Fraction(c)
    phi = ProjectiveMap(Matrix(rows))
    q, rep = apply_projective(p, phi)
    assert rep["denominator"] == 1 and rep["conformal_ok"]
    back, rep2 = apply_projective(q, ProjectiveMap(phi.a_inv))
    assert pairs_equal(back, p) and rep2["conformal_ok"]


def test_field_scaling():
    p = canonical_n2_pair()
    phi = ProjectiveMap(Matrix([
        [Fraction(3), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(3), Fraction(0)],
        [Fraction(0), Fraction(0), Fraction(1)],
    ]))
    q, rep = apply_projective(p, phi)
    assert rep["denominator"] == 1 and rep["conformal_ok"]
    assert q.mcubic == p.mcubic


def test_conformal_law_random_maps():
    rng = Lcg(90903)
    for n in (2, 4):
        hits = 0
        while hits < 3:
            p = HamPair.random(rng, n)
            a = random_invertible(rng, n + 1)
            try:
                q, rep = apply_projective(p, ProjectiveMap(a))
            except DegenerateImage:
                continue
            assert rep["conformal_ok"]
            hits += 1


def test_projective_group_action_on_flux():
    rng = Lcg(90904)
    p = HamPair.random(rng, 2)
    a1 = random_invertible(rng, 3)
    a2 = random_invertible(rng, 3)
    q12, _ = apply_projective(p, ProjectiveMap(a1 @ a2))
    qa, _ = apply_projective(p, ProjectiveMap(a2))
    qb, _ = apply_projective(qa, ProjectiveMap(a1))
    assert tuple(q12.flux) == tuple(qb.flux)


def test_exchange_canonical_two_fields():
    p = canonical_n2_pair()
    q = apply_xt_exchange(p)
    assert q.mconst.get(1, 2) == 1 and q.wskew.get(1, 2) == 1
    assert tuple(q.wconst) == (Fraction(-1), Fraction(0))
    assert pairs_equal(apply_xt_exchange(q), p)


def test_exchange_is_coordinate_swap():
    rng = Lcg(90905)
    for n in (2, 4, 2, 4):
        p = HamPair.random(rng, n)
        try:
            q = apply_xt_exchange(p)
        except DegenerateImage:
            continue
        swap = [[Fraction(1 if i == j else 0) for j in range(n + 2)]
                for i in range(n + 2)]
        swap[n][n] = swap[n + 1][n + 1] = Fraction(0)
        swap[n][n + 1] = swap[n + 1][n] = Fraction(1)
        lhs = form_from_pair(q).form
        rhs = pullback_linear(form_from_pair(p).form, Matrix(swap))
        assert lhs == rhs


def test_exchange_degenerate_image():
    p = HamPair(AltForm(3, 2), SkewMatrix(2, {(1, 2): Fraction(1)}),
                SkewMatrix(2), (Fraction(1), Fraction(2)))
    with pytest.raises(DegenerateImage):
        apply_xt_exchange(p)


def test_reciprocal_identity_and_exchange():
    p = canonical_n2_pair()
    assert pairs_equal(apply_reciprocal(p, ReciprocalMap.identity(2)), p)
    assert pairs_equal(apply_reciprocal(p, ReciprocalMap.exchange(2)),
                       apply_xt_exchange(p))


def test_reciprocal_generic_map_stays_compatible():
    p = canonical_n2_pair()
    r = ReciprocalMap(2, [Fraction(1), Fraction(-1)], Fraction(2),
                      Fraction(1), [Fraction(0), Fraction(1)], Fraction(-1),
                      Fraction(1))
    q = apply_reciprocal(p, r)
    assert check_compat(q, mode="symbolic")["all_zero"]


def test_reciprocal_factorization():
    # space-only step, exchange, space-only step: same as one pullback
    p = canonical_n2_pair()
    z = Fraction(0)
    rx1 = ReciprocalMap(2, [Fraction(1), z], Fraction(1), z, [z, z], z,
                        Fraction(1))
    rx2 = ReciprocalMap(2, [z, Fraction(2)], Fraction(1), z, [z, z], z,
                        Fraction(1))
    m = rx2.block_matrix() @ ReciprocalMap.exchange(2).block_matrix() \
        @ rx1.block_matrix()
    step = apply_reciprocal(apply_xt_exchange(apply_reciprocal(p, rx1)), rx2)
    direct = pair_from_form(
        StructureForm(2, pullback_linear(form_from_pair(p).form, m.inv())))
    assert pairs_equal(step, direct)


def test_reciprocal_rejects_singular_block():
    one = Fraction(1)
    with pytest.raises(ValidationError):
        ReciprocalMap(2, [one, one], one, one, [Fraction(0), Fraction(0)],
                      one, one)
