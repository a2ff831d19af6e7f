"""Projective and reciprocal actions on pairs.

Every transformation here is realized the same way: the pair's structure
form is pulled back along the inverse of a block matrix acting on the
(N+2)-dimensional coordinate space, and the result is re-read as a pair.
Field-variable projective maps use a block fixing the last coordinate;
changes of the independent variables mix the last two coordinates with
the fields.  The pullback route keeps every output in the constant-
tensor shape automatically, so form invariance holds by construction
and the interesting verification is the conformal law for the metric.
"""

from __future__ import annotations

from fractions import Fraction

from .bridge import StructureForm, form_from_pair, pair_from_form
from .errors import (DegenerateImage, DegenerateMetric, DimensionMismatch,
                     SingularMatrix, ValidationError)
from .forms import pullback_linear
from .linalg import Matrix
from .pairs import HamPair
from .poly import Poly, RatFunc


class ProjectiveMap:
    """Fractional-linear change of the field variables.

    The matrix has side N+1; the image of u is
    (a[i,l] u^l + a[i,N+1]) / A(u) with A(u) the last row applied to
    (u, 1).  The matrix must be invertible.
    """

    __slots__ = ("N", "a", "a_inv")

    def __init__(self, a: Matrix):
        if a.nrows != a.ncols or a.nrows < 2:
            raise DimensionMismatch("projective matrix must be square, side N+1")
        self.N = a.nrows - 1
        self.a = a
        self.a_inv = a.inv()  # raises SingularMatrix when not invertible

    @classmethod
    def identity(cls, N: int) -> "ProjectiveMap":
        return cls(Matrix.identity(N + 1))

    def denominator(self, nvars: int) -> RatFunc:
        """A(u) = a[N+1,l] u^l + a[N+1,N+1] in a ring of size nvars."""
        n = self.N
        p = Poly.const(nvars, self.a[n, n])
        for l in range(n):
            c = self.a[n, l]
            if c:
                p = p + Poly.var(nvars, l + 1) * c
        return RatFunc(p, reduce=False)

    def components(self, nvars: int) -> list:
        """The N image components as rational functions of the fields."""
        n = self.N
        den = self.denominator(nvars)
        out = []
        for i in range(n):
            p = Poly.const(nvars, self.a[i, n])
            for l in range(n):
                c = self.a[i, l]
                if c:
                    p = p + Poly.var(nvars, l + 1) * c
            out.append(RatFunc(p, reduce=False) / den)
        return out

    def __repr__(self):
        return "ProjectiveMap(%r)" % (self.a,)


class ReciprocalMap:
    """Constant-coefficient change of the independent variables.

    dx~ = (ax_i u^i + ax0) dx + (ax_i V^i + bt) dt
    dt~ = (bx_i u^i + cx) dx + (bx_i V^i + dt0) dt

    with all coefficients rational constants.  The constant part
    [[ax0, bt], [cx, dt0]] must be invertible, which also makes the
    block action on the coordinate space invertible.
    """

    __slots__ = ("N", "ax", "ax0", "bt", "bx", "cx", "dt0")

    def __init__(self, N: int, ax, ax0, bt, bx, cx, dt0):
        if len(ax) != N or len(bx) != N:
            raise DimensionMismatch("coefficient vectors must have length N")
        self.N = N
        self.ax = tuple(Fraction(v) for v in ax)
        self.ax0 = Fraction(ax0)
        self.bt = Fraction(bt)
        self.bx = tuple(Fraction(v) for v in bx)
        self.cx = Fraction(cx)
        self.dt0 = Fraction(dt0)
        if self.ax0 * self.dt0 - self.bt * self.cx == 0:
            raise ValidationError("constant part of the reciprocal map is singular")

    @classmethod
    def identity(cls, N: int) -> "ReciprocalMap":
        zero = [Fraction(0)] * N
        return cls(N, zero, 1, 0, zero, 0, 1)

    @classmethod
    def exchange(cls, N: int) -> "ReciprocalMap":
        """dx~ = dt, dt~ = dx: the pure exchange of x and t."""
        zero = [Fraction(0)] * N
        return cls(N, zero, 0, 1, zero, 1, 0)

    def block_matrix(self) -> Matrix:
        """Action on the coordinate space: fields fixed, last two mixed."""
        n = self.N
        zero, one = Fraction(0), Fraction(1)
        rows = []
        for i in range(n):
            rows.append([one if k == i else zero for k in range(n + 2)])
        rows.append(list(self.ax) + [self.ax0, self.bt])
        rows.append(list(self.bx) + [self.cx, self.dt0])
        return Matrix(rows)

    def __repr__(self):
        return ("ReciprocalMap(N=%d, ax=%r, ax0=%s, bt=%s, bx=%r, cx=%s, dt0=%s)"
                % (self.N, self.ax, self.ax0, self.bt, self.bx, self.cx, self.dt0))


def _repair(sf: StructureForm, nvars=None) -> HamPair:
    try:
        return pair_from_form(sf, nvars=nvars)
    except DegenerateMetric as exc:
        raise DegenerateImage("transformed metric is degenerate") from exc


def apply_projective(pair: HamPair, phi: ProjectiveMap):
    """Transform a pair by a projective change of the field variables.

    Returns (new pair, report).  The report carries the denominator
    A(u) and the outcome of the symbolic conformal check: the pullback
    of the transformed metric two-form through the point map equals
    A(u)^-3 times the original metric two-form.  The affine shape of
    the covector block is preserved by construction on the pullback
    route, so it is reported as a structural fact.
    """
    if phi.N != pair.N:
        raise DimensionMismatch("projective map size does not match the pair")
    sf = form_from_pair(pair)
    block = Matrix.block_diag(phi.a_inv, Matrix([[Fraction(1)]]))
    new_form = pullback_linear(sf.form, block)
    new_pair = _repair(StructureForm(pair.N, new_form), nvars=pair.nvars)
    report = {
        "denominator": phi.denominator(pair.nvars),
        "conformal_ok": conformal_check(pair, new_pair, phi),
        "affine_shape_ok": True,
    }
    return new_pair, report


def conformal_check(pair: HamPair, new_pair: HamPair, phi: ProjectiveMap) -> bool:
    """Exact two-form comparison of the metric conformal law.

    Substitutes the point map into the transformed metric, wedges with
    the Jacobian minors, and compares against the original metric
    scaled by the inverse cube of the denominator.  Denominators are
    cleared up front: every 2x2 Jacobian minor of a fractional-linear
    map is a quadratic polynomial over the cube of the shared
    denominator, so the law reduces to polynomial identities and no
    rational-function reduction is ever needed.
    """
    n, nv = pair.N, pair.nvars
    den = phi.denominator(nv).num
    nums = []
    for i in range(n):
        p = Poly.const(nv, phi.a[i, n])
        for l in range(n):
            c = phi.a[i, l]
            if c:
                p = p + Poly.var(nv, l + 1) * c
        nums.append(p)

    def substituted(f):
        # f composed with the point map, cleared to poly / (scale * A);
        # None if f is not affine in the fields, which sends us to the
        # uncleared fallback.
        if not f.den.is_constant():
            return None
        out = Poly.zero(nv)
        for exps, c in f.num.terms.items():
            rest = Poly(nv, {(0,) * n + exps[n:]: c})
            deg = sum(exps[:n])
            if deg == 0:
                out = out + rest * den
            elif deg == 1:
                out = out + rest * nums[exps[:n].index(1)]
            else:
                return None
        return out, f.den.const_value()

    a = phi.a
    for k in range(1, n + 1):
        for l in range(k + 1, n + 1):
            lhs = Poly.zero(nv)
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    gbar = new_pair.metric.get(i, j)
                    if not gbar:
                        continue
                    if isinstance(gbar, RatFunc):
                        sub = substituted(gbar)
                        if sub is None:
                            return _conformal_check_generic(pair, new_pair, phi)
                    else:
                        sub = (den * Poly.const(nv, gbar), Fraction(1))
                    gpoly, gscale = sub
                    minor = (den * (a[i - 1, k - 1] * a[j - 1, l - 1]
                                    - a[i - 1, l - 1] * a[j - 1, k - 1])
                             - nums[j - 1] * (a[i - 1, k - 1] * a[n, l - 1]
                                              - a[i - 1, l - 1] * a[n, k - 1])
                             - nums[i - 1] * (a[j - 1, l - 1] * a[n, k - 1]
                                              - a[j - 1, k - 1] * a[n, l - 1]))
                    lhs = lhs + gpoly * minor * (1 / gscale)
            g = pair.metric.get(k, l)
            if not g:
                rhs = Poly.zero(nv)
            elif isinstance(g, RatFunc):
                if not g.den.is_constant():
                    return _conformal_check_generic(pair, new_pair, phi)
                rhs = den * g.num * (1 / g.den.const_value())
            else:
                rhs = den * Poly.const(nv, g)
            if not (lhs - rhs).is_zero():
                return False
    return True


def _conformal_check_generic(pair: HamPair, new_pair: HamPair,
                             phi: ProjectiveMap) -> bool:
    """Uncleared rational-function route, kept as the slow fallback."""
    n, nv = pair.N, pair.nvars
    comps = phi.components(nv)
    values = list(comps) + [RatFunc.var(nv, k) for k in range(n + 1, nv + 1)]
    jac = [[comps[i].diff(k) for k in range(1, n + 1)] for i in range(n)]
    a3 = phi.denominator(nv) ** 3
    for k in range(1, n + 1):
        for l in range(k + 1, n + 1):
            lhs = RatFunc.from_const(nv, 0)
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    gbar = new_pair.metric.get(i, j)
                    if not gbar:
                        continue
                    minor = (jac[i - 1][k - 1] * jac[j - 1][l - 1]
                             - jac[i - 1][l - 1] * jac[j - 1][k - 1])
                    if isinstance(gbar, RatFunc):
                        gbar = gbar.compose(values)
                    lhs = lhs + gbar * minor
            rhs = pair.metric.get(k, l) / a3
            if lhs != rhs:
                return False
    return True


def apply_xt_exchange(pair: HamPair) -> HamPair:
    """Swap the roles of the two independent variables.

    The cubic block survives unchanged, the constant metric block and
    the rotational block of the covector trade places, and the constant
    shift flips sign.  For two-field pairs the result is additionally
    checked against the substitution identity: the rebuilt metric,
    evaluated along the flux, must match the original metric times the
    flux Jacobian.
    """
    try:
        new_pair = HamPair(pair.mcubic, pair.wskew, pair.mconst,
                           tuple(-b for b in pair.wconst), nvars=pair.nvars)
    except DegenerateMetric as exc:
        raise DegenerateImage("exchanged metric is degenerate") from exc
    if pair.N == 2:
        if not _exchange_metric_identity(pair, new_pair):
            raise ValidationError("exchange identity failed; pair data inconsistent")
    return new_pair


def _exchange_metric_identity(pair: HamPair, new_pair: HamPair) -> bool:
    # gbar_{ij} evaluated at ubar = V equals g_{is} dV^s/du^j
    n, nv = pair.N, pair.nvars
    flux = pair.flux
    values = list(flux) + [RatFunc.var(nv, k) for k in range(n + 1, nv + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            gbar = new_pair.metric.get(i, j)
            if isinstance(gbar, RatFunc):
                gbar = gbar.compose(values)
            rhs = RatFunc.from_const(nv, 0)
            for s in range(1, n + 1):
                g = pair.metric.get(i, s)
                if g:
                    rhs = rhs + g * flux[s - 1].diff(j)
            if gbar != rhs:
                return False
    return True


def apply_reciprocal(pair: HamPair, r: ReciprocalMap) -> HamPair:
    """Transform a pair by a reciprocal change of the independent variables.

    The block matrix mixes the last two coordinates with the fields; the
    structure form is pulled back along its inverse and re-read as a
    pair.  A degenerate metric or a vanishing leading block in the
    result raises DegenerateImage.
    """
    if r.N != pair.N:
        raise DimensionMismatch("reciprocal map size does not match the pair")
    sf = form_from_pair(pair)
    try:
        inv = r.block_matrix().inv()
    except SingularMatrix as exc:
        raise ValidationError("reciprocal block is singular") from exc
    new_form = pullback_linear(sf.form, inv)
    return _repair(StructureForm(pair.N, new_form), nvars=pair.nvars)
