"""Metric-flux pairs with affine-linear antisymmetric metrics.

A pair in N fields (N even) is determined by four constant pieces of
data: a three-form `mcubic` and a skew matrix `mconst` building the
metric

    metric_ij = sum_k mcubic_ijk u^k + mconst_ij,

plus a skew matrix `wskew` and a covector `wconst` building the affine
covector w_j = sum_l wskew_jl u^l + wconst_j.  The flux of the
associated first-order system solves  metric . flux = w.  Pairs built
this way satisfy the compatibility identities checked by
`check_compat`; the check exists to demonstrate that and to expose
failures for hand-edited fluxes.
"""

from __future__ import annotations

import warnings
from fractions import Fraction

from .errors import DegenerateMetric, DimensionMismatch, OddDimension
from .errors import NullSystemWarning
from .forms import AltForm
from .poly import Poly, RatFunc, divides
from .sampling import Lcg, random_skew, random_three_form, random_vector, sample_point
from .skew import SkewMatrix, pfaffian, pfaffian_adjugate

_DEFAULT_SEED = 715225741


def _data_entry(c, nvars: int, nfields: int, what: str):
    """Coerce a defining coefficient: a rational constant, or a
    polynomial in the ring's parameter variables (never the fields)."""
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, Fraction):
        return c
    if isinstance(c, Poly):
        c = RatFunc.from_poly(c)
    if isinstance(c, RatFunc):
        if c.num_vars != nvars:
            raise ValueError("%s entry lives in a different ring" % what)
        if not c.is_polynomial():
            raise ValueError("%s entries must be polynomial" % what)
        if any(c.num.uses_var(i) for i in range(1, nfields + 1)):
            raise ValueError("%s entries must not involve the fields" % what)
        if c.is_constant():
            return c.const_value()
        return c
    raise TypeError("%s must have rational or parameter entries" % what)


def _as_ring_poly(c, nvars: int) -> Poly:
    if isinstance(c, Fraction):
        return Poly.const(nvars, c)
    return c.num * (Fraction(1) / c.den.const_value())


def _linear_comb(parts, const, nvars: int) -> Poly:
    """sum of coeff * u_var plus a constant term, as one polynomial."""
    acc = Poly.const(nvars, const) if isinstance(const, Fraction) else _as_ring_poly(const, nvars)
    for v, c in parts:
        acc = acc + _as_ring_poly(c, nvars) * Poly.var(nvars, v)
    return acc


def linear_skew(phi: AltForm, nvars: int | None = None) -> SkewMatrix:
    """Skew matrix of polynomials S_ij = sum_k phi_ijk u^k."""
    if phi.degree != 3:
        raise DimensionMismatch("expected a three-form")
    n = phi.dim
    if nvars is None:
        nvars = n
    if nvars < n:
        raise DimensionMismatch("ring has fewer variables than the form")
    rows: dict = {}
    for (i, j, k), c in phi.comps.items():
        c = _data_entry(c, nvars, n, "three-form")
        for (a, b, v, s) in ((i, j, k, 1), (i, k, j, -1), (j, k, i, 1)):
            rows.setdefault((a, b), []).append((v, c if s > 0 else -c))
    upper = {}
    for key, parts in rows.items():
        p = _linear_comb(parts, Fraction(0), nvars)
        if not p.is_zero():
            upper[key] = p
    return SkewMatrix(n, upper)


def _metric_polys(mcubic: AltForm, mconst: SkewMatrix, nvars: int) -> SkewMatrix:
    if mcubic.dim != mconst.n:
        raise DimensionMismatch("three-form and constant part differ in size")
    lin = linear_skew(mcubic, nvars)
    upper = dict(lin.upper)
    for (i, j), c in mconst.upper.items():
        c = _data_entry(c, nvars, mconst.n, "constant metric part")
        p = _as_ring_poly(c, nvars)
        prev = upper.get((i, j))
        s = p if prev is None else prev + p
        if s:
            upper[(i, j)] = s
        else:
            upper.pop((i, j), None)
    return SkewMatrix(mconst.n, upper)


def build_metric(mcubic: AltForm, mconst: SkewMatrix, nvars: int | None = None) -> SkewMatrix:
    """The affine metric of a pair, entries RatFunc."""
    if nvars is None:
        nvars = mconst.n
    return _metric_polys(mcubic, mconst, nvars).map_entries(RatFunc.from_poly)


def rhs_covector(wskew: SkewMatrix, wconst, nvars: int | None = None) -> tuple:
    """w_j = sum_l wskew_jl u^l + wconst_j as polynomials."""
    n = wskew.n
    if len(wconst) != n:
        raise DimensionMismatch("covector length does not match")
    if nvars is None:
        nvars = n
    out = []
    for j in range(1, n + 1):
        parts = []
        for l in range(1, n + 1):
            c = wskew.get(j, l)
            if c:
                parts.append((l, _data_entry(c, nvars, n, "skew covector part")))
        b = _data_entry(wconst[j - 1], nvars, n, "constant covector part")
        out.append(_linear_comb(parts, b, nvars))
    return tuple(out)


def build_flux(metric: SkewMatrix, wskew: SkewMatrix, wconst, nvars: int | None = None) -> tuple:
    """Solve metric . flux = w; entries are reduced rational functions."""
    gp = _poly_entries(metric)
    if nvars is None:
        nvars = _entry_ring(gp)
    pf = pfaffian(gp)
    if not pf:
        raise DegenerateMetric("metric pfaffian vanishes identically")
    adj = pfaffian_adjugate(gp)
    w = rhs_covector(wskew, wconst, nvars)
    return tuple(
        RatFunc(_row_dot(adj, i, w, nvars), pf) for i in range(1, metric.n + 1)
    )


def _poly_entries(metric: SkewMatrix) -> SkewMatrix:
    def conv(v):
        if isinstance(v, Poly):
            return v
        if isinstance(v, RatFunc):
            if not v.is_polynomial():
                raise ValueError("metric entries must be polynomial")
            return v.num * (Fraction(1) / v.den.const_value())
        raise TypeError("unsupported metric entry type %r" % type(v))

    return metric.map_entries(conv)


def _entry_ring(metric: SkewMatrix) -> int:
    for v in metric.upper.values():
        return v.num_vars
    raise DegenerateMetric("metric is identically zero")


def _row_dot(s: SkewMatrix, i: int, vec, nvars: int) -> Poly:
    total = Poly.zero(nvars)
    for k in range(1, s.n + 1):
        c = s.get(i, k)
        if c and vec[k - 1]:
            total = total + c * vec[k - 1]
    return total


class HamPair:
    """Compatible metric-flux pair in N field variables.

    Variables 1..N of the coefficient ring are the fields; nvars may
    exceed N when the pair lives in a ring with extra parameters.  The
    defining data mcubic, mconst, wskew, wconst are constant; `metric`
    and `flux` are derived from them.
    """

    __slots__ = ("N", "nvars", "mcubic", "mconst", "wskew", "wconst", "metric", "_flux")

    def __init__(self, mcubic: AltForm, mconst: SkewMatrix, wskew: SkewMatrix, wconst, nvars=None):
        N = mconst.n
        if N % 2:
            raise OddDimension("pair needs an even number of fields")
        if mcubic.degree != 3 or mcubic.dim != N:
            raise DimensionMismatch("three-form does not match the field count")
        if wskew.n != N:
            raise DimensionMismatch("skew covector part does not match the field count")
        if len(wconst) != N:
            raise DimensionMismatch("constant covector part has wrong length")
        if nvars is None:
            nvars = N
        if nvars < N:
            raise DimensionMismatch("ring has fewer variables than fields")
        wconst = tuple(_data_entry(b, nvars, N, "constant covector part") for b in wconst)
        self.N = N
        self.nvars = nvars
        self.mcubic = mcubic
        self.mconst = mconst
        self.wskew = wskew
        self.wconst = wconst
        self.metric = build_metric(mcubic, mconst, nvars)
        if not pfaffian(_poly_entries(self.metric)):
            raise DegenerateMetric("metric pfaffian vanishes identically")
        if wskew.is_zero() and not any(wconst):
            warnings.warn(
                "covector data vanishes: the system is trivial", NullSystemWarning
            )
        self._flux = None

    @property
    def flux(self) -> tuple:
        if self._flux is None:
            self._flux = build_flux(self.metric, self.wskew, self.wconst, self.nvars)
        return self._flux

    def flux_cleared(self) -> tuple:
        """Flux numerators over the common pfaffian denominator, all Poly."""
        gp = _poly_entries(self.metric)
        pf = pfaffian(gp)
        adj = pfaffian_adjugate(gp)
        w = rhs_covector(self.wskew, self.wconst, self.nvars)
        nums = tuple(_row_dot(adj, i, w, self.nvars) for i in range(1, self.N + 1))
        return nums, pf

    def pf(self) -> Poly:
        return pfaffian(_poly_entries(self.metric))

    def __eq__(self, other):
        if not isinstance(other, HamPair):
            return NotImplemented
        return (
            self.N == other.N
            and self.nvars == other.nvars
            and self.mcubic == other.mcubic
            and self.mconst == other.mconst
            and self.wskew == other.wskew
            and self.wconst == other.wconst
        )

    def __hash__(self):
        return hash((self.N, self.nvars, self.mcubic, self.mconst, self.wskew, self.wconst))

    def __repr__(self):
        return "HamPair(N=%d, nvars=%d)" % (self.N, self.nvars)

    @classmethod
    def random(cls, rng: Lcg, N: int, nvars=None, allow_null: bool = False) -> "HamPair":
        """Random pair with nondegenerate metric and nontrivial covector."""
        while True:
            mcubic = random_three_form(rng, N, max_num=3)
            mconst = random_skew(rng, N, max_num=3)
            if not pfaffian(_metric_polys(mcubic, mconst, N)):
                continue
            wskew = random_skew(rng, N, max_num=3)
            wconst = random_vector(rng, N, max_num=3)
            if not allow_null and wskew.is_zero() and not any(wconst):
                continue
            return cls(mcubic, mconst, wskew, wconst, nvars=nvars)


class ForcedPair:
    """Metric with a hand-supplied flux, for exercising failure paths.

    Skips the linear-algebra solve; `check_compat` treats it like any
    other pair, so incompatible fluxes produce nonzero residuals instead
    of construction errors.
    """

    __slots__ = ("N", "nvars", "mcubic", "mconst", "metric", "_flux")

    def __init__(self, mcubic: AltForm, mconst: SkewMatrix, flux, nvars=None):
        N = mconst.n
        if N % 2:
            raise OddDimension("pair needs an even number of fields")
        if len(flux) != N:
            raise DimensionMismatch("flux has wrong length")
        if nvars is None:
            nvars = N
        self.N = N
        self.nvars = nvars
        self.mcubic = mcubic
        self.mconst = mconst
        self.metric = build_metric(mcubic, mconst, nvars)
        clean = []
        for v in flux:
            if isinstance(v, Poly):
                v = RatFunc.from_poly(v)
            elif not isinstance(v, RatFunc):
                v = RatFunc.from_const(nvars, v)
            clean.append(v)
        self._flux = tuple(clean)

    @property
    def flux(self) -> tuple:
        return self._flux

    def flux_cleared(self) -> tuple:
        den = Poly.one(self.nvars)
        for v in self._flux:
            den = den * v.den
        nums = []
        for k, v in enumerate(self._flux):
            rest = Poly.one(self.nvars)
            for j, w in enumerate(self._flux):
                if j != k:
                    rest = rest * w.den
            nums.append(v.num * rest)
        return tuple(nums), den


class _Vals:
    """A polynomial reduced to its values at fixed sample points.

    Swapping these in for Poly turns the symbolic compatibility check
    into a pointwise one with no change to the formulas.
    """

    __slots__ = ("v",)

    def __init__(self, v):
        self.v = tuple(v)

    def __add__(self, other):
        return _Vals(a + b for a, b in zip(self.v, other.v))

    def __sub__(self, other):
        return _Vals(a - b for a, b in zip(self.v, other.v))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return _Vals(a * other for a in self.v)
        return _Vals(a * b for a, b in zip(self.v, other.v))

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.v)

    def is_zero(self):
        return not any(self.v)


def check_compat(pair, mode: str = "auto", samples: int = 20, seed: int = _DEFAULT_SEED) -> dict:
    """Verify the first- and second-order compatibility identities.

    With the flux written as V^k = n^k / P over a common denominator,
    both identities clear to polynomial form.  The symbolic mode proves
    them as polynomial identities; the sampled mode evaluates the same
    combinations at random points where P does not vanish.  Returns a
    report holding any nonzero residuals.
    """
    if mode == "auto":
        mode = "symbolic" if pair.N <= 4 else "sampled"
    if mode not in ("symbolic", "sampled"):
        raise ValueError("mode must be auto, symbolic or sampled")
    N, nvars = pair.N, pair.nvars
    gp = _poly_entries(pair.metric)
    nums, P = pair.flux_cleared()

    d_num = [[nums[k].diff(p) for p in range(1, nvars + 1)] for k in range(N)]
    dP = [P.diff(p) for p in range(1, nvars + 1)]
    dd_num = [
        [[d_num[k][p].diff(l + 1) for l in range(nvars)] for p in range(nvars)]
        for k in range(N)
    ]
    ddP = [[dP[p].diff(l + 1) for l in range(nvars)] for p in range(nvars)]

    points = None
    if mode == "sampled":
        rng = Lcg(seed)
        points = []
        while len(points) < samples:
            x = sample_point(rng, nvars)
            if P.eval(x):
                points.append(x)

        def conv(p):
            return _Vals(p.eval(x) for x in points)

        zero = _Vals((Fraction(0),) * len(points))
    else:

        def conv(p):
            return p

        zero = Poly.zero(nvars)

    nums = [conv(n) for n in nums]
    P = conv(P)
    d_num = [[conv(p) for p in row] for row in d_num]
    dP = [conv(p) for p in dP]
    dd_num = [[[conv(p) for p in row] for row in plane] for plane in dd_num]
    ddP = [[conv(p) for p in row] for row in ddP]
    gval = {k: conv(v) for k, v in gp.upper.items()}

    def gv(i, j):
        if i < j:
            return gval.get((i, j))
        v = gval.get((j, i))
        return None if v is None else v * Fraction(-1)

    d1_cache = {}

    def d1(k, l):
        # numerator of V^k_{,l} over P^2; k and l are 1-based
        key = (k, l)
        r = d1_cache.get(key)
        if r is None:
            r = d_num[k - 1][l - 1] * P - nums[k - 1] * dP[l - 1]
            d1_cache[key] = r
        return r

    d2_cache = {}

    def d2(k, p, l):
        # numerator of V^k_{,pl} over P^3; all indices 1-based
        key = (k, p, l)
        r = d2_cache.get(key)
        if r is None:
            lead = (
                dd_num[k - 1][p - 1][l - 1] * P
                + d_num[k - 1][p - 1] * dP[l - 1]
                - d_num[k - 1][l - 1] * dP[p - 1]
                - nums[k - 1] * ddP[p - 1][l - 1]
            )
            r = lead * P - (dP[l - 1] * d1(k, p)) * 2
            d2_cache[key] = r
        return r

    def report(acc):
        if mode == "symbolic":
            return RatFunc.from_poly(acc)
        idx, val = next((i, v) for i, v in enumerate(acc.v) if v)
        return {"point": points[idx], "value": val}

    first = {}
    for p in range(1, N + 1):
        for q in range(p, N + 1):
            acc = zero
            for j in range(1, N + 1):
                a = gv(q, j)
                if a is not None:
                    acc = acc + a * d1(j, p)
                b = gv(p, j)
                if b is not None:
                    acc = acc + b * d1(j, q)
            if acc:
                first[(p, q)] = report(acc)

    def cubic_coeff(i, j, k):
        # metric derivative coefficients; may be parameters of the ring
        c = pair.mcubic.get(i, j, k)
        if isinstance(c, (int, Fraction)):
            return c if c else None
        if not c:
            return None
        return conv(_as_ring_poly(c, nvars))

    second = {}
    for q in range(1, N + 1):
        for p in range(1, N + 1):
            for l in range(1, N + 1):
                acc = zero
                for k in range(1, N + 1):
                    a = gv(q, k)
                    if a is not None:
                        acc = acc + a * d2(k, p, l)
                    c1 = cubic_coeff(p, q, k)
                    if c1 is not None:
                        acc = acc + (d1(k, l) * P) * c1
                    c2 = cubic_coeff(q, k, l)
                    if c2 is not None:
                        acc = acc + (d1(k, p) * P) * c2
                if acc:
                    second[(q, p, l)] = report(acc)

    return {
        "mode": mode,
        "first_order": first,
        "second_order": second,
        "checked": (N * (N + 1) // 2, N ** 3),
        "all_zero": not first and not second,
    }


def degree_report(pair) -> dict:
    """Degrees of the flux and inverse metric against their bounds.

    Flux components have numerator degree at most N/2 with denominator
    dividing the metric pfaffian; inverse metric entries stay one degree
    lower.
    """
    N = pair.N
    pf = pfaffian(_poly_entries(pair.metric))
    flux = []
    ok = True
    for v in pair.flux:
        nd, dd = v.num.total_degree(), v.den.total_degree()
        div = divides(v.den, pf)
        ok = ok and nd <= N // 2 and div
        flux.append({"num_degree": nd, "den_degree": dd, "den_divides_pf": div})
    inverse = []
    adj = pfaffian_adjugate(_poly_entries(pair.metric))
    for (i, j), p in sorted(adj.upper.items()):
        ent = RatFunc(p, pf)
        nd = ent.num.total_degree()
        div = divides(ent.den, pf)
        ok = ok and nd <= (N - 2) // 2 and div
        inverse.append({"entry": (i, j), "num_degree": nd, "den_divides_pf": div})
    return {
        "pf_degree": pf.total_degree(),
        "flux": flux,
        "inverse": inverse,
        "bounds": {"flux_num": N // 2, "inverse_num": (N - 2) // 2, "pf": N // 2},
        "within_bounds": ok,
    }
