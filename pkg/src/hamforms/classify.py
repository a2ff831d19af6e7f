"""Canonical forms and orbit invariants for pairs with two or four fields.

The two-field case has a single open orbit once the rotational entry of
the right-hand-side matrix is nonzero; the normalizing matrix is written
down explicitly and logged.  The four-field case is classified by the
pair of invariants (eta-trace, quadric value) of the splitting of the
right-hand-side matrix along the standard symplectic form, and the
canonical representative is emitted directly from those invariants.
"""

from __future__ import annotations

from fractions import Fraction

from .bridge import StructureForm, form_from_pair
from .errors import (DegenerateMetric, DimensionMismatch, NotInThetaEta,
                     NullSystemOrbit, WrongTBlock)
from .forms import AltForm, pullback_linear, wedge
from .linalg import Matrix
from .pairs import HamPair
from .poly import Poly, RatFunc
from .skew import SkewMatrix

TOP4 = (1, 2, 3, 4)


def eta_form() -> AltForm:
    """The standard symplectic two-form on four coordinates."""
    return AltForm(2, 4, {(1, 2): Fraction(1), (3, 4): Fraction(1)})


def eta_matrix() -> SkewMatrix:
    """The standard symplectic form as a skew matrix."""
    return SkewMatrix(4, {(1, 2): Fraction(1), (3, 4): Fraction(1)})


def eta_gram() -> Matrix:
    """The same form as a dense matrix, for building transvections."""
    one, zero = Fraction(1), Fraction(0)
    return Matrix([
        [zero, one, zero, zero],
        [-one, zero, zero, zero],
        [zero, zero, zero, one],
        [zero, zero, -one, zero],
    ])


def t4_form() -> AltForm:
    """The standard three-form eta ^ du5 on five coordinates."""
    return AltForm(3, 5, {(1, 2, 5): Fraction(1), (3, 4, 5): Fraction(1)})


def skew_as_form(s: SkewMatrix) -> AltForm:
    """A skew matrix read as the two-form sum s_ij du^i ^ du^j (i<j)."""
    return AltForm(2, s.dim, dict(s.upper))


def form_as_skew(a: AltForm) -> SkewMatrix:
    """The inverse reading; the form must have degree two."""
    if a.degree != 2:
        raise DimensionMismatch("expected a two-form")
    return SkewMatrix(a.dim, dict(a.comps))


class SymplecticSplit:
    """Decomposition A = theta_eta * eta + theta with theta trace-free.

    Trace-free means wedge(eta, theta) = 0, which pins theta's (1,2)
    slot to the negative of its (3,4) slot; that shared value is the
    theta0 component.
    """

    __slots__ = ("theta_eta", "theta")

    def __init__(self, theta_eta, theta: AltForm):
        self.theta_eta = theta_eta
        self.theta = theta

    @property
    def components(self) -> dict:
        t = self.theta
        return {
            "theta0": t.get(1, 2),
            "theta13": t.get(1, 3),
            "theta14": t.get(1, 4),
            "theta23": t.get(2, 3),
            "theta24": t.get(2, 4),
        }

    def reconstruct(self) -> AltForm:
        return eta_form().scale(self.theta_eta) + self.theta

    def __repr__(self):
        return "SymplecticSplit(theta_eta=%r, theta=%r)" % (self.theta_eta, self.theta)


def symplectic_split(a) -> SymplecticSplit:
    """Split a two-form on four coordinates along the symplectic line.

    The eta-coefficient is the ratio of top-form coefficients
    (a ^ eta) / (eta ^ eta); the remainder is trace-free by
    construction.  Accepts an AltForm or a SkewMatrix.
    """
    if isinstance(a, SkewMatrix):
        a = skew_as_form(a)
    if a.degree != 2 or a.dim != 4:
        raise DimensionMismatch("splitting needs a two-form on four coordinates")
    eta = eta_form()
    num = wedge(a, eta).get(*TOP4)
    den = wedge(eta, eta).get(*TOP4)  # = 2
    theta_eta = num / den
    theta = a - eta.scale(theta_eta)
    return SymplecticSplit(theta_eta, theta)


def q_form(theta):
    """The quadric value Q with theta ^ theta = Q du1^du2^du3^du4.

    Only defined on the trace-free complement of the symplectic line;
    a nonzero wedge against eta raises NotInThetaEta.  Equals twice the
    Pfaffian of theta read as a skew matrix.
    """
    if isinstance(theta, SkewMatrix):
        theta = skew_as_form(theta)
    if theta.degree != 2 or theta.dim != 4:
        raise DimensionMismatch("the quadric takes a two-form on four coordinates")
    trace = wedge(eta_form(), theta)
    if not trace.is_zero():
        raise NotInThetaEta("the form has a nonzero component along eta")
    return wedge(theta, theta).get(*TOP4)


class ClassificationResult:
    """Invariants, canonical representative, and the normalization log."""

    __slots__ = ("N", "invariants", "canonical_form", "canonical_pair", "log")

    def __init__(self, N, invariants, canonical_form, canonical_pair, log):
        self.N = N
        self.invariants = invariants
        self.canonical_form = canonical_form
        self.canonical_pair = canonical_pair
        self.log = log

    def __repr__(self):
        return "ClassificationResult(N=%d, invariants=%r)" % (self.N, self.invariants)


def canonical_n2_pair() -> HamPair:
    """The normal-form two-field pair: decoupled transport equations."""
    return HamPair(
        AltForm(3, 2),
        SkewMatrix(2, {(1, 2): Fraction(1)}),
        SkewMatrix(2, {(1, 2): Fraction(1)}),
        (Fraction(1), Fraction(0)),
    )


def canonical_n4_pair(theta_eta, theta13, nvars=None) -> HamPair:
    """The four-field normal form for given invariant data.

    The right-hand-side matrix is theta_eta * eta + theta13 du1^du3
    + du2^du4 over the constant symplectic metric; the constant shift
    is zero because it drops out of the system after differentiation.
    """
    wskew = SkewMatrix(4, {
        (1, 2): theta_eta,
        (3, 4): theta_eta,
        (1, 3): theta13,
        (2, 4): Fraction(1),
    })
    zero = Fraction(0)
    return HamPair(AltForm(3, 4), eta_matrix(), wskew,
                   (zero, zero, zero, zero), nvars=nvars)


def system_coefficients(pair) -> list:
    """Row coefficients of the first-order system carried by the flux.

    Row i maps field index j to the partial derivative of flux
    component i by field j; zero entries are omitted.
    """
    rows = []
    for v in pair.flux:
        row = {}
        for j in range(1, pair.N + 1):
            d = v.diff(j)
            if not d.is_zero():
                row[j] = d
        rows.append(row)
    return rows


def format_system(pair, names=None) -> list:
    """Human-readable rendering, one string per evolution equation."""
    out = []
    for i, row in enumerate(system_coefficients(pair), start=1):
        parts = []
        for j in sorted(row):
            c = row[j]
            base = "u%d_x" % j
            if c == 1:
                term = base
            elif c == -1:
                term = "-" + base
            else:
                cs = c.format(names) if hasattr(c, "format") else str(c)
                if " " in cs:
                    cs = "(%s)" % cs
                term = "%s*%s" % (cs, base)
            parts.append(term)
        rhs = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        out.append("u%d_t = %s" % (i, rhs))
    return out


def classify_n2(sf: StructureForm) -> ClassificationResult:
    """Normal form of a two-field structure form.

    Requires a nondegenerate metric slot and a nonzero rotational entry
    in the right-hand-side matrix; under those the orbit is unique, the
    canonical form has unit coefficients on the first three basis
    monomials, and the normalizing matrix (unimodular on the first
    three coordinates whenever the metric slot is already one) is
    logged together with a pullback verification flag.
    """
    if sf.N != 2:
        raise DimensionMismatch("two-field classification needs N=2")
    gamma = sf.mconst_block().get(1, 2)
    if not gamma:
        raise DegenerateMetric("the metric slot vanishes")
    a12 = sf.wskew_block().get(1, 2)
    if not a12:
        raise NullSystemOrbit("rotational entry is zero; not in the open orbit")
    b1, b2 = sf.wconst_block()

    one, zero = Fraction(1), Fraction(0)
    # prescale the first coordinate so the metric slot becomes one
    a = a12 / gamma
    c1 = b1 / gamma
    c2 = b2
    m = Matrix([
        [one / (gamma * a), zero, c2 / gamma],
        [zero, one, one - c1],
        [zero, zero, a],
    ])
    element = Matrix.block_diag(m, Matrix([[one]]))
    canon = canonical_form_n2()
    pulled = pullback_linear(sf.form, element)
    log = {
        "element": element,
        "det": one / gamma,
        "pullback_matches": pulled == canon,
        "already_canonical": sf.form == canon,
    }
    pair = canonical_n2_pair()
    return ClassificationResult(2, (), form_from_pair(pair), pair, log)


def canonical_form_n2() -> AltForm:
    """Unit coefficients on du123, du124, du134; nothing else."""
    one = Fraction(1)
    return AltForm(3, 4, {(1, 2, 3): one, (1, 2, 4): one, (1, 3, 4): one})


def _coeff_ring_size(form: AltForm):
    """Ring size of symbolic coefficients, or None when all are rational."""
    for c in form.comps.values():
        nv = getattr(c, "num_vars", None)
        if nv is not None:
            return nv
    return None


def classify_n4(sf: StructureForm) -> ClassificationResult:
    """Invariant-based classification of a four-field structure form.

    The cubic-with-homogenizer block must already sit in the standard
    position eta ^ du5 (reducing a generic block to it is out of
    scope); otherwise WrongTBlock.  The invariants are the eta-trace of
    the right-hand-side matrix and the quadric value of its trace-free
    part; the canonical representative realizes them with a single
    du1^du3 slot and a unit du2^du4 slot, and drops the constant shift.
    """
    if sf.N != 4:
        raise DimensionMismatch("four-field classification needs N=4")
    if not sf.metric_block() == t4_form():
        raise WrongTBlock("cubic block is not in the standard position")
    a = skew_as_form(sf.wskew_block())
    split = symplectic_split(a)
    q = q_form(split.theta)
    theta13 = -q / 2
    nvars = _coeff_ring_size(sf.form)
    pair = canonical_n4_pair(split.theta_eta, theta13, nvars=nvars)
    log = {
        "method": "invariants",
        "split": split.components,
        "shift_dropped": tuple(sf.wconst_block()),
    }
    return ClassificationResult(4, (split.theta_eta, q),
                                form_from_pair(pair), pair, log)


# -- stabilizer of the standard three-form on five coordinates -------------


def sp4_basis() -> list:
    """Ten generators of the symplectic algebra of eta.

    The algebra is the image of the symmetric matrices under
    multiplication by the inverse symplectic matrix; the basis below
    comes from the elementary symmetric matrices.
    """
    one, zero = Fraction(1), Fraction(0)
    j = [[zero] * 4 for _ in range(4)]
    j[0][1], j[1][0] = one, -one
    j[2][3], j[3][2] = one, -one
    jm = Matrix(j)
    out = []
    for (r, c) in [(1, 1), (2, 2), (3, 3), (4, 4),
                   (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]:
        s = [[zero] * 4 for _ in range(4)]
        s[r - 1][c - 1] = one
        s[c - 1][r - 1] = one
        out.append((jm @ Matrix(s)) * Fraction(-1))
    return out


def _t4_sym() -> AltForm:
    one = RatFunc.from_const(1, 1)
    return AltForm(3, 5, {(1, 2, 5): one, (3, 4, 5): one})


def _first_order_preserves(x5: Matrix) -> bool:
    """Whether I + eps*X preserves the standard three-form at order one.

    Truncation at degree one reads off each component's value and first
    derivative at eps = 0; both must match the unperturbed form.
    """
    eps = RatFunc.var(1, 1)
    rows = [[RatFunc.from_const(1, 1 if i == k else 0) for k in range(5)]
            for i in range(5)]
    for i in range(5):
        for k in range(5):
            c = x5[i, k]
            if c:
                rows[i][k] = rows[i][k] + eps * c
    t4 = _t4_sym()
    delta = pullback_linear(t4, Matrix(rows)) - t4
    origin = (Fraction(0),)
    for _, c in delta.sorted_items():
        if c.eval(origin) != 0 or c.diff(1).eval(origin) != 0:
            return False
    return True


def _embed5(x4: Matrix) -> Matrix:
    # algebra directions act only on the first four coordinates, so the
    # corner entry is zero (a one would add a scaling of the fifth)
    return Matrix.block_diag(x4, Matrix([[Fraction(0)]]))


def stabilizer_audit() -> dict:
    """Check the fourteen-dimensional stabilizer of the standard block.

    Ten symplectic directions and four shear directions (the last
    column above the fixed fifth coordinate) must each preserve the
    form to first order in a formal parameter; two representative group
    elements are also checked exactly, and a non-symplectic direction
    serves as the negative control.
    """
    report = {"N": 4, "dimension": 14, "generators": [], "exact": {}, "ok": True}

    gens = []
    for k, x in enumerate(sp4_basis(), start=1):
        gens.append(("symplectic-%d" % k, _embed5(x)))
    zero = Fraction(0)
    for i in range(1, 5):
        rows = [[zero] * 5 for _ in range(5)]
        rows[i - 1][4] = Fraction(1)
        gens.append(("shear-%d" % i, Matrix(rows)))

    for label, x5 in gens:
        ok = _first_order_preserves(x5)
        report["generators"].append({"label": label, "first_order_ok": ok})
        report["ok"] = report["ok"] and ok

    # exact group elements, one of each kind, with a symbolic parameter
    c = RatFunc.var(1, 1)
    one, zero = RatFunc.from_const(1, 1), RatFunc.from_const(1, 0)

    def ident():
        return [[one if i == k else zero for k in range(5)] for i in range(5)]

    t4 = AltForm(3, 5, {(1, 2, 5): one, (3, 4, 5): one})
    rows = ident()
    rows[0][1] = c  # transvection along the first coordinate pair
    exact_sympl = pullback_linear(t4, Matrix(rows)) == t4
    rows = ident()
    rows[0][4] = c  # shear of the first coordinate into the fifth
    exact_shear = pullback_linear(t4, Matrix(rows)) == t4
    rows = ident()
    rows[0][0], rows[1][1] = c, one / c  # torus element
    exact_torus = pullback_linear(t4, Matrix(rows)) == t4
    report["exact"] = {
        "transvection": exact_sympl,
        "shear": exact_shear,
        "torus": exact_torus,
    }
    report["ok"] = report["ok"] and exact_sympl and exact_shear and exact_torus

    # negative control: a direction outside the symplectic algebra
    bad = [[Fraction(0)] * 5 for _ in range(5)]
    bad[0][2] = Fraction(1)
    control_preserved = _first_order_preserves(Matrix(bad))
    report["negative_control_preserved"] = control_preserved
    report["ok"] = report["ok"] and not control_preserved
    return report
