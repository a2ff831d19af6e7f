"""Alternating forms with exact coefficients.

A form of degree k on a dim-dimensional space stores one coefficient per
strictly increasing index tuple (1-based).  Coefficients may be Fraction
or RatFunc; an accessor with indices in arbitrary order applies the
permutation sign.  Degrees 1..3 cover all stored data; degree 4 appears
only as a wedge result.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .errors import DimensionMismatch
from .linalg import Matrix
from .poly import Poly, RatFunc, as_fraction


def perm_sign(seq) -> int:
    """Sign of the permutation sorting seq; 0 when an index repeats."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] == seq[j]:
                return 0
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def _scalar_ok(c) -> bool:
    return isinstance(c, (int, Fraction, Poly, RatFunc))


class AltForm:
    """Exterior form of degree 1..4 with sparse increasing-index storage."""

    __slots__ = ("degree", "dim", "comps")

    def __init__(self, degree: int, dim: int, comps=None):
        if not 1 <= degree <= 4:
            raise ValueError("only degrees 1..4 are supported")
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.degree = degree
        self.dim = dim
        clean = {}
        if comps:
            for idx, c in comps.items():
                idx = tuple(idx)
                if len(idx) != degree:
                    raise ValueError("index tuple has wrong length")
                if any(not 1 <= i <= dim for i in idx):
                    raise ValueError("index out of range")
                s = perm_sign(idx)
                if s == 0:
                    continue
                key = tuple(sorted(idx))
                if not _scalar_ok(c):
                    raise TypeError("unsupported coefficient type %r" % type(c))
                if isinstance(c, int):
                    c = Fraction(c)
                if s < 0:
                    c = -c
                prev = clean.get(key)
                clean[key] = c if prev is None else prev + c
        self.comps = {k: v for k, v in clean.items() if v}

    @classmethod
    def zero(cls, degree: int, dim: int) -> "AltForm":
        return cls(degree, dim)

    @classmethod
    def basis(cls, dim: int, idx) -> "AltForm":
        """Basis form du^{i1} ^ ... ^ du^{ik} for increasing idx."""
        return cls(len(idx), dim, {tuple(idx): Fraction(1)})

    def get(self, *idx):
        """Component for an arbitrary-order index tuple, with sign."""
        if len(idx) != self.degree:
            raise ValueError("wrong number of indices")
        s = perm_sign(idx)
        if s == 0:
            return Fraction(0)
        c = self.comps.get(tuple(sorted(idx)))
        if c is None:
            return Fraction(0)
        return -c if s < 0 else c

    def is_zero(self) -> bool:
        return not self.comps

    def sorted_items(self):
        return sorted(self.comps.items())

    def _check_same(self, other: "AltForm"):
        if self.degree != other.degree or self.dim != other.dim:
            raise DimensionMismatch("forms of different degree or dimension")

    def __add__(self, other):
        if not isinstance(other, AltForm):
            return NotImplemented
        self._check_same(other)
        comps = dict(self.comps)
        for k, c in other.comps.items():
            s = comps.get(k)
            s = c if s is None else s + c
            if s:
                comps[k] = s
            else:
                comps.pop(k, None)
        out = AltForm.__new__(AltForm)
        out.degree, out.dim, out.comps = self.degree, self.dim, comps
        return out

    def __neg__(self):
        out = AltForm.__new__(AltForm)
        out.degree, out.dim = self.degree, self.dim
        out.comps = {k: -c for k, c in self.comps.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, AltForm):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "AltForm":
        if isinstance(c, int):
            c = Fraction(c)
        out = AltForm.__new__(AltForm)
        out.degree, out.dim = self.degree, self.dim
        out.comps = {k: v * c for k, v in self.comps.items()} if c else {}
        return out

    def __eq__(self, other):
        if not isinstance(other, AltForm):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.dim == other.dim
            and _comps_equal(self.comps, other.comps)
        )

    def __hash__(self):
        return hash((self.degree, self.dim, frozenset(self.comps)))

    def map_coeffs(self, fn) -> "AltForm":
        comps = {}
        for k, c in self.comps.items():
            v = fn(c)
            if v:
                comps[k] = v
        out = AltForm.__new__(AltForm)
        out.degree, out.dim, out.comps = self.degree, self.dim, comps
        return out

    def format(self, names=None) -> str:
        if not self.comps:
            return "0"
        parts = []
        for idx, c in self.sorted_items():
            base = "^".join("du%d" % i for i in idx)
            cs = str(c) if not isinstance(c, RatFunc) else c.format(names)
            parts.append("(%s) %s" % (cs, base))
        return " + ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "AltForm(%d, %d, %s)" % (self.degree, self.dim, self.format())


def _comps_equal(a: dict, b: dict) -> bool:
    if set(a) != set(b):
        return False
    return all(a[k] == b[k] for k in a)


def wedge(a: AltForm, b: AltForm) -> AltForm:
    """Exterior product; result degree must stay within 4."""
    if a.dim != b.dim:
        raise DimensionMismatch("wedge of forms on different spaces")
    k = a.degree + b.degree
    if k > 4:
        raise ValueError("wedge degree beyond 4 is not supported")
    comps: dict = {}
    for ia, ca in a.comps.items():
        for ib, cb in b.comps.items():
            s = perm_sign(ia + ib)
            if s == 0:
                continue
            key = tuple(sorted(ia + ib))
            c = ca * cb
            if s < 0:
                c = -c
            prev = comps.get(key)
            c = c if prev is None else prev + c
            if c:
                comps[key] = c
            else:
                comps.pop(key, None)
    out = AltForm.__new__(AltForm)
    out.degree, out.dim, out.comps = k, a.dim, comps
    return out


def contract_bivector(omega: AltForm, p) -> tuple:
    """Contract a three-form with an antisymmetric bivector.

    `p` maps increasing index pairs (j, k) to scalars; each unordered pair
    is summed exactly once, i.e. component i of the result is

        sum_{j<k} omega(i, j, k) * p[(j, k)].
    """
    if omega.degree != 3:
        raise DimensionMismatch("contraction expects a three-form")
    entries = p.entries if hasattr(p, "entries") else p
    pdim = p.dim if hasattr(p, "dim") else omega.dim
    if pdim != omega.dim:
        raise DimensionMismatch("bivector dimension does not match the form")
    out = []
    for i in range(1, omega.dim + 1):
        total = None
        for (j, k), v in entries.items():
            if j >= k:
                raise ValueError("bivector keys must be increasing pairs")
            w = omega.get(i, j, k)
            if not w or not v:
                continue
            t = w * v
            total = t if total is None else total + t
        out.append(total if total is not None else Fraction(0))
    return tuple(out)


def pullback_linear(phi: AltForm, m: Matrix) -> AltForm:
    """Pullback of phi along the linear map with matrix m.

    m has phi.dim rows (output space) and any number of columns (input
    space); component I of the result is sum_A phi_A * det(m[A, I]).
    """
    if m.nrows != phi.dim:
        raise DimensionMismatch("matrix output dimension must match the form")
    dim_in = m.ncols
    k = phi.degree
    comps: dict = {}
    for tgt in combinations(range(1, dim_in + 1), k):
        total = None
        for src, c in phi.comps.items():
            sub = Matrix([[m.rows[a - 1][i - 1] for i in tgt] for a in src])
            d = sub.det()
            if not d:
                continue
            t = c * d
            total = t if total is None else total + t
        if total is not None and total:
            comps[tgt] = total
    out = AltForm.__new__(AltForm)
    out.degree, out.dim, out.comps = k, dim_in, comps
    return out
