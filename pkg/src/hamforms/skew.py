"""Antisymmetric matrices, Pfaffians, and Pfaffian-based inversion.

The leading coefficient of every operator handled here is antisymmetric,
so determinants factor as squares of Pfaffians and inverses divide by a
single Pfaffian instead of a determinant.  Entries are Fraction or
RatFunc; everything is exact.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import OddDimension, SingularMatrix
from .forms import AltForm
from .linalg import Matrix


class SkewMatrix:
    """n x n antisymmetric matrix stored by strictly upper entries."""

    __slots__ = ("n", "upper")

    def __init__(self, n: int, upper=None):
        self.n = n
        clean = {}
        if upper:
            for (i, j), v in upper.items():
                if not (1 <= i <= n and 1 <= j <= n):
                    raise ValueError("index out of range")
                if i == j:
                    if v:
                        raise ValueError("diagonal of a skew matrix must vanish")
                    continue
                if i > j:
                    i, j = j, i
                    v = -v
                if isinstance(v, int):
                    v = Fraction(v)
                prev = clean.get((i, j))
                v = v if prev is None else prev + v
                if v:
                    clean[(i, j)] = v
                else:
                    clean.pop((i, j), None)
        self.upper = clean

    @property
    def dim(self) -> int:
        return self.n

    @property
    def entries(self) -> dict:
        return self.upper

    @classmethod
    def zero(cls, n: int) -> "SkewMatrix":
        return cls(n)

    @classmethod
    def from_rows(cls, rows) -> "SkewMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        upper = {}
        for i in range(n):
            if len(rows[i]) != n:
                raise ValueError("matrix must be square")
            if rows[i][i]:
                raise ValueError("diagonal of a skew matrix must vanish")
            for j in range(i + 1, n):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError("matrix is not antisymmetric")
                if rows[i][j]:
                    upper[(i + 1, j + 1)] = rows[i][j]
        return cls(n, upper)

    @classmethod
    def from_form(cls, phi: AltForm) -> "SkewMatrix":
        if phi.degree != 2:
            raise ValueError("expected a two-form")
        return cls(phi.dim, dict(phi.comps))

    def to_form(self) -> AltForm:
        return AltForm(2, self.n, dict(self.upper))

    def to_matrix(self) -> Matrix:
        return Matrix(
            [[self.get(i, j) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]
        )

    def get(self, i: int, j: int):
        if i == j:
            return Fraction(0)
        if i < j:
            return self.upper.get((i, j), Fraction(0))
        v = self.upper.get((j, i))
        return Fraction(0) if v is None else -v

    def is_zero(self) -> bool:
        return not self.upper

    def __add__(self, other):
        if not isinstance(other, SkewMatrix) or other.n != self.n:
            return NotImplemented
        upper = dict(self.upper)
        for k, v in other.upper.items():
            s = upper.get(k)
            s = v if s is None else s + v
            if s:
                upper[k] = s
            else:
                upper.pop(k, None)
        out = SkewMatrix.__new__(SkewMatrix)
        out.n, out.upper = self.n, upper
        return out

    def __neg__(self):
        out = SkewMatrix.__new__(SkewMatrix)
        out.n = self.n
        out.upper = {k: -v for k, v in self.upper.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, SkewMatrix):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "SkewMatrix":
        if isinstance(c, int):
            c = Fraction(c)
        out = SkewMatrix.__new__(SkewMatrix)
        out.n = self.n
        out.upper = {k: v * c for k, v in self.upper.items()} if c else {}
        return out

    def __eq__(self, other):
        if not isinstance(other, SkewMatrix):
            return NotImplemented
        if self.n != other.n or set(self.upper) != set(other.upper):
            return False
        return all(self.upper[k] == other.upper[k] for k in self.upper)

    def __hash__(self):
        return hash((self.n, frozenset(self.upper)))

    def map_entries(self, fn) -> "SkewMatrix":
        upper = {}
        for k, v in self.upper.items():
            w = fn(v)
            if w:
                upper[k] = w
        out = SkewMatrix.__new__(SkewMatrix)
        out.n, out.upper = self.n, upper
        return out

    def apply(self, vec) -> tuple:
        """Matrix-vector product S v."""
        vec = list(vec)
        if len(vec) != self.n:
            raise ValueError("vector length does not match")
        out = [Fraction(0)] * self.n
        for (i, j), s in self.upper.items():
            out[i - 1] = out[i - 1] + s * vec[j - 1]
            out[j - 1] = out[j - 1] - s * vec[i - 1]
        return tuple(out)

    def __repr__(self):
        return "SkewMatrix(%d, %r)" % (self.n, self.upper)


def _as_upper(s) -> tuple:
    """Coerce SkewMatrix / Matrix / rows to (n, upper-lookup fn)."""
    if isinstance(s, SkewMatrix):
        return s.n, s.get
    if isinstance(s, Matrix):
        s = SkewMatrix.from_rows(s.rows)
        return s.n, s.get
    s = SkewMatrix.from_rows(s)
    return s.n, s.get


def pfaffian(s):
    """Pfaffian, normalised so that Pf([[0, 1], [-1, 0]]) = 1.

    Expansion along the first remaining row; division-free, so RatFunc
    entries stay polynomial when the input is polynomial.
    """
    n, get = _as_upper(s)
    if n % 2:
        raise OddDimension("pfaffian needs an even-dimensional matrix")
    return _pf(get, tuple(range(1, n + 1)))


def _pf(get, idx: tuple):
    if not idx:
        return Fraction(1)
    if len(idx) == 2:
        return get(idx[0], idx[1])
    first = idx[0]
    rest = idx[1:]
    total = None
    for pos, j in enumerate(rest):
        c = get(first, j)
        if not c:
            continue
        sub = rest[:pos] + rest[pos + 1 :]
        term = c * _pf(get, sub)
        if pos % 2:
            term = -term
        total = term if total is None else total + term
    return Fraction(0) if total is None else total


def pfaffian_adjugate(s) -> SkewMatrix:
    """Skew matrix S# with S S# = Pf(S) I.

    Entry (i, j), i < j, is (-1)^(i+j) times the Pfaffian of S with rows
    and columns i and j removed.
    """
    n, get = _as_upper(s)
    if n % 2:
        raise OddDimension("pfaffian adjugate needs an even-dimensional matrix")
    upper = {}
    full = tuple(range(1, n + 1))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            sub = tuple(k for k in full if k != i and k != j)
            c = _pf(get, sub)
            if not c:
                continue
            if (i + j) % 2:
                c = -c
            upper[(i, j)] = c
    return SkewMatrix(n, upper)


def skew_inverse(s) -> SkewMatrix:
    """Inverse of an invertible skew matrix, as S# / Pf(S)."""
    if not isinstance(s, SkewMatrix):
        s = SkewMatrix.from_rows(s.rows if isinstance(s, Matrix) else s)
    pf = pfaffian(s)
    if not pf:
        raise SingularMatrix("skew matrix has zero pfaffian")
    adj = pfaffian_adjugate(s)
    return adj.map_entries(lambda v: v / pf)
