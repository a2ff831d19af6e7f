"""Small exact matrices over Q or over a rational-function field."""

from __future__ import annotations

from fractions import Fraction

from .errors import SingularMatrix
from .poly import RatFunc, as_fraction


class Matrix:
    """Immutable dense matrix; entries are Fraction or RatFunc."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_strings(cls, rows) -> "Matrix":
        return cls([[as_fraction(x) for x in r] for r in rows])

    @classmethod
    def block_diag(cls, *blocks) -> "Matrix":
        n = sum(b.nrows for b in blocks)
        rows = [[Fraction(0)] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    rows[off + i][off + j] = b.rows[i][j]
            off += b.nrows
        return cls(rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("matrix shape mismatch")
        ot = list(zip(*other.rows))
        return Matrix(
            [[_dot(r, c) for c in ot] for r in self.rows]
        )

    def __mul__(self, scalar) -> "Matrix":
        return Matrix([[x * scalar for x in r] for r in self.rows])

    def apply(self, vec):
        """Matrix times column vector (sequence)."""
        if self.ncols != len(vec):
            raise ValueError("vector length mismatch")
        return tuple(_dot(r, vec) for r in self.rows)

    def det(self):
        """Determinant by fraction-friendly Gaussian elimination."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        a = [list(r) for r in self.rows]
        det = Fraction(1)
        sign = 1
        for col in range(n):
            piv = None
            for r in range(col, n):
                if a[r][col]:
                    piv = r
                    break
            if piv is None:
                return _zero_like(self.rows[0][0])
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                sign = -sign
            p = a[col][col]
            det = det * p
            inv = _inv_scalar(p)
            for r in range(col + 1, n):
                if a[r][col]:
                    f = a[r][col] * inv
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return det * sign

    def inv(self) -> "Matrix":
        """Exact inverse; raises SingularMatrix if not invertible."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        a = [list(r) + [Fraction(i == j) for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = None
            for r in range(col, n):
                if a[r][col]:
                    piv = r
                    break
            if piv is None:
                raise SingularMatrix("matrix is not invertible")
            a[col], a[piv] = a[piv], a[col]
            inv = _inv_scalar(a[col][col])
            a[col] = [x * inv for x in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return Matrix([row[n:] for row in a])

    def __repr__(self):
        return "Matrix(%s)" % (", ".join("[%s]" % ", ".join(str(x) for x in r) for r in self.rows))


def _dot(r, c):
    total = None
    for x, y in zip(r, c):
        p = x * y
        total = p if total is None else total + p
    return total if total is not None else Fraction(0)


def _zero_like(x):
    if isinstance(x, RatFunc):
        return RatFunc.from_const(x.num_vars, 0)
    return Fraction(0)


def _inv_scalar(x):
    if isinstance(x, RatFunc):
        return RatFunc.from_const(x.num_vars, 1) / x
    return Fraction(1) / Fraction(x)


def rank_and_left_nullvector(m: Matrix):
    """Rank of m, plus one nonzero left null vector when the rows are
    dependent (coefficients c with c . rows == 0), else None.

    Elimination is exact over the entry field.
    """
    nr, nc = m.nrows, m.ncols
    # carry an identity alongside to track row operations
    a = [list(r) for r in m.rows]
    ops = [[Fraction(i == j) for j in range(nr)] for i in range(nr)]
    rank = 0
    for col in range(nc):
        piv = None
        for r in range(rank, nr):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        ops[rank], ops[piv] = ops[piv], ops[rank]
        inv = _inv_scalar(a[rank][col])
        a[rank] = [x * inv for x in a[rank]]
        ops[rank] = [x * inv for x in ops[rank]]
        for r in range(nr):
            if r != rank and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
                ops[r] = [x - f * y for x, y in zip(ops[r], ops[rank])]
        rank += 1
        if rank == nr:
            break
    null = None
    for r in range(nr):
        if r >= rank:
            null = tuple(ops[r])
            break
    return rank, null
