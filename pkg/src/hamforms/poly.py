"""Exact multivariate polynomials and rational functions over the rationals.

Coefficients are `fractions.Fraction`.  A polynomial is a sparse map from
exponent vectors to coefficients with a fixed variable count; monomials are
ordered graded-lexicographically so every polynomial has one stored form.
A rational function keeps a gcd-reduced numerator/denominator pair with the
denominator scaled to be integer-primitive with positive leading coefficient,
which makes equality a plain structural comparison and keeps printed and
serialized output reproducible bit for bit.

Variable indices are 1-based everywhere in the public interface.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import PoleError

Rational = Fraction


def as_fraction(x) -> Fraction:
    """Coerce int / str / Fraction to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError("expected a rational value, got %r" % (x,))


def grlex_key(exps):
    """Sort key realizing graded lexicographic order (max = leading term)."""
    return (sum(exps), exps)


class Poly:
    """Sparse polynomial in `num_vars` variables over Q."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms=None):
        self.num_vars = num_vars
        clean = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != num_vars:
                    raise ValueError("exponent vector has wrong length")
                c = as_fraction(c)
                if c:
                    clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int) -> "Poly":
        return cls(num_vars)

    @classmethod
    def const(cls, num_vars: int, c) -> "Poly":
        c = as_fraction(c)
        if not c:
            return cls(num_vars)
        return cls(num_vars, {(0,) * num_vars: c})

    @classmethod
    def one(cls, num_vars: int) -> "Poly":
        return cls.const(num_vars, 1)

    @classmethod
    def var(cls, num_vars: int, i: int) -> "Poly":
        """The monomial u_i (1-based)."""
        if not 1 <= i <= num_vars:
            raise ValueError("variable index out of range")
        exps = [0] * num_vars
        exps[i - 1] = 1
        return cls(num_vars, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, num_vars: int, exps, c=1) -> "Poly":
        return cls(num_vars, {tuple(exps): as_fraction(c)})

    # -- predicates and views ------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def const_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: int) -> int:
        if not self.terms:
            return -1
        return max(e[var - 1] for e in self.terms)

    def uses_var(self, var: int) -> bool:
        return any(e[var - 1] for e in self.terms)

    def coeff_of(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def leading(self):
        """(exponent vector, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    # -- ring operations ------------------------------------------------

    def _check(self, other: "Poly"):
        if self.num_vars != other.num_vars:
            raise ValueError("polynomials from different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.num_vars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        out = Poly.__new__(Poly)
        out.num_vars = self.num_vars
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Poly.__new__(Poly)
        out.num_vars = self.num_vars
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.num_vars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            if not c:
                return Poly.zero(self.num_vars)
            out = Poly.__new__(Poly)
            out.num_vars = self.num_vars
            out.terms = {e: v * c for e, v in self.terms.items()}
            return out
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        out = Poly.__new__(Poly)
        out.num_vars = self.num_vars
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.one(self.num_vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.num_vars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    # -- calculus and evaluation --------------------------------------

    def diff(self, var: int) -> "Poly":
        """Partial derivative in variable `var` (1-based)."""
        if not 1 <= var <= self.num_vars:
            raise ValueError("variable index out of range")
        i = var - 1
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
                terms[e2] = terms.get(e2, Fraction(0)) + c * e[i]
        return Poly(self.num_vars, terms)

    def eval(self, point) -> Fraction:
        """Evaluate at a full point of rationals."""
        point = [as_fraction(x) for x in point]
        if len(point) != self.num_vars:
            raise ValueError("point has wrong length")
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x ** k
            total += v
        return total

    def compose(self, values):
        """Substitute values[i] for variable i+1; values are any ring elements.

        Whatever arithmetic the values support (Fraction, Poly, RatFunc)
        determines the result type.
        """
        if len(values) != self.num_vars:
            raise ValueError("substitution list has wrong length")
        total = None
        for e, c in self.sorted_terms():
            term = None
            for v, k in zip(values, e):
                if k:
                    p = v ** k
                    term = p if term is None else term * p
            term = c if term is None else term * c
            total = term if total is None else total + term
        if total is None:
            return Fraction(0)
        return total

    def set_var_one(self, var: int) -> "Poly":
        """Substitute 1 for variable `var`, keeping the ring width."""
        i = var - 1
        terms: dict = {}
        for e, c in self.terms.items():
            e2 = e[:i] + (0,) + e[i + 1:]
            s = terms.get(e2, Fraction(0)) + c
            if s:
                terms[e2] = s
            else:
                terms.pop(e2, None)
        return Poly(self.num_vars, terms)

    # -- normal forms ---------------------------------------------------

    def content_unit(self):
        """Return (u, p) with self == u * p, u a positive rational times a
        sign, and p integer-primitive with positive leading coefficient."""
        if not self.terms:
            return Fraction(1), self
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = math.gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        unit = Fraction(num_gcd, den_lcm)
        _, lead = self.leading()
        if lead < 0:
            unit = -unit
        out = Poly.__new__(Poly)
        out.num_vars = self.num_vars
        out.terms = {e: c / unit for e, c in self.terms.items()}
        return unit, out

    def primitive(self) -> "Poly":
        return self.content_unit()[1]

    # -- presentation ----------------------------------------------------

    def to_terms_list(self):
        """Serialization form: list of {"exponents": [...], "coeff": "p/q"}."""
        return [{"exponents": list(e), "coeff": str(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_terms_list(cls, num_vars, items) -> "Poly":
        terms: dict = {}
        for it in items:
            e = tuple(int(x) for x in it["exponents"])
            c = as_fraction(it["coeff"])
            terms[e] = terms.get(e, Fraction(0)) + c
        return cls(num_vars, terms)

    def format(self, names=None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = ["u%d" % (i + 1) for i in range(self.num_vars)]
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for n, k in zip(names, e):
                if k == 1:
                    factors.append(n)
                elif k > 1:
                    factors.append("%s^%d" % (n, k))
            if not factors:
                body = str(abs(c))
            else:
                mag = abs(c)
                body = "*".join(([str(mag)] if mag != 1 else []) + factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "Poly(%d, %s)" % (self.num_vars, self.format())


# -- gcd machinery ------------------------------------------------------


def exact_div(f: Poly, d: Poly) -> Poly:
    """Exact quotient f/d; raises ValueError if d does not divide f."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return Poly.zero(f.num_vars)
    if d.is_constant():
        return f * (Fraction(1) / d.const_value())
    q = Poly.zero(f.num_vars)
    r = f
    de, dc = d.leading()
    while not r.is_zero():
        re, rc = r.leading()
        qe = tuple(a - b for a, b in zip(re, de))
        if any(x < 0 for x in qe):
            raise ValueError("not an exact multiple")
        t = Poly.monomial(f.num_vars, qe, rc / dc)
        q = q + t
        r = r - t * d
    return q


def divides(d: Poly, f: Poly) -> bool:
    try:
        exact_div(f, d)
        return True
    except ValueError:
        return False


def _coeffs_in_var(f: Poly, var: int):
    """Split f into {degree: coefficient Poly} with respect to one variable."""
    i = var - 1
    out: dict = {}
    for e, c in f.terms.items():
        k = e[i]
        e2 = e[:i] + (0,) + e[i + 1:]
        g = out.setdefault(k, {})
        g[e2] = g.get(e2, Fraction(0)) + c
    return {k: Poly(f.num_vars, t) for k, t in out.items()}


def _from_coeffs(num_vars: int, var: int, coeffs) -> Poly:
    i = var - 1
    terms: dict = {}
    for k, p in coeffs.items():
        for e, c in p.terms.items():
            e2 = e[:i] + (k,) + e[i + 1:]
            terms[e2] = c
    return Poly(num_vars, terms)


def _prem(f: Poly, g: Poly, var: int) -> Poly:
    """Pseudo-remainder of f by g with respect to `var` (both nonzero)."""
    dg = g.degree_in(var)
    cg = _coeffs_in_var(g, var)
    lg = cg[dg]
    r = f
    while not r.is_zero():
        dr = r.degree_in(var)
        if dr < dg:
            break
        cr = _coeffs_in_var(r, var)
        lr = cr[dr]
        shift = Poly.var(f.num_vars, var) ** (dr - dg)
        r = lg * r - lr * shift * g
    return r


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """gcd over Q[x1..xn], integer-primitive with positive leading coefficient.

    Content/primitive-part recursion on the highest variable in use; within
    one variable a primitive pseudo-remainder sequence.
    """
    if f.num_vars != g.num_vars:
        raise ValueError("polynomials from different rings")
    if f.is_zero():
        return g.primitive()
    if g.is_zero():
        return f.primitive()
    if f.is_constant() or g.is_constant():
        return Poly.one(f.num_vars)
    if f.terms == g.terms or f.terms == (-g).terms:
        return f.primitive()
    var = max(
        v
        for v in range(1, f.num_vars + 1)
        if f.uses_var(v) or g.uses_var(v)
    )
    cf, pf = _cont_prim(f, var)
    cg, pg = _cont_prim(g, var)
    c = poly_gcd(cf, cg)
    if pf.is_constant() or pg.is_constant():
        return c
    if pf.degree_in(var) < pg.degree_in(var):
        pf, pg = pg, pf
    while not pg.is_zero():
        r = _prem(pf, pg, var)
        pf, pg = pg, r.primitive() if not r.is_zero() else r
        if not pg.is_zero() and pg.degree_in(var) == 0:
            # remainder free of `var`: primitive gcd in `var` is trivial
            pf = Poly.one(f.num_vars)
            break
        if not pg.is_zero() and pf.degree_in(var) < pg.degree_in(var):
            pf, pg = pg, pf
    h = _cont_prim(pf, var)[1] if not pf.is_constant() else Poly.one(f.num_vars)
    return (c * h).primitive()


def _cont_prim(f: Poly, var: int):
    """Content (gcd of coefficients w.r.t. var) and primitive part."""
    coeffs = _coeffs_in_var(f, var)
    if len(coeffs) == 1 and 0 in coeffs:
        return f, Poly.one(f.num_vars)
    cont = Poly.zero(f.num_vars)
    for p in coeffs.values():
        cont = poly_gcd(cont, p)
        if cont.is_constant():
            cont = Poly.one(f.num_vars)
            break
    prim = exact_div(f, cont) if not cont.is_constant() else f * (Fraction(1) / cont.const_value())
    return cont, prim


# -- rational functions ---------------------------------------------------


class RatFunc:
    """Reduced fraction of two polynomials over Q.

    Stored form: gcd(num, den) constant, den integer-primitive with positive
    leading coefficient.  Zero is 0/1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, reduce: bool = True):
        if den is None:
            den = Poly.one(num.num_vars)
        if num.num_vars != den.num_vars:
            raise ValueError("numerator and denominator from different rings")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = Poly.one(num.num_vars)
        elif reduce and not den.is_constant():
            g = poly_gcd(num, den)
            if not g.is_constant():
                num = exact_div(num, g)
                den = exact_div(den, g)
        unit, den = den.content_unit()
        if unit != 1:
            num = num * (Fraction(1) / unit)
        self.num = num
        self.den = den

    # -- constructors -----------------------------------------------

    @classmethod
    def from_const(cls, num_vars: int, c) -> "RatFunc":
        return cls(Poly.const(num_vars, c))

    @classmethod
    def var(cls, num_vars: int, i: int) -> "RatFunc":
        return cls(Poly.var(num_vars, i))

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        return cls(p)

    # -- views -------------------------------------------------------

    @property
    def num_vars(self) -> int:
        return self.num.num_vars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def const_value(self) -> Fraction:
        return self.num.const_value() / self.den.const_value()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    # -- coercion ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.num_vars != self.num_vars:
                raise ValueError("rational functions from different rings")
            return other
        if isinstance(other, Poly):
            return RatFunc(other, reduce=False)
        if isinstance(other, (int, Fraction)):
            return RatFunc.from_const(self.num_vars, other)
        return None

    # -- field operations ----------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.terms == o.den.terms:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        out = RatFunc.__new__(RatFunc)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero() or self.is_zero():
            return RatFunc.from_const(self.num_vars, 0)
        if self.den.is_constant() and o.den.is_constant():
            out = RatFunc.__new__(RatFunc)
            c = self.den.const_value() * o.den.const_value()
            out.num = self.num * o.num * (Fraction(1) / c)
            out.den = Poly.one(self.num_vars)
            return out
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            if self.is_zero():
                raise ZeroDivisionError("inverse of zero")
            return RatFunc(self.den ** (-k), self.num ** (-k), reduce=False)
        return RatFunc(self.num ** k, self.den ** k, reduce=False)

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, RatFunc) else other
        if o is None:
            return NotImplemented
        if isinstance(o, RatFunc) and o.num_vars != self.num_vars:
            return False
        # stored forms are canonical
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- calculus and evaluation ----------------------------------------

    def diff(self, var: int) -> "RatFunc":
        if self.den.is_constant():
            return RatFunc(self.num.diff(var), self.den, reduce=False)
        n = self.num.diff(var) * self.den - self.num * self.den.diff(var)
        return RatFunc(n, self.den * self.den)

    def eval(self, point) -> Fraction:
        d = self.den.eval(point)
        if not d:
            raise PoleError("denominator vanishes at the evaluation point")
        return self.num.eval(point) / d

    def compose(self, values) -> "RatFunc":
        """Substitute ring elements for all variables."""
        n = self.num.compose(values)
        d = self.den.compose(values)
        if isinstance(n, (int, Fraction)):
            n = RatFunc.from_const(values[0].num_vars, n) if values else n
        if isinstance(d, (int, Fraction)):
            d = RatFunc.from_const(values[0].num_vars, d) if values else d
        if isinstance(n, Poly):
            n = RatFunc(n, reduce=False)
        if isinstance(d, Poly):
            d = RatFunc(d, reduce=False)
        return n / d

    def set_var_one(self, var: int) -> "RatFunc":
        return RatFunc(self.num.set_var_one(var), self.den.set_var_one(var))

    # -- presentation ----------------------------------------------------

    def format(self, names=None) -> str:
        if self.den == Poly.one(self.num_vars):
            return self.num.format(names)
        return "(%s)/(%s)" % (self.num.format(names), self.den.format(names))

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "RatFunc(%s)" % self.format()


# -- module level conveniences (uniform over Poly and RatFunc) -------------


def differentiate(f, var: int):
    """Partial derivative of a Poly or RatFunc in variable `var` (1-based)."""
    return f.diff(var)


def evaluate(f, point) -> Fraction:
    """Exact value of a Poly or RatFunc at a rational point."""
    return f.eval(point)


def is_zero(f) -> bool:
    """Exact zero test via the stored canonical form."""
    return f.is_zero()


def lift(x, num_vars: int) -> RatFunc:
    """Lift int/Fraction/Poly/RatFunc to a RatFunc in the given ring."""
    if isinstance(x, RatFunc):
        if x.num_vars != num_vars:
            raise ValueError("rational function from a different ring")
        return x
    if isinstance(x, Poly):
        if x.num_vars != num_vars:
            raise ValueError("polynomial from a different ring")
        return RatFunc(x, reduce=False)
    return RatFunc.from_const(num_vars, as_fraction(x))
