"""JSON file formats for forms, pairs, and structure three-forms.

Every number travels as an exact rational string "p/q" (or "p"), an
alternating form as {"degree": d, "dim": n, "terms": [{"idx": [...],
"coeff": "p/q"}, ...]} with 1-based strictly increasing indices, a pair
as {"N": n, "T": form, "g0": form, "A": form, "B": [...]}, and a
structure three-form file as {"N": n, "terms": [...]} on n+2
coordinates.  Writers emit sorted keys and sorted terms so identical
data always produces identical bytes.  Readers are strict: structural
problems raise ParseError with a field path, semantic ones raise
ValidationError.
"""

import json
import re
from fractions import Fraction

from .errors import ParseError, ValidationError
from .forms import AltForm
from .poly import Poly, RatFunc
from .skew import SkewMatrix
from .classify import skew_as_form, form_as_skew
from .pairs import HamPair
from .bridge import StructureForm

__all__ = [
    "rational_to_str", "rational_from_str",
    "form_to_dict", "form_from_dict",
    "pair_to_dict", "pair_from_dict",
    "omega_to_dict", "omega_from_dict",
    "load_json", "dump_json", "save_json",
    "load_pair", "save_pair", "parse_omega_file", "save_omega",
]


# -- rationals ---------------------------------------------------------

def rational_to_str(c) -> str:
    c = _as_rational(c, "coefficient")
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


_RATIONAL = re.compile(r"^[+-]?[0-9]+(/[0-9]+)?$")


def rational_from_str(s, where: str = "coefficient") -> Fraction:
    if not isinstance(s, str):
        raise ParseError("%s: expected a rational string, got %r" % (where, s))
    if not _RATIONAL.match(s.strip()):
        raise ParseError("%s: expected \"p\" or \"p/q\", got %r" % (where, s))
    try:
        return Fraction(s.strip())
    except ZeroDivisionError:
        raise ParseError("%s: zero denominator in %r" % (where, s))


def _as_rational(c, where: str) -> Fraction:
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    if isinstance(c, (Poly, RatFunc)) and c.is_constant():
        return Fraction(c.const_value())
    raise ValidationError("%s is not a rational constant: %r" % (where, c))


# -- alternating forms -------------------------------------------------

def form_to_dict(form: AltForm) -> dict:
    terms = [{"idx": list(idx), "coeff": rational_to_str(c)}
             for idx, c in form.sorted_items()]
    return {"degree": form.degree, "dim": form.dim, "terms": terms}


def form_from_dict(d, where: str = "form", degree=None, dim=None) -> AltForm:
    if not isinstance(d, dict):
        raise ParseError("%s: expected an object" % where)
    extra = set(d) - {"degree", "dim", "terms"}
    if extra:
        raise ParseError("%s: unknown keys %s" % (where, sorted(extra)))
    deg = _expect_int(d, "degree", where)
    n = _expect_int(d, "dim", where)
    if degree is not None and deg != degree:
        raise ValidationError("%s: degree must be %d, got %d"
                              % (where, degree, deg))
    if dim is not None and n != dim:
        raise ValidationError("%s: dim must be %d, got %d" % (where, dim, n))
    if deg < 1 or n < 0:
        raise ValidationError("%s: degree %d on dim %d is not supported"
                              % (where, deg, n))
    comps = _terms_from_list(d.get("terms"), deg, n, where)
    return AltForm(deg, n, comps)


def _terms_from_list(terms, degree: int, dim: int, where: str) -> dict:
    if not isinstance(terms, list):
        raise ParseError("%s.terms: expected a list" % where)
    comps = {}
    for pos, t in enumerate(terms):
        here = "%s.terms[%d]" % (where, pos)
        if not isinstance(t, dict) or set(t) != {"idx", "coeff"}:
            raise ParseError("%s: expected {idx, coeff}" % here)
        idx = t["idx"]
        if (not isinstance(idx, list)
                or not all(isinstance(i, int) and not isinstance(i, bool)
                           for i in idx)):
            raise ParseError("%s.idx: expected a list of integers" % here)
        if len(idx) != degree:
            raise ValidationError("%s.idx: expected %d indices, got %d"
                                  % (here, degree, len(idx)))
        if any(not 1 <= i <= dim for i in idx):
            raise ValidationError("%s.idx: index out of range 1..%d"
                                  % (here, dim))
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValidationError("%s.idx: indices must be strictly "
                                  "increasing" % here)
        key = tuple(idx)
        if key in comps:
            raise ValidationError("%s.idx: duplicate index tuple %r"
                                  % (here, idx))
        comps[key] = rational_from_str(t["coeff"], here + ".coeff")
    return comps


def _expect_int(d, key: str, where: str) -> int:
    v = d.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParseError("%s.%s: expected an integer" % (where, key))
    return v


def _expect_even_n(d, where: str) -> int:
    n = _expect_int(d, "N", where)
    if n < 2 or n % 2:
        raise ValidationError("%s.N: expected a positive even integer, got %d"
                              % (where, n))
    return n


# -- pairs -------------------------------------------------------------

def pair_to_dict(pair: HamPair) -> dict:
    n = pair.N
    return {
        "N": n,
        "T": form_to_dict(pair.mcubic),
        "g0": form_to_dict(skew_as_form(pair.mconst)),
        "A": form_to_dict(skew_as_form(pair.wskew)),
        "B": [rational_to_str(b) for b in pair.wconst],
    }


def pair_from_dict(d, where: str = "pair") -> HamPair:
    if not isinstance(d, dict):
        raise ParseError("%s: expected an object" % where)
    extra = set(d) - {"N", "T", "g0", "A", "B"}
    if extra:
        raise ParseError("%s: unknown keys %s" % (where, sorted(extra)))
    n = _expect_even_n(d, where)
    mcubic = form_from_dict(d.get("T"), where + ".T", degree=3, dim=n)
    mconst = form_as_skew(form_from_dict(d.get("g0"), where + ".g0",
                                         degree=2, dim=n))
    wskew = form_as_skew(form_from_dict(d.get("A"), where + ".A",
                                        degree=2, dim=n))
    b = d.get("B")
    if not isinstance(b, list):
        raise ParseError("%s.B: expected a list" % where)
    if len(b) != n:
        raise ValidationError("%s.B: expected %d entries, got %d"
                              % (where, n, len(b)))
    wconst = tuple(rational_from_str(v, "%s.B[%d]" % (where, k))
                   for k, v in enumerate(b))
    return HamPair(mcubic, mconst, wskew, wconst)


# -- structure three-forms ---------------------------------------------

def omega_to_dict(sf: StructureForm) -> dict:
    d = form_to_dict(sf.form)
    return {"N": sf.N, "terms": d["terms"]}


def omega_from_dict(d, where: str = "omega") -> StructureForm:
    if not isinstance(d, dict):
        raise ParseError("%s: expected an object" % where)
    extra = set(d) - {"N", "terms"}
    if extra:
        raise ParseError("%s: unknown keys %s" % (where, sorted(extra)))
    n = _expect_even_n(d, where)
    comps = _terms_from_list(d.get("terms"), 3, n + 2, where)
    return StructureForm(n, AltForm(3, n + 2, comps))


# -- files -------------------------------------------------------------

def load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fp:
            text = fp.read()
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc))
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("%s: invalid JSON at line %d column %d: %s"
                         % (path, exc.lineno, exc.colno, exc.msg))


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def save_json(obj, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fp:
        fp.write(dump_json(obj))


def load_pair(path: str) -> HamPair:
    return pair_from_dict(load_json(path), where=path)


def save_pair(pair: HamPair, path: str) -> None:
    save_json(pair_to_dict(pair), path)


def parse_omega_file(path: str) -> StructureForm:
    return omega_from_dict(load_json(path), where=path)


def save_omega(sf: StructureForm, path: str) -> None:
    save_json(omega_to_dict(sf), path)
