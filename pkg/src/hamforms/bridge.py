"""Bijection between structure three-forms and metric-flux pairs.

A pair in N fields is equivalent to a single alternating three-form on
N + 2 coordinates.  Coordinates 1..N match the fields, coordinate N + 1
homogenizes the constant parts, and coordinate N + 2 carries the
covector data:

    component (i, j, k), k <= N      ->  metric three-form
    component (i, j, N+1)            ->  constant metric part
    component (i, j, N+2)            ->  skew covector part
    component (i, N+1, N+2)          ->  constant covector part

Every strictly increasing triple from {1, .., N+2} lands in exactly one
of the four blocks, so the packaging loses nothing; `dimension_audit`
verifies the bookkeeping.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import DimensionMismatch, OddDimension
from .forms import AltForm, wedge
from .pairs import HamPair
from .skew import SkewMatrix


class StructureForm:
    """Three-form on the (N + 2)-dimensional coordinate space of a pair."""

    __slots__ = ("N", "form")

    def __init__(self, N: int, form: AltForm):
        if N % 2 or N < 2:
            raise OddDimension("field count must be even and positive")
        if form.degree != 3 or form.dim != N + 2:
            raise DimensionMismatch("expected a three-form on N + 2 coordinates")
        self.N = N
        self.form = form

    @classmethod
    def from_comps(cls, N: int, comps) -> "StructureForm":
        return cls(N, AltForm(3, N + 2, comps))

    def get(self, *idx):
        return self.form.get(*idx)

    # -- the four stored blocks --------------------------------------

    def mcubic_block(self) -> AltForm:
        N = self.N
        comps = {k: v for k, v in self.form.comps.items() if k[2] <= N}
        return AltForm(3, N, comps)

    def mconst_block(self) -> SkewMatrix:
        N = self.N
        upper = {}
        for (i, j, k), v in self.form.comps.items():
            if k == N + 1 and j <= N:
                upper[(i, j)] = v
        return SkewMatrix(N, upper)

    def wskew_block(self) -> SkewMatrix:
        N = self.N
        upper = {}
        for (i, j, k), v in self.form.comps.items():
            if k == N + 2 and j <= N:
                upper[(i, j)] = v
        return SkewMatrix(N, upper)

    def wconst_block(self) -> tuple:
        N = self.N
        out = [Fraction(0)] * N
        for (i, j, k), v in self.form.comps.items():
            if j == N + 1 and k == N + 2:
                out[i - 1] = v
        return tuple(out)

    # -- the two homogeneous halves -----------------------------------

    def metric_block(self) -> AltForm:
        """Terms free of the last coordinate: a three-form on N + 1."""
        comps = {k: v for k, v in self.form.comps.items() if k[2] <= self.N + 1}
        return AltForm(3, self.N + 1, comps)

    def w_block(self) -> AltForm:
        """Coefficient of the last coordinate: a two-form on N + 1."""
        comps = {}
        for (i, j, k), v in self.form.comps.items():
            if k == self.N + 2:
                comps[(i, j)] = v
        return AltForm(2, self.N + 1, comps)

    def __eq__(self, other):
        if not isinstance(other, StructureForm):
            return NotImplemented
        return self.N == other.N and self.form == other.form

    def __hash__(self):
        return hash((self.N, self.form))

    def __repr__(self):
        return "StructureForm(N=%d, %s)" % (self.N, self.form.format())


def homogenize_metric(mcubic: AltForm, mconst: SkewMatrix) -> AltForm:
    """Fold the constant metric part into a three-form on N + 1."""
    N = mconst.n
    if mcubic.degree != 3 or mcubic.dim != N:
        raise DimensionMismatch("three-form does not match the matrix size")
    comps = dict(mcubic.comps)
    for (i, j), v in mconst.upper.items():
        comps[(i, j, N + 1)] = v
    return AltForm(3, N + 1, comps)


def homogenize_covector(wskew: SkewMatrix, wconst) -> AltForm:
    """Fold the covector data into a two-form on N + 1."""
    N = wskew.n
    if len(wconst) != N:
        raise DimensionMismatch("covector length does not match")
    comps = dict(wskew.upper)
    for i, b in enumerate(wconst, start=1):
        if isinstance(b, int):
            b = Fraction(b)
        if b:
            comps[(i, N + 1)] = b
    return AltForm(2, N + 1, comps)


def form_from_pair(pair) -> StructureForm:
    """Package a pair's data as its structure form."""
    N = pair.N
    mb = homogenize_metric(pair.mcubic, pair.mconst)
    wb = homogenize_covector(pair.wskew, pair.wconst)
    big = AltForm(3, N + 2, dict(mb.comps))
    wbig = AltForm(2, N + 2, dict(wb.comps))
    last = AltForm.basis(N + 2, (N + 2,))
    return StructureForm(N, big + wedge(wbig, last))


def pair_from_form(sf: StructureForm, nvars: int | None = None) -> HamPair:
    """Unpack a structure form into the metric-flux pair it encodes.

    Raises DegenerateMetric when the metric blocks give an identically
    singular metric; warns NullSystemWarning when both covector blocks
    vanish.
    """
    return HamPair(
        sf.mcubic_block(),
        sf.mconst_block(),
        sf.wskew_block(),
        sf.wconst_block(),
        nvars=nvars,
    )


def dimension_audit(N: int) -> dict:
    """Count how the component triples split across the four blocks.

    Every strictly increasing triple must land in exactly one block and
    the block sizes must match the binomial counts; the reassembly of a
    fully generic form from its blocks must be the identity.
    """
    if N % 2 or N < 2:
        raise OddDimension("field count must be even and positive")
    counts = {"mcubic": 0, "mconst": 0, "wskew": 0, "wconst": 0}
    for (i, j, k) in combinations(range(1, N + 3), 3):
        has_h = N + 1 in (i, j, k)
        has_t = N + 2 in (i, j, k)
        if has_h and has_t:
            counts["wconst"] += 1
        elif has_t:
            counts["wskew"] += 1
        elif has_h:
            counts["mconst"] += 1
        else:
            counts["mcubic"] += 1
    expected = {
        "mcubic": comb(N, 3),
        "mconst": comb(N, 2),
        "wskew": comb(N, 2),
        "wconst": N,
    }
    total = comb(N + 2, 3)

    # reassembly on a dense form with distinct markers per component
    marker = {}
    val = 2
    for idx in combinations(range(1, N + 3), 3):
        marker[idx] = Fraction(val)
        val += 1
    sf = StructureForm.from_comps(N, marker)
    rebuilt_metric = homogenize_metric(sf.mcubic_block(), sf.mconst_block())
    rebuilt_w = homogenize_covector(sf.wskew_block(), sf.wconst_block())
    big = AltForm(3, N + 2, dict(rebuilt_metric.comps))
    wbig = AltForm(2, N + 2, dict(rebuilt_w.comps))
    last = AltForm.basis(N + 2, (N + 2,))
    roundtrip = (big + wedge(wbig, last)) == sf.form
    split = sf.metric_block(), sf.w_block()
    halves = (
        len(split[0].comps) + len(split[1].comps) == len(sf.form.comps)
    )

    ok = (
        counts == expected
        and sum(counts.values()) == total
        and roundtrip
        and halves
    )
    return {
        "N": N,
        "total": total,
        "blocks": {k: {"count": counts[k], "expected": expected[k]} for k in counts},
        "sum_matches": sum(counts.values()) == total,
        "roundtrip": roundtrip,
        "ok": ok,
    }
