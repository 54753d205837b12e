"""Crossing points of the pseudoline arrangement behind an allowable sequence.

Each block of each move is one vertex; disjoint blocks in the same move are
distinct vertices that merely share a sweep position. The rich-point and
credit analyses work from the multiplicity histogram.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb

from .errors import DeltaViolated, KOutOfRange, UsageError
from .seqcore import AllowableSequence, is_nontrivial, is_simple, simple_switch_count

# Constants of the dual incidence bound, in the two regimes.
K5_CONSTANTS = (Fraction(5), Fraction(125, 2))
K8_CONSTANTS = (Fraction(14), Fraction(453, 25))  # 18.12
DIRAC_CONSTANT = 845


@dataclass(frozen=True)
class Vertex:
    step: int
    lines: frozenset

    @property
    def multiplicity(self):
        return len(self.lines)


@dataclass(frozen=True)
class ArrangementStats:
    n: int
    vertex_count: int
    multiplicity_histogram: dict
    per_line_vertex_counts: tuple
    r_max: int
    max_local_length: int


@dataclass(frozen=True)
class RichPointReport:
    k: int
    rich_count: int
    bound_k5: Fraction | None
    bound_k8: Fraction | None
    ok_k5: bool | None
    ok_k8: bool | None

    @property
    def ok(self):
        return self.ok_k5 is not False and self.ok_k8 is not False


@dataclass(frozen=True)
class DyadicClass:
    i: int
    lo: int
    hi: int
    vertex_count: int
    switch_count: int


@dataclass(frozen=True)
class CreditReport:
    j_cap: int
    classes: tuple
    credits_per_line: tuple
    min_credit_ratio_used: Fraction

    @property
    def total_credits(self):
        return sum(self.credits_per_line)


def vertices(seq: AllowableSequence) -> list:
    return [Vertex(m.step, frozenset(b.elements)) for m in seq.moves for b in m.blocks]


def histogram(seq: AllowableSequence) -> Counter:
    return Counter(b.size for b in seq.blocks())


def stats(seq: AllowableSequence) -> ArrangementStats:
    counts = [0] * seq.n
    hist = Counter()
    nv = 0
    for b in seq.blocks():
        nv += 1
        hist[b.size] += 1
        for e in b.elements:
            counts[e - 1] += 1
    r = max(counts)
    return ArrangementStats(seq.n, nv, dict(sorted(hist.items())), tuple(counts), r, r)


def rich_bound(n: int, k: int, constants=K5_CONSTANTS) -> Fraction:
    """Upper bound c1*n/k + c2*n^2/k^3 on the number of k-rich crossings."""
    c1, c2 = constants
    return c1 * Fraction(n, k) + c2 * Fraction(n * n, k ** 3)


def rich_count_from_histogram(hist, k):
    return sum(c for m, c in hist.items() if m >= k)


def rich_report_from_histogram(n, hist, k) -> RichPointReport:
    count = rich_count_from_histogram(hist, k)
    b5 = rich_bound(n, k, K5_CONSTANTS) if k >= 5 else None
    b8 = rich_bound(n, k, K8_CONSTANTS) if k >= 8 else None
    return RichPointReport(
        k, count, b5, b8,
        None if b5 is None else count <= b5,
        None if b8 is None else count <= b8,
    )


def rich_report(seq: AllowableSequence, k: int) -> RichPointReport:
    if not 2 <= k <= seq.n - 1:
        raise KOutOfRange(f"k={k} outside 2..{seq.n - 1}")
    return rich_report_from_histogram(seq.n, histogram(seq), k)


def credit_report(seq: AllowableSequence, j_cap: int = 255) -> CreditReport:
    """Credit accounting over crossings with at most ``j_cap`` lines.

    A crossing of j lines hands one credit to each of its lines and uses
    C(j, 2) switches. Vertices are also tallied by dyadic class
    ``[2^i, 2^(i+1) - 1]``.
    """
    if j_cap < 2:
        raise UsageError("j_cap must be at least 2")
    credits = [0] * seq.n
    by_class = {}
    for b in seq.blocks():
        j = b.size
        i = j.bit_length() - 1
        vc, sc = by_class.get(i, (0, 0))
        by_class[i] = (vc + 1, sc + comb(j, 2))
        if j <= j_cap:
            for e in b.elements:
                credits[e - 1] += 1
    classes = tuple(
        DyadicClass(i, 2 ** i, 2 ** (i + 1) - 1, vc, sc)
        for i, (vc, sc) in sorted(by_class.items())
    )
    return CreditReport(j_cap, classes, tuple(credits), Fraction(2, j_cap - 1))


def _exact(x):
    # 0.9 means 9/10, not the nearest binary double
    return Fraction(repr(x)) if isinstance(x, float) else Fraction(x)


def extension_report(seq: AllowableSequence, delta, c) -> int:
    """Number of lines whose local sequence has length >= c*n.

    Raises DeltaViolated when some crossing involves more than delta*n lines.
    """
    delta, c = _exact(delta), _exact(c)
    if not 0 < delta < 1 or c <= 0:
        raise UsageError("need 0 < delta < 1 and c > 0")
    st = stats(seq)
    top = max(st.multiplicity_histogram)
    if top > delta * seq.n:
        raise DeltaViolated(top, delta * seq.n)
    return sum(1 for x in st.per_line_vertex_counts if x >= c * seq.n)


def dirac_floor(n):
    return ceil(n / DIRAC_CONSTANT)


def r_max_dominates(seq: AllowableSequence, r_max: int | None = None) -> bool:
    """Every line outside a crossing meets that crossing's lines at distinct
    points, so r_max bounds every non-total multiplicity."""
    if r_max is None:
        r_max = stats(seq).r_max
    return all(b.size <= r_max for b in seq.blocks() if b.size < seq.n)


def format_decimal(x: Fraction, places: int = 6) -> str:
    """Exact fraction as a fixed-point decimal string, rounded half-up."""
    scale = 10 ** places
    q = (abs(x) * scale * 2 + 1) // 2
    sign = "-" if x < 0 and q else ""
    whole, frac = divmod(int(q), scale)
    return f"{sign}{whole}.{frac:0{places}d}"


def report_dict(seq: AllowableSequence, ks=None, j_cap: int = 255) -> dict:
    """JSON-ready analysis report; integers stay integers, bounds are
    decimal strings."""
    st = stats(seq)
    hist = Counter(st.multiplicity_histogram)
    if ks is None:
        ks = range(2, seq.n)
    rich = []
    for k in ks:
        if not 2 <= k <= seq.n - 1:
            raise KOutOfRange(f"k={k} outside 2..{seq.n - 1}")
        r = rich_report_from_histogram(seq.n, hist, k)
        rich.append({
            "k": k,
            "count": r.rich_count,
            "bound_k5": None if r.bound_k5 is None else format_decimal(r.bound_k5),
            "bound_k8": None if r.bound_k8 is None else format_decimal(r.bound_k8),
            "ok": r.ok,
        })
    cr = credit_report(seq, j_cap)
    return {
        "n": seq.n,
        "half_period": seq.half_period,
        "nontrivial": is_nontrivial(seq),
        "simple": is_simple(seq),
        "vertex_count": st.vertex_count,
        "multiplicity_histogram": {str(m): c for m, c in st.multiplicity_histogram.items()},
        "per_line_vertex_counts": list(st.per_line_vertex_counts),
        "r_max": st.r_max,
        "simple_switch_count": simple_switch_count(seq),
        "rich": rich,
        "credit": {
            "j_cap": cr.j_cap,
            "min_credit_ratio_used": str(cr.min_credit_ratio_used),
            "classes": [
                {"i": c.i, "lo": c.lo, "hi": c.hi,
                 "vertex_count": c.vertex_count, "switch_count": c.switch_count}
                for c in cr.classes
            ],
            "credits_per_line": list(cr.credits_per_line),
            "total_credits": cr.total_credits,
        },
    }
