"""Circular sequences of rational point sets, and connecting-line statistics.

Everything here is exact: coordinates are ``Fraction`` and all comparisons
are rational. Points are labelled 1..n by increasing x.

Rotating the projection line counterclockwise from horizontal, the pair
(i, j) with i left of j swaps exactly when the line becomes perpendicular
to p_j - p_i. Since dx > 0 for every pair, that happens in increasing order
of the slope dy/dx, so the sweep is a sort by slope.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

from .errors import DuplicatePoint, DuplicateX, NTooSmall, PointFormatError
from .seqcore import AllowableSequence


@dataclass(frozen=True, order=True)
class RationalPoint:
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y):
        return cls(Fraction(x), Fraction(y))


@dataclass(frozen=True)
class PointSet:
    points: tuple  # RationalPoint, sorted by x; label i is points[i - 1]

    @classmethod
    def from_points(cls, pts, perturb: bool = False) -> "PointSet":
        pts = [p if isinstance(p, RationalPoint) else RationalPoint.of(*p) for p in pts]
        if len(set(pts)) != len(pts):
            raise DuplicatePoint("point set contains a repeated point")
        if perturb:
            pts = _rotate_until_distinct_x(pts)
        pts = sorted(pts)
        for a, b in zip(pts, pts[1:]):
            if a.x == b.x:
                i = pts.index(a) + 1
                raise DuplicateX(i, i + 1)
        return cls(tuple(pts))

    @property
    def n(self):
        return len(self.points)


# t = 1/2, 1/3, 2/3, 1/4, ... ; each gives an exact rational rotation.
def _rotation_params():
    q = 2
    while True:
        for p in range(1, q):
            if gcd(p, q) == 1:
                yield Fraction(p, q)
        q += 1


def _rotate_until_distinct_x(pts):
    if len({p.x for p in pts}) == len(pts):
        return pts
    for t in _rotation_params():
        c = (1 - t * t) / (1 + t * t)
        s = 2 * t / (1 + t * t)
        rot = [RationalPoint(c * p.x - s * p.y, s * p.x + c * p.y) for p in pts]
        if len({p.x for p in rot}) == len(rot):
            return rot
    raise AssertionError("unreachable")


def parse_points(text: str, perturb: bool = False) -> PointSet:
    """Parse a points file: one ``x y`` pair per line; coordinates may be
    integers, decimals or ``p/q``; ``#`` starts a comment."""
    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.replace(",", " ").split()
        if len(toks) != 2:
            raise PointFormatError(f"line {lineno}: expected 'x y', got {raw!r}")
        try:
            pts.append(RationalPoint(Fraction(toks[0]), Fraction(toks[1])))
        except (ValueError, ZeroDivisionError):
            raise PointFormatError(f"line {lineno}: bad coordinate in {raw!r}") from None
    return PointSet.from_points(pts, perturb=perturb)


def format_points(ps: PointSet) -> str:
    return "".join(f"{p.x} {p.y}\n" for p in ps.points)


def direction(p: RationalPoint, q: RationalPoint):
    """Normal form of the direction of pq: lowest-terms integers with
    dx > 0, or (0, 1) for vertical."""
    dx, dy = q.x - p.x, q.y - p.y
    m = lcm(dx.denominator, dy.denominator)
    a, b = int(dx * m), int(dy * m)
    g = gcd(a, b)
    a, b = a // g, b // g
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    return (a, b)


def line_through(p: RationalPoint, q: RationalPoint):
    """Integer triple (a, b, c), gcd 1, first nonzero of (a, b) positive,
    with a*x + b*y + c = 0 on the line pq."""
    a = q.y - p.y
    b = p.x - q.x
    c = -(a * p.x + b * p.y)
    m = lcm(a.denominator, b.denominator, c.denominator)
    a, b, c = int(a * m), int(b * m), int(c * m)
    g = gcd(gcd(a, b), c)
    a, b, c = a // g, b // g, c // g
    if a < 0 or (a == 0 and b < 0):
        a, b, c = -a, -b, -c
    return (a, b, c)


def connecting_lines(ps: PointSet) -> dict:
    """Map line normal form -> sorted tuple of the labels on it."""
    lines = defaultdict(set)
    for (i, p), (j, q) in combinations(enumerate(ps.points, 1), 2):
        s = lines[line_through(p, q)]
        s.add(i)
        s.add(j)
    return {k: tuple(sorted(v)) for k, v in lines.items()}


def direction_count(ps: PointSet) -> int:
    return len({direction(p, q) for p, q in combinations(ps.points, 2)})


def circular_sequence(ps: PointSet) -> AllowableSequence:
    """First half-period of the circular sequence of ``ps``.

    Pairs are grouped by slope; each slope class is one move, and each
    connecting line of that slope reverses as one block.
    """
    n = ps.n
    if n < 2:
        raise NTooSmall("need at least two points")
    pts = ps.points
    for a, b in zip(pts, pts[1:]):
        if a.x == b.x:
            raise DuplicateX(pts.index(a) + 1, pts.index(a) + 2)
    by_slope = defaultdict(lambda: defaultdict(set))
    for (i, p), (j, q) in combinations(enumerate(pts, 1), 2):
        slope = (q.y - p.y) / (q.x - p.x)
        group = by_slope[slope][line_through(p, q)]
        group.add(i)
        group.add(j)
    perm = list(range(1, n + 1))
    perms = [tuple(perm)]
    for slope in sorted(by_slope):
        pos = {v: k for k, v in enumerate(perm)}
        for members in by_slope[slope].values():
            idx = sorted(pos[v] for v in members)
            lo, hi = idx[0], idx[-1]
            if hi - lo + 1 != len(idx):
                raise AssertionError(f"collinear points {sorted(members)} not adjacent in projection")
            perm[lo:hi + 1] = perm[lo:hi + 1][::-1]
        perms.append(tuple(perm))
    return AllowableSequence.from_permutations(perms)


@dataclass(frozen=True)
class KellyMoserCheck:
    k: int
    applicable: bool
    bound: int | None
    holds: bool | None


@dataclass(frozen=True)
class PointSetStats:
    n: int
    connecting_line_count: int
    ordinary_line_count: int
    direction_count: int
    max_lines_through_point: int
    min_lines_through_point: int
    max_points_on_line: int
    is_collinear: bool
    is_near_pencil: bool
    erdos_check: bool | None
    kelly_moser_check: KellyMoserCheck


def kelly_moser(n: int, max_collinear: int, lam: int) -> KellyMoserCheck:
    """Connecting-line lower bound when at most n - k points are collinear.

    Evaluated only when n > ((3k - 2)^2 * 3 + 3k - 1) / 2.
    """
    k = n - max_collinear
    if k < 1 or 2 * n <= 3 * (3 * k - 2) ** 2 + 3 * k - 1:
        return KellyMoserCheck(k, False, None, None)
    # (3k + 2)(k - 1) is always even
    bound = k * n - (3 * k + 2) * (k - 1) // 2
    return KellyMoserCheck(k, True, bound, lam >= bound)


def point_stats(ps: PointSet) -> PointSetStats:
    n = ps.n
    if n < 3:
        raise NTooSmall("point statistics need n >= 3")
    lines = connecting_lines(ps)
    lam = len(lines)
    ordinary = sum(1 for v in lines.values() if len(v) == 2)
    through = [0] * (n + 1)
    for v in lines.values():
        for i in v:
            through[i] += 1
    biggest = max(len(v) for v in lines.values())
    collinear = lam == 1
    return PointSetStats(
        n=n,
        connecting_line_count=lam,
        ordinary_line_count=ordinary,
        direction_count=direction_count(ps),
        max_lines_through_point=max(through),
        min_lines_through_point=min(through[1:]),
        max_points_on_line=biggest,
        is_collinear=collinear,
        is_near_pencil=not collinear and biggest == n - 1,
        erdos_check=None if collinear else lam >= n,
        kelly_moser_check=kelly_moser(n, biggest, lam),
    )


def stats_dict(st: PointSetStats) -> dict:
    km = st.kelly_moser_check
    return {
        "n": st.n,
        "connecting_line_count": st.connecting_line_count,
        "ordinary_line_count": st.ordinary_line_count,
        "direction_count": st.direction_count,
        "max_lines_through_point": st.max_lines_through_point,
        "min_lines_through_point": st.min_lines_through_point,
        "max_points_on_line": st.max_points_on_line,
        "is_collinear": st.is_collinear,
        "is_near_pencil": st.is_near_pencil,
        "erdos_check": st.erdos_check,
        "kelly_moser_check": {
            "k": km.k, "applicable": km.applicable, "bound": km.bound, "holds": km.holds,
        },
    }


def directions_equal_half_period_check(ps: PointSet) -> bool:
    return direction_count(ps) == circular_sequence(ps).half_period


def near_pencil(n: int) -> PointSet:
    """n - 1 points on the x-axis plus an apex at (-1, 1)."""
    if n < 3:
        raise NTooSmall("near-pencil needs n >= 3")
    pts = [(i, 0) for i in range(n - 1)] + [(-1, 1)]
    return PointSet.from_points(pts)


def grid(rows: int, cols: int) -> PointSet:
    """Integer grid, sheared by one row per column so x-coordinates differ.

    The shear (x, y) -> (x*rows + y, y) is affine, so lines are preserved.
    """
    return PointSet.from_points([(x * rows + y, y) for x in range(cols) for y in range(rows)])
