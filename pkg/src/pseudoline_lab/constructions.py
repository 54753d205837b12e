"""Named arrangements: the deltoid line arrangement and the single-long-line
sequence.

The deltoid arrangement on even n joins the n-gon vertex p_i (angle
2*pi*i/n) to p_{n/2 - 2i}, using the tangent at p_i when the two coincide.
Lines i, j, k are concurrent exactly when i + j + k = 0 (mod n), so the
whole incidence structure lives in Z_n and needs no coordinates.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from math import ceil, comb

from .errors import DegenerateSweep, InvariantViolated, NTooSmall, OddN, PseudolineError
from .seqcore import AllowableSequence


@dataclass(frozen=True)
class DeltoidArrangement:
    n: int
    triples: frozenset  # sorted index triples (i, j, k), indices in 0..n-1
    doubles: frozenset  # sorted index pairs
    tangent_lines: frozenset
    per_line_vertex_counts: tuple

    @property
    def histogram(self):
        return {3: len(self.triples), 2: len(self.doubles)}


def delta(n: int) -> int:
    return 0 if n % 3 == 0 else 2


def closed_form_triple_count(n: int) -> int:
    """The closed form 1 + ceil(n(n-3)/6); one too high when 3 does not divide n."""
    return 1 + ceil(n * (n - 3) / 6)


def double_count(n: int) -> int:
    return n - 3 + delta(n)


def triple_count(n: int) -> int:
    """Triple points implied by pair conservation: 3T + D = C(n, 2).

    Equals the closed form when 3 | n and is one less otherwise.
    """
    return (comb(n, 2) - double_count(n)) // 3


def deltoid(n: int) -> DeltoidArrangement:
    if n % 2:
        raise OddN(f"deltoid needs even n, got {n}")
    if n < 6:
        raise NTooSmall(f"deltoid needs n >= 6, got {n}")
    triples = set()
    doubles = set()
    for i in range(n):
        for j in range(i + 1, n):
            k = -(i + j) % n
            if k == i or k == j:
                doubles.add((i, j))
            else:
                triples.add(tuple(sorted((i, j, k))))
    tangents = frozenset(i for i in range(n) if (3 * i - n // 2) % n == 0)
    counts = [0] * n
    for t in triples:
        for i in t:
            counts[i] += 1
    for d in doubles:
        for i in d:
            counts[i] += 1
    if len(doubles) != double_count(n) or len(triples) != triple_count(n):
        raise InvariantViolated(
            f"deltoid({n}): {len(triples)} triples / {len(doubles)} doubles, "
            f"expected {triple_count(n)} / {double_count(n)}"
        )
    if 3 * len(triples) + len(doubles) != comb(n, 2):
        raise InvariantViolated(f"deltoid({n}): pair conservation fails")
    return DeltoidArrangement(n, frozenset(triples), frozenset(doubles), tangents, tuple(counts))


def deltoid_line_stat(d: DeltoidArrangement):
    """(max vertices on one line, n/2 + 3). Raises if the bound fails."""
    top = max(d.per_line_vertex_counts)
    bound = d.n / 2 + 3
    if top > bound:
        raise InvariantViolated(f"deltoid({d.n}): a line has {top} vertices > {bound}")
    return top, bound


def single_long_line_sequence(n: int) -> AllowableSequence:
    """Reverse 1..n-1 in one move, then walk n to the front by simple switches."""
    if n < 3:
        raise NTooSmall("need n >= 3")
    p = list(range(n - 1, 0, -1)) + [n]
    perms = [tuple(range(1, n + 1)), tuple(p)]
    for pos in range(n - 1, 0, -1):
        p[pos - 1], p[pos] = p[pos], p[pos - 1]
        perms.append(tuple(p))
    return AllowableSequence.from_permutations(perms)


# Floating-point geometry, used for drawing and the numeric sweep only.

def deltoid_lines(n: int):
    """Per index i: (point on the line, direction vector, is_tangent)."""
    out = []
    for i in range(n):
        a = 2 * math.pi * i / n
        b = 2 * math.pi * ((n // 2 - 2 * i) % n) / n
        p = (math.cos(a), math.sin(a))
        if (3 * i - n // 2) % n == 0:
            out.append((p, (-p[1], p[0]), True))
        else:
            q = (math.cos(b), math.sin(b))
            out.append((p, (q[0] - p[0], q[1] - p[1]), False))
    return out


def _intersect(l1, l2):
    (p, d, _), (q, e, _) = l1, l2
    det = e[0] * d[1] - d[0] * e[1]
    rx, ry = q[0] - p[0], q[1] - p[1]
    t = (e[0] * ry - e[1] * rx) / det
    return (p[0] + t * d[0], p[1] + t * d[1])


def deltoid_sequence(d: DeltoidArrangement, epsilon: float = 1e-9, angle: float = 0.1234567):
    """Sweep the drawn deltoid lines numerically and return the sequence,
    with elements relabelled 1..n by order at the left.

    Coordinates are rotated by ``angle`` first so no line is vertical and no
    two vertices share an x. Intersections within ``epsilon`` are merged.
    The result must reproduce the exact triples and doubles of ``d``;
    otherwise DegenerateSweep is raised.

    Returns (sequence, label_to_index) where label_to_index[l - 1] is the
    deltoid index of element l.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    n = d.n
    ca, sa = math.cos(angle), math.sin(angle)
    lines = []
    for p, v, tan in deltoid_lines(n):
        lines.append(((ca * p[0] - sa * p[1], sa * p[0] + ca * p[1]),
                      (ca * v[0] - sa * v[1], sa * v[0] + ca * v[1]), tan))
    # orient every direction rightwards; order at x -> -inf is by descending slope
    slopes = [v[1] / v[0] for _, v, _ in lines]

    pts = []
    for i in range(n):
        for j in range(i + 1, n):
            pts.append((_intersect(lines[i], lines[j]), i, j))
    pts.sort()
    # single-linkage clustering of intersection points
    parent = list(range(len(pts)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a in range(len(pts)):
        (xa, ya), _, _ = pts[a]
        b = a + 1
        while b < len(pts) and pts[b][0][0] - xa <= epsilon:
            (xb, yb), _, _ = pts[b]
            if math.hypot(xb - xa, yb - ya) <= epsilon:
                parent[find(b)] = find(a)
            b += 1
    clusters = {}
    for a, (xy, i, j) in enumerate(pts):
        r = find(a)
        c = clusters.setdefault(r, [xy[0], set()])
        c[0] = min(c[0], xy[0])
        c[1].update((i, j))
    events = sorted(clusters.values(), key=lambda c: c[0])

    order = sorted(range(n), key=lambda i: -slopes[i])  # bottom-to-top at the far left
    label = {idx: pos + 1 for pos, idx in enumerate(order)}
    perm = list(range(1, n + 1))
    perms = [tuple(perm)]
    for _, members in events:
        labs = {label[i] for i in members}
        pos = sorted(perm.index(v) for v in labs)
        lo, hi = pos[0], pos[-1]
        if hi - lo + 1 != len(pos):
            raise DegenerateSweep(f"merged crossing {sorted(members)} is not contiguous")
        perm[lo:hi + 1] = perm[lo:hi + 1][::-1]
        perms.append(tuple(perm))
    try:
        seq = AllowableSequence.from_permutations(perms)
    except PseudolineError as exc:
        raise DegenerateSweep(f"numeric sweep is not allowable: {exc}") from exc

    found_t, found_d = set(), set()
    for b in seq.blocks():
        idx = tuple(sorted(order[e - 1] for e in b.elements))
        {3: found_t, 2: found_d}.get(len(idx), set()).add(idx)
    hist = Counter(b.size for b in seq.blocks())
    if dict(hist) != d.histogram or found_t != set(d.triples) or found_d != set(d.doubles):
        raise DegenerateSweep(
            f"numeric sweep histogram {dict(hist)} does not match exact structure {d.histogram}"
        )
    return seq, tuple(order)
