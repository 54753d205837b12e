"""Exhaustive generation of allowable sequences for small n.

Depth-first search from the identity. Every move only reverses pairs that
are still in increasing order, so every root-to-reversal path is an
allowable sequence and every allowable sequence is exactly one such path.

Visitors are called with a ``SequenceView`` that the search keeps mutating;
copy what you need (``view.to_sequence()``) before returning.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .arrangement import K5_CONSTANTS, K8_CONSTANTS, dirac_floor, rich_bound
from .errors import NTooLarge, NTooSmall, UsageError
from .seqcore import AllowableSequence, Block, Move

SIMPLE_CAP = 7
GENERAL_CAP = 5
DFS_SIMPLE_CAP = 6  # 1.1e9 simple sequences at n = 7; only counted, never walked
ALL_CHECKS = ("ungar", "switch", "rich", "pairs", "floor")
THREADS_ENV = "PSEUDOLINE_LAB_THREADS"


class SequenceView:
    """Borrowed view of the path currently on the DFS stack."""

    __slots__ = ("n", "perms", "moves")

    def __init__(self, n):
        self.n = n
        self.perms = [tuple(range(1, n + 1))]
        self.moves = []  # per move: tuple of blocks, each block a tuple of elements

    @property
    def half_period(self):
        return len(self.moves)

    def to_sequence(self) -> AllowableSequence:
        moves = []
        for step, (prev, blocks) in enumerate(zip(self.perms, self.moves)):
            where = {v: i for i, v in enumerate(prev)}
            moves.append(Move(step, tuple(Block(where[b[0]] + 1, b) for b in blocks)))
        return AllowableSequence(self.n, tuple(self.perms), tuple(moves))


def simple_moves(p):
    """(next, blocks) for each adjacent increasing transposition, left to right."""
    for i in range(len(p) - 1):
        a, b = p[i], p[i + 1]
        if a < b:
            yield p[:i] + (b, a) + p[i + 2:], ((a, b),)


def general_moves(p):
    """(next, blocks) for every nonempty set of disjoint increasing blocks."""
    n = len(p)
    # run_end[i]: last index of the increasing run starting at i
    run_end = list(range(n))
    for i in range(n - 2, -1, -1):
        if p[i] < p[i + 1]:
            run_end[i] = run_end[i + 1]

    def rec(i, out, blocks):
        if i >= n:
            if blocks:
                yield tuple(out), tuple(blocks)
            return
        yield from rec(i + 1, out + [p[i]], blocks)
        for j in range(i + 1, run_end[i] + 1):
            seg = p[i:j + 1]
            yield from rec(j + 1, out + list(seg[::-1]), blocks + [seg])

    yield from rec(0, [], [])


def _check_n(n, simple, cap=None):
    if n < 2:
        raise NTooSmall("n must be at least 2")
    if cap is None:
        cap = SIMPLE_CAP if simple else GENERAL_CAP
    if n > cap:
        kind = "simple" if simple else "general"
        raise NTooLarge(f"{kind} enumeration is capped at n = {cap}, got {n}")


def _dfs(view, successors, visitor, reverse, target):
    p = view.perms[-1]
    if p == target:
        if visitor is not None:
            visitor(view)
        return 1
    total = 0
    options = list(successors(p))
    if reverse:
        options.reverse()
    for q, blocks in options:
        view.perms.append(q)
        view.moves.append(blocks)
        total += _dfs(view, successors, visitor, reverse, target)
        view.perms.pop()
        view.moves.pop()
    return total


def _walk(n, simple, visitor, order, prefix=None):
    if order not in ("forward", "reverse"):
        raise UsageError(f"unknown traversal order {order!r}")
    view = SequenceView(n)
    if prefix is not None:
        q, blocks = prefix
        view.perms.append(q)
        view.moves.append(blocks)
    succ = simple_moves if simple else general_moves
    return _dfs(view, succ, visitor, order == "reverse", tuple(range(n, 0, -1)))


def enumerate_simple(n: int, visitor=None, order: str = "forward") -> int:
    _check_n(n, True, DFS_SIMPLE_CAP)
    return _walk(n, True, visitor, order)


def enumerate_all(n: int, visitor=None, order: str = "forward") -> int:
    _check_n(n, False)
    return _walk(n, False, visitor, order)


def _reachable(start, succ):
    seen = {start}
    stack = [start]
    while stack:
        for q, _ in succ(stack.pop()):
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def count_sequences(n: int, simple: bool, direction: str = "forward") -> int:
    """Number of allowable n-sequences by memoized path counting.

    ``forward`` counts paths from each permutation to the reversal;
    ``backward`` counts paths from the identity to each permutation,
    processed in order of inversion count. Independent of the DFS.
    """
    _check_n(n, simple)
    succ = simple_moves if simple else general_moves
    start, target = tuple(range(1, n + 1)), tuple(range(n, 0, -1))
    if direction == "forward":
        @lru_cache(maxsize=None)
        def paths(p):
            if p == target:
                return 1
            return sum(paths(q) for q, _ in succ(p))
        return paths(start)
    if direction == "backward":
        # every move strictly raises the inversion count: a topological order
        def inversions(p):
            return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])

        ways = Counter({start: 1})
        for p in sorted(_reachable(start, succ), key=inversions):
            for q, _ in succ(p):
                ways[q] += ways[p]
        return ways[target]
    raise UsageError(f"unknown direction {direction!r}")


def min_half_period_dp(n: int, simple: bool = False, nontrivial: bool = True) -> int:
    _check_n(n, simple)
    succ = simple_moves if simple else general_moves
    target = tuple(range(n, 0, -1))

    @lru_cache(maxsize=None)
    def shortest(p):
        if p == target:
            return 0
        return 1 + min(shortest(q) for q, _ in succ(p))

    first = [q for q, _ in succ(tuple(range(1, n + 1))) if not (nontrivial and q == target)]
    return 1 + min(shortest(q) for q in first) if first else None


class _MinHalfPeriod:
    def __init__(self):
        self.best = None

    def __call__(self, view):
        if view.half_period > 1 and (self.best is None or view.half_period < self.best):
            self.best = view.half_period


def min_half_period(n: int) -> int | None:
    """Minimum half-period over nontrivial allowable n-sequences (None for n = 2)."""
    v = _MinHalfPeriod()
    enumerate_all(n, v)
    return v.best


def sequence_checks(n, perms, moves, checks):
    """Names of the checks failed by one sequence (given as a view's lists)."""
    failed = []
    h = len(moves)
    nontrivial = h > 1
    sizes = [len(b) for m in moves for b in m]
    if "ungar" in checks and nontrivial and h < 2 * (n // 2):
        failed.append("ungar")
    if "switch" in checks and nontrivial and 2 not in sizes:
        failed.append("switch")
    if "rich" in checks:
        hist = Counter(sizes)
        # up to n inclusive so the check is not vacuous at n <= 5
        for k in range(5, n + 1):
            rich = sum(c for m, c in hist.items() if m >= k)
            if rich > rich_bound(n, k, K5_CONSTANTS) or (
                k >= 8 and rich > rich_bound(n, k, K8_CONSTANTS)
            ):
                failed.append("rich")
                break
    if "pairs" in checks:
        seen = Counter()
        for m in moves:
            for b in m:
                for i in range(len(b)):
                    for j in range(i + 1, len(b)):
                        seen[frozenset((b[i], b[j]))] += 1
        if len(seen) != comb(n, 2) or any(c != 1 for c in seen.values()):
            failed.append("pairs")
    if "floor" in checks:
        counts = Counter(e for m in moves for b in m for e in b)
        r_max = max(counts.values())
        if r_max < dirac_floor(n) or any(len(b) > r_max for m in moves for b in m if len(b) < n):
            failed.append("floor")
    return failed


@dataclass
class EnumerationReport:
    n: int
    mode: str
    total: int = 0
    min_half_period: int | None = None
    half_period_histogram: Counter = field(default_factory=Counter)
    r_max_histogram: Counter = field(default_factory=Counter)
    counterexamples: list = field(default_factory=list)

    def __call__(self, view):
        self._visit(view.perms, view.moves)

    def _visit(self, perms, moves, checks=()):
        h = len(moves)
        self.total += 1
        self.half_period_histogram[h] += 1
        counts = Counter(e for m in moves for b in m for e in b)
        self.r_max_histogram[max(counts.values())] += 1
        if h > 1 and (self.min_half_period is None or h < self.min_half_period):
            self.min_half_period = h
        for name in sequence_checks(self.n, perms, moves, checks):
            self.counterexamples.append({"check": name, "permutations": [list(p) for p in perms]})

    def merge(self, other: "EnumerationReport"):
        self.total += other.total
        self.half_period_histogram.update(other.half_period_histogram)
        self.r_max_histogram.update(other.r_max_histogram)
        if other.min_half_period is not None and (
            self.min_half_period is None or other.min_half_period < self.min_half_period
        ):
            self.min_half_period = other.min_half_period
        self.counterexamples.extend(other.counterexamples)

    def to_dict(self):
        return {
            "n": self.n,
            "mode": self.mode,
            "total": self.total,
            "min_half_period": self.min_half_period,
            "half_period_histogram": {str(k): v for k, v in sorted(self.half_period_histogram.items())},
            "r_max_histogram": {str(k): v for k, v in sorted(self.r_max_histogram.items())},
            "counterexamples": self.counterexamples,
        }


class _Checker:
    def __init__(self, report, checks):
        self.report = report
        self.checks = checks

    def __call__(self, view):
        self.report._visit(view.perms, view.moves, self.checks)


def _subtree(args):
    n, simple, checks, prefix = args
    rep = EnumerationReport(n, "simple" if simple else "all")
    _walk(n, simple, _Checker(rep, checks), "forward", prefix)
    return rep


def thread_count(threads=None) -> int:
    if threads is None:
        threads = int(os.environ.get(THREADS_ENV, "1") or 1)
    return max(1, threads)


def verify_over_enumeration(n: int, checks=ALL_CHECKS, simple: bool = False,
                            threads: int | None = None) -> EnumerationReport:
    """Run invariant checks over every allowable n-sequence.

    The DFS forest is split after the first move; with ``threads > 1`` the
    subtrees run in worker processes. Merges are commutative and
    counterexamples are sorted, so the report does not depend on scheduling.
    """
    checks = tuple(checks)
    unknown = set(checks) - set(ALL_CHECKS)
    if unknown:
        raise UsageError(f"unknown checks: {sorted(unknown)}")
    _check_n(n, simple, DFS_SIMPLE_CAP if simple else GENERAL_CAP)
    succ = simple_moves if simple else general_moves
    jobs = [(n, simple, checks, first) for first in succ(tuple(range(1, n + 1)))]
    report = EnumerationReport(n, "simple" if simple else "all")
    threads = thread_count(threads)
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(threads, len(jobs))) as pool:
            parts = list(pool.map(_subtree, jobs))
    else:
        parts = [_subtree(job) for job in jobs]
    for part in parts:
        report.merge(part)
    report.counterexamples.sort(key=lambda c: (c["check"], c["permutations"]))
    return report
