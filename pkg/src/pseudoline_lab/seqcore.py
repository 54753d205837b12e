"""Allowable sequences of permutations.

An allowable n-sequence starts at the identity ``1..n``, ends at the
reversal ``n..1``, and each step reverses one or more disjoint runs of
adjacent elements that are increasing before the step. Permutations are
plain tuples of ints; moves are always re-derived from consecutive
permutations, never stored independently.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .errors import (
    FirstNotIdentity,
    LastNotReversal,
    MoveInferenceFailed,
    NotAPermutation,
    NTooSmall,
    SequenceFormatError,
)

Permutation = tuple  # tuple[int, ...], values 1..n


@dataclass(frozen=True)
class Block:
    """A reversed run. ``start`` is 1-based; ``elements`` are listed in
    their (increasing) order before the reversal."""

    start: int
    elements: tuple

    @property
    def size(self):
        return len(self.elements)

    @property
    def stop(self):
        return self.start + len(self.elements) - 1

    def label(self):
        return "".join(map(str, self.elements)) if max(self.elements) < 10 else \
            "-".join(map(str, self.elements))


@dataclass(frozen=True)
class Move:
    step: int
    blocks: tuple

    def label(self):
        return ",".join(b.label() for b in self.blocks)


@dataclass(frozen=True)
class LocalSequence:
    element: int
    events: tuple  # ((step, Block), ...)

    @property
    def length(self):
        return len(self.events)


def check_permutation(p: Sequence[int], n: int) -> Permutation:
    p = tuple(p)
    if len(p) != n or set(p) != _ground(n):
        raise NotAPermutation(f"{list(p)} is not a permutation of 1..{n}")
    return p


@lru_cache(maxsize=None)
def _ground(n):
    return frozenset(range(1, n + 1))


def identity(n):
    return tuple(range(1, n + 1))


def reversal(n):
    return tuple(range(n, 0, -1))


def infer_move(prev: Sequence[int], nxt: Sequence[int], step: int = 0) -> Move:
    """Recover the unique move taking ``prev`` to ``nxt``.

    Scans left to right; at the first differing position the element that
    arrived there must be the last element of a reversed block, which pins
    the block's extent. Every differing position must fall inside a
    verified reversal, so success also means both are rearrangements of
    each other.
    """
    n = len(prev)
    if len(nxt) != n:
        raise MoveInferenceFailed(step, "permutations of different lengths")
    prev, nxt = tuple(prev), tuple(nxt)
    diff = [i for i, (a, b) in enumerate(zip(prev, nxt)) if a != b]
    blocks = []
    k = 0
    while k < len(diff):
        i = diff[k]
        try:
            j = prev.index(nxt[i], i + 1)
        except ValueError:
            j = -1
        if j <= i:
            raise MoveInferenceFailed(step, f"position {i + 1} is not the start of a reversed run")
        run = prev[i:j + 1]
        if nxt[i:j + 1] != run[::-1]:
            raise MoveInferenceFailed(step, f"positions {i + 1}..{j + 1} are not a reversal")
        if any(a > b for a, b in zip(run, run[1:])):
            raise MoveInferenceFailed(step, f"run {list(run)} is not increasing")
        blocks.append(Block(i + 1, run))
        # every differing position up to j belongs to this block
        while k < len(diff) and diff[k] <= j:
            k += 1
    if not blocks:
        raise MoveInferenceFailed(step, "consecutive permutations are equal")
    return Move(step, tuple(blocks))


@dataclass(frozen=True)
class AllowableSequence:
    n: int
    permutations: tuple
    moves: tuple

    @classmethod
    def from_permutations(cls, perms: Iterable[Sequence[int]]) -> "AllowableSequence":
        perms = [tuple(p) for p in perms]
        if not perms:
            raise SequenceFormatError("empty sequence")
        n = len(perms[0])
        if n < 2:
            raise NTooSmall("allowable sequences need n >= 2")
        perms = [check_permutation(p, n) for p in perms]
        if perms[0] != identity(n):
            raise FirstNotIdentity(f"first permutation is {list(perms[0])}")
        # moves first, so a broken step is reported even when the end is wrong too
        moves = tuple(infer_move(a, b, s) for s, (a, b) in enumerate(zip(perms, perms[1:])))
        if perms[-1] != reversal(n):
            raise LastNotReversal(f"last permutation is {list(perms[-1])}")
        return cls(n, tuple(perms), moves)

    @property
    def half_period(self):
        return len(self.moves)

    def blocks(self):
        for m in self.moves:
            yield from m.blocks

    def serialize(self) -> str:
        lines = [str(self.n)]
        lines += [" ".join(map(str, p)) for p in self.permutations]
        return "\n".join(lines) + "\n"


def parse_sequence(text: str) -> AllowableSequence:
    """Parse sequence-file text.

    The first non-comment line is ``n``. Each later nonempty line is a
    permutation, either whitespace separated or, for n <= 9, a run of
    digits such as ``21354``. A leading ``n=`` and ``;`` separators are
    accepted so short inline forms like ``"n=3; 123; 321"`` work too.
    """
    rows = []
    for raw in text.replace(";", "\n").splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise SequenceFormatError("no content")
    head = rows[0].replace(" ", "")
    if head.startswith("n="):
        head = head[2:]
    try:
        n = int(head)
    except ValueError:
        raise SequenceFormatError(f"first line must be n, got {rows[0]!r}") from None
    if n < 2:
        raise NTooSmall("allowable sequences need n >= 2")
    perms = []
    for row in rows[1:]:
        toks = row.split()
        if len(toks) == 1 and n <= 9 and len(toks[0]) == n:
            toks = list(toks[0])
        try:
            perms.append(tuple(int(t) for t in toks))
        except ValueError:
            raise SequenceFormatError(f"bad permutation line {row!r}") from None
    if len(perms) < 2:
        raise SequenceFormatError("need at least two permutations")
    return AllowableSequence.from_permutations(perms)


def serialize(seq: AllowableSequence) -> str:
    return seq.serialize()


def local_sequences(seq: AllowableSequence) -> list:
    events = {i: [] for i in range(1, seq.n + 1)}
    for m in seq.moves:
        for b in m.blocks:
            for e in b.elements:
                events[e].append((m.step, b))
    return [LocalSequence(i, tuple(events[i])) for i in range(1, seq.n + 1)]


def is_nontrivial(seq):
    return len(seq.permutations) > 2


def is_simple(seq):
    return all(len(m.blocks) == 1 and m.blocks[0].size == 2 for m in seq.moves)


def simple_switch_count(seq):
    return sum(1 for b in seq.blocks() if b.size == 2)


def switch_total(seq):
    """Number of pair switches, summed over blocks. Always C(n, 2)."""
    return sum(comb(b.size, 2) for b in seq.blocks())


@dataclass(frozen=True)
class MoveProfile:
    """How ``random_sequence`` draws moves.

    Each maximal increasing run is cut into segments whose lengths are
    drawn uniformly from ``2..max_block`` (``None`` = unbounded); each
    segment becomes a block with probability ``block_prob``. With
    ``multi=False`` only one block is used per move.
    """

    max_block: int | None = None
    block_prob: float = 0.5
    multi: bool = True


SIMPLE = MoveProfile(max_block=2, block_prob=1.0, multi=False)
MIXED = MoveProfile(max_block=None, block_prob=0.5, multi=True)
SPARSE = MoveProfile(max_block=4, block_prob=0.25, multi=True)
DENSE = MoveProfile(max_block=None, block_prob=0.9, multi=True)

PROFILES = {"simple": SIMPLE, "mixed": MIXED, "sparse": SPARSE, "dense": DENSE}


def _increasing_runs(p):
    asc = [i for i, (a, b) in enumerate(zip(p, p[1:])) if a < b]
    runs = []
    for i in asc:
        if runs and runs[-1][1] == i:
            runs[-1][1] = i + 1
        else:
            runs.append([i, i + 1])
    return runs


def _draw_blocks(p, rng, profile):
    runs = _increasing_runs(p)
    rand = rng.random
    if not profile.multi:
        i, j = runs[int(rand() * len(runs))]
        cap = j - i + 1 if profile.max_block is None else min(profile.max_block, j - i + 1)
        size = 2 + int(rand() * (cap - 1))
        a = i + int(rand() * (j - i + 2 - size))
        return [(a, a + size - 1)]
    blocks = []
    for i, j in runs:
        a = i
        while j - a >= 1:
            room = j - a + 1
            cap = room if profile.max_block is None else min(profile.max_block, room)
            size = 2 + int(rand() * (cap - 1))
            if rand() < profile.block_prob:
                blocks.append((a, a + size - 1))
            a += size
    if not blocks:
        i, j = runs[int(rand() * len(runs))]
        a = i + int(rand() * (j - i))
        blocks.append((a, a + 1))
    return blocks


def random_permutations(n: int, seed: int, profile: MoveProfile | str = MIXED) -> list:
    """Permutation list of a random allowable sequence, without validation."""
    if n < 2:
        raise NTooSmall("allowable sequences need n >= 2")
    if isinstance(profile, str):
        profile = PROFILES[profile]
    rng = random.Random(seed)
    p = list(range(1, n + 1))
    target = list(range(n, 0, -1))
    perms = [tuple(p)]
    while p != target:
        for a, b in _draw_blocks(p, rng, profile):
            p[a:b + 1] = p[a:b + 1][::-1]
        perms.append(tuple(p))
    return perms


def random_sequence(n: int, seed: int, profile: MoveProfile | str = MIXED) -> AllowableSequence:
    return AllowableSequence.from_permutations(random_permutations(n, seed, profile))
