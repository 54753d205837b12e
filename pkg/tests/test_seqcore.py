from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings

from conftest import EXAMPLE_PERMS, sequences, trivial
from pseudoline_lab.enumeration import general_moves
from pseudoline_lab.errors import (
    FirstNotIdentity,
    LastNotReversal,
    MoveInferenceFailed,
    NotAPermutation,
    NTooSmall,
    SequenceFormatError,
)
from pseudoline_lab.seqcore import (
    SIMPLE,
    AllowableSequence,
    infer_move,
    is_nontrivial,
    is_simple,
    local_sequences,
    parse_sequence,
    random_sequence,
    simple_switch_count,
    switch_total,
)


def P(s):
    return tuple(int(c) for c in s)


def brute_force_successors(p):
    """All one-move successors, from the enumerator's move generator."""
    return {q for q, _ in general_moves(tuple(p))}


def test_example_example_parses(example_seq):
    assert example_seq.n == 5
    assert example_seq.half_period == 6
    assert [m.label() for m in example_seq.moves] == ["12,45", "135", "25,14", "34", "24", "23"]


def test_digit_rows_and_inline_form():
    seq = parse_sequence("5\n" + "\n".join(EXAMPLE_PERMS))
    assert seq.half_period == 6
    t = parse_sequence("n=3; 123; 321")
    assert t.half_period == 1
    assert not is_nontrivial(t)


def test_not_one_move():
    # a brute-force oracle over all moves from 123 gives only these
    assert brute_force_successors(P("123")) == {P("213"), P("132"), P("321")}
    with pytest.raises(MoveInferenceFailed) as exc:
        parse_sequence("n=3; 123; 231")
    assert exc.value.step == 0


@pytest.mark.parametrize("text, err", [
    ("3\n1 2 2\n3 2 1", NotAPermutation),
    ("3\n2 1 3\n3 2 1", FirstNotIdentity),
    ("3\n1 2 3\n2 1 3", LastNotReversal),
    ("1\n1\n1", NTooSmall),
    ("x\n1 2\n2 1", SequenceFormatError),
    ("2\n1 2", SequenceFormatError),
    ("# only a comment\n", SequenceFormatError),
])
def test_parse_errors(text, err):
    with pytest.raises(err):
        parse_sequence(text)


def test_infer_move_examples():
    m = infer_move(P("21354"), P("25314"))
    assert [(b.start, b.elements) for b in m.blocks] == [(2, (1, 3, 5))]
    m = infer_move(P("12345"), P("21354"))
    assert [b.elements for b in m.blocks] == [(1, 2), (4, 5)]
    with pytest.raises(MoveInferenceFailed):
        infer_move(P("12345"), P("12345"))
    with pytest.raises(MoveInferenceFailed):
        infer_move(P("123"), P("124"))


def test_infer_move_rejects_decreasing_run():
    with pytest.raises(MoveInferenceFailed):
        infer_move(P("2134"), P("1234"))


def test_adjacent_blocks_stay_separate():
    m = infer_move(P("1234"), P("2143"))
    assert [b.elements for b in m.blocks] == [(1, 2), (3, 4)]
    m = infer_move(P("1234"), P("4321"))
    assert [b.elements for b in m.blocks] == [(1, 2, 3, 4)]


@pytest.mark.parametrize("p", [P("1234"), P("2134"), P("1324"), P("21435")])
def test_infer_move_agrees_with_brute_force(p):
    for q, blocks in general_moves(p):
        m = infer_move(p, q)
        assert tuple(b.elements for b in m.blocks) == blocks


def test_local_sequences_match_listing(example_seq):
    loc = local_sequences(example_seq)
    listing = {
        1: ["12", "135", "14"],
        2: ["12", "25", "24", "23"],
        3: ["135", "34", "23"],
        4: ["45", "14", "34", "24"],
        5: ["45", "135", "25"],
    }
    for ls in loc:
        got = ["".join(map(str, sorted(b.elements))) for _, b in ls.events]
        assert got == listing[ls.element]
    assert [ls.length for ls in loc] == [3, 4, 3, 4, 3]
    assert loc[4].length == 3


def test_trivial_local_lengths():
    assert [ls.length for ls in local_sequences(trivial(6))] == [1] * 6


def test_flags(example_seq):
    assert is_nontrivial(example_seq)
    assert not is_simple(example_seq)
    assert simple_switch_count(example_seq) == 7
    assert not is_nontrivial(trivial(4))
    s = parse_sequence("3\n123\n213\n231\n321")
    assert is_simple(s) and is_nontrivial(s)


def test_random_small_cases():
    assert random_sequence(2, 17).permutations == ((1, 2), (2, 1))
    for seed in range(20):
        s = random_sequence(5, seed, SIMPLE)
        assert is_simple(s) and s.half_period == 10


def test_random_is_deterministic():
    assert random_sequence(9, 123) == random_sequence(9, 123)


def test_random_rejects_n1():
    with pytest.raises(NTooSmall):
        random_sequence(1, 0)


def pairs_per_move(seq):
    seen = {}
    for m in seq.moves:
        for b in m.blocks:
            for pair in combinations(sorted(b.elements), 2):
                seen[pair] = seen.get(pair, 0) + 1
    return seen


@settings(max_examples=200, deadline=None)
@given(sequences())
def test_sequence_invariants(seq):
    n = seq.n
    seen = pairs_per_move(seq)
    assert set(seen) == set(combinations(range(1, n + 1), 2))
    assert all(v == 1 for v in seen.values())
    assert switch_total(seq) == comb(n, 2)
    assert sum(ls.length for ls in local_sequences(seq)) == sum(b.size for b in seq.blocks())
    if is_simple(seq):
        assert seq.half_period == comb(n, 2)
    for m in seq.moves:
        spans = sorted((b.start, b.stop) for b in m.blocks)
        assert all(a[1] < b[0] for a, b in zip(spans, spans[1:]))
        assert all(b.size >= 2 for b in m.blocks)


@settings(max_examples=200, deadline=None)
@given(sequences())
def test_roundtrip(seq):
    assert parse_sequence(seq.serialize()) == seq


def test_from_permutations_equals_parse(example_seq):
    again = AllowableSequence.from_permutations([P(s) for s in EXAMPLE_PERMS])
    assert again == example_seq
