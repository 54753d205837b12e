from pathlib import Path

import pytest
from hypothesis import strategies as st

from pseudoline_lab.seqcore import SIMPLE, MIXED, SPARSE, parse_sequence, random_sequence

DATA = Path(__file__).parent / "data"

EXAMPLE_PERMS = ["12345", "21354", "25314", "52341", "52431", "54231", "54321"]


@pytest.fixture
def example_seq():
    return parse_sequence((DATA / "worked_example.seq").read_text())


@pytest.fixture
def data_dir():
    return DATA


def trivial(n):
    return parse_sequence(f"{n}\n{' '.join(map(str, range(1, n + 1)))}\n"
                          f"{' '.join(map(str, range(n, 0, -1)))}\n")


@st.composite
def sequences(draw, min_n=2, max_n=9):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2 ** 32 - 1))
    profile = draw(st.sampled_from([SIMPLE, MIXED, SPARSE]))
    return random_sequence(n, seed, profile)


# One summary line per acceptance criterion, built from real test outcomes.
_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call" and not (call.when == "setup" and call.excinfo):
        return
    cid, title = mark.args
    ok = call.excinfo is None
    prev = _criteria.get(cid, (title, True, []))
    detail = prev[2]
    if not ok:
        detail.append(f"{item.name}: {call.excinfo.exconly().splitlines()[0][:160]}")
    _criteria[cid] = (title, prev[1] and ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for cid in sorted(_criteria):
        title, ok, detail = _criteria[cid]
        tr.write_line(f"{'PASS' if ok else 'FAIL'}  C{cid:<3}{title}")
        for d in detail:
            tr.write_line(f"        {d}")
