import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from arrlab.graph import SimpleAcyclicDigraph  # noqa: E402

_CRITERIA = []


@pytest.fixture
def criterion():
    """Record one acceptance verdict; all verdicts are printed in the terminal summary."""

    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" -- {detail}" if detail else "")
        print(line)
        _CRITERIA.append(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_CRITERIA, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)


@st.composite
def normalized_digraphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleAcyclicDigraph(n, tuple(p for p, k in zip(pairs, keep) if k))


@st.composite
def relabeled_digraphs(draw, min_n=1, max_n=6):
    g = draw(normalized_digraphs(min_n, max_n))
    perm = draw(st.permutations(list(range(1, g.n + 1))))
    return g, SimpleAcyclicDigraph(g.n, tuple((perm[i - 1], perm[j - 1]) for i, j in g.edges))
