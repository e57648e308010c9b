from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from sgs.graph import SignedGraph, is_connected


@st.composite
def signed_graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # a random spanning tree first, so the graph is always connected
        order = draw(st.permutations(range(n)))
        for i in range(1, n):
            j = draw(st.integers(0, i - 1))
            e = tuple(sorted((order[i], order[j])))
            if e not in chosen:
                chosen.append(e)
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=len(chosen), max_size=len(chosen)))
    g = SignedGraph.from_edges(n, [(a, b, s) for (a, b), s in zip(chosen, signs)])
    assert not connected or is_connected(g)
    return g


def connected_signed_graphs(min_n=1, max_n=7):
    return signed_graphs(min_n=min_n, max_n=max_n, connected=True)


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
