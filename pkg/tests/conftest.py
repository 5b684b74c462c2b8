import os
import sys

from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("default")


@st.composite
def small_posets(draw, min_size=1, max_size=5):
    """Random orders: pick relations from lower to higher index, close transitively."""
    from finitetc.poset import FinitePoset
    n = draw(st.integers(min_size, max_size))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = [p for p in pairs if draw(st.booleans())]
    perm = draw(st.permutations(range(n)))
    edges = [(perm[a], perm[b]) for a, b in chosen]
    return FinitePoset([f"p{i}" for i in range(n)], edges)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
