import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from torus_ktheory.linalg import IntMatrix

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def int_matrices(draw, max_rows=6, max_cols=6, bound=20, square=False):
    nr = draw(st.integers(0 if not square else 1, max_rows))
    nc = nr if square else draw(st.integers(0, max_cols))
    rows = draw(st.lists(
        st.lists(st.integers(-bound, bound), min_size=nc, max_size=nc),
        min_size=nr, max_size=nr))
    return IntMatrix.from_rows(rows) if nr else IntMatrix(0, nc, ())


@st.composite
def unimodular(draw, n, max_steps=12, bound=3):
    """Product of elementary row operations, optionally one sign flip."""
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    if n >= 2:
        steps = draw(st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1),
                      st.integers(-bound, bound)),
            max_size=max_steps))
        for i, j, c in steps:
            if i != j:
                rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    if n and draw(st.booleans()):
        rows[0] = [-x for x in rows[0]]
    return IntMatrix.from_rows(rows) if n else IntMatrix(0, 0, ())


# acceptance summary -------------------------------------------------------

_ACCEPTANCE = []


@pytest.fixture
def acceptance_record():
    def record(number, title, passed, detail=""):
        _ACCEPTANCE.append((number, title, passed, detail))
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(_ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        line = f"[{status}] {number:>2}. {title}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
