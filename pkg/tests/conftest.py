import pytest
from hypothesis import settings, strategies as st

from permcomm.commprob import AUDIT
from permcomm.corpus import builtin_corpus, full_corpus
from permcomm.perm import Permutation

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

CRITERIA = []


def perms(degree):
    return st.permutations(range(degree)).map(Permutation)


@st.composite
def perm_lists(draw, degree=6, min_size=1, max_size=3):
    return draw(st.lists(perms(degree), min_size=min_size, max_size=max_size))


@pytest.fixture(scope="session")
def corpus():
    return full_corpus()


@pytest.fixture(scope="session")
def builtins():
    return builtin_corpus()


@pytest.fixture
def criterion():
    """Record one acceptance line: ``criterion(n, ok, text)``."""
    def record(n, ok, text):
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {text}"
        CRITERIA.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA:
            terminalreporter.write_line(line)
    terminalreporter.write_line(
        f"formula audit: {AUDIT.instances} Pr evaluations, {len(AUDIT.mismatches)} mismatches")


def pytest_sessionfinish(session, exitstatus):
    # every Pr anywhere in the run must agree between the two formulas
    if AUDIT.mismatches and session.exitstatus == 0:
        session.exitstatus = 1
