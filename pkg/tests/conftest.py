import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from ncalg import builtin_complex, builtin_quaternion, variable


@pytest.fixture(scope="session")
def H():
    return builtin_quaternion()


@pytest.fixture(scope="session")
def C():
    return builtin_complex()


@pytest.fixture(scope="session")
def q(H):
    """Basis elements 1, i, j, k of H."""
    return tuple(H.basis_element(t) for t in range(4))


@pytest.fixture(scope="session")
def X(H):
    return variable(H)


@pytest.fixture
def rng():
    return random.Random(20261016)


small_fractions = st.fractions(min_value=-8, max_value=8, max_denominator=6)


def quaternions(H):
    return st.tuples(*[small_fractions] * 4).map(lambda c: H.element(c))


def rand_quat(H, rng, spread=6, max_den=5):
    return H.element([Fraction(rng.randint(-spread, spread), rng.randint(1, max_den)) for _ in range(4)])


ACCEPTANCE_LINES: list[str] = []


def report(label: str, ok: bool, detail: str = "") -> None:
    """Record and print one acceptance line; the session summary repeats them."""
    line = f"{label}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
