import random

import pytest

from founderseg.model import build_matrix, matrix_from_ranks

EXAMPLE1_ROWS = ["tttccat", "accatta", "actacct", "actccat", "cttacct", "atcacat"]
SMALL_ROWS = ["baaaa", "baaab", "babab"]


@pytest.fixture
def example1():
    """Six recombinants of length 7 over {a, c, t}, ranked a < c < t."""
    return build_matrix(EXAMPLE1_ROWS, alphabet="act")


@pytest.fixture
def small():
    return build_matrix(SMALL_ROWS)


def random_panel(rng: random.Random, m: int, n: int, sigma: int):
    return matrix_from_ranks(
        [bytes(rng.randrange(sigma) for _ in range(n)) for _ in range(m)], sigma=sigma
    )


ACCEPTANCE_RESULTS = {}


def record_criterion(number: int, title: str, passed: bool, detail: str = "") -> None:
    status = "PASS" if passed else "FAIL"
    line = f"[{status}] criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_RESULTS[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_RESULTS):
            terminalreporter.write_line(ACCEPTANCE_RESULTS[number])
