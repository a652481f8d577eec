import pytest

from signedfam import suites
from signedfam.vectors import Profile, SignedVector


@pytest.fixture(scope="session")
def solve_g():
    """Shared access to the per-process solve memo.

    Acceptance criteria 1, 2, 3, 5 and 11 all consume solver values; the
    memo makes each instance pay its search cost once per test run.
    """

    def _solve(n: int, k: int, l: int, budget: float = 600.0):
        return suites.solve_memo(n, k, l, "g", budget)

    return _solve


@pytest.fixture(scope="session")
def solve_m():
    def _solve(n: int, k: int, l: int, budget: float = 120.0):
        return suites.solve_memo(n, k, l, "m", budget)

    return _solve


def make_vector(n: int, pos: list[int], neg: list[int]) -> SignedVector:
    return SignedVector.from_supports(n, pos, neg)


def g_profiles(max_n: int):
    """All (n, k, l) with k > l >= 1 and n >= k + l up to max_n."""
    for n in range(3, max_n + 1):
        for k in range(2, n):
            for l in range(1, k):
                if k + l <= n:
                    yield Profile(n, k, l)
