import pytest

from hyperstrip import solve


@pytest.fixture(scope="session")
def solved():
    """Session-cached boundary-constant solves keyed by (alpha, beta)."""
    cache = {}

    def get(alpha: float, beta: float):
        key = (alpha, beta)
        if key not in cache:
            cache[key] = solve.solve_params(alpha, beta)
        return cache[key]

    return get
