import os
import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from superbracket.linalg import Matrix

settings.register_profile(
    "ci",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")

# SUPERBRACKET_SEED fixes every randomized driver in the suite
SEED = int(os.environ.get("SUPERBRACKET_SEED", "20250808"))


@pytest.fixture
def rng():
    return random.Random(SEED)


def random_invertible(field, n, rng, span=4):
    """Random invertible n x n matrix over the field."""
    if n == 0:
        return Matrix(field, [])
    while True:
        if field.kind == "prime":
            m = Matrix(
                field,
                [[rng.randrange(field.p) for _ in range(n)] for _ in range(n)],
            )
        else:
            m = Matrix(
                field,
                [
                    [Fraction(rng.randint(-span, span), rng.randint(1, 3)) for _ in range(n)]
                    for _ in range(n)
                ],
            )
        if m.det():
            return m


def random_graded_change(g, rng):
    """Random invertible graded basis change for a superalgebra."""
    return (
        random_invertible(g.field, g.dim_even, rng),
        random_invertible(g.field, g.dim_odd, rng),
    )
