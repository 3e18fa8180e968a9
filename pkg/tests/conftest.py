import random
import sys
from functools import lru_cache
from pathlib import Path

from ramify.errors import ReduciblePolynomial
from ramify.field import new_field

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES = []


def random_monic(rng, degree, bound):
    return [rng.randint(-bound, bound) for _ in range(degree)] + [1]


@lru_cache(maxsize=None)
def random_fields(count, seed, lo=2, hi=5, bound=30):
    """`count` random fields of degree lo..hi with coefficients in [-bound, bound]."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        coeffs = random_monic(rng, rng.randint(lo, hi), bound)
        if coeffs[0] == 0:
            continue
        try:
            out.append(new_field(coeffs))
        except ReduciblePolynomial:
            continue
    return tuple(out)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
