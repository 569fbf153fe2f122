import random
from pathlib import Path

import pytest

from coverlemma import Transformation, congruence_closure, theta_phi_congruence, theta_phi_nn1

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"

# the randomly generated degree-13 pair from the published sample session
G1 = Transformation([1, 6, 11, 12, 11, 10, 7, 13, 7, 1, 2, 1, 1])
G2 = Transformation([2, 10, 3, 3, 8, 7, 2, 4, 5, 6, 5, 3, 4])

# X = {1,2,3}, S = {123, 132, 111, 222, 333}
P = Transformation([1, 3, 2])
C1 = Transformation([1, 1, 1])
C2 = Transformation([2, 2, 2])
C3 = Transformation([3, 3, 3])

T3_GENS = [Transformation([2, 3, 1]), Transformation([2, 1, 3]), Transformation([1, 1, 2])]


@pytest.fixture
def problems_dir():
    return PROBLEMS


@pytest.fixture
def degree13_gens():
    return [G1, G2]


@pytest.fixture
def cycle_gens():
    return [P, C1, C2, C3]


def random_transformation(rng, n):
    return Transformation([rng.randint(1, n) for _ in range(n)])


def random_instance(rng, max_degree=6, max_gens=3):
    """A random generator set with a randomly chosen builder, as (gens, theta, phi, method)."""
    n = rng.randint(2, max_degree)
    gens = [random_transformation(rng, n) for _ in range(rng.randint(1, max_gens))]
    if rng.random() < 0.5:
        theta, phi = theta_phi_nn1(gens, n)
        return gens, theta, phi, "nn1"
    pts = list(range(1, n + 1))
    rng.shuffle(pts)
    k = rng.randint(0, n)
    seed = [pts[:k][i::2] for i in range(2)] if k else []
    partition = congruence_closure(gens, seed, n)
    theta, phi = theta_phi_congruence(partition, gens)
    return gens, theta, phi, "congruence"


@pytest.fixture
def rng():
    return random.Random(20240117)


# one line per acceptance criterion, filled in by test_acceptance.py
CRITERIA: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        terminalreporter.write_line(CRITERIA[n])
