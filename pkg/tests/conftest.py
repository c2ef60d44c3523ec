import random
from pathlib import Path

import pytest

from trisect import connected_sum, slide_family, stabilize, standard_diagram
from trisect.diagrams import FAMILY_NAMES
from trisect.words import token_code

FIXTURES = Path(__file__).parent / "fixtures"

# name -> diagram builder; the connected sum rounds out the known-manifold suite
LIBRARY_BUILDERS = {
    "S4": lambda: standard_diagram("S4"),
    "CP2": lambda: standard_diagram("CP2"),
    "CP2BAR": lambda: standard_diagram("CP2BAR"),
    "S1xS3": lambda: standard_diagram("S1xS3"),
    "S2xS2": lambda: standard_diagram("S2xS2"),
    "CP2+CP2BAR": lambda: connected_sum(standard_diagram("CP2"), standard_diagram("CP2BAR")),
}


@pytest.fixture(scope="session")
def library():
    return {name: build() for name, build in LIBRARY_BUILDERS.items()}


def random_move_sequence(d, rng: random.Random, max_moves: int = 10):
    """Apply 1..max_moves random slides/stabilizations.

    Returns (diagram, stabilizations-per-family).  Slides need at least two
    curves, so genus <= 1 diagrams always stabilize first.
    """
    stabs = dict.fromkeys(FAMILY_NAMES, 0)
    for _ in range(rng.randint(1, max_moves)):
        if d.genus < 2 or rng.random() < 0.25:
            fam = rng.choice(FAMILY_NAMES)
            d = stabilize(d, fam)
            stabs[fam] += 1
        else:
            fam = rng.choice(FAMILY_NAMES)
            i, j = rng.sample(range(d.genus), 2)
            conj = tuple(
                rng.choice((1, -1)) * token_code(rng.choice("ab"), rng.randint(1, d.genus))
                for _ in range(rng.randint(0, 2))
            )
            d = slide_family(d, fam, i, j, conj, rng.choice((1, -1)))
    return d, stabs


@pytest.fixture
def move_engine():
    return random_move_sequence
