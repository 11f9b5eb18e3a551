from pathlib import Path

import pytest

from facelattice.incidence import parse_incidence
from facelattice.oracle import gen_cross, gen_cube, gen_cyclic, gen_simplex

DATA = Path(__file__).parent / "data"

FIXTURES = ["pentagon", "segment", "prism", "pyramid", "dodecahedron"]


def load(name: str):
    return parse_incidence((DATA / f"{name}.inc").read_text())


def oracle_instances():
    """Every instance the exhaustive oracle comparisons run on: name -> structure."""
    out = {}
    for d in (1, 2, 3):
        out[f"simplex{d}"] = gen_simplex(d)
        out[f"cube{d}"] = gen_cube(d)
        out[f"cross{d}"] = gen_cross(d)
    for d in range(2, 8):
        for n in range(d + 1, 9):
            out[f"cyclic{d}_{n}"] = gen_cyclic(d, n)
    for name in FIXTURES:
        out[name] = load(name)
    return out


INSTANCES = oracle_instances()


@pytest.fixture
def square():
    return load("square")


@pytest.fixture
def triangle():
    return load("triangle")


@pytest.fixture(scope="session")
def cube3():
    return gen_cube(3)
