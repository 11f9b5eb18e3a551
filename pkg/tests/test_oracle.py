import pytest

from facelattice.incidence import IncidenceStructure, dualize
from facelattice.oracle import (brute_force_faces, brute_force_hasse, gale_evenness,
                                gen_cross, gen_cube, gen_cyclic, gen_simplex, oracle_diagram)

from conftest import INSTANCES


@pytest.mark.parametrize("d", range(1, 5))
def test_generator_counts(d):
    assert len(brute_force_faces(gen_cube(d))) == 3 ** d + 1
    assert len(brute_force_faces(gen_cross(d))) == 3 ** d + 1
    assert len(brute_force_faces(gen_simplex(d))) == 2 ** (d + 1)


def test_generator_shapes():
    cube = gen_cube(3)
    assert (cube.m, cube.n, cube.alpha) == (6, 8, 24)
    assert cube.rows[0] == (0, 2, 4, 6) and cube.rows[1] == (1, 3, 5, 7)
    assert gen_simplex(2).rows == ((1, 2), (0, 2), (0, 1))
    assert gen_cross(2).m == 4


@pytest.mark.parametrize("d, n, m", [(2, 5, 5), (4, 8, 20), (3, 5, 6), (3, 6, 8)])
def test_cyclic_facet_counts(d, n, m):
    assert gen_cyclic(d, n).m == m


def test_gale_evenness():
    assert gale_evenness((0, 1, 2), 5)
    assert gale_evenness((1, 2, 3, 4), 8)
    assert not gale_evenness((0, 1, 3), 5)


@pytest.mark.parametrize("args", [(0,), (17,), ("3",)])
def test_generator_rejects_bad_dimension(args):
    with pytest.raises(ValueError):
        gen_cube(*args)


def test_cyclic_rejects_bad_parameters():
    with pytest.raises(ValueError):
        gen_cyclic(3, 3)
    with pytest.raises(ValueError):
        gen_cyclic(1, 4)


def test_segment_hasse():
    D = oracle_diagram(INSTANCES["segment"])
    assert (len(D), D.num_arcs) == (4, 4)
    assert D.dims[D.top] == 1


@pytest.mark.parametrize("name", ["cube3", "pyramid", "cyclic3_6", "prism"])
def test_both_enumeration_sides_agree(name):
    # m < n enumerates facet subsets; the dual enumerates vertex subsets
    inc = INSTANCES[name]
    dual = brute_force_faces(dualize(inc))
    A = inc.to_matrix()
    back = {frozenset(v for v in range(inc.n) if all(A[f][v] for f in T)) for T in dual}
    assert back == brute_force_faces(inc)


def test_hasse_from_explicit_poset():
    D = brute_force_hasse([[], [0], [1], [0, 1]], 2)
    assert sorted(D.dims) == [-1, 0, 0, 1]
    assert D.num_arcs == 4


def test_oracle_size_limit():
    simplex20 = IncidenceStructure.from_rows(
        [[v for v in range(21) if v != f] for f in range(21)], 21)
    with pytest.raises(ValueError, match="refused"):
        brute_force_faces(simplex20)
