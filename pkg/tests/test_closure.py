import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from facelattice.bits import members, to_mask
from facelattice.closure import (KERNELS, BitsetKernel, WorkCounter, closure, facets_of,
                                 intersect_sorted, make_kernel, vertices_of)
from facelattice.incidence import dualize
from facelattice.oracle import gen_cube, gen_cyclic

from conftest import INSTANCES


def dense_closure(inc, S):
    A = inc.to_matrix()
    T = [f for f in range(inc.m) if all(A[f][v] for v in S)]
    return tuple(v for v in range(inc.n) if all(A[f][v] for f in T))


def test_intersect_sorted_examples():
    assert intersect_sorted((1, 3, 5, 7), (2, 3, 4, 7, 9)) == (3, 7)
    assert intersect_sorted((), (1, 2)) == ()
    assert intersect_sorted((1, 2), ()) == ()
    assert intersect_sorted((0, 1, 2), (0, 1, 2)) == (0, 1, 2)
    assert intersect_sorted((5,), (1, 2, 3)) == ()


@given(st.sets(st.integers(0, 60)), st.sets(st.integers(0, 60)))
def test_intersect_sorted_matches_sets(a, b):
    c = WorkCounter()
    got = intersect_sorted(sorted(a), sorted(b), c)
    assert got == tuple(sorted(a & b))
    assert c.touched == len(a) + len(b)


def test_square_primitives(square):
    assert facets_of(square, [0]) == (0, 3)
    assert facets_of(square, [0, 1]) == (0,)
    assert facets_of(square, [0, 2]) == ()
    assert facets_of(square, []) == (0, 1, 2, 3)
    assert vertices_of(square, [0]) == (0, 1)
    assert vertices_of(square, [0, 1]) == (1,)
    assert vertices_of(square, [0, 2]) == ()
    assert vertices_of(square, []) == (0, 1, 2, 3)
    assert closure(square, [0, 2]) == (0, 1, 2, 3)
    assert closure(square, [1]) == (1,)
    assert closure(square, []) == ()


@pytest.mark.parametrize("name", sorted(n for n, i in INSTANCES.items() if i.n <= 8))
def test_closure_laws_exhaustive(name):
    inc = INSTANCES[name]
    cl = {}
    for bits in range(1 << inc.n):
        S = members(bits)
        c = closure(inc, S)
        assert set(S) <= set(c)
        assert closure(inc, c) == c
        cl[bits] = to_mask(c)
    for a in range(1 << inc.n):
        for b in range(a, 1 << inc.n):
            if a & b == a:
                assert cl[a] & cl[b] == cl[a]


@pytest.mark.parametrize("name", sorted(n for n, i in INSTANCES.items() if i.n <= 12))
def test_closure_matches_dense_definition(name):
    inc = INSTANCES[name]
    rng = random.Random(7)
    subsets = [members(b) for b in range(1 << inc.n)] if inc.n <= 8 else \
        [tuple(sorted(rng.sample(range(inc.n), rng.randint(0, inc.n)))) for _ in range(300)]
    for S in subsets:
        assert closure(inc, S) == dense_closure(inc, S)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_closure_laws_random(data):
    d = data.draw(st.integers(2, 5))
    inc = gen_cyclic(d, data.draw(st.integers(d + 1, 10)))
    S = data.draw(st.sets(st.integers(0, inc.n - 1)))
    extra = data.draw(st.sets(st.integers(0, inc.n - 1)))
    c = closure(inc, S)
    assert set(S) <= set(c)
    assert closure(inc, c) == c
    assert set(c) <= set(closure(inc, S | extra))


@pytest.mark.parametrize("name", ["cube3", "cyclic4_8", "dodecahedron", "prism"])
def test_work_per_closure_is_linear_in_alpha(name):
    inc = INSTANCES[name]
    rng = random.Random(1)
    for _ in range(200):
        S = rng.sample(range(inc.n), rng.randint(0, inc.n))
        c = WorkCounter()
        closure(inc, S, c)
        assert c.touched <= 4 * inc.alpha + inc.n + inc.m


@pytest.mark.parametrize("kind", sorted(KERNELS))
def test_kernels_agree_with_reference(kind):
    for name in ["cube3", "cyclic3_7", "dodecahedron", "pyramid"]:
        inc = INSTANCES[name]
        k = make_kernel(inc, kind)
        rng = random.Random(3)
        for _ in range(200):
            S = rng.sample(range(inc.n), rng.randint(0, min(inc.n, 5)))
            T = k.facets(to_mask(S))
            assert k.facet_count(T) == len(facets_of(inc, S))
            assert members(k.closure(to_mask(S))) == closure(inc, S)
            if S:
                v = S[0]
                assert members(k.vertices(k.meet_vertex(k.facets(to_mask(S[1:])), v))) \
                    == closure(inc, S)


def test_bitset_column_scan_branch():
    # Facet sets larger than n are handled by scanning the columns.
    octa = dualize(gen_cube(4))
    k = BitsetKernel(octa)
    for T in list(combinations(range(16), 9))[:50] + [tuple(range(16))]:
        Tm = to_mask(T)
        assert members(k.vertices(Tm)) == vertices_of(octa, T)
        assert members(k.union_rows(Tm)) == tuple(sorted({v for f in T for v in octa.rows[f]}))


def test_unknown_kernel(square):
    with pytest.raises(ValueError, match="unknown kernel"):
        make_kernel(square, "dense")
