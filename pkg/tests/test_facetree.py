from itertools import combinations

import pytest

from facelattice.bits import to_mask
from facelattice.closure import closure
from facelattice.enumeration import build_face_lattice
from facelattice.facetree import FaceTree, canonical_spanning_set, locate_or_create
from facelattice.oracle import brute_force_faces, gen_cube

from conftest import INSTANCES


def test_spanning_set_examples(square):
    assert canonical_spanning_set(square, range(4)) == (0, 1, 2)
    assert canonical_spanning_set(square, [0, 1]) == (0, 1)
    assert canonical_spanning_set(square, [2]) == (2,)
    assert canonical_spanning_set(gen_cube(3), range(8)) == (0, 1, 2, 4)
    assert canonical_spanning_set(gen_cube(3), [0, 1, 2, 3]) == (0, 1, 2)


def test_spanning_set_rejects_empty_and_open_sets(square):
    with pytest.raises(ValueError, match="empty face"):
        canonical_spanning_set(square, [])
    with pytest.raises(ValueError, match="not closed"):
        canonical_spanning_set(square, [0, 1, 2])


@pytest.mark.parametrize("name", sorted(INSTANCES))
def test_spanning_sets_generate_and_are_distinct(name):
    inc = INSTANCES[name]
    keys = {}
    for face in brute_force_faces(inc) if inc.n <= 20 else ():
        if not face:
            continue
        key = canonical_spanning_set(inc, face)
        assert closure(inc, key) == tuple(sorted(face))
        keys[key] = face
    if inc.n <= 20:
        assert len(keys) == len(brute_force_faces(inc)) - 1


def growing(inc, seq):
    """Every element lies outside the closure of the ones before it."""
    return all(seq[j] not in closure(inc, seq[:j]) for j in range(1, len(seq)))


def smallest_generator(inc, target):
    return min(sub for r in range(1, len(target) + 1)
               for sub in combinations(target, r)
               if closure(inc, sub) == target and growing(inc, sub))


@pytest.mark.parametrize("name", sorted(n for n, i in INSTANCES.items() if i.n <= 12))
def test_spanning_set_is_lexicographically_minimal(name):
    inc = INSTANCES[name]
    for face in brute_force_faces(inc):
        if not face or len(face) > 8:
            continue
        assert canonical_spanning_set(inc, face) == smallest_generator(inc, tuple(sorted(face)))


def test_redundant_vertices_do_not_count_as_smaller():
    # (0, 1, 2, 3, 4) generates the cube and precedes (0, 1, 2, 4) as a word,
    # but 3 already lies in cl({0, 1, 2}).
    cube = gen_cube(3)
    assert closure(cube, (0, 1, 2, 3, 4)) == tuple(range(8))
    assert not growing(cube, (0, 1, 2, 3, 4))
    assert smallest_generator(cube, tuple(range(8))) == (0, 1, 2, 4)


@pytest.mark.parametrize("name", sorted(INSTANCES))
def test_spanning_set_size_bounded_by_dimension(name):
    D = build_face_lattice(INSTANCES[name])
    for node in range(len(D)):
        if D.faces[node]:
            assert len(canonical_spanning_set(D.inc, D.vertex_set(node))) <= D.dims[node] + 1


def test_tree_locate_or_create():
    tree = FaceTree()
    made = []

    def make():
        made.append(len(made))
        return made[-1]

    assert tree.locate_or_create([0, 1, 2], make) == (0, True)
    assert tree.locate_or_create([0, 1, 2], make) == (0, False)
    assert tree.size == 4 and tree.depth == 3
    # [0, 1] was created on the way to [0, 1, 2] and has no face yet
    assert tree.find([0, 1]) is None
    assert tree.locate_or_create([0, 1], make) == (1, True)
    assert tree.size == 4
    assert tree.find([0, 2]) is None
    assert tree.find([]) is None


def test_tree_labels_increase_along_paths():
    D = build_face_lattice(gen_cube(3), auto_dualize=False)
    for path, node in D.tree.walk():
        assert list(path) == sorted(path)
        assert node.depth == len(path)


def test_tree_depth_bounded():
    for name in ["cube3", "dodecahedron", "cyclic4_8"]:
        D = build_face_lattice(INSTANCES[name])
        assert D.tree.depth <= D.dim + 1


def test_locate_or_create_module_helper(square):
    tree = FaceTree()
    ref, created = locate_or_create(tree, square, [0, 1], lambda: "edge")
    assert (ref, created) == ("edge", True)
    assert locate_or_create(tree, square, {1, 0}, lambda: "other") == ("edge", False)
    assert tree.find((0, 1)) == "edge"
    assert to_mask([0, 1]) == 3
