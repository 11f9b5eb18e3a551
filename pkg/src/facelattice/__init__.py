"""Output-sensitive construction of polytope face lattices from incidences."""
from .closure import closure, facets_of, intersect_sorted, vertices_of
from .diagram import HasseDiagram
from .enumeration import (ContractViolation, ValidationFailed, build_face_lattice,
                          candidates, f_vector, minimal_faces)
from .facetree import FaceTree, canonical_spanning_set, locate_or_create
from .incidence import (IncidenceError, IncidenceStructure, dualize, parse_incidence,
                        serialize, validate)
from .om import (TOP, SignVector, build_covector_lattice, canonical_index_set, compose,
                 join_covectors, parse_cocircuits, separation_set)
from .variants import (build_k_skeleton, build_simple_lattice, build_simplicial_lattice,
                       canonical_facet, enumerate_faces_dfs, polytope_dimension,
                       polytope_graph, simple_dimension, simplicial_dimension)

__all__ = [
    "ContractViolation", "FaceTree", "HasseDiagram", "IncidenceError",
    "IncidenceStructure", "SignVector", "TOP", "ValidationFailed",
    "build_covector_lattice", "build_face_lattice", "build_k_skeleton",
    "build_simple_lattice", "build_simplicial_lattice", "candidates",
    "canonical_facet", "canonical_index_set", "canonical_spanning_set",
    "closure", "compose", "dualize", "enumerate_faces_dfs", "f_vector",
    "facets_of", "intersect_sorted", "join_covectors", "locate_or_create",
    "minimal_faces", "parse_cocircuits", "parse_incidence", "polytope_dimension",
    "polytope_graph", "separation_set", "serialize", "simple_dimension",
    "simplicial_dimension", "validate", "vertices_of",
]
