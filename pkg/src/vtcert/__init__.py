"""Construct Cayley, bi-Cayley, coset and product graphs and certify vertex-transitive non-Cayley graphs."""
from .aut import (are_isomorphic, automorphism_group, edge_orbits, equitable_partition,
                  is_arc_transitive, is_edge_transitive, is_vertex_transitive)
from .certify import (Certificate, Check, RunConfig, certify_exceptional, certify_family,
                      certify_graph, emit_report, solve_t)
from .graph import (BiCayLabeling, ConstructionError, Graph, IdentityInL, bicayley, cayley,
                    coset_graph, generalized_petersen, lexicographic, line_graph, named, x_m1m2t)
from .groups import (FiniteGroup, aut_cyclic_stabilizing, cyclic, dihedral, direct_product,
                     frobenius_3p, regular_representation)
from .perm import CapExceeded, OrbitPartition, PermGroup, Permutation
from .structure import (CayleyVerdict, Status, cyclic_normality_diagnostic,
                        find_regular_subgroup, find_semiregular_two_orbits, induced_subgraph,
                        is_cayley, is_metacirculant, quotient_graph)

__version__ = "0.1.0"

__all__ = [
    "BiCayLabeling",
    "CapExceeded",
    "CayleyVerdict",
    "Certificate",
    "Check",
    "ConstructionError",
    "FiniteGroup",
    "Graph",
    "IdentityInL",
    "OrbitPartition",
    "PermGroup",
    "Permutation",
    "RunConfig",
    "Status",
    "are_isomorphic",
    "aut_cyclic_stabilizing",
    "automorphism_group",
    "bicayley",
    "cayley",
    "certify_exceptional",
    "certify_family",
    "certify_graph",
    "coset_graph",
    "cyclic",
    "cyclic_normality_diagnostic",
    "dihedral",
    "direct_product",
    "edge_orbits",
    "emit_report",
    "equitable_partition",
    "find_regular_subgroup",
    "find_semiregular_two_orbits",
    "frobenius_3p",
    "generalized_petersen",
    "induced_subgraph",
    "is_arc_transitive",
    "is_cayley",
    "is_edge_transitive",
    "is_metacirculant",
    "is_vertex_transitive",
    "lexicographic",
    "line_graph",
    "named",
    "quotient_graph",
    "regular_representation",
    "solve_t",
    "x_m1m2t",
]
