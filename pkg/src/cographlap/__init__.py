"""Exact Laplacian eigenvalue location and twin machinery for cographs.

The package works on cotrees, the canonical tree representations of
cographs.  Core entry points:

* :func:`parse` / :func:`render` move between cotree expressions like
  ``"J(U(3),U(J(3),1))"`` and tree objects; :func:`from_graph` /
  :func:`to_graph` move between trees and adjacency structures.
* :func:`count_relative` counts Laplacian eigenvalues above, at, and
  below any rational point in one linear pass; :func:`spectrum` returns
  the full (integral) spectrum.
* :func:`twin_partition`, :func:`reduction` and :func:`are_equivalent`
  expose the twin-class structure, and :func:`verify_shared_bound`
  counts the eigenvalues an equivalent pair is guaranteed to share.
* :func:`cospectral_pair` / :func:`cospectral_family` build verified
  L-cospectral nonisomorphic cograph pairs of every odd order >= 7.

The :mod:`cographlap.oracle` submodule holds the independent dense
checkers used by the test suite; it is not imported here to keep the
base import light.
"""

from .graph import (
    Graph,
    LoopEdgeError,
    complement,
    components,
    disjoint_union,
    format_edge_text,
    from_edge_list,
    induced_subgraph,
    join,
    parse_edge_text,
)
from .cotree import (
    Cotree,
    CotreeParseError,
    EmptyNodeError,
    Inner,
    JOIN,
    Leaf,
    NotACographError,
    UNION,
    canonical_form,
    canonical_leaf_order,
    depth,
    from_graph,
    is_normalized,
    leaf_count,
    leaf_degrees,
    leaves,
    normalize,
    parse,
    random_cotree,
    render,
    to_graph,
)
from .diagonalize import (
    FastPathPreconditionError,
    InertiaCount,
    IntegralityError,
    batch_equal_join,
    batch_equal_union,
    count_relative,
    diagonalize,
    spectrum,
)
from .twins import (
    CLIQUE,
    COCLIQUE,
    EquivalenceMatch,
    ReductionProfile,
    SINGLETON,
    SameLeafError,
    TwinClass,
    TwinPartition,
    are_equivalent,
    equivalent_edits,
    lca_distance,
    reduction,
    twin_partition,
    twin_partition_from_cotree,
)
from .analysis import (
    ClassEigenvalue,
    NotEquivalentError,
    RelationViolatedError,
    SharedSpectrumReport,
    common_spectrum,
    degree_relation_checks,
    find_cospectral_nonisomorphic,
    twin_class_eigenvalues,
    verify_shared_bound,
)
from .families import (
    CospectralPair,
    MissingZeroError,
    NTooSmallError,
    OrderMismatchError,
    VerificationFailedError,
    build_g,
    build_h,
    cospectral_family,
    cospectral_pair,
    family_spectrum,
    join_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "Graph", "LoopEdgeError", "complement", "components", "disjoint_union",
    "format_edge_text", "from_edge_list", "induced_subgraph", "join",
    "parse_edge_text",
    "Cotree", "CotreeParseError", "EmptyNodeError", "Inner", "JOIN", "Leaf",
    "NotACographError", "UNION", "canonical_form", "canonical_leaf_order",
    "depth", "from_graph", "is_normalized", "leaf_count", "leaf_degrees",
    "leaves", "normalize", "parse", "random_cotree", "render", "to_graph",
    "FastPathPreconditionError", "InertiaCount", "IntegralityError",
    "batch_equal_join", "batch_equal_union", "count_relative", "diagonalize",
    "spectrum",
    "CLIQUE", "COCLIQUE", "EquivalenceMatch", "ReductionProfile", "SINGLETON",
    "SameLeafError", "TwinClass", "TwinPartition", "are_equivalent",
    "equivalent_edits", "lca_distance", "reduction", "twin_partition",
    "twin_partition_from_cotree",
    "ClassEigenvalue", "NotEquivalentError", "RelationViolatedError",
    "SharedSpectrumReport", "common_spectrum", "degree_relation_checks",
    "find_cospectral_nonisomorphic", "twin_class_eigenvalues",
    "verify_shared_bound",
    "CospectralPair", "MissingZeroError", "NTooSmallError",
    "OrderMismatchError", "VerificationFailedError", "build_g", "build_h",
    "cospectral_family", "cospectral_pair", "family_spectrum", "join_spectrum",
    "__version__",
]
