"""Decide whether the limit of a graph-shaped diagram of finite sets is
empty, in time linear in the shape and parameterized by set width and
feedback vertex number."""

from .graphs import (
    SimpleGraph,
    VertexSet,
    components,
    find_cycle,
    fvs_exact,
    is_forest,
    remove_vertices,
)
from .finset import FinFn, FinSetObj, compose, image
from .diagram import (
    CoDecomposition,
    Restriction,
    SubMask,
    Verdict,
    as_subdiagram,
    check_leg_closure,
    filter_edge,
    glue,
    restrict_to_subgraph,
    validate,
)
from .solver import (
    InLimResult,
    SectionAssignment,
    SectionTest,
    Witness,
    discrete_inlim,
    extract_witness,
    forest_initial,
    image_tree,
    inlim,
    section_tests,
    witness_violations,
)
from .oracle import CapExceeded, brute_image, enumerate_limit, pullback_limit
from .cset import (
    CSet,
    CSetCoDecomposition,
    FinCat,
    cset_inlim,
    pointwise_slice,
    validate_cset,
    validate_cset_codecomp,
    validate_fincat,
)
from .hom import (
    BagDecomposition,
    HomSet,
    build_hom_codecomp,
    find_homomorphism,
    hom_exists,
    hom_set,
    validate_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "BagDecomposition",
    "CapExceeded",
    "CoDecomposition",
    "CSet",
    "CSetCoDecomposition",
    "FinCat",
    "FinFn",
    "FinSetObj",
    "HomSet",
    "InLimResult",
    "Restriction",
    "SectionAssignment",
    "SectionTest",
    "SimpleGraph",
    "SubMask",
    "Verdict",
    "VertexSet",
    "Witness",
    "as_subdiagram",
    "brute_image",
    "build_hom_codecomp",
    "check_leg_closure",
    "components",
    "compose",
    "cset_inlim",
    "discrete_inlim",
    "enumerate_limit",
    "extract_witness",
    "filter_edge",
    "find_cycle",
    "find_homomorphism",
    "forest_initial",
    "fvs_exact",
    "glue",
    "hom_exists",
    "hom_set",
    "image",
    "image_tree",
    "inlim",
    "is_forest",
    "pointwise_slice",
    "pullback_limit",
    "remove_vertices",
    "restrict_to_subgraph",
    "section_tests",
    "validate",
    "validate_cset",
    "validate_cset_codecomp",
    "validate_decomposition",
    "validate_fincat",
    "witness_violations",
]
