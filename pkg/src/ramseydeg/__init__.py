"""Exact Ramsey degrees of small n-colorable and n-chromatic graphs."""

__version__ = "0.1.0"

from .structures import (
    ColoringOfCopies,
    Graph,
    OrderedColoredGraph,
    complete_graph,
    complete_multipartite,
    contains_clique,
    cycle_graph,
    empty_graph,
    is_monotone,
    is_proper_coloring,
    make_graph,
    path_graph,
)
from .canonical import (
    are_isomorphic,
    automorphism_group,
    canonical_form,
    ordered_colored_isomorphic,
)
from .classes import ClassSpec, chromatic_number, enumerate_members, is_member
from .degrees import (
    ExtensionCatalog,
    aut_degree,
    elementary_report,
    enumerate_extensions_monotone,
    enumerate_extensions_ordered,
    sigma,
    tau,
    tau_burnside,
)
from .arrows import (
    ArrowQuery,
    ArrowResult,
    arrow_check,
    build_gadget_Y,
    empirical_degree,
    enumerate_copies,
    extension_type_coloring,
    is_convex_classes,
    monotone_reorder,
    order_relation_per_class,
    recolor_embed_check,
    simultaneous_arrow_check,
)

__all__ = [
    "__version__",
    "ColoringOfCopies",
    "Graph",
    "OrderedColoredGraph",
    "complete_graph",
    "complete_multipartite",
    "contains_clique",
    "cycle_graph",
    "empty_graph",
    "is_monotone",
    "is_proper_coloring",
    "make_graph",
    "path_graph",
    "are_isomorphic",
    "automorphism_group",
    "canonical_form",
    "ordered_colored_isomorphic",
    "ExtensionCatalog",
    "aut_degree",
    "elementary_report",
    "enumerate_extensions_monotone",
    "enumerate_extensions_ordered",
    "sigma",
    "tau",
    "tau_burnside",
    "ArrowQuery",
    "ArrowResult",
    "arrow_check",
    "build_gadget_Y",
    "empirical_degree",
    "enumerate_copies",
    "extension_type_coloring",
    "is_convex_classes",
    "monotone_reorder",
    "order_relation_per_class",
    "recolor_embed_check",
    "simultaneous_arrow_check",
    "ClassSpec",
    "chromatic_number",
    "enumerate_members",
    "is_member",
]
