"""Finite inverse semigroups, left cancellative categories and zigzag maps."""

from .category import FiniteCategory, load_cat, parse_cat
from .errors import AxiomError, InputError, ParseError, SizeCapError, ZigzagError
from .graphs import DirectedGraph, graph_inverse_semigroup, path_category_of_graph
from .morita import im_construction
from .paths import path_category, theta_check
from .pbij import GroundSet, PartialBijection, compose, inverse
from .semigroup import FiniteInverseSemigroup, eggbox, generate
from .zm import s_of_c, zm

__version__ = "0.1.0"

__all__ = [
    "AxiomError",
    "DirectedGraph",
    "FiniteCategory",
    "FiniteInverseSemigroup",
    "GroundSet",
    "InputError",
    "ParseError",
    "PartialBijection",
    "SizeCapError",
    "ZigzagError",
    "compose",
    "eggbox",
    "generate",
    "graph_inverse_semigroup",
    "im_construction",
    "inverse",
    "load_cat",
    "parse_cat",
    "path_category",
    "path_category_of_graph",
    "s_of_c",
    "theta_check",
    "zm",
]
