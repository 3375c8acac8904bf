"""Exact-arithmetic twisted strong and weak Bruhat orders on affine Weyl
groups, with the rank-2 alcove order worked in closed form, a (2,3,inf)
Coxeter backend, and the tope poset of the affine oriented matroid."""

from .finite import CartanDatum, WeylElement, build_system
from .affine_group import (
    AffineWeylElement,
    from_word,
    identity,
    inversion_set,
    reflection,
    simple_reflections,
    translation,
)
from .biclosed import (
    BiclosedSet,
    dot_action,
    empty_biclosed,
    format_biclosed,
    from_inversion_set,
    full_positive_biclosed,
    parse_biclosed,
)
from .orders import (
    covers,
    downset_corank,
    interval,
    lower_covers,
    strong_leq,
    twisted_length_left,
    twisted_length_right,
    upper_covers,
    weak_chain,
    weak_leq,
)
from .poset import GradedPoset, PosetEdge, PosetNode

__version__ = "0.1.0"

__all__ = [
    "AffineWeylElement",
    "BiclosedSet",
    "CartanDatum",
    "GradedPoset",
    "PosetEdge",
    "PosetNode",
    "WeylElement",
    "build_system",
    "covers",
    "dot_action",
    "downset_corank",
    "empty_biclosed",
    "format_biclosed",
    "from_inversion_set",
    "from_word",
    "full_positive_biclosed",
    "identity",
    "interval",
    "inversion_set",
    "lower_covers",
    "parse_biclosed",
    "reflection",
    "simple_reflections",
    "strong_leq",
    "translation",
    "twisted_length_left",
    "twisted_length_right",
    "upper_covers",
    "weak_chain",
    "weak_leq",
]
