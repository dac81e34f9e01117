"""Camina pairs (G, Z(G)) on finite groups."""

from ._camina import (
    CaminaError,
    FiniteGroup,
    analyze,
    build_family,
    builtin_families,
    census,
    character_degrees,
    character_table,
    center_order,
    class_sizes,
    derived_order,
    element_order,
    exponent,
    group_from_cayley_table,
    group_from_generators,
    is_camina_group,
    load_corpus,
    nilpotency_class,
    run_cli,
)

__all__ = [
    "CaminaError",
    "FiniteGroup",
    "analyze",
    "build_family",
    "builtin_families",
    "census",
    "character_degrees",
    "character_table",
    "center_order",
    "class_sizes",
    "derived_order",
    "element_order",
    "exponent",
    "group_from_cayley_table",
    "group_from_generators",
    "is_camina_group",
    "load_corpus",
    "nilpotency_class",
    "run_cli",
]
