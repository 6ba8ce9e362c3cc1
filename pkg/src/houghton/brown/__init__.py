"""
Brown's monoid of injective eventually-translation maps and its poset.
"""

from .monoid import (
    InjectiveMonoidMap,
    TranslationWord,
    Vertex,
    as_vertex,
    chain_stabilizer_order,
    cone,
    cone_from_json,
    cone_to_dot,
    cone_to_json,
    infinite_obstruction,
    is_chain,
    is_fixed,
    le,
    le_witness,
    mcompose,
    q_fixed_vertex,
    right_act,
    stabilizer_order,
    translation,
    upper_bound,
)

__all__ = [
    "InjectiveMonoidMap",
    "TranslationWord",
    "Vertex",
    "as_vertex",
    "chain_stabilizer_order",
    "cone",
    "cone_from_json",
    "cone_to_dot",
    "cone_to_json",
    "infinite_obstruction",
    "is_chain",
    "is_fixed",
    "le",
    "le_witness",
    "mcompose",
    "q_fixed_vertex",
    "right_act",
    "stabilizer_order",
    "translation",
    "upper_bound",
]
