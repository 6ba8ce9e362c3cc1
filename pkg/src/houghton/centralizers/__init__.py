"""
Centralizers in H_n: Γ-graphs, free generators, fixed-set embeddings and
direct-product descriptions.
"""

from .gamma import (
    GammaEdge,
    GammaGraph,
    Lane,
    LaneIndex,
    component_generator,
    gamma,
    trace_lanes,
    verify_witness,
)
from .free import (
    CentralizingDecomposition,
    FreeGenerator,
    decompose_centralizing,
    primitive_generators,
)
from .embedding import FixedSetEmbedding
from .describe import (
    CentralizerDescription,
    CentralizerSummary,
    FPLabel,
    WreathFactor,
    centralizer_finite,
    centralizer_infinite,
    centralizer_vc,
    centralizes,
    cycle_wreaths,
    quasi_ufp0_witnesses,
    subgroup_wreaths,
)

__all__ = [
    "GammaEdge",
    "GammaGraph",
    "Lane",
    "LaneIndex",
    "component_generator",
    "gamma",
    "trace_lanes",
    "verify_witness",
    "CentralizingDecomposition",
    "FreeGenerator",
    "decompose_centralizing",
    "primitive_generators",
    "FixedSetEmbedding",
    "CentralizerDescription",
    "CentralizerSummary",
    "FPLabel",
    "WreathFactor",
    "centralizer_finite",
    "centralizer_infinite",
    "centralizer_vc",
    "centralizes",
    "cycle_wreaths",
    "quasi_ufp0_witnesses",
    "subgroup_wreaths",
]
