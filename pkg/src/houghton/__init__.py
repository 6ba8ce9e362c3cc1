"""
Houghton: centralizers, conjugacy and Brown's complex for Houghton's groups.

Exact, deterministic computations in H_n (permutations of n rays of
naturals that are eventually translations), with an independent
brute-force oracle on finite truncations.
"""

from __future__ import annotations

from .core import (
    RayPoint,
    Element,
    CycleType,
    INFINITE,
    compose,
    invert,
    phi,
    power,
    conjugate,
    commutes,
    cycle_type,
    order,
    conjugator,
    are_conjugate,
    ReportLogger,
)
from .exceptions import (
    HoughtonException,
    ValidationError,
    ArityMismatchError,
    InfiniteOrderError,
    FiniteOrderError,
    CapExceededError,
    NotASubgroupError,
    NotNormalizedError,
    NotCentralizingError,
    UnknownComponentError,
    NotFixedError,
    SupportEscapesBoxError,
    ReportError,
    ConfigurationError,
    InternalInvariantError,
    ErrorCodes,
)
from .models import (
    GroupConfig,
    GammaConfig,
    BrownConfig,
    OracleConfig,
    LoggingConfig,
    ToolkitConfig,
    CommandStatus,
    CommandResult,
    OracleReport,
    OracleSummary,
)
from .groups import (
    FiniteSubgroup,
    closure,
    isotropy,
    partition,
    weyl,
)
from .centralizers import (
    CentralizerDescription,
    GammaGraph,
    gamma,
    component_generator,
    centralizer_finite,
    centralizer_infinite,
    centralizer_vc,
    decompose_centralizing,
    centralizes,
    quasi_ufp0_witnesses,
)
from .brown import (
    InjectiveMonoidMap,
    TranslationWord,
    mcompose,
    le,
    le_witness,
    stabilizer_order,
    q_fixed_vertex,
    upper_bound,
    infinite_obstruction,
)

__version__ = "0.1.0"
__all__ = [
    # Elements and conjugacy
    "RayPoint",
    "Element",
    "CycleType",
    "INFINITE",
    "compose",
    "invert",
    "phi",
    "power",
    "conjugate",
    "commutes",
    "cycle_type",
    "order",
    "conjugator",
    "are_conjugate",
    "ReportLogger",
    # Exception hierarchy
    "HoughtonException",
    "ValidationError",
    "ArityMismatchError",
    "InfiniteOrderError",
    "FiniteOrderError",
    "CapExceededError",
    "NotASubgroupError",
    "NotNormalizedError",
    "NotCentralizingError",
    "UnknownComponentError",
    "NotFixedError",
    "SupportEscapesBoxError",
    "ReportError",
    "ConfigurationError",
    "InternalInvariantError",
    "ErrorCodes",
    # Configuration and result models
    "GroupConfig",
    "GammaConfig",
    "BrownConfig",
    "OracleConfig",
    "LoggingConfig",
    "ToolkitConfig",
    "CommandStatus",
    "CommandResult",
    "OracleReport",
    "OracleSummary",
    # Finite subgroups
    "FiniteSubgroup",
    "closure",
    "isotropy",
    "partition",
    "weyl",
    # Centralizers
    "CentralizerDescription",
    "GammaGraph",
    "gamma",
    "component_generator",
    "centralizer_finite",
    "centralizer_infinite",
    "centralizer_vc",
    "decompose_centralizing",
    "centralizes",
    "quasi_ufp0_witnesses",
    # Brown's complex
    "InjectiveMonoidMap",
    "TranslationWord",
    "mcompose",
    "le",
    "le_witness",
    "stabilizer_order",
    "q_fixed_vertex",
    "upper_bound",
    "infinite_obstruction",
]
