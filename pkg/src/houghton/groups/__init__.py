"""
Finite subgroups of H_n: closure, isotropy, partitions and Weyl groups.
"""

from .finite import (
    FiniteSubgroup,
    PermutationTable,
    closure,
    conjugating_element,
    is_subgroup,
    isotropy,
    normalizer,
    orbits,
)
from .partition import (
    ClassSummary,
    IsotropyClass,
    IsotropyPartition,
    PartitionSummary,
    WeylGroup,
    class_witness,
    partition,
    weyl,
)

__all__ = [
    "FiniteSubgroup",
    "PermutationTable",
    "closure",
    "conjugating_element",
    "is_subgroup",
    "isotropy",
    "normalizer",
    "orbits",
    "ClassSummary",
    "IsotropyClass",
    "IsotropyPartition",
    "PartitionSummary",
    "WeylGroup",
    "class_witness",
    "partition",
    "weyl",
]
