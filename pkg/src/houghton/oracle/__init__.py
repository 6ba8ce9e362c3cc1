"""
Independent brute-force oracle on finite truncations of S, with seeded
random cases and verification runs.
"""

from .box import (
    Box,
    box_permutation,
    brute_centralizer_order,
    brute_centralizing_elements,
    brute_conjugate,
    predicted_finite_centralizer_count,
    predicted_truncated_order,
)
from .cases import (
    random_box_permutation,
    random_finite_order_pair,
    random_finite_subgroup,
    random_infinite_element,
    random_permutation,
    random_vertex,
)
from .verify import (
    RUNS,
    run_verification,
    verify_centralizer_orders,
    verify_conjugacy,
    verify_infinite_centralizers,
)

__all__ = [
    "Box",
    "box_permutation",
    "brute_centralizer_order",
    "brute_centralizing_elements",
    "brute_conjugate",
    "predicted_finite_centralizer_count",
    "predicted_truncated_order",
    "random_box_permutation",
    "random_finite_order_pair",
    "random_finite_subgroup",
    "random_infinite_element",
    "random_permutation",
    "random_vertex",
    "RUNS",
    "run_verification",
    "verify_centralizer_orders",
    "verify_conjugacy",
    "verify_infinite_centralizers",
]
