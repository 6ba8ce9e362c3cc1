"""
Verification runs: structure predictions against brute force.

Each run yields one OracleReport per check. Case ``k`` of a run with base
seed ``s`` draws everything from ``random.Random(s + k)``, so a
mismatching case can be replayed alone from its recorded seed.
"""
from __future__ import annotations

import logging
import random
from typing import Callable, Iterator, Optional, Sequence

from ..centralizers.describe import centralizer_finite, centralizer_infinite
from ..centralizers.free import decompose_centralizing
from ..centralizers.gamma import GammaGraph, gamma
from ..core.conjugacy import conjugator
from ..core.element import Element, conjugate, cycle_type
from ..core.logger import ReportLogger
from ..core.points import RayPoint
from ..models.config import OracleConfig
from ..models.results import OracleReport, OracleSummary
from .box import (
    Box,
    brute_centralizer_order,
    brute_centralizing_elements,
    brute_conjugate,
    predicted_finite_centralizer_count,
    predicted_truncated_order,
)
from .cases import random_finite_order_pair, random_finite_subgroup, random_infinite_element

logger = logging.getLogger(__name__)

Run = Callable[..., Iterator[OracleReport]]


def verify_centralizer_orders(
    cases: int,
    seed: int = 0,
    config: Optional[OracleConfig] = None,
    arities: Sequence[int] = (2, 3),
) -> Iterator[OracleReport]:
    """|C(Q)| on the box against (#fixed)! times the wreath factor orders."""
    config = config or OracleConfig()
    for case in range(cases):
        case_seed = seed + case
        rng = random.Random(case_seed)
        n = rng.choice(arities)
        box = Box(depth=config.box_depth, n=n)
        group = random_finite_subgroup(rng, n, config.box_depth)
        logger.debug("case %d: |Q| = %d on %d points", case_seed, group.order, len(group.support))
        yield OracleReport.compare(
            case_seed,
            brute_centralizer_order(group, box, config),
            predicted_truncated_order(centralizer_finite(group), group, box),
        )


def _conjugator_verdict(q1: Element, q2: Element) -> object:
    h = conjugator(q1, q2)
    if h is None:
        return False
    if conjugate(q1, h) == q2:
        return True
    return {"bad_conjugator": h.to_json()}


def verify_conjugacy(
    cases: int,
    seed: int = 0,
    config: Optional[OracleConfig] = None,
    box: Optional[Box] = None,
) -> Iterator[OracleReport]:
    """
    Box conjugacy against cycle-type equality and against the constructed
    conjugator, which must verify whenever it is returned.

    The default box is 2 x (enumeration_limit // 2) whatever ``box_depth``
    says; ``box_depth`` sizes the centralizer runs only.
    """
    config = config or OracleConfig()
    box = box or Box(depth=config.enumeration_limit // 2, n=2)
    for case in range(cases):
        case_seed = seed + case
        q1, q2 = random_finite_order_pair(random.Random(case_seed), box)
        brute = brute_conjugate(q1, q2, box, config)
        yield OracleReport.compare(case_seed, brute, cycle_type(q1) == cycle_type(q2), kind="cycle_type")
        yield OracleReport.compare(case_seed, brute, _conjugator_verdict(q1, q2), kind="conjugator")


def _box_for(n: int, config: OracleConfig) -> Box:
    return Box(depth=max(1, min(config.box_depth, config.enumeration_limit // n)), n=n)


def _decomposes(c: Element, q: Element, graph: GammaGraph, allowed: frozenset[RayPoint]) -> bool:
    decomposition = decompose_centralizing(c, q, graph)
    return (
        not any(decomposition.exponents)
        and decomposition.reconstruct() == c
        and set(decomposition.residual.moved_points()) <= allowed
    )


def verify_infinite_centralizers(
    cases: int,
    seed: int = 0,
    config: Optional[OracleConfig] = None,
    arities: Sequence[int] = (2, 3, 4),
) -> Iterator[OracleReport]:
    """
    Box-supported elements commuting with a random infinite-order q: their
    number against the predicted count, and how many of them decompose with
    zero free exponents into the restricted and wreath factors.
    """
    config = config or OracleConfig()
    for case in range(cases):
        case_seed = seed + case
        rng = random.Random(case_seed)
        n = rng.choice(arities)
        box = _box_for(n, config)
        q = random_infinite_element(rng, n, box.depth)
        graph = gamma(q)
        desc = centralizer_infinite(q)
        found = brute_centralizing_elements(q, box, config)
        yield OracleReport.compare(
            case_seed,
            len(found),
            predicted_finite_centralizer_count(desc, box),
            kind="finite_centralizer_count",
        )
        allowed = frozenset(p for p in box.points() if desc.embedding.is_fixed(p)) | frozenset(
            p for factor in desc.wreath for p in factor.points
        )
        yield OracleReport.compare(
            case_seed,
            len(found),
            sum(1 for c in found if _decomposes(c, q, graph, allowed)),
            kind="reconstruction",
        )


RUNS: dict[str, Run] = {
    "centralizer_order": verify_centralizer_orders,
    "conjugacy": verify_conjugacy,
    "infinite_centralizer": verify_infinite_centralizers,
}


def run_verification(
    kinds: Sequence[str],
    cases: int,
    seed: int,
    config: Optional[OracleConfig] = None,
    reports: Optional[ReportLogger] = None,
) -> OracleSummary:
    """
    Run the named checks in order, recording every report and summarizing
    the outcome.

    Raises:
        KeyError: for an unknown run name
    """
    summary = OracleSummary()
    for kind in kinds:
        run = RUNS[kind]
        logger.info("oracle run %s: %d cases from seed %d", kind, cases, seed)
        for report in run(cases, seed, config):
            summary.record_report(report)
            if reports is not None:
                reports.record(report)
    logger.info(summary.summary())
    return summary
