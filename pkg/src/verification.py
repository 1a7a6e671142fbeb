"""Property suites run by the ``verify`` command."""

import logging
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import List, Optional

from src.artubes import Tube, ar_sequences, build_tube, family_of
from src.config import Config
from src.grcompute import greedy_measure, module_ipf, oracle_measure
from src.models import ComponentClass, Ordering, TubeKind
from src.quiver import QuiverSpec, random_quiver, widest_extrema_report
from src.rhombic import (
    coray_init_failures,
    parallelogram_check,
    staircase_cmp,
    tiling_report,
    tube_discussion_checks,
    wf_cmp,
)
from src.strings import StringModule, classify, dual_string

logger = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    skipped: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def random_quivers(count: int, max_vertices: int, seed: int) -> list[QuiverSpec]:
    """Deterministic sample of valid orientations."""
    rng = random.Random(seed)
    return [random_quiver(rng, max_vertices) for _ in range(count)]


def _exceptional_tubes(q: QuiverSpec) -> list[Tube]:
    tubes = []
    for kind in (TubeKind.LEFT, TubeKind.RIGHT):
        rank = q.hooks.s if kind is TubeKind.LEFT else q.hooks.t
        tubes.append(build_tube(q, kind, Config.TUBE_DEPTH_FACTOR * max(rank, 3)))
    return tubes


class BaseSuite(ABC):
    """A family of assertions checked over a list of quivers."""

    def __init__(self, max_dim: Optional[int] = None):
        self.max_dim = Config.VERIFY_MAX_DIM if max_dim is None else max_dim

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @abstractmethod
    def check(self, q: QuiverSpec, result: SuiteResult) -> None:
        """Add one entry to ``result.failures`` per violated assertion."""
        pass

    def run(self, quivers: List[QuiverSpec]) -> SuiteResult:
        result = SuiteResult(name=self.name)
        logger.info("=" * 50)
        logger.info(f"Suite {self.name} over {len(quivers)} quivers")
        logger.info("=" * 50)

        for q in quivers:
            before = result.checked
            self.check(q, result)
            logger.info(f"{q.text}: {result.checked - before} checks")

        if result.failures:
            logger.warning(f"Suite {self.name}: {len(result.failures)} failures")
        else:
            logger.info(f"Suite {self.name}: all {result.checked} checks passed")
        return result


class OracleSuite(BaseSuite):
    """Greedy Algorithm against the chain supremum on non-preinjective strings."""

    @property
    def name(self) -> str:
        return "oracle"

    def check(self, q: QuiverSpec, result: SuiteResult) -> None:
        for dim in range(1, self.max_dim + 1):
            for lo in range(q.h):
                sm = StringModule(q, lo, dim)
                if classify(sm) is ComponentClass.PREINJECTIVE:
                    continue
                result.checked += 1
                greedy = greedy_measure(sm)
                oracle = oracle_measure(sm, max_dim=self.max_dim)
                if greedy != oracle:
                    result.failures.append(f"{q.text} {sm.name}: greedy {greedy} != oracle {oracle}")


class ComponentsSuite(BaseSuite):
    """Component class read from fin/per of the measure and the comeasure."""

    @property
    def name(self) -> str:
        return "components"

    @staticmethod
    def predicted(fin_below: bool, star_fin_below: bool) -> Optional[str]:
        if fin_below and not star_fin_below:
            return "preprojective"
        if not fin_below and star_fin_below:
            return "preinjective"
        if fin_below and star_fin_below:
            return "regular"
        return None

    def check(self, q: QuiverSpec, result: SuiteResult) -> None:
        for dim in range(1, self.max_dim + 1):
            for lo in range(q.h):
                sm = StringModule(q, lo, dim)
                ipf = module_ipf(sm)
                star = module_ipf(dual_string(sm))
                component = classify(sm)
                actual = "regular" if component.is_regular else component.value
                predicted = self.predicted(ipf.fin < ipf.per, star.fin < star.per)
                result.checked += 1
                if predicted != actual:
                    result.failures.append(f"{q.text} {sm.name}: reads as {predicted}, is {actual}")

        for failure in tube_discussion_checks(q, self.max_dim):
            result.failures.append(f"{q.text} {failure}")
        result.checked += 1


class ParallelogramSuite(BaseSuite):
    @property
    def name(self) -> str:
        return "parallelogram"

    def check(self, q: QuiverSpec, result: SuiteResult) -> None:
        depth = Config.STAIRCASE_DEPTH
        for tube in _exceptional_tubes(q) + [build_tube(q, TubeKind.HOMOGENEOUS, depth)]:
            for seq in ar_sequences(tube, depth):
                if seq.b2 is None:
                    continue
                report = parallelogram_check(seq)
                result.checked += 1
                if not report.parallel_sides:
                    result.failures.append(f"{q.text} {seq.describe()}: sides not parallel")
                if tube.rank > 1 and not report.nondegenerate_wf:
                    result.failures.append(f"{q.text} {seq.describe()}: waist-free rectangle degenerate")
                if tube.rank == 1 and not report.degenerate:
                    result.failures.append(f"{q.text} {seq.describe()}: rank-one mesh not degenerate")


class OrderingsSuite(BaseSuite):
    """Staircase and waist-free orders never disagree strictly on a ray."""

    @property
    def name(self) -> str:
        return "orderings"

    def check(self, q: QuiverSpec, result: SuiteResult) -> None:
        opposite = {Ordering.LESS: Ordering.GREATER, Ordering.GREATER: Ordering.LESS}
        for tube in _exceptional_tubes(q):
            for ray in tube.rays():
                families = list(dict.fromkeys(family_of(m) for m in ray))
                for i, fa in enumerate(families):
                    for fb in families[i + 1:]:
                        stair = staircase_cmp(fa, fb)
                        wf = wf_cmp(fa, fb)
                        result.checked += 1
                        if opposite.get(stair) is wf:
                            result.failures.append(f"{q.text} {fa.name} vs {fb.name}: staircase {stair.value}, wf {wf.value}")


class TilingSuite(BaseSuite):
    @property
    def name(self) -> str:
        return "tiling"

    def check(self, q: QuiverSpec, result: SuiteResult) -> None:
        for tube in _exceptional_tubes(q):
            if tube.rank < 2:
                continue
            report = tiling_report(tube)
            if not report.applicable:
                result.skipped.append(f"{q.text} {tube.kind.value}: no unique widest valley and hill")
                continue
            result.checked += 1
            if not report.tiled:
                result.failures.append(f"{q.text} {tube.kind.value} tube is not tiled by its limits")

        if widest_extrema_report(q, Config.WIDEST_DIM_FACTOR * q.h).unique_valley:
            result.checked += 1
            for failure in coray_init_failures(q, self.max_dim):
                result.failures.append(f"{q.text} {failure}")


SUITES = {
    "oracle": OracleSuite,
    "components": ComponentsSuite,
    "parallelogram": ParallelogramSuite,
    "orderings": OrderingsSuite,
    "tiling": TilingSuite,
}


def get_suite(name: str, max_dim: Optional[int] = None) -> BaseSuite:
    """Create the suite registered under ``name``."""
    try:
        return SUITES[name](max_dim=max_dim)
    except KeyError:
        raise ValueError(f"Unknown suite: {name}") from None
