"""Gabriel-Roiter measures of string and band modules.

The Greedy Algorithm walks outwards from each sink of an interval, merging
the left and right hook streams; the measure is the best candidate over all
sinks. ``IntervalOracle`` computes the same quantity directly from the
definition as a supremum over chains of closed subintervals.
"""

import logging
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Optional

from src.config import Config
from src.errors import BoundExceeded, NoMultiplicity, NoPeriodicPart, NotASink
from src.measure import Measure, concat_power, f_key, primitive_root
from src.models import ComponentClass, Direction, Side
from src.quiver import HookSystem, QuiverSpec, cover_arrow
from src.strings import (
    HomogeneousModule,
    Module,
    StringModule,
    classify,
    dual_string,
    interval_sinks,
    is_closed,
)

logger = logging.getLogger(__name__)

F = Direction.FORWARD
B = Direction.BACKWARD


@dataclass(frozen=True)
class HookStreams:
    sink: int
    lam: tuple[int, ...]
    rho: tuple[int, ...]


@dataclass(frozen=True)
class GreedyRun:
    """One pass of the Greedy Algorithm from a fixed sink."""

    streams: HookStreams
    measure: Measure
    choices: tuple[Side, ...]  # one per entry after the leading 1

    @property
    def sink(self) -> int:
        return self.streams.sink

    @property
    def trace(self) -> str:
        return "".join(choice.tag for choice in self.choices)


@dataclass(frozen=True)
class IPFDecomposition:
    """measure = init · per^mult · fin.

    ``mult`` is None for a small module whose measure is not init · per^k · fin
    for any k >= 1; its parts are those of its family.
    """

    init: Measure
    per: Measure
    mult: Optional[int]
    fin: Measure
    source: Optional[str] = None  # family member the parts were read from

    @property
    def wf(self) -> Measure:
        return self.init + self.fin

    def reconstruct(self) -> Measure:
        if self.mult is None:
            raise NoMultiplicity(f"No multiplicity of {self.per} reproduces the measure ({self.source})")
        return concat_power(self.init, self.per, self.mult) + self.fin


def sinks(sm: StringModule) -> list[int]:
    return interval_sinks(sm.quiver, sm.lo, sm.hi)


def hook_streams(sm: StringModule, sink: int) -> HookStreams:
    q = sm.quiver
    if not (sm.lo <= sink <= sm.hi and is_closed(q, sink, sink, sm.lo, sm.hi)):
        raise NotASink(f"Position {sink} is not a sink of {sm.name}")

    lam = []
    x = sink
    while x > sm.lo:
        y = x - 1
        while y > sm.lo and cover_arrow(q, y - 1) is B:
            y -= 1
        lam.append(x - y)
        x = y

    rho = []
    x = sink
    while x < sm.hi:
        y = x + 1
        while y < sm.hi and cover_arrow(q, y) is F:
            y += 1
        rho.append(y - x)
        x = y

    return HookStreams(sink=sink, lam=tuple(lam), rho=tuple(rho))


def _merge(lam: tuple[int, ...], rho: tuple[int, ...]) -> tuple[list[int], list[Side]]:
    # Take the head of the F-larger tail; ties go to the right stream.
    neg_lam, neg_rho = f_key(lam), f_key(rho)
    i = j = 0
    entries, choices = [1], []
    while i < len(lam) or j < len(rho):
        if neg_lam[i:] > neg_rho[j:]:
            entries.append(lam[i])
            choices.append(Side.LEFT)
            i += 1
        else:
            entries.append(rho[j])
            choices.append(Side.RIGHT)
            j += 1
    return entries, choices


def greedy_run(sm: StringModule, sink: int) -> GreedyRun:
    streams = hook_streams(sm, sink)
    entries, choices = _merge(streams.lam, streams.rho)
    return GreedyRun(streams=streams, measure=Measure(tuple(entries)), choices=tuple(choices))


def greedy_candidate(sm: StringModule, sink: int) -> Measure:
    return greedy_run(sm, sink).measure


def greedy_runs(sm: StringModule) -> list[GreedyRun]:
    return [greedy_run(sm, p) for p in sinks(sm)]


@lru_cache(maxsize=None)
def greedy_measure(sm: StringModule) -> Measure:
    return max(run.measure for run in greedy_runs(sm))


def winning_runs(sm: StringModule) -> list[GreedyRun]:
    runs = greedy_runs(sm)
    best = max(run.measure for run in runs)
    return [run for run in runs if run.measure == best]


def winning_sinks(sm: StringModule) -> list[int]:
    return [run.sink for run in winning_runs(sm)]


class IntervalOracle:
    """Chain-supremum recursion over closed subintervals of the cover.

    Values are memoized on (left end mod h, length) and stored as F-keys.
    """

    def __init__(self, quiver: QuiverSpec):
        self.quiver = quiver
        self._forward = tuple(cover_arrow(quiver, i) is F for i in range(quiver.h))
        self._memo: dict[tuple[int, int], tuple[int, ...]] = {}

    def _fwd(self, i: int) -> bool:
        return self._forward[i % self.quiver.h]

    def key(self, lo: int, length: int) -> tuple[int, ...]:
        lo %= self.quiver.h
        cached = self._memo.get((lo, length))
        if cached is not None:
            return cached

        if length == 1:
            best = (-1,)
        else:
            hi = lo + length - 1
            starts = [a for a in range(lo, hi + 1) if a == lo or self._fwd(a - 1)]
            ends = [b for b in range(lo, hi + 1) if b == hi or not self._fwd(b)]
            best = None
            for a in starts:
                for b in ends:
                    if b < a or (a == lo and b == hi):
                        continue
                    inner = b - a + 1
                    candidate = self.key(a, inner) + (inner - length,)
                    if best is None or candidate > best:
                        best = candidate
        self._memo[(lo, length)] = best
        return best

    def measure(self, lo: int, length: int) -> Measure:
        return Measure(tuple(-x for x in self.key(lo, length)))

    def quasi_simple_homogeneous(self) -> Measure:
        """Best closed proper arc of the cycle, completed by one step to the band."""
        h = self.quiver.h
        best = None
        for a in range(h):
            if not self._fwd(a - 1):
                continue
            for length in range(1, h):
                if self._fwd(a + length - 1):
                    continue
                candidate = self.key(a, length) + (length - h,)
                if best is None or candidate > best:
                    best = candidate
        return Measure(tuple(-x for x in best))


@lru_cache(maxsize=None)
def interval_oracle(q: QuiverSpec) -> IntervalOracle:
    return IntervalOracle(q)


@lru_cache(maxsize=None)
def mu_quasi_simple_homogeneous(q: QuiverSpec) -> Measure:
    return interval_oracle(q).quasi_simple_homogeneous()


def homogeneous_measure(q: QuiverSpec, quasi_length: int) -> Measure:
    """μ(H[q]) = μ_H · (h)^(q-1)."""
    return concat_power(mu_quasi_simple_homogeneous(q), q.hooks.homogeneous_period, quasi_length - 1)


def band_branch(sm: StringModule) -> Optional[Measure]:
    """μ_H · (h)^(q-1) · (r) for a preinjective of dimension qh + r, when it applies."""
    if classify(sm) is not ComponentClass.PREINJECTIVE:
        return None
    quasi_length, rest = divmod(sm.dim, sm.quiver.h)
    if quasi_length < 1 or rest == 0:
        return None
    return homogeneous_measure(sm.quiver, quasi_length) + Measure((rest,))


def _string_branch(sm: StringModule) -> tuple[Measure, str]:
    if classify(sm) is ComponentClass.PREINJECTIVE and sm.dim <= Config.ORACLE_MAX_DIM:
        return interval_oracle(sm.quiver).measure(sm.lo, sm.dim), "interval"
    return greedy_measure(sm), "greedy"


@lru_cache(maxsize=None)
def _gr_measure(m: Module) -> tuple[Measure, str]:
    if isinstance(m, HomogeneousModule):
        return homogeneous_measure(m.quiver, m.q), "homogeneous"
    measure, branch = _string_branch(m)
    band = band_branch(m)
    if band is not None and band > measure:
        return band, "band"
    return measure, branch


def gr_measure(m: Module) -> Measure:
    return _gr_measure(m)[0]


def gr_branch(m: Module) -> str:
    """Which computation produced gr_measure: greedy, interval, band or homogeneous."""
    return _gr_measure(m)[1]


def gr_comeasure(m: Module) -> Measure:
    return gr_measure(dual_string(m))


def oracle_measure(m: Module, max_dim: Optional[int] = None) -> Measure:
    """GR-measure straight from its definition, for modules within the bound."""
    bound = Config.ORACLE_MAX_DIM if max_dim is None else max_dim
    if m.dim > bound:
        raise BoundExceeded(f"{m.name} has dimension {m.dim} > oracle bound {bound}")

    oracle = interval_oracle(m.quiver)
    if isinstance(m, HomogeneousModule):
        measure = oracle.quasi_simple_homogeneous()
        for _ in range(m.q - 1):
            measure = measure + m.quiver.hooks.homogeneous_period
        return measure

    measure = oracle.measure(m.lo, m.dim)
    band = band_branch(m)
    if band is not None and band > measure:
        return band
    return measure


def ipf_decompose(m: Measure, hooks: HookSystem) -> IPFDecomposition:
    """Split at the earliest full L, R or (h) block, taking its maximal run.

    The run is counted in copies of the block's primitive root, so an
    imprimitive hook sequence such as (2,2) yields per = (2).
    """
    entries = m.entries
    blocks = hooks.periods()
    for start in range(len(entries)):
        for block in blocks:
            width = len(block)
            if entries[start:start + width] != block.entries:
                continue
            root = primitive_root(block.entries)
            mult, end = width // len(root), start + width
            while entries[end:end + len(root)] == root:
                mult += 1
                end += len(root)
            return IPFDecomposition(
                init=Measure(entries[:start]),
                per=Measure(root),
                mult=mult,
                fin=Measure(entries[end:]),
            )
    raise NoPeriodicPart(f"Measure {m} contains no full L, R or (h) block")


def ipf_within_bounds(ipf: IPFDecomposition, hooks: HookSystem) -> bool:
    """len(init) <= s+t and len(fin) <= s+t-1.

    Both bounds are attained: ba_15 of ><<>< has init 11212 and cb_15 has
    fin 2222, with s+t = 5.
    """
    s_t = hooks.s + hooks.t
    return len(ipf.init) <= s_t and len(ipf.fin) <= s_t - 1


def _family_shift(m: Module, steps: int) -> Module:
    if isinstance(m, HomogeneousModule):
        return HomogeneousModule(m.quiver, m.q + steps)
    return StringModule(m.quiver, m.lo, m.dim + steps * m.quiver.h)


def _small_multiplicity(m: Module, ipf: IPFDecomposition) -> Optional[int]:
    rest = m.dim - ipf.init.total - ipf.fin.total
    if rest <= 0 or rest % ipf.per.total:
        return None
    mult = rest // ipf.per.total
    if concat_power(ipf.init, ipf.per, mult) + ipf.fin != gr_measure(m):
        return None
    return mult


@lru_cache(maxsize=None)
def module_ipf(m: Module) -> IPFDecomposition:
    """IPF decomposition, read from a large family member when m is small.

    The representative is the smallest member of dimension at least 3h whose
    measure contains a full periodic block. A small module keeps its
    representative's init, per and fin; its multiplicity is the k >= 1 with
    init · per^k · fin equal to its own measure, or None.
    """
    h = m.quiver.h
    hooks = m.quiver.hooks
    steps = max(0, -(-(3 * h - m.dim) // h))
    last_error = None
    for extra in range(4):
        member = _family_shift(m, steps + extra)
        try:
            ipf = ipf_decompose(gr_measure(member), hooks)
        except NoPeriodicPart as e:
            last_error = e
            continue
        if member == m:
            return replace(ipf, source=m.name)
        mult = _small_multiplicity(m, ipf)
        if mult is None:
            logger.debug(f"{m.name}: parts read from {member.name}, no multiplicity fits")
        return replace(ipf, mult=mult, source=member.name)
    raise last_error
