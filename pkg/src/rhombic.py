"""Rhombic picture: limits and colimits of families and the orderings on them."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from typing import Optional

from src.artubes import (
    ARSequence,
    Family,
    Tube,
    all_families,
    build_tube,
    family_of,
    tube_string_modules,
)
from src.config import Config
from src.errors import ChainBroken, LimitMismatch, NoApproach, NotRegular
from src.grcompute import IPFDecomposition, gr_comeasure, gr_measure, module_ipf
from src.measure import (
    Measure,
    PeriodicMeasure,
    canonical_periodic,
    cmp_measure,
    cmp_periodic,
    e_value,
    primitive_root,
)
from src.models import Approach, ComponentClass, Ordering, Takeoff, TubeKind
from src.quiver import QuiverSpec, WidestExtremaReport, opposite_quiver, widest_extrema_report
from src.strings import HomogeneousModule, Module, StringModule, dual_string

logger = logging.getLogger(__name__)

_SIGN = {Ordering.LESS: -1, Ordering.EQUAL: 0, Ordering.GREATER: 1}


def _periodic_sort_key():
    return cmp_to_key(lambda a, b: _SIGN[cmp_periodic(a, b)])


@dataclass(frozen=True)
class RhombicPoint:
    mu: Measure
    mustar: Measure
    x: Fraction
    y: Fraction


@dataclass(frozen=True)
class RhombicLimit:
    mu_limit: PeriodicMeasure
    mustar_limit: PeriodicMeasure
    approach: Approach


@dataclass(frozen=True)
class DistinguishedLimits:
    """Take-off, landing and homogeneous limits with their starred counterparts."""

    takeoff: PeriodicMeasure
    landing: PeriodicMeasure
    homogeneous: PeriodicMeasure
    takeoff_star: PeriodicMeasure
    landing_star: PeriodicMeasure
    homogeneous_star: PeriodicMeasure
    preinjective_limits: tuple[PeriodicMeasure, ...]
    axis: tuple[PeriodicMeasure, ...]


def rhombic_point(m: Module) -> RhombicPoint:
    mu = gr_measure(m)
    mustar = gr_comeasure(m)
    return RhombicPoint(mu=mu, mustar=mustar, x=e_value(mu), y=e_value(mustar))


def family_ipf(f: Family) -> IPFDecomposition:
    return module_ipf(f.first)


def family_wf(f: Family) -> Measure:
    return family_ipf(f).wf


def dual_family(f: Family) -> Family:
    return family_of(dual_string(f.first))


def family_wf_star(f: Family) -> Measure:
    return family_wf(dual_family(f))


@lru_cache(maxsize=None)
def gr_limit(f: Family) -> PeriodicMeasure:
    """Limit of the member measures: init followed by per forever."""
    ipf = family_ipf(f)
    return canonical_periodic(ipf.init, ipf.per)


def gr_colimit(f: Family) -> PeriodicMeasure:
    return gr_limit(dual_family(f))


def approach_of(f: Family) -> Approach:
    """Side from which the members of ``f`` approach its rhombic limit.

    fin below per means the measures climb towards the limit; the same
    test on the dual family decides the comeasures.
    """
    ipf, star = family_ipf(f), family_ipf(dual_family(f))
    fin_below, star_fin_below = ipf.fin < ipf.per, star.fin < star.per
    if fin_below and star_fin_below:
        return Approach.FROM_BELOW
    if fin_below:
        return Approach.FROM_LEFT
    if star_fin_below:
        return Approach.FROM_RIGHT
    raise NoApproach(f"{f.name}: fin {ipf.fin} and fin* {star.fin} both lie above their periods")


def rhombic_limit(f: Family) -> RhombicLimit:
    return RhombicLimit(
        mu_limit=gr_limit(f),
        mustar_limit=gr_colimit(f),
        approach=approach_of(f),
    )


def _axis_limits(q: QuiverSpec) -> tuple[PeriodicMeasure, PeriodicMeasure, PeriodicMeasure, list[PeriodicMeasure], list[PeriodicMeasure]]:
    families = all_families(q)
    takeoffs = {gr_limit(f) for f in families if f.component is ComponentClass.PREPROJECTIVE}
    if len(takeoffs) != 1:
        raise LimitMismatch(f"Preprojective families of {q.word} have {len(takeoffs)} distinct limits")
    takeoff = takeoffs.pop()

    homogeneous = gr_limit(families[-1])
    preinjective = sorted(
        {gr_limit(f) for f in families if f.component is ComponentClass.PREINJECTIVE},
        key=_periodic_sort_key(),
    )
    axis = sorted({gr_limit(f) for f in families}, key=_periodic_sort_key())
    return takeoff, preinjective[-1], homogeneous, preinjective, axis


def distinguished_limits(q: QuiverSpec) -> DistinguishedLimits:
    takeoff, landing, homogeneous, preinjective, axis = _axis_limits(q)
    takeoff_star, landing_star, homogeneous_star, _, _ = _axis_limits(opposite_quiver(q))
    logger.info(f"Distinguished limits of {q.word}: T={takeoff} H={homogeneous} L={landing}")
    return DistinguishedLimits(
        takeoff=takeoff,
        landing=landing,
        homogeneous=homogeneous,
        takeoff_star=takeoff_star,
        landing_star=landing_star,
        homogeneous_star=homogeneous_star,
        preinjective_limits=tuple(preinjective),
        axis=tuple(axis),
    )


def _member_points(f: Family, depth: int) -> list[tuple[Measure, Measure]]:
    return [(gr_measure(m), gr_comeasure(m)) for m in f.members(depth)]


def _stair_leq(lower: list[tuple[Measure, Measure]], upper: list[tuple[Measure, Measure]]) -> bool:
    """Whether ``lower`` lies below ``upper`` on the tail of the sampled members.

    For each late member n of ``upper`` find the l with
    lower_l <= upper_n < lower_{l+1}; then lower*_l <= upper*_n must hold.
    """
    evaluated = 0
    for mu_n, star_n in upper[len(upper) // 2:]:
        below = [i for i, (mu, _) in enumerate(lower) if mu <= mu_n]
        if not below:
            return False
        ell = below[-1]
        if ell + 1 >= len(lower):
            continue
        evaluated += 1
        if not lower[ell][1] <= star_n:
            return False
    return evaluated > 0


def staircase_cmp(fa: Family, fb: Family, depth: Optional[int] = None) -> Ordering:
    """Staircase comparison of two families sampled on their first ``depth`` members."""
    depth = Config.STAIRCASE_DEPTH if depth is None else depth
    if depth < 5:
        raise ValueError(f"Staircase depth must be at least 5, got {depth}")

    if gr_limit(fa) != gr_limit(fb):
        ordering = cmp_periodic(gr_colimit(fa), gr_colimit(fb))
        if ordering is Ordering.EQUAL:
            raise LimitMismatch(f"{fa.name} and {fb.name} have different limits and equal colimits")
        return ordering

    a_points = _member_points(fa, depth)
    b_points = _member_points(fb, depth)
    a_le_b = _stair_leq(a_points, b_points)
    b_le_a = _stair_leq(b_points, a_points)
    if a_le_b and b_le_a:
        return Ordering.EQUAL
    if a_le_b:
        return Ordering.LESS
    if b_le_a:
        return Ordering.GREATER
    return Ordering.INCOMPARABLE


def wf_cmp(fa: Family, fb: Family) -> Ordering:
    """Compare the starred waist-free parts of two families of one tube."""
    for f in (fa, fb):
        if not f.component.is_regular:
            raise NotRegular(f"{f.name} is {f.component.value}, not regular")
    if fa.component is not fb.component:
        raise NotRegular(f"{fa.name} and {fb.name} lie in different tubes")
    return cmp_measure(family_wf_star(fa), family_wf_star(fb))


@dataclass(frozen=True)
class ParallelogramReport:
    sequence: ARSequence
    vertices: tuple[RhombicLimit, RhombicLimit, RhombicLimit, RhombicLimit]
    parallel_sides: bool
    degenerate: bool
    nondegenerate_wf: bool


def parallelogram_check(seq: ARSequence) -> ParallelogramReport:
    """Rhombic limits of a mesh with two middle terms."""
    if seq.b2 is None:
        raise ValueError(f"{seq.describe()} has a single middle term")

    a, b1, b2, c = (family_of(m) for m in (seq.a, seq.b1, seq.b2, seq.c))
    vertices = tuple(rhombic_limit(f) for f in (a, b1, b2, c))
    la, lb1, lb2, lc = (v.mu_limit for v in vertices)
    ca, cb1, cb2, cc = (v.mustar_limit for v in vertices)

    wf = {f: family_wf(f) for f in (a, b1, b2, c)}
    wf_star = {f: family_wf_star(f) for f in (a, b1, b2, c)}
    nondegenerate_wf = (
        wf[a] != wf[b2]
        and wf[b1] != wf[c]
        and wf_star[a] != wf_star[b1]
        and wf_star[b2] != wf_star[c]
    )

    return ParallelogramReport(
        sequence=seq,
        vertices=vertices,
        parallel_sides=la == lb1 and lb2 == lc and ca == cb2 and cb1 == cc,
        degenerate=la == lb2 or ca == cb1,
        nondegenerate_wf=nondegenerate_wf,
    )


@dataclass
class TilingReport:
    tube_kind: TubeKind
    wf_order: list[Family]
    ray_orders: list[list[Family]]
    coray_orders: list[list[Family]]
    tiled: Optional[bool]  # None when the quiver lacks a unique widest valley or hill
    extrema: Optional[WidestExtremaReport] = None

    @property
    def applicable(self) -> bool:
        return self.tiled is not None


def _cycle(walk: list[Module], rank: int) -> list[Family]:
    return [family_of(m) for m in walk[:rank]]


def _repeats_cycle(walk: list[Module], cycle: list[Family]) -> bool:
    return all(family_of(m) == cycle[k % len(cycle)] for k, m in enumerate(walk))


def _is_rotation(cycle: list[Family], order: list[Family]) -> bool:
    if sorted(f.name for f in cycle) != sorted(f.name for f in order):
        return False
    start = cycle.index(order[0])
    return cycle[start:] + cycle[:start] == order


def descending(families: list[Family], key) -> list[Family]:
    """Families ordered from the F-largest ``key(f)`` down."""
    return sorted(families, key=lambda f: key(f).key, reverse=True)


def tiling_report(tube: Tube, require_unique_extrema: bool = True) -> TilingReport:
    """Compare the family cycles along rays and corays with the waist-free orders.

    Along a ray the families repeat in descending wf* order; along a coray
    in descending wf order.
    """
    if tube.kind is TubeKind.HOMOGENEOUS:
        raise ValueError("Tiling is defined for exceptional tubes")
    q = tube.quiver
    rank = tube.rank

    ray_orders = [_cycle(ray, rank) for ray in tube.rays()]
    coray_orders = [_cycle(coray, rank) for coray in tube.corays()]
    wf_order = sorted(tube.families(), key=lambda f: family_wf(f).key)

    applicable = True
    extrema = None
    if require_unique_extrema:
        extrema = widest_extrema_report(q, Config.WIDEST_DIM_FACTOR * q.h)
        applicable = extrema.unique_valley and extrema.unique_hill

    tiled: Optional[bool] = None
    if applicable:
        tiled = True
        for ray, cycle in zip(tube.rays(), ray_orders):
            order = descending(cycle, family_wf_star)
            if not (_repeats_cycle(ray, cycle) and _is_rotation(cycle, order)):
                logger.debug(f"Ray walk {[f.name for f in cycle]} is not a rotation of {[f.name for f in order]}")
                tiled = False
        for coray, cycle in zip(tube.corays(), coray_orders):
            order = descending(cycle, family_wf)
            if not (_repeats_cycle(coray, cycle) and _is_rotation(cycle, order)):
                logger.debug(f"Coray walk {[f.name for f in cycle]} is not a rotation of {[f.name for f in order]}")
                tiled = False

    logger.info(f"Tiling of the {tube.kind.value} tube of {q.word}: {tiled}")
    return TilingReport(
        tube_kind=tube.kind,
        wf_order=wf_order,
        ray_orders=ray_orders,
        coray_orders=coray_orders,
        tiled=tiled,
        extrema=extrema,
    )


@dataclass(frozen=True)
class ChainWitness:
    family: Family
    starred: bool
    ascending: bool  # in F for plain measures, in the reversed order for starred ones
    measures: tuple[Measure, ...]


# Direction of the chains in each set of measures, read in the set's own order.
_CHAIN_ASCENDS = {
    (ComponentClass.PREPROJECTIVE, False): True,
    (ComponentClass.PREPROJECTIVE, True): True,
    (ComponentClass.PREINJECTIVE, False): False,
    (ComponentClass.PREINJECTIVE, True): False,
}


def chain_witness(q: QuiverSpec, component: ComponentClass, starred: bool, length: int) -> ChainWitness:
    """A strictly monotone chain of measures showing a chain condition fails.

    Preprojective measures, regular measures and preprojective comeasures
    contain infinite ascending chains; the other three sets contain
    infinite descending ones.
    """
    if length < 2:
        raise ValueError(f"Chain length must be at least 2, got {length}")

    ascending = _CHAIN_ASCENDS.get((component, starred), not starred)
    candidates = [f for f in all_families(q) if f.component is component]
    if not candidates:
        raise ValueError(f"{q.word} has no {component.value} families")
    family = candidates[0]

    start = family.index_at_least(3 * q.h)
    members = family.members(length, start=start)
    compute = gr_comeasure if starred else gr_measure
    measures = tuple(compute(m) for m in members)

    # The starred order is F reversed.
    increasing_in_f = ascending != starred
    for earlier, later in zip(measures, measures[1:]):
        ok = earlier < later if increasing_in_f else later < earlier
        if not ok:
            raise ChainBroken(f"{family.name}: {earlier} then {later} breaks the chain")

    return ChainWitness(family=family, starred=starred, ascending=ascending, measures=measures)


@dataclass(frozen=True)
class LimitMarker:
    limit: RhombicLimit
    families: tuple[str, ...]
    component: ComponentClass


@dataclass(frozen=True)
class PicturePoint:
    name: str
    component: ComponentClass
    point: RhombicPoint


@dataclass
class RhombicPicture:
    """Everything the exporters draw for one quiver."""

    quiver: QuiverSpec
    points: list[PicturePoint] = field(default_factory=list)
    markers: list[LimitMarker] = field(default_factory=list)
    mu_ticks: list[PeriodicMeasure] = field(default_factory=list)
    mustar_ticks: list[PeriodicMeasure] = field(default_factory=list)


def build_picture(q: QuiverSpec, families: Optional[list[Family]] = None, max_dim: int = 0) -> RhombicPicture:
    """Module points up to ``max_dim`` and limit markers.

    Families of one component with coinciding limit and colimit share a marker.
    """
    families = all_families(q) if families is None else families
    picture = RhombicPicture(quiver=q)

    grouped: dict[tuple[PeriodicMeasure, PeriodicMeasure, ComponentClass], list[Family]] = {}
    for f in families:
        grouped.setdefault((gr_limit(f), gr_colimit(f), f.component), []).append(f)

    for (mu_limit, mustar_limit, component), members in grouped.items():
        picture.markers.append(
            LimitMarker(
                limit=RhombicLimit(mu_limit, mustar_limit, approach_of(members[0])),
                families=tuple(sorted(f.name for f in members)),
                component=component,
            )
        )
    picture.markers.sort(key=lambda marker: marker.families)
    picture.mu_ticks = sorted({key[0] for key in grouped}, key=_periodic_sort_key())
    picture.mustar_ticks = sorted({key[1] for key in grouped}, key=_periodic_sort_key())

    if max_dim > 0:
        wanted = {f.name for f in families}
        modules: list[Module] = []
        for dim in range(1, max_dim + 1):
            for lo in range(q.h):
                sm = StringModule(q, lo, dim)
                if family_of(sm).name in wanted:
                    modules.append(sm)
        if "H" in wanted:
            modules.extend(HomogeneousModule(q, k) for k in range(1, max_dim // q.h + 1))
        for m in modules:
            picture.points.append(PicturePoint(name=m.name, component=family_of(m).component, point=rhombic_point(m)))

    logger.info(f"Rhombic picture of {q.word}: {len(picture.markers)} limit markers, {len(picture.points)} points")
    return picture


def _coray_neighbours(tube: Tube, min_dim: int, max_dim: int) -> list[tuple[Module, Module]]:
    pairs = []
    for coray in tube.corays():
        for lower, upper in zip(coray, coray[1:]):
            if min_dim <= lower.dim and upper.dim <= max_dim:
                pairs.append((lower, upper))
    return pairs


def distinct_coray_pairs(tube: Tube, max_dim: int) -> list[tuple[Module, Module]]:
    """Neighbours of dimension >= 3h on a coray that lie in different families.

    Pairs with equal init and fin are dropped: a rotation of the quiver
    exchanges their families.
    """
    pairs = []
    for lower, upper in _coray_neighbours(tube, 3 * tube.quiver.h, max_dim):
        if family_of(lower) == family_of(upper):
            continue
        a, b = module_ipf(lower), module_ipf(upper)
        if (a.init, a.fin) == (b.init, b.fin):
            continue
        pairs.append((lower, upper))
    return pairs


def _same_sign(*orderings: Ordering) -> bool:
    return len({_SIGN[ordering] for ordering in orderings}) == 1


def _above_takeoff_failures(lower: Module, upper: Module, takeoff: PeriodicMeasure) -> list[str]:
    """Statements for coray neighbours whose initial parts lie above the take-off limit."""
    pair = f"{lower.name}, {upper.name}"
    a, b = module_ipf(lower), module_ipf(upper)
    limit_a, limit_b = gr_limit(family_of(lower)), gr_limit(family_of(upper))
    failures = []
    if not all(cmp_periodic(limit, takeoff) is Ordering.GREATER for limit in (limit_a, limit_b)):
        failures.append(f"{pair}: limits {limit_a}, {limit_b} not above the take-off limit {takeoff}")
    if a.init.total == b.init.total:
        failures.append(f"{pair}: initial parts of equal size {a.init.total}")
    if a.fin != b.fin:
        failures.append(f"{pair}: final parts {a.fin} and {b.fin} differ")
    if not _same_sign(cmp_measure(a.init, b.init), cmp_measure(a.wf, b.wf), cmp_periodic(limit_a, limit_b)):
        failures.append(f"{pair}: init, wf and limit are ordered differently")
    return failures


def _below_takeoff_failures(lower: Module, upper: Module, takeoff: PeriodicMeasure) -> list[str]:
    """Statements for right-tube neighbours whose initial parts lie below the take-off limit."""
    pair = f"{lower.name}, {upper.name}"
    a, b = module_ipf(lower), module_ipf(upper)
    failures = []
    for m in (lower, upper):
        if gr_limit(family_of(m)) != takeoff:
            failures.append(f"{m.name}: limit {gr_limit(family_of(m))} is not the take-off limit {takeoff}")
    if a.init != b.init:
        failures.append(f"{pair}: initial parts {a.init} and {b.init} differ")
    gap = b.fin.total - a.fin.total
    if gap == 0 or abs(gap) >= lower.quiver.h:
        failures.append(f"{pair}: final parts differ in size by {abs(gap)}")
    by_size = Ordering.LESS if gap < 0 else Ordering.GREATER if gap > 0 else Ordering.EQUAL
    if not _same_sign(by_size, cmp_measure(a.fin, b.fin), cmp_measure(a.wf, b.wf)):
        failures.append(f"{pair}: fin sizes, fin and wf are ordered differently")
    return failures


def _init_side(m: Module, takeoff: PeriodicMeasure) -> Ordering:
    return cmp_periodic(module_ipf(m).init, takeoff)


def tube_discussion_checks(q: QuiverSpec, max_dim: Optional[int] = None) -> list[str]:
    """Failures of the per-tube statements about measures of large modules.

    Periodic parts are L, R and (h) in the left, right and homogeneous tubes.
    Coray neighbours from different families in the left tube have initial
    parts above the take-off limit; right-tube neighbours are checked by
    whether both initial parts lie above or both below it. H[q] starts with
    the measure of H[1] and its limit lies above the take-off limit. A
    symmetric quiver gives the two exceptional tubes the same points and
    both follow the left-tube statements.
    """
    max_dim = Config.ORACLE_MAX_DIM if max_dim is None else max_dim
    h = q.h
    hooks = q.hooks
    symmetric = hooks.takeoff is Takeoff.SYMMETRIC
    takeoff = distinguished_limits(q).takeoff
    failures: list[str] = []
    expected_period = {
        TubeKind.LEFT: Measure(primitive_root(hooks.L.entries)),
        TubeKind.RIGHT: Measure(primitive_root(hooks.R.entries)),
    }

    for kind, period in expected_period.items():
        for sm in tube_string_modules(q, kind, 3 * h, max_dim):
            per = module_ipf(sm).per
            if per != period:
                failures.append(f"{sm.name}: periodic part {per}, expected {period}")

    for kind in (TubeKind.LEFT, TubeKind.RIGHT):
        tube = build_tube(q, kind, max_dim)
        for lower, upper in distinct_coray_pairs(tube, max_dim):
            sides = {_init_side(lower, takeoff), _init_side(upper, takeoff)}
            if kind is TubeKind.LEFT or symmetric:
                if sides != {Ordering.GREATER}:
                    failures.append(f"{lower.name}, {upper.name}: initial part not above the take-off limit {takeoff}")
                failures.extend(_above_takeoff_failures(lower, upper, takeoff))
            elif sides == {Ordering.GREATER}:
                failures.extend(_above_takeoff_failures(lower, upper, takeoff))
            elif sides == {Ordering.LESS}:
                failures.extend(_below_takeoff_failures(lower, upper, takeoff))

    quasi_simple = gr_measure(HomogeneousModule(q, 1))
    for k in range(3, max_dim // h + 1):
        ipf = module_ipf(HomogeneousModule(q, k))
        if ipf.per != hooks.homogeneous_period or ipf.init != quasi_simple:
            failures.append(f"H[{k}]: decomposition {ipf.init}|{ipf.per}|{ipf.fin} does not start with {quasi_simple}")
    homogeneous = gr_limit(family_of(HomogeneousModule(q, 1)))
    if cmp_periodic(homogeneous, takeoff) is not Ordering.GREATER:
        failures.append(f"Homogeneous limit {homogeneous} is not above the take-off limit {takeoff}")

    if symmetric:
        bound = min(max_dim, 4 * h)
        points = {
            kind: {(gr_measure(sm), gr_comeasure(sm)) for sm in tube_string_modules(q, kind, 1, bound)}
            for kind in (TubeKind.LEFT, TubeKind.RIGHT)
        }
        if points[TubeKind.LEFT] != points[TubeKind.RIGHT]:
            failures.append("Symmetric quiver: left and right tube points differ")

    return failures


def coray_init_failures(q: QuiverSpec, max_dim: Optional[int] = None) -> list[str]:
    """Along corays, init order in F is the reverse of the order by size.

    Pairs whose initial parts are prefix-related are skipped.
    """
    max_dim = Config.ORACLE_MAX_DIM if max_dim is None else max_dim
    failures = []
    for kind in (TubeKind.LEFT, TubeKind.RIGHT):
        tube = build_tube(q, kind, max_dim)
        for lower, upper in _coray_neighbours(tube, 3 * q.h, max_dim):
            a, b = module_ipf(lower).init, module_ipf(upper).init
            if a.is_prefix_of(b) or b.is_prefix_of(a):
                continue
            if (a < b) != (a.total > b.total):
                failures.append(f"{lower.name}, {upper.name}: init {a} vs {b} disagrees with sizes")
    return failures
