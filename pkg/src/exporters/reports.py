"""JSON report schemas and the builders that fill them."""

from fractions import Fraction
from typing import Optional

from pydantic import BaseModel

from src.artubes import Family, Tube, ar_sequences
from src.grcompute import IPFDecomposition, gr_branch, gr_measure
from src.measure import Measure, PeriodicMeasure, e_value
from src.quiver import HookSystem, WidestExtremaReport
from src.rhombic import (
    DistinguishedLimits,
    RhombicPicture,
    TilingReport,
    family_ipf,
    family_wf,
    family_wf_star,
    rhombic_limit,
)
from src.strings import Module, StringModule, classify
from src.verification import SuiteResult


class Rational(BaseModel):
    num: int
    den: int

    @classmethod
    def of(cls, value: Fraction) -> "Rational":
        return cls(num=value.numerator, den=value.denominator)


class Periodic(BaseModel):
    prefix: list[int]
    period: list[int]

    @classmethod
    def of(cls, value: PeriodicMeasure) -> "Periodic":
        return cls(prefix=list(value.prefix.entries), period=list(value.period.entries))


class IPFReport(BaseModel):
    init: list[int]
    period: list[int]
    mult: Optional[int]  # None when no power of the period fits a small module
    fin: list[int]

    @classmethod
    def of(cls, ipf: IPFDecomposition) -> "IPFReport":
        return cls(
            init=list(ipf.init.entries),
            period=list(ipf.per.entries),
            mult=ipf.mult,
            fin=list(ipf.fin.entries),
        )


class HookReport(BaseModel):
    L: list[int]
    R: list[int]
    s: int
    t: int
    h: int
    takeoff: str
    reflected: bool

    @classmethod
    def of(cls, hooks: HookSystem) -> "HookReport":
        return cls(
            L=list(hooks.L.entries),
            R=list(hooks.R.entries),
            s=hooks.s,
            t=hooks.t,
            h=hooks.h,
            takeoff=hooks.takeoff.value,
            reflected=hooks.reflected,
        )


class MeasureReport(BaseModel):
    quiver: str
    module: str
    dim: int
    component: str
    measure: list[int]
    branch: str
    e: Rational


class ClassifyReport(BaseModel):
    module: str
    dim: int
    component: str
    string_type: Optional[list[str]] = None


class LimitReport(BaseModel):
    limit: Periodic
    colimit: Periodic
    approach: str


class FamilyReport(BaseModel):
    family: str
    component: str
    members: list[str]
    ipf: IPFReport
    wf: list[int]
    wf_star: list[int]
    rhombic_limit: LimitReport


class MeshReport(BaseModel):
    a: str
    b1: str
    b2: Optional[str] = None
    c: str


class TubeReport(BaseModel):
    quiver: str
    kind: str
    rank: int
    mouth: list[str]
    rows: list[list[str]]
    families: list[str]
    meshes: list[MeshReport]


class DistinguishedReport(BaseModel):
    takeoff: Periodic
    homogeneous: Periodic
    landing: Periodic
    takeoff_star: Periodic
    homogeneous_star: Periodic
    landing_star: Periodic
    preinjective_limits: list[Periodic]
    axis: list[Periodic]


class MarkerReport(BaseModel):
    families: list[str]
    component: str
    limit: LimitReport
    x: Rational
    y: Rational


class PointReport(BaseModel):
    module: str
    component: str
    mu: list[int]
    mustar: list[int]
    x: Rational
    y: Rational


class PictureReport(BaseModel):
    quiver: str
    markers: list[MarkerReport]
    points: list[PointReport]
    mu_ticks: list[Periodic]
    mustar_ticks: list[Periodic]


class WidestReport(BaseModel):
    unique_valley: bool
    unique_hill: bool
    winning_sinks: dict[str, list[str]]
    winning_hill_sinks: dict[str, list[str]]
    width_table: dict[str, int]
    hill_width_table: dict[str, int]
    syntactic_unique: bool


class TilingReportModel(BaseModel):
    kind: str
    wf_order: list[str]
    ray_orders: list[list[str]]
    coray_orders: list[list[str]]
    tiled: Optional[bool] = None
    widest: Optional[WidestReport] = None


class SuiteReport(BaseModel):
    suite: str
    checked: int
    passed: bool
    failures: list[str]
    skipped: list[str]


def _limit_report(f: Family) -> LimitReport:
    limit = rhombic_limit(f)
    return LimitReport(
        limit=Periodic.of(limit.mu_limit),
        colimit=Periodic.of(limit.mustar_limit),
        approach=limit.approach.value,
    )


def measure_report(m: Module, measure: Optional[Measure] = None, branch: Optional[str] = None) -> MeasureReport:
    """Report ``measure`` (default: the GR-measure) of ``m``."""
    measure = gr_measure(m) if measure is None else measure
    return MeasureReport(
        quiver=m.quiver.text,
        module=m.name,
        dim=m.dim,
        component=classify(m).value,
        measure=list(measure.entries),
        branch=gr_branch(m) if branch is None else branch,
        e=Rational.of(e_value(measure)),
    )


def classify_report(m: Module) -> ClassifyReport:
    string_type = [m.left_label, m.right_label] if isinstance(m, StringModule) else None
    return ClassifyReport(module=m.name, dim=m.dim, component=classify(m).value, string_type=string_type)


def family_report(f: Family, count: int) -> FamilyReport:
    return FamilyReport(
        family=f.name,
        component=f.component.value,
        members=[m.name for m in f.members(count)],
        ipf=IPFReport.of(family_ipf(f)),
        wf=list(family_wf(f).entries),
        wf_star=list(family_wf_star(f).entries),
        rhombic_limit=_limit_report(f),
    )


def tube_report(tube: Tube) -> TubeReport:
    meshes = [
        MeshReport(a=seq.a.name, b1=seq.b1.name, b2=seq.b2.name if seq.b2 else None, c=seq.c.name)
        for seq in ar_sequences(tube, tube.depth - 1)
    ]
    return TubeReport(
        quiver=tube.quiver.text,
        kind=tube.kind.value,
        rank=tube.rank,
        mouth=[m.name for m in tube.mouth],
        rows=[[m.name for m in row] for row in tube.rows()],
        families=[f.name for f in tube.families()],
        meshes=meshes,
    )


def distinguished_report(limits: DistinguishedLimits) -> DistinguishedReport:
    return DistinguishedReport(
        takeoff=Periodic.of(limits.takeoff),
        homogeneous=Periodic.of(limits.homogeneous),
        landing=Periodic.of(limits.landing),
        takeoff_star=Periodic.of(limits.takeoff_star),
        homogeneous_star=Periodic.of(limits.homogeneous_star),
        landing_star=Periodic.of(limits.landing_star),
        preinjective_limits=[Periodic.of(p) for p in limits.preinjective_limits],
        axis=[Periodic.of(p) for p in limits.axis],
    )


def picture_report(picture: RhombicPicture) -> PictureReport:
    markers = [
        MarkerReport(
            families=list(marker.families),
            component=marker.component.value,
            limit=LimitReport(
                limit=Periodic.of(marker.limit.mu_limit),
                colimit=Periodic.of(marker.limit.mustar_limit),
                approach=marker.limit.approach.value,
            ),
            x=Rational.of(e_value(marker.limit.mu_limit)),
            y=Rational.of(e_value(marker.limit.mustar_limit)),
        )
        for marker in picture.markers
    ]
    points = [
        PointReport(
            module=p.name,
            component=p.component.value,
            mu=list(p.point.mu.entries),
            mustar=list(p.point.mustar.entries),
            x=Rational.of(p.point.x),
            y=Rational.of(p.point.y),
        )
        for p in picture.points
    ]
    return PictureReport(
        quiver=picture.quiver.text,
        markers=markers,
        points=points,
        mu_ticks=[Periodic.of(t) for t in picture.mu_ticks],
        mustar_ticks=[Periodic.of(t) for t in picture.mustar_ticks],
    )


def tiling_report_model(report: TilingReport) -> TilingReportModel:
    return TilingReportModel(
        kind=report.tube_kind.value,
        wf_order=[f.name for f in report.wf_order],
        ray_orders=[[f.name for f in cycle] for cycle in report.ray_orders],
        coray_orders=[[f.name for f in cycle] for cycle in report.coray_orders],
        tiled=report.tiled,
        widest=widest_report(report.extrema) if report.extrema else None,
    )


def widest_report(report: WidestExtremaReport) -> WidestReport:
    return WidestReport(
        unique_valley=report.unique_valley,
        unique_hill=report.unique_hill,
        winning_sinks={k: list(v) for k, v in report.winning_sinks.items()},
        winning_hill_sinks={k: list(v) for k, v in report.winning_hill_sinks.items()},
        width_table=dict(report.width_table),
        hill_width_table=dict(report.hill_width_table),
        syntactic_unique=report.syntactic_unique,
    )


def suite_report(result: SuiteResult) -> SuiteReport:
    return SuiteReport(
        suite=result.name,
        checked=result.checked,
        passed=result.passed,
        failures=result.failures,
        skipped=result.skipped,
    )


def export_json(report: BaseModel) -> str:
    """Stable JSON text: field order follows the schema."""
    return report.model_dump_json(indent=2) + "\n"
