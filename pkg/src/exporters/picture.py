"""SVG and TikZ rendering of rhombic pictures through jinja2 templates."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from jinja2 import Environment, FileSystemLoader, select_autoescape

from src.config import Config
from src.measure import PeriodicMeasure, e_value
from src.models import Approach, ComponentClass
from src.rhombic import RhombicPicture

logger = logging.getLogger(__name__)

TEMPLATES_DIR = Path(__file__).parent / "templates"

COMPONENT_COLORS = {
    ComponentClass.PREPROJECTIVE: "#1f77b4",
    ComponentClass.PREINJECTIVE: "#d62728",
    ComponentClass.REGULAR_LEFT: "#9467bd",
    ComponentClass.REGULAR_RIGHT: "#e377c2",
    ComponentClass.HOMOGENEOUS: "#2ca02c",
}

# Offset of the approach arrow tail, in picture units before scaling.
_ARROW = Fraction(1, 40)


@dataclass(frozen=True)
class Label:
    prefix: str
    period: str

    @classmethod
    def of(cls, value: PeriodicMeasure) -> "Label":
        return cls(prefix=value.prefix.render(), period=value.period.render())


@dataclass(frozen=True)
class Tick:
    x: str
    y: str
    label: Label


@dataclass(frozen=True)
class Marker:
    x: str
    y: str
    tail_x: str
    tail_y: str
    color: str
    families: str
    mu: Label
    mustar: Label


@dataclass(frozen=True)
class Dot:
    x: str
    y: str
    color: str
    name: str


def _fmt(value: float) -> str:
    text = f"{value:.6f}"
    return "0.000000" if text == "-0.000000" else text


class PictureRenderer:
    """Project exact rhombic coordinates and fill the picture templates."""

    def __init__(self, scale: Optional[int] = None, rotate: Optional[bool] = None):
        self.scale = Config.SVG_SCALE if scale is None else scale
        self.rotate = Config.SVG_ROTATE if rotate is None else rotate
        if self.scale <= 0:
            raise ValueError(f"Scale must be positive, got {self.scale}")
        self.env = Environment(
            loader=FileSystemLoader(str(TEMPLATES_DIR)),
            autoescape=select_autoescape(enabled_extensions=("svg.j2",), default_for_string=False),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )

    def project(self, x: Fraction, y: Fraction) -> tuple[str, str]:
        """Picture coordinates; the μ axis points right, μ* up (both at 45° when rotated)."""
        if self.rotate:
            px, py = (x - y) * self.scale, (x + y) * self.scale
        else:
            px, py = x * self.scale, y * self.scale
        return _fmt(float(px)), _fmt(float(-py))

    def _ticks(self, values: list[PeriodicMeasure], starred: bool) -> list[Tick]:
        ticks = []
        for value in values:
            e = e_value(value)
            x, y = self.project(Fraction(0), e) if starred else self.project(e, Fraction(0))
            ticks.append(Tick(x=x, y=y, label=Label.of(value)))
        return ticks

    def _markers(self, picture: RhombicPicture) -> list[Marker]:
        markers = []
        for marker in picture.markers:
            ex = e_value(marker.limit.mu_limit)
            ey = e_value(marker.limit.mustar_limit)
            tail = {
                Approach.FROM_LEFT: (ex - _ARROW, ey),
                Approach.FROM_RIGHT: (ex + _ARROW, ey),
                Approach.FROM_BELOW: (ex, ey - _ARROW),
            }[marker.limit.approach]
            x, y = self.project(ex, ey)
            tail_x, tail_y = self.project(*tail)
            markers.append(
                Marker(
                    x=x,
                    y=y,
                    tail_x=tail_x,
                    tail_y=tail_y,
                    color=COMPONENT_COLORS[marker.component],
                    families=", ".join(marker.families),
                    mu=Label.of(marker.limit.mu_limit),
                    mustar=Label.of(marker.limit.mustar_limit),
                )
            )
        return markers

    def _context(self, picture: RhombicPicture) -> dict:
        origin = self.project(Fraction(0), Fraction(0))
        mu_end = self.project(Fraction(1), Fraction(0))
        mustar_end = self.project(Fraction(0), Fraction(1))
        dots = [
            Dot(*self.project(p.point.x, p.point.y), color=COMPONENT_COLORS[p.component], name=p.name)
            for p in picture.points
        ]
        margin = self.scale // 4
        if self.rotate:
            view_box = (-self.scale - margin, -2 * self.scale - margin, 2 * (self.scale + margin), 2 * (self.scale + margin))
        else:
            view_box = (-margin, -self.scale - margin, self.scale + 2 * margin, self.scale + 2 * margin)
        return {
            "quiver": picture.quiver.text,
            "scale": self.scale,
            "view_box": " ".join(str(v) for v in view_box),
            "origin": origin,
            "mu_end": mu_end,
            "mustar_end": mustar_end,
            "mu_ticks": self._ticks(picture.mu_ticks, starred=False),
            "mustar_ticks": self._ticks(picture.mustar_ticks, starred=True),
            "markers": self._markers(picture),
            "dots": dots,
        }

    def render_svg(self, picture: RhombicPicture) -> str:
        text = self.env.get_template("rhombic.svg.j2").render(**self._context(picture))
        logger.debug(f"Rendered SVG for {picture.quiver.word}: {len(text)} characters")
        return text

    def render_tikz(self, picture: RhombicPicture) -> str:
        context = self._context(picture)
        # TikZ y grows upwards.
        for key in ("mu_ticks", "mustar_ticks", "markers", "dots"):
            context[key] = [_flip(item) for item in context[key]]
        for key in ("origin", "mu_end", "mustar_end"):
            context[key] = (context[key][0], _negate(context[key][1]))
        return self.env.get_template("rhombic.tikz.j2").render(**context)


def _negate(value: str) -> str:
    return _fmt(-float(value))


def _flip(item):
    changes = {"y": _negate(item.y)}
    if isinstance(item, Marker):
        changes["tail_y"] = _negate(item.tail_y)
    return type(item)(**{**item.__dict__, **changes})
