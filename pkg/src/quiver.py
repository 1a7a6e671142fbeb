"""Quivers of type Ã_n, their universal cover and hook systems."""

import logging
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from src.errors import (
    BoundTooSmall,
    DuplicateLabel,
    EmptySequence,
    LabelCountMismatch,
    MalformedWord,
    OrientedCycle,
    UnknownLabel,
)
from src.measure import Measure, f_key, primitive_root, rotation_shift
from src.models import Direction, Takeoff, TubeKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HookSystem:
    """Minimally rotated left and right hook sequences of a quiver."""

    L: Measure
    R: Measure
    takeoff: Takeoff
    reflected: bool

    @property
    def s(self) -> int:
        return len(self.L)

    @property
    def t(self) -> int:
        return len(self.R)

    @property
    def h(self) -> int:
        return self.L.total

    @property
    def homogeneous_period(self) -> Measure:
        return Measure((self.h,))

    def periods(self) -> list[Measure]:
        """Distinct candidates for a periodic part, in the order L, R, (h)."""
        blocks = []
        for block in (self.L, self.R, self.homogeneous_period):
            if block not in blocks:
                blocks.append(block)
        return blocks


@dataclass(frozen=True)
class QuiverSpec:
    """An Ã_n quiver given by its cyclic orientation word.

    ``edges[i]`` is the arrow between vertex i and vertex i+1 mod h.
    """

    edges: tuple[Direction, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        h = len(self.edges)
        if h < 2:
            raise MalformedWord(f"Quiver needs at least 2 vertices, got {h}")
        if len(set(self.edges)) < 2:
            raise OrientedCycle(f"Word {self.word!r} is an oriented cycle")
        if len(self.labels) != h:
            raise LabelCountMismatch(f"Expected {h} labels, got {len(self.labels)}")
        if len(set(self.labels)) != h:
            raise DuplicateLabel(f"Vertex labels must be distinct: {', '.join(self.labels)}")

    @property
    def h(self) -> int:
        return len(self.edges)

    @property
    def word(self) -> str:
        return "".join(d.value for d in self.edges)

    @property
    def text(self) -> str:
        return ",".join((self.word,) + self.labels)

    @cached_property
    def hooks(self) -> HookSystem:
        return hook_system(self)

    @cached_property
    def _cover_arrows(self) -> tuple[Direction, ...]:
        if self.hooks.reflected:
            return tuple(self.edges[(-i - 1) % self.h].flip() for i in range(self.h))
        return self.edges

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabel(f"Vertex {label!r} is not one of {', '.join(self.labels)}") from None

    def arrows(self) -> list[tuple[str, str]]:
        """Arrows as (source, target) label pairs, one per edge."""
        result = []
        for i, direction in enumerate(self.edges):
            here, there = self.labels[i], self.labels[(i + 1) % self.h]
            result.append((here, there) if direction is Direction.FORWARD else (there, here))
        return result

    def sinks(self) -> list[str]:
        sources = {source for source, _ in self.arrows()}
        return [label for label in self.labels if label not in sources]

    def sources(self) -> list[str]:
        targets = {target for _, target in self.arrows()}
        return [label for label in self.labels if label not in targets]


def parse_quiver(text: str) -> QuiverSpec:
    """Parse ``"><<><,a,b,c,d,e"``; labels default to v0..v{h-1}."""
    parts = [part.strip() for part in text.split(",")]
    word = parts[0]
    if len(word) < 2 or any(c not in "<>" for c in word):
        raise MalformedWord(f"Expected a word over '<' and '>' of length >= 2, got {word!r}")
    labels = tuple(parts[1:]) or tuple(f"v{i}" for i in range(len(word)))
    return QuiverSpec(edges=tuple(Direction(c) for c in word), labels=labels)


def opposite_quiver(q: QuiverSpec) -> QuiverSpec:
    return QuiverSpec(edges=tuple(d.flip() for d in q.edges), labels=q.labels)


def cover_arrow(q: QuiverSpec, i: int) -> Direction:
    """Direction of the cover arrow between positions i and i+1."""
    return q._cover_arrows[i % q.h]


def cover_vertex(q: QuiverSpec, i: int) -> int:
    """Vertex of the quiver that cover position i maps to."""
    return (-i) % q.h if q.hooks.reflected else i % q.h


def cover_label(q: QuiverSpec, i: int) -> str:
    return q.labels[cover_vertex(q, i)]


def cover_position(q: QuiverSpec, label: str) -> int:
    """Position in [0, h) of the cover lying over ``label``."""
    vertex = q.index_of(label)
    return (-vertex) % q.h if q.hooks.reflected else vertex


def edge_direction(q: QuiverSpec, u: str, v: str) -> Direction:
    """Arrow between adjacent vertices u and v, read from u towards v."""
    for source, target in q.arrows():
        if (source, target) == (u, v):
            return Direction.FORWARD
        if (source, target) == (v, u):
            return Direction.BACKWARD
    raise UnknownLabel(f"Vertices {u!r} and {v!r} are not adjacent")


def minimal_rotation(seq) -> tuple[tuple[int, ...], int, bool]:
    """F-minimal rotation of ``seq``, the smallest shift reaching it, and primitivity."""
    seq = tuple(seq)
    if not seq:
        raise EmptySequence("Cannot rotate an empty sequence")
    shift = rotation_shift(seq)
    return seq[shift:] + seq[:shift], shift, primitive_root(seq) == seq


def _raw_hooks(arrows: tuple[Direction, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Left and right hook lengths over one period, walked from a sink."""
    h = len(arrows)

    def arrow(i: int) -> Direction:
        return arrows[i % h]

    sink = next(
        p for p in range(h)
        if arrow(p - 1) is Direction.FORWARD and arrow(p) is Direction.BACKWARD
    )

    right = []
    x = sink
    while x < sink + h:
        y = x + 1
        while y < sink + h and arrow(y) is Direction.FORWARD:
            y += 1
        right.append(y - x)
        x = y

    left = []
    x = sink
    while x > sink - h:
        y = x - 1
        while y > sink - h and arrow(y - 1) is Direction.BACKWARD:
            y -= 1
        left.append(x - y)
        x = y

    return tuple(left), tuple(right)


def hook_system(q: QuiverSpec) -> HookSystem:
    """Hook sequences normalized so that L <=_F R, mirroring the cover if needed."""
    left, right = _raw_hooks(q.edges)
    L, _, _ = minimal_rotation(left)
    R, _, _ = minimal_rotation(right)

    reflected = f_key(R) < f_key(L)
    if reflected:
        mirrored = tuple(q.edges[(-i - 1) % q.h].flip() for i in range(q.h))
        left, right = _raw_hooks(mirrored)
        L, _, _ = minimal_rotation(left)
        R, _, _ = minimal_rotation(right)

    takeoff = Takeoff.SYMMETRIC if L == R else Takeoff.RIGHT
    logger.debug(f"Hook system of {q.word}: L={L} R={R} reflected={reflected}")
    return HookSystem(L=Measure(L), R=Measure(R), takeoff=takeoff, reflected=reflected)


def random_quiver(rng: random.Random, max_vertices: int) -> QuiverSpec:
    """A random valid orientation with 3 to ``max_vertices`` vertices."""
    while True:
        h = rng.randint(3, max_vertices)
        word = "".join(rng.choice("<>") for _ in range(h))
        if "<" in word and ">" in word:
            return parse_quiver(word)


@dataclass(frozen=True)
class WidestExtremaReport:
    unique_valley: bool
    unique_hill: bool
    winning_sinks: dict[str, tuple[str, ...]]
    winning_hill_sinks: dict[str, tuple[str, ...]]
    width_table: dict[str, int]
    hill_width_table: dict[str, int]
    syntactic_unique: bool


def sink_widths(q: QuiverSpec) -> dict[str, int]:
    """Per sink, the total length of the two maximal directed paths ending there."""
    widths = {}
    h = q.h
    for vertex, label in enumerate(q.labels):
        into_left = q.edges[(vertex - 1) % h] is Direction.FORWARD
        into_right = q.edges[vertex] is Direction.BACKWARD
        if not (into_left and into_right):
            continue
        width = 0
        i = vertex - 1
        while q.edges[i % h] is Direction.FORWARD and width < h:
            width += 1
            i -= 1
        j = vertex
        while q.edges[j % h] is Direction.BACKWARD and width < h:
            width += 1
            j += 1
        widths[label] = width
    return widths


def _stands_out(widths: dict[str, int]) -> bool:
    ranked = sorted(widths.values(), reverse=True)
    return len(ranked) == 1 or ranked[0] - ranked[1] >= 2


def _tube_winners(q: QuiverSpec, dim_bound: int) -> dict[str, tuple[str, ...]]:
    # Imported here: grcompute and artubes build on this module.
    from src.artubes import tube_string_modules
    from src.grcompute import winning_sinks

    winners = {}
    for kind in (TubeKind.LEFT, TubeKind.RIGHT):
        common: Optional[set[str]] = None
        for sm in tube_string_modules(q, kind, 2 * q.h, dim_bound):
            labels = {cover_label(q, p) for p in winning_sinks(sm)}
            common = labels if common is None else common & labels
        winners[kind.value] = tuple(sorted(common or ()))
    return winners


def widest_extrema_report(q: QuiverSpec, dim_bound: int) -> WidestExtremaReport:
    """Check whether one sink (and one source) wins the Greedy Algorithm stably.

    For every exceptional tube the winning sink labels of all modules with
    dimension between 2h and ``dim_bound`` are intersected; the valley is
    unique when every intersection is nonempty. Hills are the same check
    over the opposite quiver.
    """
    if dim_bound < 3 * q.h:
        raise BoundTooSmall(f"Dimension bound {dim_bound} is below 3h = {3 * q.h}")

    valley = _tube_winners(q, dim_bound)
    hill = _tube_winners(opposite_quiver(q), dim_bound)
    widths = sink_widths(q)
    hill_widths = sink_widths(opposite_quiver(q))

    report = WidestExtremaReport(
        unique_valley=all(valley.values()),
        unique_hill=all(hill.values()),
        winning_sinks=valley,
        winning_hill_sinks=hill,
        width_table=widths,
        hill_width_table=hill_widths,
        syntactic_unique=_stands_out(widths) and _stands_out(hill_widths),
    )
    logger.info(
        f"Widest extrema of {q.word}: valley={report.unique_valley} hill={report.unique_hill}"
    )
    return report
