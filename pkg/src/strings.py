"""String modules as intervals in the universal cover, and the band object H[q]."""

import logging
from dataclasses import dataclass
from typing import Union

from src.errors import NoIncomingArrow, NonpositiveDim, NoOutgoingArrow
from src.models import ComponentClass, Direction, Side
from src.quiver import (
    QuiverSpec,
    cover_arrow,
    cover_label,
    cover_position,
    cover_vertex,
    opposite_quiver,
)

logger = logging.getLogger(__name__)

F = Direction.FORWARD
B = Direction.BACKWARD


@dataclass(frozen=True)
class StringModule:
    """The interval [lo, lo + dim - 1] of the cover, up to shifts by h.

    ``lo`` is stored in [0, h).
    """

    quiver: QuiverSpec
    lo: int
    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise NonpositiveDim(f"String modules need positive dimension, got {self.dim}")
        object.__setattr__(self, "lo", self.lo % self.quiver.h)

    @classmethod
    def from_positions(cls, quiver: QuiverSpec, lo: int, hi: int) -> "StringModule":
        return cls(quiver, lo, hi - lo + 1)

    @property
    def hi(self) -> int:
        return self.lo + self.dim - 1

    @property
    def left_label(self) -> str:
        return cover_label(self.quiver, self.lo)

    @property
    def right_label(self) -> str:
        return cover_label(self.quiver, self.hi)

    @property
    def name(self) -> str:
        return f"{self.left_label}{self.right_label}_{self.dim}"

    def __repr__(self) -> str:
        return f"StringModule({self.name})"


@dataclass(frozen=True)
class HomogeneousModule:
    """The band module of quasi-length q in a homogeneous tube."""

    quiver: QuiverSpec
    q: int

    def __post_init__(self):
        if self.q < 1:
            raise NonpositiveDim(f"Quasi-length must be positive, got {self.q}")

    @property
    def dim(self) -> int:
        return self.q * self.quiver.h

    @property
    def name(self) -> str:
        return f"H[{self.q}]"

    def __repr__(self) -> str:
        return f"HomogeneousModule({self.name})"


Module = Union[StringModule, HomogeneousModule]


def make_string(q: QuiverSpec, left_label: str, dim: int) -> StringModule:
    """The string of length ``dim`` whose left end lies over ``left_label``."""
    return StringModule(q, cover_position(q, left_label), dim)


def classify(m: Module) -> ComponentClass:
    """Component class read off the two cover arrows just outside the interval."""
    if isinstance(m, HomogeneousModule):
        return ComponentClass.HOMOGENEOUS

    left = cover_arrow(m.quiver, m.lo - 1)
    right = cover_arrow(m.quiver, m.hi)
    if left is F and right is B:
        return ComponentClass.PREPROJECTIVE
    if left is B and right is F:
        return ComponentClass.PREINJECTIVE
    if left is B:
        return ComponentClass.REGULAR_RIGHT
    return ComponentClass.REGULAR_LEFT


def string_type(sm: StringModule) -> tuple[str, str]:
    return sm.left_label, sm.right_label


def dual_string(m: Module) -> Module:
    """The dual module over the opposite quiver, covering the same vertices."""
    op = opposite_quiver(m.quiver)
    if isinstance(m, HomogeneousModule):
        return HomogeneousModule(op, m.q)

    if m.quiver.hooks.reflected == op.hooks.reflected:
        return StringModule(op, m.lo, m.dim)
    # The two covers run in opposite directions over the cycle.
    vertex = cover_vertex(m.quiver, m.hi)
    return StringModule(op, cover_position(op, m.quiver.labels[vertex]), m.dim)


def add_hook(sm: StringModule, side: Side) -> StringModule:
    """Extend past the incoming arrow on ``side`` and through the following outgoing run."""
    q = sm.quiver
    if side is Side.RIGHT:
        if cover_arrow(q, sm.hi) is not B:
            raise NoIncomingArrow(f"{sm.name} has no incoming arrow on the right")
        y = sm.hi + 1
        while cover_arrow(q, y) is F:
            y += 1
        return StringModule.from_positions(q, sm.lo, y)

    if cover_arrow(q, sm.lo - 1) is not F:
        raise NoIncomingArrow(f"{sm.name} has no incoming arrow on the left")
    y = sm.lo - 1
    while cover_arrow(q, y - 1) is B:
        y -= 1
    return StringModule.from_positions(q, y, sm.hi)


def delete_cohook(sm: StringModule, side: Side) -> StringModule:
    """Remove the maximal closed end segment on ``side``.

    Raises NonpositiveDim when that segment is the whole interval.
    """
    q = sm.quiver
    if side is Side.LEFT:
        if cover_arrow(q, sm.lo - 1) is not B:
            raise NoOutgoingArrow(f"{sm.name} has no outgoing arrow on the left")
        j = sm.lo
        while j < sm.hi and cover_arrow(q, j) is F:
            j += 1
        if j >= sm.hi:
            raise NonpositiveDim(f"Deleting the left cohook of {sm.name} leaves nothing")
        return StringModule.from_positions(q, j + 1, sm.hi)

    if cover_arrow(q, sm.hi) is not F:
        raise NoOutgoingArrow(f"{sm.name} has no outgoing arrow on the right")
    j = sm.hi
    while j > sm.lo and cover_arrow(q, j - 1) is B:
        j -= 1
    if j <= sm.lo:
        raise NonpositiveDim(f"Deleting the right cohook of {sm.name} leaves nothing")
    return StringModule.from_positions(q, sm.lo, j - 1)


def is_closed(q: QuiverSpec, a: int, b: int, lo: int, hi: int) -> bool:
    """Whether [a, b] inside [lo, hi] is closed under the arrows of [lo, hi]."""
    return (a == lo or cover_arrow(q, a - 1) is F) and (b == hi or cover_arrow(q, b) is B)


def submodule_subintervals(sm: StringModule) -> list[StringModule]:
    """All subintervals of ``sm`` that are submodules, the module itself included."""
    q = sm.quiver
    result = []
    for a in range(sm.lo, sm.hi + 1):
        if a != sm.lo and cover_arrow(q, a - 1) is not F:
            continue
        for b in range(a, sm.hi + 1):
            if is_closed(q, a, b, sm.lo, sm.hi):
                result.append(StringModule.from_positions(q, a, b))
    return result


def interval_sinks(q: QuiverSpec, lo: int, hi: int) -> list[int]:
    """Positions of [lo, hi] receiving every arrow to their neighbours inside it."""
    return [p for p in range(lo, hi + 1) if is_closed(q, p, p, lo, hi)]
