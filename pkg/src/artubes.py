"""Families, rays, corays, tubes and Auslander-Reiten meshes for Ã_n."""

import logging
from dataclasses import dataclass, field
from typing import Optional

from src.errors import NoEpiStep, NoMonoStep, NonpositiveDim, TubeShapeError
from src.models import ComponentClass, Side, TubeKind
from src.quiver import QuiverSpec
from src.strings import (
    HomogeneousModule,
    Module,
    StringModule,
    add_hook,
    classify,
    delete_cohook,
    string_type,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Family:
    """Modules of one string type and class, ordered by dimension.

    ``first`` is the smallest member; the k-th member is h·k dimensions
    larger (one quasi-length larger for the homogeneous family).
    """

    first: Module

    @property
    def quiver(self) -> QuiverSpec:
        return self.first.quiver

    @property
    def component(self) -> ComponentClass:
        return classify(self.first)

    @property
    def homogeneous(self) -> bool:
        return isinstance(self.first, HomogeneousModule)

    @property
    def name(self) -> str:
        if self.homogeneous:
            return "H"
        left, right = string_type(self.first)
        return f"{left}{right}_*"

    @property
    def key(self) -> tuple[str, str, ComponentClass]:
        if self.homogeneous:
            return "H", "H", ComponentClass.HOMOGENEOUS
        left, right = string_type(self.first)
        return left, right, self.component

    def member(self, k: int) -> Module:
        if self.homogeneous:
            return HomogeneousModule(self.quiver, self.first.q + k)
        return StringModule(self.quiver, self.first.lo, self.first.dim + k * self.quiver.h)

    def members(self, count: int, start: int = 0) -> list[Module]:
        return [self.member(k) for k in range(start, start + count)]

    def index_at_least(self, dim: int) -> int:
        """Index of the smallest member with dimension >= dim."""
        step = self.quiver.h
        return max(0, -(-(dim - self.first.dim) // step))

    def member_at_least(self, dim: int) -> Module:
        return self.member(self.index_at_least(dim))

    def members_up_to(self, max_dim: int) -> list[Module]:
        result = []
        k = 0
        while self.member(k).dim <= max_dim:
            result.append(self.member(k))
            k += 1
        return result

    def __str__(self) -> str:
        return self.name


def family_of(m: Module) -> Family:
    if isinstance(m, HomogeneousModule):
        return Family(HomogeneousModule(m.quiver, 1))
    h = m.quiver.h
    return Family(StringModule(m.quiver, m.lo, (m.dim - 1) % h + 1))


def all_families(q: QuiverSpec) -> list[Family]:
    """The h² string families followed by the homogeneous family."""
    families = [
        Family(StringModule(q, lo, dim))
        for lo in range(q.h)
        for dim in range(1, q.h + 1)
    ]
    families.sort(key=lambda f: f.name)
    families.append(Family(HomogeneousModule(q, 1)))
    return families


def ray_successor(m: Module, side: Optional[Side] = None) -> Module:
    """Target of the irreducible monomorphism starting at ``m``.

    Preprojective modules have two; the side must then be given.
    """
    if isinstance(m, HomogeneousModule):
        return HomogeneousModule(m.quiver, m.q + 1)

    component = classify(m)
    if component is ComponentClass.PREINJECTIVE:
        raise NoMonoStep(f"{m.name} is preinjective; no hook can be added")
    if component is ComponentClass.REGULAR_RIGHT:
        return add_hook(m, Side.RIGHT)
    if component is ComponentClass.REGULAR_LEFT:
        return add_hook(m, Side.LEFT)
    if side is None:
        raise ValueError(f"{m.name} is preprojective; choose the side to add a hook on")
    return add_hook(m, side)


def coray_predecessor(m: Module, side: Optional[Side] = None) -> Module:
    """Target of the irreducible epimorphism starting at ``m``."""
    if isinstance(m, HomogeneousModule):
        if m.q == 1:
            raise NoEpiStep(f"{m.name} lies on the mouth of its tube")
        return HomogeneousModule(m.quiver, m.q - 1)

    component = classify(m)
    if component is ComponentClass.PREPROJECTIVE:
        raise NoEpiStep(f"{m.name} is preprojective; no cohook can be deleted")
    if component is ComponentClass.REGULAR_RIGHT:
        side = Side.LEFT
    elif component is ComponentClass.REGULAR_LEFT:
        side = Side.RIGHT
    elif side is None:
        raise ValueError(f"{m.name} is preinjective; choose the side to delete a cohook on")

    try:
        return delete_cohook(m, side)
    except NonpositiveDim:
        raise NoEpiStep(f"{m.name} lies on the mouth of its tube") from None


def tube_string_modules(q: QuiverSpec, kind: TubeKind, min_dim: int, max_dim: int) -> list[StringModule]:
    """String modules of an exceptional tube within a dimension range."""
    result = [
        StringModule(q, lo, dim)
        for dim in range(min_dim, max_dim + 1)
        for lo in range(q.h)
    ]
    return [sm for sm in result if classify(sm) is kind.component]


@dataclass
class Tube:
    """Grid of a tube: (mouth index, quasi-length) -> module, mouth on row 1."""

    quiver: QuiverSpec
    kind: TubeKind
    mouth: tuple[Module, ...]
    depth: int
    grid: dict[tuple[int, int], Module] = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.mouth)

    def ray(self, i: int) -> list[Module]:
        return [self.grid[(i % self.rank, j)] for j in range(1, self.depth + 1)]

    def rays(self) -> list[list[Module]]:
        return [self.ray(i) for i in range(self.rank)]

    def corays(self) -> list[list[Module]]:
        """Per mouth module, the modules whose epimorphism chain ends there."""
        corays: list[list[Module]] = [[] for _ in range(self.rank)]
        for j in range(1, self.depth + 1):
            for i in range(self.rank):
                module = self.grid[(i, j)]
                bottom = module
                for _ in range(j - 1):
                    bottom = coray_predecessor(bottom)
                corays[self.mouth.index(bottom)].append(module)
        return corays

    def families(self) -> list[Family]:
        seen = {family_of(module) for module in self.grid.values()}
        return sorted(seen, key=lambda f: f.name)

    def rows(self) -> list[list[Module]]:
        return [[self.grid[(i, j)] for i in range(self.rank)] for j in range(1, self.depth + 1)]


def _find_mouth(q: QuiverSpec, kind: TubeKind) -> tuple[Module, ...]:
    mouth = []
    for sm in tube_string_modules(q, kind, 1, q.h):
        try:
            coray_predecessor(sm)
        except NoEpiStep:
            mouth.append(sm)
    mouth.sort(key=lambda sm: sm.lo)
    return tuple(mouth)


def build_tube(q: QuiverSpec, kind: TubeKind, depth: int) -> Tube:
    if depth < 1:
        raise ValueError(f"Tube depth must be positive, got {depth}")

    if kind is TubeKind.HOMOGENEOUS:
        mouth: tuple[Module, ...] = (HomogeneousModule(q, 1),)
    else:
        mouth = _find_mouth(q, kind)
        expected = q.hooks.s if kind is TubeKind.LEFT else q.hooks.t
        if len(mouth) != expected:
            raise TubeShapeError(f"{kind.value} tube of {q.word} has {len(mouth)} quasi-simples, expected {expected}")
        if sum(m.dim for m in mouth) != q.h:
            raise TubeShapeError(f"Quasi-simples of the {kind.value} tube do not add up to h = {q.h}")

    tube = Tube(quiver=q, kind=kind, mouth=mouth, depth=depth)
    for i, module in enumerate(mouth):
        for j in range(1, depth + 1):
            tube.grid[(i, j)] = module
            module = ray_successor(module)

    if depth >= tube.rank and len(tube.families()) != tube.rank**2:
        raise TubeShapeError(f"{kind.value} tube of {q.word} has {len(tube.families())} families, expected {tube.rank ** 2}")

    logger.info(f"Built {kind.value} tube of {q.word}: rank {tube.rank}, mouth {', '.join(m.name for m in mouth)}")
    return tube


@dataclass(frozen=True)
class ARSequence:
    """0 -> a -> b1 (+) b2 -> c -> 0 with b1 the ray successor of a."""

    a: Module
    b1: Module
    b2: Optional[Module]
    c: Module

    def describe(self) -> str:
        middle = self.b1.name if self.b2 is None else f"{self.b1.name}+{self.b2.name}"
        return f"0->{self.a.name}->{middle}->{self.c.name}->0"


def ar_sequences(tube: Tube, depth: Optional[int] = None) -> list[ARSequence]:
    """Meshes starting at every grid cell up to ``depth``; mouth meshes have no b2."""
    depth = tube.depth if depth is None else min(depth, tube.depth)
    sequences = []
    for j in range(1, depth + 1):
        for i in range(tube.rank):
            a = tube.grid[(i, j)]
            b1 = ray_successor(a)
            b2 = coray_predecessor(a) if j > 1 else None
            sequences.append(ARSequence(a=a, b1=b1, b2=b2, c=coray_predecessor(b1)))
    return sequences
