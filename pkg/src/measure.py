"""Gabriel-Roiter measures as finite and eventually periodic sequences.

Measures are compared in the order F: ``a < b`` when ``a`` is a proper
initial segment of ``b``, or when at the first index where they differ the
entry of ``a`` is larger. Negating every entry turns this into Python's
tuple order, which is what ``f_key`` does.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import lcm
from typing import Iterable, Iterator, Union

from src.errors import EmptyPeriod
from src.models import Ordering

logger = logging.getLogger(__name__)


def f_key(entries: Iterable[int]) -> tuple[int, ...]:
    """Sort key under which tuple order is the F-order."""
    return tuple(-x for x in entries)


def render_entries(entries: Iterable[int]) -> str:
    """Concatenate entries, falling back to dots once an entry has two digits."""
    entries = tuple(entries)
    if all(x < 10 for x in entries):
        return "".join(str(x) for x in entries)
    return ".".join(str(x) for x in entries)


@total_ordering
@dataclass(frozen=True)
class Measure:
    """A finite sequence of positive integers."""

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        if any(x < 1 for x in entries):
            raise ValueError(f"Measure entries must be positive: {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, *entries: int) -> "Measure":
        return cls(tuple(entries))

    @property
    def total(self) -> int:
        """Sum of the entries, i.e. the dimension the measure describes."""
        return sum(self.entries)

    @property
    def key(self) -> tuple[int, ...]:
        return f_key(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Measure(self.entries[index])
        return self.entries[index]

    def __add__(self, other: "Measure") -> "Measure":
        if not isinstance(other, Measure):
            return NotImplemented
        return Measure(self.entries + other.entries)

    def __lt__(self, other: "Measure") -> bool:
        if not isinstance(other, Measure):
            return NotImplemented
        return self.key < other.key

    def is_prefix_of(self, other: "Measure") -> bool:
        return other.entries[: len(self.entries)] == self.entries

    def render(self) -> str:
        return render_entries(self.entries)

    def __str__(self) -> str:
        return self.render() or "()"


def cmp_measure(a: Measure, b: Measure) -> Ordering:
    return Ordering.of(a.key, b.key)


def concat_power(a: Measure, b: Measure, k: int) -> Measure:
    """``a`` followed by ``k`` copies of ``b``."""
    if k < 0:
        raise ValueError(f"Power must be nonnegative: {k}")
    return Measure(a.entries + b.entries * k)


def primitive_root(entries: tuple[int, ...]) -> tuple[int, ...]:
    """Shortest word whose power is ``entries``."""
    n = len(entries)
    for d in range(1, n + 1):
        if n % d == 0 and entries[:d] * (n // d) == entries:
            return entries[:d]
    return entries


def rotation_shift(entries: tuple[int, ...]) -> int:
    """Smallest shift u such that entries[u:] + entries[:u] is F-minimal."""
    n = len(entries)
    return min(range(n), key=lambda u: (f_key(entries[u:] + entries[:u]), u))


@dataclass(frozen=True)
class PeriodicMeasure:
    """The infinite sequence prefix·period·period·…

    Build instances through ``canonical_periodic`` so that equal sequences
    compare equal as dataclasses.
    """

    prefix: Measure
    period: Measure

    def unroll(self, n: int) -> tuple[int, ...]:
        """First ``n`` entries."""
        entries = list(self.prefix.entries[:n])
        period = self.period.entries
        while len(entries) < n:
            entries.extend(period)
        return tuple(entries[:n])

    def render(self) -> str:
        return f"{self.prefix.render()}({self.period.render()})"

    def __str__(self) -> str:
        return self.render()


AnyMeasure = Union[Measure, PeriodicMeasure]


def canonical_periodic(prefix: Measure, period: Measure) -> PeriodicMeasure:
    """Normal form of prefix·period^∞.

    The period becomes the F-minimal rotation of its primitive root and the
    prefix is as short as that allows.
    """
    if not period.entries:
        raise EmptyPeriod(f"Periodic measure {prefix} needs a nonempty period")

    head = list(prefix.entries)
    root = list(primitive_root(period.entries))
    while head and head[-1] == root[-1]:
        head.pop()
        root = [root[-1]] + root[:-1]

    shift = rotation_shift(tuple(root))
    head.extend(root[:shift])
    root = root[shift:] + root[:shift]
    return PeriodicMeasure(Measure(tuple(head)), Measure(tuple(root)))


def _parts(m: AnyMeasure) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if isinstance(m, PeriodicMeasure):
        return m.prefix.entries, m.period.entries
    return m.entries, ()


def unroll_bound(a: AnyMeasure, b: AnyMeasure) -> int:
    prefix_a, period_a = _parts(a)
    prefix_b, period_b = _parts(b)
    return len(prefix_a) + len(prefix_b) + 2 * lcm(len(period_a) or 1, len(period_b) or 1) + 1


def truncate(m: AnyMeasure, n: int) -> Measure:
    """Finite measure made of the first ``n`` entries (all of a finite one)."""
    if isinstance(m, PeriodicMeasure):
        return Measure(m.unroll(n))
    return Measure(m.entries[:n])


def cmp_periodic(a: AnyMeasure, b: AnyMeasure) -> Ordering:
    bound = unroll_bound(a, b)
    return cmp_measure(truncate(a, bound), truncate(b, bound))


def _finite_e(entries: Iterable[int]) -> Fraction:
    total = Fraction(0)
    sigma = 0
    for x in entries:
        sigma += x
        total += Fraction(1, 2**sigma)
    return total


def e_value(m: AnyMeasure) -> Fraction:
    """Exact value of the order embedding e(m) = sum of 2^-σ over partial sums σ."""
    if isinstance(m, PeriodicMeasure):
        head = _finite_e(m.prefix.entries)
        cycle = _finite_e(m.period.entries)
        ratio = Fraction(1, 2**m.period.total)
        return head + Fraction(1, 2**m.prefix.total) * cycle / (1 - ratio)
    return _finite_e(m.entries)
