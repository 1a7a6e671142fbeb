"""Shared value types for the measure toolkit."""

from enum import Enum


class Direction(Enum):
    """Orientation of the arrow between cover positions i and i+1."""

    FORWARD = ">"  # i -> i+1
    BACKWARD = "<"  # i+1 -> i

    def flip(self) -> "Direction":
        return Direction.BACKWARD if self is Direction.FORWARD else Direction.FORWARD


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def tag(self) -> str:
        return "L" if self is Side.LEFT else "R"


class Takeoff(Enum):
    RIGHT = "right"
    SYMMETRIC = "symmetric"


class ComponentClass(Enum):
    """Component of the Auslander-Reiten quiver an indecomposable lies in."""

    PREPROJECTIVE = "preprojective"
    PREINJECTIVE = "preinjective"
    REGULAR_LEFT = "regular-left-tube"
    REGULAR_RIGHT = "regular-right-tube"
    HOMOGENEOUS = "homogeneous"

    @property
    def is_regular(self) -> bool:
        return self in (
            ComponentClass.REGULAR_LEFT,
            ComponentClass.REGULAR_RIGHT,
            ComponentClass.HOMOGENEOUS,
        )

    def dual(self) -> "ComponentClass":
        """Class of the dual module; regular tags are kept."""
        if self is ComponentClass.PREPROJECTIVE:
            return ComponentClass.PREINJECTIVE
        if self is ComponentClass.PREINJECTIVE:
            return ComponentClass.PREPROJECTIVE
        return self


class TubeKind(Enum):
    LEFT = "left"
    RIGHT = "right"
    HOMOGENEOUS = "hom"

    @property
    def component(self) -> ComponentClass:
        return {
            TubeKind.LEFT: ComponentClass.REGULAR_LEFT,
            TubeKind.RIGHT: ComponentClass.REGULAR_RIGHT,
            TubeKind.HOMOGENEOUS: ComponentClass.HOMOGENEOUS,
        }[self]


class Ordering(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"

    @classmethod
    def of(cls, left, right) -> "Ordering":
        """Compare two keys with Python ordering."""
        if left < right:
            return cls.LESS
        if left > right:
            return cls.GREATER
        return cls.EQUAL

    def reverse(self) -> "Ordering":
        if self is Ordering.LESS:
            return Ordering.GREATER
        if self is Ordering.GREATER:
            return Ordering.LESS
        return self


class Approach(Enum):
    FROM_LEFT = "from-left"
    FROM_RIGHT = "from-right"
    FROM_BELOW = "from-below"
