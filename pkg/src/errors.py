"""Domain errors raised by the measure toolkit."""


class GRError(ValueError):
    """Base class for every domain error.

    Errors carry a module-qualified code such as ``quiver.OrientedCycle`` so
    the CLI can report where a failure originated.
    """

    module = "gr"

    @property
    def code(self) -> str:
        return f"{self.module}.{type(self).__name__}"


class QuiverError(GRError):
    module = "quiver"


class MalformedWord(QuiverError):
    pass


class OrientedCycle(QuiverError):
    pass


class DuplicateLabel(QuiverError):
    pass


class LabelCountMismatch(QuiverError):
    pass


class EmptySequence(QuiverError):
    pass


class BoundTooSmall(QuiverError):
    pass


class MeasureError(GRError):
    module = "measure"


class EmptyPeriod(MeasureError):
    pass


class StringError(GRError):
    module = "strings"


class UnknownLabel(StringError):
    pass


class NonpositiveDim(StringError):
    pass


class NoIncomingArrow(StringError):
    pass


class NoOutgoingArrow(StringError):
    pass


class ComputeError(GRError):
    module = "grcompute"


class NotASink(ComputeError):
    pass


class NoPeriodicPart(ComputeError):
    pass


class BoundExceeded(ComputeError):
    pass


class NoMultiplicity(ComputeError):
    pass


class TubeError(GRError):
    module = "artubes"


class NoMonoStep(TubeError):
    pass


class NoEpiStep(TubeError):
    pass


class TubeShapeError(TubeError):
    pass


class RhombicError(GRError):
    module = "rhombic"


class LimitMismatch(RhombicError):
    pass


class NotRegular(RhombicError):
    pass


class ChainBroken(RhombicError):
    pass


class NoApproach(RhombicError):
    pass


class UsageError(GRError):
    module = "cli"
