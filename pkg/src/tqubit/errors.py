"""Exception and warning types shared across the package."""

from __future__ import annotations


class BoundaryMismatch(ValueError):
    """Two diagrams were composed along boundaries of unequal length."""


class SizeMismatch(ValueError):
    """Operands live on a different number of strands or points."""


class HasCrossings(ValueError):
    """A crossingless diagram was required but crossings are present."""


class IndexOutOfRange(IndexError):
    """A crossing or strand index does not exist in the diagram."""


class OpenBoundary(ValueError):
    """A closed diagram was required but boundary points remain."""


class DiagramTooLarge(ValueError):
    """The diagram exceeds the crossing-count cap for bracket evaluation."""


class DegenerateQubit(ValueError):
    """d**2 == 1 (the k=1 level), where the qubit construction collapses."""


class NotSeparable(ValueError):
    """A rank-1 factorization was requested of an entangled state."""


class NotApplicable(ValueError):
    """The requested recovery is not defined for this measurement pattern."""


class ZeroVector(ValueError):
    """An operation received the zero vector."""


class NonUnitaryPoint(UserWarning):
    """The representation is not unitary at this value of A.

    Raised as a warning, not an error: the computation still runs, but
    exact recovery is only guaranteed at A in {1, -1, i, -i}.
    """
