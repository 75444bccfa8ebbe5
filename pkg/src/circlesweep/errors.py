"""Exception types shared across the package."""


class CircleSweepError(Exception):
    """Base class for all package errors."""


class DegenerateIntersection(CircleSweepError):
    """Two circles are tangent or coincident within tolerance.

    Tangency is an error rather than an empty intersection so that
    validation can report the violated arrangement clause.
    """

    def __init__(self, kind: str, detail: str = ""):
        self.kind = kind  # "tangency" | "coincident"
        super().__init__(f"degenerate circle pair ({kind}){': ' + detail if detail else ''}")


class NotOnCircle(CircleSweepError):
    """Queried point does not lie on the circle within tolerance."""


class InvalidArrangement(CircleSweepError):
    """Operation requires a valid arrangement."""


class RequestAtEvent(CircleSweepError):
    """Fiber requested at (or too close to) a critical sweep value."""


class NotACorner(CircleSweepError):
    """Point is not an intersection point of exactly two circles."""


class ZeroComponent(CircleSweepError):
    """A corner-frame direction has a vanishing coordinate component."""


class NotCriticalPole(CircleSweepError):
    """Point is not a boundary sweep-critical pole for the axis."""


class DegeneratePoint(CircleSweepError):
    """Move point is too close to another feature to pick a safe radius."""


class CannotPlace(CircleSweepError):
    """Small-circle addition failed validation even after radius retries."""


class SeedSwallowed(CircleSweepError):
    """The new circle would contain the seed point."""


class OutsideClosure(CircleSweepError):
    """Point is not in the closure of the selected region."""


class BadAnchor(CircleSweepError):
    """Rewrite anchor vertex/edge missing or of the wrong shape."""


class LabelOrderViolation(CircleSweepError):
    """Rewrite labels violate the required ordering constraints."""


class UnknownCase(CircleSweepError):
    """Move classification tag outside the supported catalog."""


class UnsupportedConfiguration(CircleSweepError):
    """Geometry outside the supported catalog (e.g. corner on a pole fiber)."""
