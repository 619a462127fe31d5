"""Exception hierarchy shared by the pebbletree solvers and tools."""


class PebbleTreeError(Exception):
    """Base class for all pebbletree errors."""


class NonAdjacentMove(PebbleTreeError):
    """A move's endpoints are not joined by a tree edge."""


class DestinationOccupied(PebbleTreeError):
    """A move's destination vertex already holds a pebble."""


class IllegalMoveInPlan(PebbleTreeError):
    """A plan contains an illegal move; carries the offending index."""

    def __init__(self, index, cause):
        self.index = index
        self.cause = cause
        super().__init__(f"illegal move at index {index}: {cause}")


class PebbleRestsOnTransShipment(PebbleTreeError):
    """A pebble occupies a trans-shipment vertex outside a transit pair.

    ``index`` is the move index after which the violation holds; -1 means
    the starting configuration itself is in violation.
    """

    def __init__(self, index):
        self.index = index
        super().__init__(f"pebble rests on trans-shipment vertex after move {index}")


class SourceNotHole(PebbleTreeError):
    """Hole-routing requested from a vertex that is not a hole."""


class TransShipmentSource(PebbleTreeError):
    """Hole-routing requested from a trans-shipment vertex."""


class PathBlocked(PebbleTreeError):
    """Single-pebble walk requested along a path that is not empty."""


class TransShipmentTarget(PebbleTreeError):
    """A pebble was asked to come to rest on a trans-shipment vertex."""


class NotConnectedSubtree(PebbleTreeError):
    """A vertex set expected to induce a connected subtree does not."""


class NotEnoughHoles(PebbleTreeError):
    """Fewer holes available than the operation requires."""


class InsufficientCandidates(PebbleTreeError):
    """closest_subset was asked for more vertices than it was given."""


class PreconditionHoleDeficit(PebbleTreeError):
    """The hole-rich route procedure was entered without enough holes ahead."""


class DegenerateGeometry(PebbleTreeError):
    """The route decomposition needed a junction or parking spot that does not exist."""


class InfeasibleAssumption(PebbleTreeError):
    """The instance violates the hole-count feasibility assumption."""


class InternalStuck(PebbleTreeError):
    """A solver reached a state its completeness argument rules out (bug guard)."""


class TargetIsTransShipment(PebbleTreeError):
    """A resting target was placed on a trans-shipment vertex."""


class ValidationFailed(PebbleTreeError):
    """A solver produced a plan that fails replay validation (bug guard)."""


class AssumptionUnsatisfiable(PebbleTreeError):
    """Random generation could not satisfy the feasibility assumption."""


class InstanceParseError(PebbleTreeError):
    """A textual instance or plan document failed to parse.

    Carries the 1-based line number of the offending line.
    """

    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")
