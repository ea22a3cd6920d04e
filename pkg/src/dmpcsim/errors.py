"""Exception hierarchy for dmpcsim."""


class DmpcError(Exception):
    """Base class for all dmpcsim errors."""


class DimensionMismatch(DmpcError, ValueError):
    pass


class UnboundedInner(DmpcError):
    """Inner set is unbounded along a direction the outer set constrains."""


class NoFeasibleScale(DmpcError):
    """No scale in the search range satisfies the sizing predicate."""


class UncenteredSet(DmpcError):
    """Outer-ball construction requires a set symmetric about the origin."""


class SingularB(DmpcError):
    """Wheel geometry matrix is not invertible."""


class NonFiniteState(DmpcError, FloatingPointError):
    """NaN or infinity encountered during integration or differentiation."""


class NoConvergence(DmpcError):
    pass


class NotStabilizable(DmpcError):
    """Riccati iteration diverged; the pair (A, B) is not stabilizable."""


class NoValidLevel(DmpcError):
    """Terminal-set level search collapsed below its lower bound."""


class UnboundedOffset(DmpcError):
    """Offset set is unbounded along a coordinate the terminal cost weights."""


class Infeasible(DmpcError):
    """A local problem has no solution although one is guaranteed upstream."""


class InitInfeasible(DmpcError):
    """No initially feasible trajectories found for the given start states."""


class TerminalViolation(DmpcError):
    """Previous solution does not end inside its terminal set."""


class InvariantViolation(DmpcError):
    """A runtime invariant that theory guarantees was violated."""


class PeerDisconnected(DmpcError, ConnectionError):
    pass


class DecodeError(DmpcError, ValueError):
    pass


class RoundTimeout(DmpcError, TimeoutError):
    pass


class ParseError(DmpcError, ValueError):
    pass


class ValidationError(DmpcError, ValueError):
    """Scenario validation failure; message carries the offending key path."""
