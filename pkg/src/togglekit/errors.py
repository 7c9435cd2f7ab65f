"""Exception types shared across the package."""


class TogglekitError(Exception):
    """Base class for all errors raised by this package."""


class CycleDetected(TogglekitError):
    """The cover relation contains a directed cycle."""


class StateSpaceTooLarge(TogglekitError):
    """An enumeration exceeded the configured cap."""


class NotBijective(TogglekitError):
    """An action sent two distinct states to the same state."""


class StateEscaped(TogglekitError):
    """An action stepped outside the enumerated state set."""


class NotLayered(TogglekitError):
    """The poset carries no layer metadata."""


class UnsupportedArity(TogglekitError):
    """Chain products support only 2 or 3 factors."""


class UnsupportedRank(TogglekitError):
    """Root poset rank out of range for the requested type."""


class EmptyShape(TogglekitError):
    """A two-row interior with no cells."""


class NotHeightOne(TogglekitError):
    """Boundary words require an rc-poset of height 1."""


class NoValidPath(TogglekitError):
    """No monotone boundary path matches the given ideal."""


class NotBallot(TogglekitError):
    """Binary word fails the ballot condition."""


class PairingFailure(TogglekitError):
    """Matching construction could not pair the points."""


class NotTwoLayers(TogglekitError):
    """Bracket words require a boundary path matrix with exactly 2 rows."""


class Unbalanced(TogglekitError):
    """Bracket word is not balanced."""


class InvalidMatrix(TogglekitError):
    """Not a valid boundary path matrix."""


class InvalidAsm(TogglekitError):
    """Not a valid alternating sign matrix."""


class DomainError(TogglekitError):
    """Arguments outside the defined domain of a q-analogue."""


class DivisionInexact(TogglekitError):
    """Polynomial division left a nonzero remainder."""


class OrbitSizeError(TogglekitError):
    """An orbit size does not divide the cyclic group order."""


class CountMismatch(TogglekitError):
    """Polynomial value at q=1 disagrees with the state count."""


class ConfigError(TogglekitError):
    """Invalid run configuration (family/action/kind mismatch)."""
