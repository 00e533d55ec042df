"""Exception types raised by the globalent library."""


class GlobalEntError(Exception):
    """Base class for all globalent errors."""


class ZeroState(GlobalEntError):
    """Raised when a state vector with (numerically) zero norm is normalized."""


class EmptySubset(GlobalEntError):
    """Raised when an operation requires a nonempty qubit subset."""


class FullSubset(GlobalEntError):
    """Raised when a bipartition block must be a proper subset."""


class UnknownFixture(GlobalEntError):
    """Raised for fixture names this library does not define."""


class NormalizationFailure(GlobalEntError):
    """Raised when a parameter vector cannot be projected onto the unit sphere."""


class DegenerateGround(GlobalEntError):
    """Raised when the ground space of a Hamiltonian is (numerically) degenerate.

    Entanglement of "the" ground state is not well defined in that case; the
    caller decides how to proceed (sweeps record a flag instead of failing).
    """


class ParseError(GlobalEntError):
    """Raised for malformed input files."""


class NormalizationError(GlobalEntError):
    """Raised when an input state deviates from unit norm beyond tolerance."""
