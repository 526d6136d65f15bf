"""Exception types shared across the package."""


class ManalabError(Exception):
    """Base class for all package-specific errors."""


class ImaginaryResidue(ManalabError):
    """A trace that must be real carries imaginary weight above the hard limit."""


class UnknownState(ManalabError):
    """Requested named state does not exist."""


class BadParamCount(ManalabError):
    """Named state received the wrong number of parameters."""


class ParamOutOfRange(ManalabError):
    """A parameter lies outside its admissible interval."""


class DimensionTooLarge(ManalabError):
    """Requested dimension exceeds what the exhaustive routine supports."""


class NotBipartite(ManalabError):
    """Operation requires a state with exactly two subsystems."""


class SingularG(ManalabError):
    """Beamsplitter parameter matrix is singular mod d."""


class UnknownGate(ManalabError):
    """Requested gate name does not exist."""


class BetaDeltaZero(ManalabError):
    """Beamsplitter has beta*delta == 0 mod d, violating the hypothesis."""


class AlphaOne(ManalabError):
    """Renyi order alpha == 1 is not admissible."""


class NegativeEigenvalue(ManalabError):
    """Density matrix eigenvalue below the tolerated roundoff floor."""


class BadParams(ManalabError):
    """Closed-form oracle received malformed parameters."""
