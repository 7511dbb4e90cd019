"""Exception hierarchy.

Domain errors (bad mathematical input, e.g. inverting a non-unit) derive from
KnDomainError; format/usage errors (unparseable literals, malformed files)
derive from KnFormatError.  The CLI maps these to exit codes 1 and 2.
"""


class KnError(Exception):
    pass


class KnDomainError(KnError):
    pass


class KnFormatError(KnError):
    pass


class NotInvertible(KnDomainError):
    """Division by a scalar that is not a unit of the Laurent ring."""


class NotASquare(KnDomainError):
    """No square root of the scalar exists in the supported domain."""


class NonIntegrablePole(KnDomainError):
    """Term-by-term integration hit an exponent -1 term."""


class ParityMismatch(KnDomainError):
    """Sum of two series whose exponents live on different half-integer grids."""


class TableTooSmall(KnDomainError):
    """A recursion table does not cover the requested index."""


class WindowTooSmall(KnDomainError):
    """The oracle's monomial window cannot connect the target to the basis."""


class NotDihedralCaseA(KnDomainError):
    """Curve does not satisfy the plus-sign coefficient symmetry."""


class NonConstantCharacter(KnDomainError):
    """A trace retained symbolic variables; symmetry constraints are violated."""


class NonIntegralMultiplicity(KnDomainError):
    """Orthogonality solve produced a non-integer or negative multiplicity."""


class DuplicateRoot(KnDomainError):
    pass


class ZeroRoot(KnDomainError):
    pass


class ToleranceConflict(KnDomainError):
    """Two numeric matchings disagree within the requested tolerance."""


class AmbiguousC(KnDomainError):
    """Several reflection parameters pass the symmetry check in search mode."""


class InconsistentParams(KnDomainError):
    pass


class KDoesNotDivide(KnDomainError):
    pass


class ScalarParseError(KnFormatError):
    pass


class CurveFormatError(KnFormatError):
    pass
