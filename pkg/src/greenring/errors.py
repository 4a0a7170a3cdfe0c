"""Exception hierarchy shared by all greenring modules."""


class GreenRingError(Exception):
    """Base class for all errors raised by this package."""


class InvalidConductorError(GreenRingError):
    """Conductor of a cyclotomic field must be a positive integer."""


class InvalidGroupError(GreenRingError):
    """Multiplication table is not a group (associativity/identity/inverses)."""


class UnsupportedParameterError(GreenRingError):
    """A group-family parameter outside the supported range (e.g. even dihedral s)."""


class MissingTableError(GreenRingError):
    """A generic group was given without an imported character table."""


class InvalidTableError(GreenRingError):
    """An imported character table fails orthogonality or shape checks."""


class NotACharacterError(GreenRingError):
    """A class function is not a genuine character (non-integer or negative multiplicity)."""


class InvalidDatumError(GreenRingError):
    """The quadruple (G, chi, g, mu) violates a group-datum requirement."""


class UnsupportedDatumError(GreenRingError):
    """A well-formed datum outside the supported class (mu != 0, or chi(g) = 1)."""


class DomainError(GreenRingError):
    """Operands belong to different rings/data, or an index is out of range."""


class ProjectiveModuleError(GreenRingError):
    """No almost split sequence ends at a projective module (j = n)."""


class UnsupportedRepresentationError(GreenRingError):
    """A simple module has no explicit matrix model available for the oracle."""


class InconsistentModuleError(GreenRingError):
    """A module failed to decompose consistently; signals an upstream bug."""


class InternalConsistencyError(GreenRingError):
    """A condition that is impossible for validated inputs failed anyway."""
