"""Exception hierarchy shared by every module of the package."""


class TorsionError(Exception):
    """Base class for all errors raised by torsionvol."""


# exact algebra
class NonSquare(TorsionError):
    pass


class Singular(TorsionError):
    pass


class FieldMismatch(TorsionError):
    pass


# graded determinant lines
class NotAHomologyBasis(TorsionError):
    pass


# cell complexes
class RelatorRewriteBudgetExceeded(TorsionError):
    pass


class NotASubcomplex(TorsionError):
    pass


class PresentationMismatch(TorsionError):
    pass


# local systems
class RepresentationInvalid(TorsionError):
    pass


class NotInvariantSubspace(TorsionError):
    pass


# torsion
class NotAcyclic(TorsionError):
    pass


class NotAcyclicAndNoBasis(TorsionError):
    pass


# surfaces and spin structures
class NotADimer(TorsionError):
    pass


class NotKasteleyn(TorsionError):
    pass


class NotOrthogonal(TorsionError):
    pass


class DegeneratePairing(TorsionError):
    pass


# symplectic volumes
class NotAlternating(TorsionError):
    pass


class Degenerate(TorsionError):
    pass


# power series
class NonUnit(TorsionError):
    pass


class NonzeroConstantTerm(TorsionError):
    pass


class NotNilpotent(TorsionError):
    pass


class ParseError(TorsionError):
    """Input file could not be parsed; ``location`` says where."""

    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)
