"""Exception hierarchy shared by all fpmat modules."""


class FpmatError(Exception):
    """Base class for all library errors."""


class CompositeModulus(FpmatError):
    pass


class OutOfRange(FpmatError):
    pass


class LengthMismatch(FpmatError):
    pass


class NoSuchElement(FpmatError):
    pass


class CtxMismatch(FpmatError):
    pass


class DegreeTooLarge(FpmatError):
    pass


class OrderTooSmall(FpmatError):
    pass


class DuplicatePoints(FpmatError):
    pass


class NotInvertibleAtZero(FpmatError):
    pass


class BothZero(FpmatError):
    pass


class DimMismatch(FpmatError):
    pass


class EnvelopeExceeded(FpmatError):
    pass


class NotSquare(FpmatError):
    pass


class ReconstructionFailed(FpmatError):
    pass


class NoGeometricGrid(FpmatError):
    pass


class SingularAtZero(FpmatError):
    pass


class SingularMatrix(FpmatError):
    pass


class InsufficientPrecision(FpmatError):
    pass


class DimensionCap(FpmatError):
    pass


class FieldTooSmall(FpmatError):
    pass


class VerificationFailed(FpmatError):
    pass


class TooLarge(FpmatError):
    pass


class NotCoprime(FpmatError):
    pass


class GenericityFailure(FpmatError):
    pass


class SingularEvaluation(FpmatError):
    pass


class BadParams(FpmatError):
    pass
