"""Exception hierarchy shared by every cotwist module."""


class CotwistError(Exception):
    """Base class for all errors raised by cotwist."""


class FieldMismatch(CotwistError):
    pass


class SpaceMismatch(CotwistError):
    pass


class NoSolution(CotwistError):
    """The right-hand side is not in the column space."""


class NotInvertible(CotwistError):
    pass


class SNotBijective(CotwistError):
    pass


class NotATwisting(CotwistError):
    pass


class NotACocycle(CotwistError):
    pass


class WitnessInvalid(CotwistError):
    pass


class InverseMissing(CotwistError):
    pass


class CoidealFailure(CotwistError):
    pass


class NotGaloisError(CotwistError):
    pass


class PsiNotColinear(CotwistError):
    pass


class NotInCotensor(CotwistError):
    pass


class UnknownName(CotwistError):
    pass


class FormatError(CotwistError):
    """Malformed structure document or equation file."""


class ParseError(CotwistError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


class InvariantViolation(CotwistError):
    """An internal consistency assertion failed."""
