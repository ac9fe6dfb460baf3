"""Exception hierarchy.  Every library error derives from :class:`PadivError`."""


class PadivError(Exception):
    pass


class DimensionMismatch(PadivError, ValueError):
    pass


class SingularMatrix(PadivError, ValueError):
    pass


class NotDivision(PadivError):
    pass


class NotImaginaryUnit(PadivError):
    pass


class NotInvolution(PadivError):
    """x -> i(xi) does not square to the identity (partial flexibility fails at i)."""


class InvalidUnits(PadivError):
    pass


class NucleusViolation(PadivError):
    """An imaginary unit commutes with the whole algebra."""


class TooFewUnits(PadivError):
    pass


class ResidualTooLarge(PadivError):
    pass


class NotPartiallyAlternative(PadivError):
    pass


class OutOfScope(PadivError):
    """Isomorphism questions for algebras with exactly two imaginary units are not covered."""


class PreconditionViolated(PadivError):
    pass


class InputError(PadivError, ValueError):
    """Malformed algebra description; ``pointer`` is the JSON pointer of the offending value."""

    def __init__(self, message: str, pointer: str = ""):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer
