"""Exception hierarchy shared by every module.

The CLI maps each family onto an exit code, so new errors should subclass
one of the families below rather than ``FangchengError`` directly.
"""


class FangchengError(Exception):
    """Base class for all package errors."""


class InputError(FangchengError):
    """Malformed or mis-shaped input (CLI exit 2)."""


class ParseError(InputError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class DimensionMismatch(InputError):
    pass


class UnderDetermined(DimensionMismatch):
    pass


class OverDetermined(DimensionMismatch):
    pass


class TooSmall(InputError):
    pass


class RingMismatch(InputError):
    """An operation was asked to run over a ring it does not support."""


class UnsupportedIndeterminate(InputError):
    pass


class SingularError(FangchengError):
    """The system or matrix is singular at the point of failure (CLI exit 3)."""


class ZeroPivot(SingularError):
    def __init__(self, k, candidate=None):
        self.k = k
        self.candidate = candidate
        msg = f"zero pivot at step {k}"
        if candidate is not None:
            msg += f" (row {candidate} has a nonzero entry; use the swap policy)"
        super().__init__(msg)


class SingularLeadingMinor(ZeroPivot):
    def __init__(self, k, candidate=None):
        super().__init__(k, candidate)
        self.args = (f"leading principal minor of order {k} is zero",)


class RankDeficient(SingularError):
    def __init__(self, k):
        self.k = k
        super().__init__(f"column {k} is zero from row {k} down")


class SingularDiagonal(SingularError):
    def __init__(self, i):
        self.i = i
        super().__init__(f"diagonal entry {i} is zero")


class DivideByZero(SingularError, ZeroDivisionError):
    pass


class InexactDivision(FangchengError, ArithmeticError):
    """No exact quotient exists (CLI exit 4).

    ``row``/``col`` are filled in by the elimination routine that triggered it.
    """

    def __init__(self, dividend, divisor, row=None, col=None):
        self.dividend = dividend
        self.divisor = divisor
        self.row = row
        self.col = col
        super().__init__(dividend, divisor)

    def __str__(self):
        msg = f"{self.divisor} does not divide {self.dividend} exactly"
        if self.row is not None:
            msg += f" (row {self.row}, clearing column {self.col})"
        return msg


class SizeLimit(FangchengError):
    """A brute-force oracle was asked for a size beyond its guard (CLI exit 5)."""
