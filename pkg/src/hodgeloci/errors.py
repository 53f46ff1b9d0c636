"""Exception hierarchy.

``MathError`` marks a mathematical failure signal (the CLI maps it to exit
code 1); everything else that goes wrong is a usage problem.
"""


class HodgeLociError(Exception):
    pass


class MathError(HodgeLociError):
    """A computation reached a mathematically meaningful dead end."""


class InverseOfZero(MathError, ZeroDivisionError):
    pass


class FieldMismatch(HodgeLociError, ValueError):
    pass


class RingMismatch(HodgeLociError, ValueError):
    pass


class AmbientMismatch(HodgeLociError, ValueError):
    pass


class SizeMismatch(HodgeLociError, ValueError):
    pass


class ParseError(HodgeLociError, ValueError):
    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        if text:
            message = f"{message} at position {pos}: {text[:pos]}<HERE>{text[pos:]}"
        super().__init__(message)


class NotHomogeneous(HodgeLociError, ValueError):
    pass


class NotZeroDimensional(MathError):
    pass


class SingularHypersurface(MathError):
    pass


class UnsupportedDegree(HodgeLociError, ValueError):
    pass


class NotSingularAt(MathError):
    pass


class ConeCase(MathError):
    pass
