"""Exception hierarchy shared by every module.

Each class carries the CLI exit code it maps to, so the command line layer
never needs a lookup table.
"""


class LefcoinError(Exception):
    exit_code = 2


class EmptyInput(LefcoinError):
    pass


class ParseError(LefcoinError):
    pass


class DegreeOutOfRange(LefcoinError):
    pass


class InvalidMap(LefcoinError):
    pass


class ShapeMismatch(LefcoinError):
    pass


class Singular(LefcoinError):
    pass


class NotChainMap(LefcoinError):
    pass


class NonOrientable(LefcoinError):
    exit_code = 3


class NotClosed(LefcoinError):
    exit_code = 3


class DualityDegenerate(LefcoinError):
    exit_code = 3


class DimensionMismatch(LefcoinError):
    exit_code = 4


class InvariantViolation(LefcoinError):
    exit_code = 5
