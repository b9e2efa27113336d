"""Exception types raised across the package."""


class PrealignError(Exception):
    """Base class for all errors raised by prealign."""


class EmptySequence(PrealignError):
    def __init__(self):
        super().__init__("sequence is empty")


class IllegalCharacter(PrealignError):
    def __init__(self, position, byte):
        self.position = position
        self.byte = byte
        super().__init__(f"illegal character {byte!r} at position {position}")


class LengthMismatch(PrealignError):
    def __init__(self, left, right, line=None):
        self.left = left
        self.right = right
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}sequence lengths differ ({left} != {right})")


class ThresholdTooLarge(PrealignError):
    def __init__(self, e, m):
        self.e = e
        self.m = m
        super().__init__(f"threshold {e} needs more than the {2 * m - 1} diagonals of length {m}")


class OutOfBand(PrealignError):
    def __init__(self, i, j, e):
        self.i = i
        self.j = j
        self.e = e
        super().__init__(f"entry ({i}, {j}) lies outside the band |i - j| <= {e}")


class ParseError(PrealignError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class InvalidParameters(PrealignError):
    pass
