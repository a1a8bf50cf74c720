"""Exception hierarchy.

Every error carries a 1-based ``position`` where one applies, pointing at the
first offending letter, tile or character.
"""


class MNError(ValueError):
    """Base class for all package errors."""


class WordError(MNError):
    pass


class LetterOutOfRange(WordError):
    def __init__(self, position, letter, m):
        self.position = position
        self.letter = letter
        super().__init__(
            f"letter {letter} at position {position} is outside 0..{m + 1}"
        )


class ViolatesMN1(WordError):
    def __init__(self, m):
        self.position = 1
        super().__init__(f"first letter must not be m+1 = {m + 1}")


class ViolatesMN2(WordError):
    def __init__(self, position, letter):
        self.position = position
        self.letter = letter
        super().__init__(
            f"letter {letter} at position {position} is preceded by a smaller letter"
        )


class InvalidDecomposition(WordError):
    pass


class TilingError(MNError):
    pass


class RedCountMismatch(TilingError):
    def __init__(self, expected, actual):
        self.expected = expected
        self.actual = actual
        super().__init__(f"expected {expected} red squares, found {actual}")


class RedNotSquare(TilingError):
    def __init__(self, position, length):
        self.position = position
        self.length = length
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"red tile{where} has length {length}, not 1")


class EmptyBlueStrip(TilingError):
    def __init__(self, position):
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"blue strip{where} has no cells")


class TruncationTooShort(MNError):
    def __init__(self, have, need):
        self.have = have
        self.need = need
        super().__init__(f"series known to order {have}, order {need} requested")


class ParseError(MNError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at character {position})"
        super().__init__(message)
