"""Exception types shared across the package."""


class ExtremalWordsError(Exception):
    """Base class for all package-specific errors."""


class InvalidCharacter(ExtremalWordsError):
    def __init__(self, position: int, char: str):
        super().__init__(f"invalid character {char!r} at position {position}")
        self.position = position
        self.char = char


class AlphabetMismatch(ExtremalWordsError):
    pass


class EmptyWord(ExtremalWordsError):
    pass


class TooShort(ExtremalWordsError):
    pass


class BadN(ExtremalWordsError):
    pass


class UnknownName(ExtremalWordsError):
    pass


class UnknownVertex(ExtremalWordsError):
    pass


class BadChoice(ExtremalWordsError):
    def __init__(self, position: int):
        super().__init__(f"bad image choice at position {position}")
        self.position = position


class NoSuchWord(ExtremalWordsError):
    pass


class SearchBudgetExceeded(ExtremalWordsError):
    pass


class NotInSpectrum(ExtremalWordsError):
    def __init__(self, n: int):
        super().__init__(f"no extremal word of length {n} exists")
        self.n = n


class BudgetRefused(ExtremalWordsError):
    pass
