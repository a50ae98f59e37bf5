"""Alphabets, words, circular words, and ternary symmetries.

A word is a plain Python string.  Alphabets only matter at the I/O
boundary (parsing and the irreducible-witness alphabet); everything else
treats characters opaquely.
"""

from dataclasses import dataclass
from typing import Iterator, List, Set, Tuple

from .errors import AlphabetMismatch, EmptyWord, InvalidCharacter
from .squares import circular_rep_square_free

Perm = Tuple[int, int, int]


@dataclass(frozen=True)
class Alphabet:
    """Ordered symbol set; letter i is rendered as symbols[i]."""

    symbols: str

    def __post_init__(self):
        if not 1 <= len(self.symbols) <= 36:
            raise ValueError("alphabet size must be between 1 and 36")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("duplicate symbols in alphabet")

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, ch: str) -> bool:
        return ch in self.symbols


TERNARY = Alphabet("abc")

# Symbols for the integer alphabet {1..n} of the irreducible witnesses:
# digits for 1..9, then lowercase letters, with '0' standing in for 36.
_WITNESS_SYMBOLS = "123456789abcdefghijklmnopqrstuvwxyz0"


def witness_symbol(k: int) -> str:
    if not 1 <= k <= 36:
        raise ValueError(f"witness letter {k} out of range")
    return _WITNESS_SYMBOLS[k - 1]


def witness_alphabet(n: int) -> Alphabet:
    return Alphabet(_WITNESS_SYMBOLS[:n])


def parse_word(text: str, alphabet: Alphabet = TERNARY) -> str:
    for pos, ch in enumerate(text):
        if ch not in alphabet:
            raise InvalidCharacter(pos, ch)
    return text


# The six permutations of {a, b, c} in the fixed order used for digraph
# vertex ids: (), (ab), (ac), (bc), (abc), (acb).
PERMS: Tuple[Perm, ...] = (
    (0, 1, 2),
    (1, 0, 2),
    (2, 1, 0),
    (0, 2, 1),
    (1, 2, 0),
    (2, 0, 1),
)

PERM_NAMES: Tuple[str, ...] = ("()", "(ab)", "(ac)", "(bc)", "(abc)", "(acb)")

IDENTITY: Perm = PERMS[0]


def perm_name(p: Perm) -> str:
    return PERM_NAMES[PERMS.index(p)]


def apply_permutation(w: str, p: Perm) -> str:
    table = {ord("abc"[i]): "abc"[p[i]] for i in range(3)}
    for ch in w:
        if ch not in "abc":
            raise AlphabetMismatch(f"non-ternary letter {ch!r}")
    return w.translate(table)


def reverse(w: str) -> str:
    return w[::-1]


def conjugates(w: str) -> List[str]:
    if not w:
        return [""]
    return [w[i:] + w[:i] for i in range(len(w))]


def canonical_rotation(w: str) -> str:
    """Lexicographically least rotation (Booth's algorithm)."""
    if not w:
        return w
    s = w + w
    n = len(s)
    f = [-1] * n  # failure function
    k = 0  # least rotation found so far
    for j in range(1, n):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return s[k:k + len(w)]


@dataclass(frozen=True)
class CircularWord:
    """Rotation class of a word, stored via its canonical rotation."""

    canonical: str

    @classmethod
    def of(cls, w: str) -> "CircularWord":
        return cls(canonical_rotation(w))

    def __post_init__(self):
        if self.canonical != canonical_rotation(self.canonical):
            raise ValueError("representative is not the canonical rotation")

    def __len__(self) -> int:
        return len(self.canonical)

    def __str__(self) -> str:
        return "~" + self.canonical

    def conjugates(self) -> List[str]:
        return conjugates(self.canonical)


def is_circular_square_free(cw: CircularWord, mode: str = "fast") -> bool:
    return circular_rep_square_free(cw.canonical, mode=mode)


def circumnavigations(cw: CircularWord) -> Set[str]:
    """All words a+v+a where a+v runs once around the circular word."""
    if len(cw) == 0:
        raise EmptyWord("circumnavigations of the empty circular word")
    return {u + u[0] for u in cw.conjugates()}


def rotations_and_images(w: str) -> Iterator[str]:
    """All permutation/reversal images of w (ternary symmetry orbit)."""
    for p in PERMS:
        img = apply_permutation(w, p)
        yield img
        yield img[::-1]
