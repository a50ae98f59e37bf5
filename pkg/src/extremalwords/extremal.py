"""Extension enumeration and extremality predicates, linear and circular.

An extension of w inserts one letter anywhere; w is extremal square-free
when it is square-free and no extension is.  Variants: nearly extremal
(exactly two square-free extensions, one prepend and one append) and
left/right extremal (square-free extensions only on one side).

All predicates are total: non-square-free inputs are simply not extremal.
"""

from dataclasses import dataclass
from typing import Set

from .errors import BadN, TooShort
from .squares import (
    circular_extension_has_square,
    circular_rep_square_free,
    extension_has_square,
    is_square_free,
)
from .words import CircularWord, witness_symbol

DEFAULT_ALPHABET = "abc"


@dataclass(frozen=True)
class ExtremalReport:
    square_free: bool
    square_free_extensions: frozenset
    extremal: bool
    nearly_extremal: bool
    left_extremal: bool
    right_extremal: bool


def extensions(w: str, alphabet: str = DEFAULT_ALPHABET) -> Set[str]:
    """All distinct single-letter insertions into w."""
    return {w[:i] + a + w[i:] for i in range(len(w) + 1) for a in alphabet}


def square_free_extensions(w: str, alphabet: str = DEFAULT_ALPHABET) -> Set[str]:
    if not is_square_free(w):
        # No shortcut available: extensions of a squared word can still be
        # square-free ("aa" -> "aba").
        return {e for e in extensions(w, alphabet) if is_square_free(e)}
    out = set()
    for i in range(len(w) + 1):
        for a in alphabet:
            if not extension_has_square(w, i, a):
                out.add(w[:i] + a + w[i:])
    return out


def is_extremal(w: str, alphabet: str = DEFAULT_ALPHABET) -> bool:
    if not is_square_free(w):
        return False
    for i in range(len(w) + 1):
        for a in alphabet:
            if not extension_has_square(w, i, a):
                return False
    return True


def is_nearly_extremal(w: str, alphabet: str = DEFAULT_ALPHABET) -> bool:
    """Square-free with exactly two square-free extensions: a+w and w+a."""
    if not is_square_free(w):
        return False
    exts = square_free_extensions(w, alphabet)
    if len(exts) != 2:
        return False
    lefts = [e for e in exts if e[1:] == w]
    rights = [e for e in exts if e[:-1] == w]
    return len(lefts) == 1 and len(rights) == 1 and lefts[0] != rights[0]


def is_directional_extremal(w: str, side: str,
                            alphabet: str = DEFAULT_ALPHABET) -> bool:
    """left: every square-free extension appends on the right; right: mirror."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if not is_square_free(w):
        return False
    for i in range(len(w) + 1):
        for a in alphabet:
            if extension_has_square(w, i, a):
                continue
            e = w[:i] + a + w[i:]
            if side == "left" and e[:-1] != w:
                return False
            if side == "right" and e[1:] != w:
                return False
    return True


def report(w: str, alphabet: str = DEFAULT_ALPHABET) -> ExtremalReport:
    sf = is_square_free(w)
    exts = frozenset(square_free_extensions(w, alphabet)) if sf else frozenset()
    if not sf:
        return ExtremalReport(False, frozenset(), False, False, False, False)
    lefts = [e for e in exts if e[1:] == w]
    rights = [e for e in exts if e[:-1] == w]
    return ExtremalReport(
        square_free=True,
        square_free_extensions=exts,
        extremal=not exts,
        nearly_extremal=(len(exts) == 2 and len(lefts) == 1
                         and len(rights) == 1 and lefts[0] != rights[0]),
        left_extremal=all(e[:-1] == w for e in exts),
        right_extremal=all(e[1:] == w for e in exts),
    )


def circular_extensions(cw: CircularWord,
                        alphabet: str = DEFAULT_ALPHABET) -> Set[CircularWord]:
    """All distinct circular words obtained by inserting one letter."""
    w = cw.canonical
    if not w:
        return {CircularWord.of(a) for a in alphabet}
    return {CircularWord.of(w[:i] + a + w[i:])
            for i in range(len(w)) for a in alphabet}


def is_extremal_circular(cw: CircularWord,
                         alphabet: str = DEFAULT_ALPHABET) -> bool:
    w = cw.canonical
    if not circular_rep_square_free(w):
        return False
    if len(w) == 0:
        return False  # single-letter extensions are square-free
    for i in range(len(w)):
        for a in alphabet:
            if not circular_extension_has_square(w, i, a):
                return False
    return True


def is_irreducibly_square_free(w: str) -> bool:
    """Square-free, and deleting any interior letter creates a square."""
    if len(w) < 3:
        raise TooShort(f"need length >= 3, got {len(w)}")
    if not is_square_free(w):
        return False
    for i in range(1, len(w) - 1):
        if is_square_free(w[:i] + w[i + 1:]):
            return False
    return True


def irreducible_witness(n: int) -> str:
    """The word 121 u_3 121 u_4 ... 121 u_n 121 with u_k = k2k, over {1..n}."""
    if not 4 <= n <= 36:
        raise BadN(f"witness defined for 4 <= n <= 36, got {n}")
    sep = "121"
    parts = [sep]
    for k in range(3, n + 1):
        parts.append(witness_symbol(k) + "2" + witness_symbol(k))
        parts.append(sep)
    return "".join(parts)
