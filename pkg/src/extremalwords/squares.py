"""Square (xx-factor) detection.

Words are plain Python strings; all routines are alphabet-agnostic.

Two detectors are provided: a quadratic oracle that compares every
(start, half_length) pair directly, and a fast detector that encodes the
word as per-letter bitmasks and finds, for each candidate half-length L,
a run of L consecutive "w[t] == w[t+L]" matches using O(log L) big-int
operations.  They are equivalence-tested against each other.

`extension_has_square` decides whether inserting one letter into a word
creates a square *containing the inserted position*, without building the
extended word.  When the base word is square-free this is the full square
test for the extension, and it is the workhorse behind all extremality
predicates (a length-n word has ~3n extensions to rule out).
"""

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class SquareOccurrence:
    start: int
    half_length: int

    def check(self, w: str) -> bool:
        s, h = self.start, self.half_length
        return h >= 1 and s + 2 * h <= len(w) and w[s:s + h] == w[s + h:s + 2 * h]


def _find_square_oracle(w: str, max_half: Optional[int] = None) -> Optional[SquareOccurrence]:
    n = len(w)
    top = n // 2 if max_half is None else min(max_half, n // 2)
    for half in range(1, top + 1):
        for s in range(n - 2 * half + 1):
            if w[s:s + half] == w[s + half:s + 2 * half]:
                return SquareOccurrence(s, half)
    return None


def _letter_masks(w: str) -> list:
    masks = []
    for c in set(w):
        bits = "".join("1" if ch == c else "0" for ch in reversed(w))
        masks.append(int(bits, 2))
    return masks


def _run_filter(m: int, length: int) -> int:
    """Bit s of the result is set iff bits s..s+length-1 of m are all set."""
    cur = m
    covered = 1
    while covered < length and cur:
        step = min(covered, length - covered)
        cur &= cur >> step
        covered += step
    return cur


def _find_square_fast(w: str, max_half: Optional[int] = None) -> Optional[SquareOccurrence]:
    n = len(w)
    if n < 2:
        return None
    top = n // 2 if max_half is None else min(max_half, n // 2)
    masks = _letter_masks(w)
    for half in range(1, top + 1):
        matches = 0
        for m in masks:
            matches |= m & (m >> half)
        if not matches:
            continue
        runs = _run_filter(matches, half)
        if runs:
            start = (runs & -runs).bit_length() - 1
            return SquareOccurrence(start, half)
    return None


def find_square(w: str, mode: str = "fast",
                max_half: Optional[int] = None) -> Optional[SquareOccurrence]:
    """Smallest-half-length square occurrence in w, or None."""
    if mode == "fast":
        return _find_square_fast(w, max_half)
    if mode == "oracle":
        return _find_square_oracle(w, max_half)
    raise ValueError(f"unknown mode {mode!r}")


def is_square_free(w: str) -> bool:
    return _find_square_fast(w) is None


def _back_match(w: str, p: int, q: int, cap: int) -> int:
    """Length of the common suffix of w[..p] and w[..q], at most cap."""
    k = 0
    while k < cap and p - k >= 0 and q - k >= 0 and w[p - k] == w[q - k]:
        k += 1
    return k


def _fwd_match(w: str, p: int, q: int, cap: int) -> int:
    """Length of the common prefix of w[p..] and w[q..], at most cap."""
    n = len(w)
    k = 0
    while k < cap and p + k < n and q + k < n and w[p + k] == w[q + k]:
        k += 1
    return k


def extension_has_square(w: str, i: int, a: str,
                         max_half: Optional[int] = None) -> bool:
    """Does inserting letter a at position i of w create a square through it?

    Tests whether w[:i] + a + w[i:] contains a square xx whose span covers
    the inserted position.  If w itself is square-free this is equivalent
    to the extension containing any square at all.  A square of half-length
    L through the insertion point aligns the inserted letter with an
    original letter of w at distance L, and the rest of the two halves must
    match around the insertion point; both alignments (inserted letter in
    the first or the second half) are scanned for L ascending, so the
    smallest square exits early.  max_half caps L (used by the circular
    variant, where squares longer than the circumference do not count).
    """
    n = len(w)
    top = n if max_half is None else min(max_half, n)
    for half in range(1, top + 1):
        need = half - 1
        # Inserted letter in the first half; its mirror is w[i+half-1].
        if half <= n - i and w[i + half - 1] == a:
            b = _back_match(w, i - 1, i + half - 2, min(need, i))
            if b >= need or b + _fwd_match(w, i, i + half, need - b) >= need:
                return True
        # Inserted letter in the second half; its mirror is w[i-half].
        if half <= i and w[i - half] == a:
            b = _back_match(w, i - 1, i - half - 1, min(need, i - half))
            if b >= need or b + _fwd_match(w, i, i - half + 1, need - b) >= need:
                return True
    return False


def circular_rep_square_free(w: str, mode: str = "fast") -> bool:
    """True iff every conjugate of w is square-free.

    Uses the doubled-word criterion: a square in some conjugate of w is
    exactly a square factor of ww of half-length at most |w| // 2.
    """
    n = len(w)
    if n < 2:
        return True
    return find_square(w + w, mode=mode, max_half=n // 2) is None


def circular_extension_has_square(w: str, i: int, a: str) -> bool:
    """Does inserting a at split i of the circular word <w> square it?

    Checks whether some conjugate of w[:i] + a + w[i:] contains a square.
    Requires <w> itself to be circularly square-free, so that every such
    square must pass through the inserted letter; the check then reduces to
    `extension_has_square` on the doubled rotation y+y (y starting at the
    split), with half-lengths capped at half the new circumference.
    """
    n = len(w)
    if n == 0:
        return False
    y = w[i:] + w[:i]
    return extension_has_square(y + y, n, a, max_half=(n + 1) // 2)
