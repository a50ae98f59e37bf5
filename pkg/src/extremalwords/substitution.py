"""Multi-valued substitutions and the square-freeness certificate checker.

A substitution maps each source letter to a finite nonempty set of
nonempty image words.  The checker verifies two machine-checkable
conditions on a substitution f and a source language:

  I.  for every square-free source word v of length <= 3, every word of
      f(v) is square-free;
  II. for all source letters a, b, c and images A in f(a), B in f(b),
      C in f(c):
        (i)   A a factor of B implies a == b and A == B;
        (ii)  AB == pCs implies p or s is empty;
        (iii) C == A' B'' for some splits A = A'A'', B = B'B''
              implies c == a or c == b.

A pass certifies that f(u) is square-free for *every* square-free source
word u of the language, which is how the long pipeline outputs avoid any
per-output quadratic re-scan.  The source language enters only through
the generator of its length-<=3 square-free words, so the same checker
serves free monoids and walk languages of a digraph.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .errors import BadChoice
from .squares import find_square


@dataclass(frozen=True)
class Substitution:
    images: Dict[str, Tuple[str, ...]]

    def __post_init__(self):
        if not self.images:
            raise ValueError("substitution needs at least one source letter")
        for letter, words in self.images.items():
            if len(letter) != 1:
                raise ValueError(f"source letter must be a single char: {letter!r}")
            if not words:
                raise ValueError(f"letter {letter!r} has no images")
            if any(not w for w in words):
                raise ValueError(f"letter {letter!r} has an empty image")

    @property
    def source_alphabet(self) -> str:
        return "".join(sorted(self.images))

    def is_morphism(self) -> bool:
        return all(len(v) == 1 for v in self.images.values())


def apply(sub: Substitution, w: str, choices: Sequence[int]) -> str:
    """Concatenate the chosen image of each letter of w."""
    if len(choices) != len(w):
        raise BadChoice(min(len(choices), len(w)))
    parts = []
    for pos, (letter, idx) in enumerate(zip(w, choices)):
        imgs = sub.images.get(letter)
        if imgs is None or not 0 <= idx < len(imgs):
            raise BadChoice(pos)
        parts.append(imgs[idx])
    return "".join(parts)


def image_words(sub: Substitution, w: str) -> Iterable[str]:
    """Every word of sub(w) (cartesian product of per-letter images)."""
    out = [""]
    for letter in w:
        imgs = sub.images.get(letter)
        if imgs is None:
            raise BadChoice(0)
        out = [p + img for p in out for img in imgs]
    return out


def enumerate_image_lengths(sub: Substitution, w: str) -> Set[int]:
    reachable = 1  # bitmask over achievable total lengths
    for letter in w:
        step = 0
        for img in sub.images[letter]:
            step |= reachable << len(img)
        reachable = step
    out = set()
    bit = 0
    while reachable:
        if reachable & 1:
            out.add(bit)
        reachable >>= 1
        bit += 1
    return out


def select_choices_for_length(sub: Substitution, w: str,
                              target: int) -> Optional[List[int]]:
    """Image choices making |apply(sub, w, choices)| == target, if any."""
    if target < 0:
        return None
    # forward reachability per prefix, then reconstruct right to left
    masks = [1]
    for letter in w:
        step = 0
        for img in sub.images[letter]:
            step |= masks[-1] << len(img)
        masks.append(step)
    if not (masks[-1] >> target) & 1:
        return None
    choices: List[int] = []
    remaining = target
    for pos in range(len(w) - 1, -1, -1):
        for idx, img in enumerate(sub.images[w[pos]]):
            rest = remaining - len(img)
            if rest >= 0 and (masks[pos] >> rest) & 1:
                choices.append(idx)
                remaining = rest
                break
        else:
            raise AssertionError("reachability table inconsistent")
    choices.reverse()
    return choices


@dataclass(frozen=True)
class Violation:
    condition: str  # "I", "II.i", "II.ii", or "II.iii"
    witness: tuple

    def __str__(self) -> str:
        return f"{self.condition}: {self.witness}"


@dataclass(frozen=True)
class ConditionReport:
    passed: bool
    violations: Tuple[Violation, ...]

    @staticmethod
    def of(violations: List[Violation]) -> "ConditionReport":
        ordered = tuple(sorted(violations, key=lambda v: (v.condition, v.witness)))
        return ConditionReport(not ordered, ordered)

    def merge(self, other: "ConditionReport") -> "ConditionReport":
        return ConditionReport.of(list(self.violations) + list(other.violations))


def check_condition_I(sub: Substitution, u: str) -> ConditionReport:
    """Every image of every factor of u with length <= 3 is square-free."""
    violations: List[Violation] = []
    seen: Set[str] = set()
    for length in range(1, 4):
        for start in range(len(u) - length + 1):
            v = u[start:start + length]
            if v in seen:
                continue
            seen.add(v)
            for word in image_words(sub, v):
                occ = find_square(word)
                if occ is not None:
                    violations.append(Violation(
                        "I", (v, word, occ.start, occ.half_length)))
    return ConditionReport.of(violations)


def check_condition_II(sub: Substitution) -> ConditionReport:
    violations: List[Violation] = []
    items = [(a, A) for a in sorted(sub.images) for A in sub.images[a]]
    owners: Dict[str, Set[str]] = {}
    lengths: Set[int] = set()
    for c, C in items:
        owners.setdefault(C, set()).add(c)
        lengths.add(len(C))

    for a, A in items:
        for b, B in items:
            # (i) A factor of B
            if len(A) <= len(B) and A in B and not (a == b and A == B):
                violations.append(Violation("II.i", (a, A, b, B)))
            # (ii) some image strictly interior to AB
            AB = A + B
            for c, C in items:
                pos = AB.find(C, 1)
                while pos != -1:
                    if pos + len(C) < len(AB):
                        violations.append(Violation("II.ii", (a, A, b, B, c, C, pos)))
                        break
                    pos = AB.find(C, pos + 1)
            # (iii) C == A' B'' forces c in {a, b}; only split sums matching
            # an image length can produce a C at all
            for target in lengths:
                lo = max(0, target - len(B))
                hi = min(len(A), target)
                for cut in range(lo, hi + 1):
                    cand = A[:cut] + B[len(B) - (target - cut):]
                    for c in owners.get(cand, ()):
                        if c != a and c != b:
                            violations.append(Violation(
                                "II.iii", (a, A, b, B, c, cut, target - cut)))
    return ConditionReport.of(violations)


def check_universal(sub: Substitution,
                    source_factors: Iterable[str]) -> ConditionReport:
    """Condition I over the given length-<=3 source words, plus condition II.

    A pass certifies sub(u) square-free for every square-free source word u
    whose length-<=3 factors all appear in source_factors.
    """
    rep = check_condition_II(sub)
    violations = list(rep.violations)
    for u in source_factors:
        rep_i = check_condition_I(sub, u)
        violations.extend(rep_i.violations)
    return ConditionReport.of(violations)


def replay_violation(sub: Substitution, v: Violation) -> bool:
    """Re-verify a violation from its witness data alone."""
    if v.condition == "I":
        src, word, start, half = v.witness
        return (word in set(image_words(sub, src))
                and word[start:start + half] == word[start + half:start + 2 * half])
    if v.condition == "II.i":
        a, A, b, B = v.witness
        return (A in sub.images[a] and B in sub.images[b]
                and A in B and not (a == b and A == B))
    if v.condition == "II.ii":
        a, A, b, B, c, C, pos = v.witness
        AB = A + B
        return (C in sub.images[c] and AB[pos:pos + len(C)] == C
                and pos > 0 and pos + len(C) < len(AB))
    if v.condition == "II.iii":
        a, A, b, B, c, cut, tail = v.witness
        cand = A[:cut] + B[len(B) - tail:]
        return cand in sub.images[c] and c != a and c != b
    raise ValueError(f"unknown condition {v.condition!r}")


def format_substitution(sub: Substitution) -> str:
    """Text format: one 'letter -> img1 | img2' line per source letter."""
    lines = []
    for letter in sorted(sub.images):
        lines.append(f"{letter} -> " + " | ".join(sub.images[letter]))
    return "\n".join(lines) + "\n"


def parse_substitution(text: str) -> Substitution:
    images: Dict[str, Tuple[str, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "->" not in line:
            raise ValueError(f"line {lineno}: expected 'letter -> images'")
        lhs, rhs = line.split("->", 1)
        letter = lhs.strip()
        words = tuple(p.strip() for p in rhs.split("|"))
        if len(letter) != 1 or any(not p for p in words):
            raise ValueError(f"line {lineno}: malformed rule")
        if letter in images:
            raise ValueError(f"line {lineno}: duplicate rule for {letter!r}")
        images[letter] = words
    return Substitution(images)
