"""The 12-vertex permutation digraph, its capped extension, and walk words.

Vertices are the six permutations of {a,b,c} plus a mirror copy of each.
Walk words are strings over a 36-symbol internal alphabet so that all
square-detection machinery applies unchanged:

    index 0..11   core vertices   chars "0".."9", "A", "B"
    index 12..23  prefix caps p_x chars "C".."N"
    index 24..35  suffix caps s_x chars "O".."Z"

Display uses cycle notation, e.g. "(ab)", "(~ab)" for the mirror image,
"p(ab)" / "s(ab)" for the caps.
"""

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Tuple

from .errors import BadN, NoSuchWord, SearchBudgetExceeded, UnknownVertex
from .squares import circular_rep_square_free, is_square_free
from .substitution import Substitution, apply
from .words import PERM_NAMES, PERMS, CircularWord, Perm

VD_CHARS = "0123456789AB"
HATD_CHARS = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"

N_CORE = 12


def vertex_char(index: int) -> str:
    return HATD_CHARS[index]


def vertex_index(ch: str) -> int:
    idx = HATD_CHARS.find(ch)
    if idx == -1:
        raise UnknownVertex(f"unknown vertex char {ch!r}")
    return idx


def vertex_perm(ch: str) -> Perm:
    return PERMS[vertex_index(ch) % 6]


def vertex_mirrored(ch: str) -> bool:
    return (vertex_index(ch) % N_CORE) >= 6


def is_core(ch: str) -> bool:
    return vertex_index(ch) < N_CORE


def mirror(ch: str) -> str:
    """Mirror image of a core vertex: pi <-> ~pi."""
    idx = vertex_index(ch)
    if idx >= N_CORE:
        raise UnknownVertex(f"{ch!r} is not a core vertex")
    return HATD_CHARS[(idx + 6) % 12]


def vertex_display(ch: str) -> str:
    idx = vertex_index(ch)
    core = idx % N_CORE
    name = PERM_NAMES[core % 6]
    if core >= 6:
        name = "(~" + name[1:]
    if idx >= 2 * N_CORE:
        return "s" + name
    if idx >= N_CORE:
        return "p" + name
    return name


_DISPLAY_TO_CHAR = {vertex_display(HATD_CHARS[i]): HATD_CHARS[i] for i in range(36)}


def format_walk(word: str) -> str:
    return ",".join(vertex_display(ch) for ch in word)


def parse_walk(text: str) -> str:
    if not text.strip():
        return ""
    out = []
    for token in text.split(","):
        token = token.strip()
        ch = _DISPLAY_TO_CHAR.get(token)
        if ch is None:
            raise UnknownVertex(f"unknown vertex token {token!r}")
        out.append(ch)
    return "".join(out)


@dataclass(frozen=True)
class Digraph:
    vertices: frozenset
    arcs: frozenset

    def out_neighbors(self, v: str) -> Tuple[str, ...]:
        if v not in self.vertices:
            raise UnknownVertex(f"unknown vertex {v!r}")
        return tuple(sorted(y for (x, y) in self.arcs if x == v))

    def has_arc(self, x: str, y: str) -> bool:
        return (x, y) in self.arcs


# Arc table of the core digraph, by vertex index:
# a 12-cycle-like outer layer plus six 2-cycles.
_ARCS_ONEWAY = [
    (0, 7), (8, 0), (1, 6), (11, 1), (6, 2), (2, 10),
    (10, 3), (3, 11), (4, 8), (9, 4), (7, 5), (5, 9),
]
_ARCS_MUTUAL = [(0, 3), (1, 4), (2, 5), (6, 9), (7, 10), (8, 11)]


@lru_cache(maxsize=None)
def digraph_D() -> Digraph:
    arcs = set()
    for x, y in _ARCS_ONEWAY:
        arcs.add((HATD_CHARS[x], HATD_CHARS[y]))
    for x, y in _ARCS_MUTUAL:
        arcs.add((HATD_CHARS[x], HATD_CHARS[y]))
        arcs.add((HATD_CHARS[y], HATD_CHARS[x]))
    return Digraph(frozenset(VD_CHARS), frozenset(arcs))


@lru_cache(maxsize=None)
def digraph_hatD() -> Digraph:
    d = digraph_D()
    arcs = set(d.arcs)
    vertices = set(d.vertices)
    for i in range(N_CORE):
        x, px, sx = HATD_CHARS[i], HATD_CHARS[12 + i], HATD_CHARS[24 + i]
        vertices.update((px, sx))
        arcs.add((px, x))
        arcs.add((x, sx))
    return Digraph(frozenset(vertices), frozenset(arcs))


def is_walk(g: Digraph, word: str) -> bool:
    for ch in word:
        if ch not in g.vertices:
            raise UnknownVertex(f"unknown vertex {ch!r}")
    return all(g.has_arc(word[i], word[i + 1]) for i in range(len(word) - 1))


def is_circular_walk(g: Digraph, cw: CircularWord) -> bool:
    w = cw.canonical
    if not w:
        return True
    return is_walk(g, w) and g.has_arc(w[-1], w[0])


def walks_of_length(g: Digraph, length: int) -> Iterator[str]:
    """All walks with `length` vertices, as words."""
    if length <= 0:
        return
    frontier = [v for v in sorted(g.vertices)]
    if length == 1:
        yield from frontier
        return

    def extend(prefix: str) -> Iterator[str]:
        if len(prefix) == length:
            yield prefix
            return
        for y in g.out_neighbors(prefix[-1]):
            yield from extend(prefix + y)

    for v in frontier:
        yield from extend(v)


def square_free_walks_up_to_3(g: Digraph) -> Iterator[str]:
    """All square-free walk words with at most 3 vertices."""
    for length in (1, 2, 3):
        for w in walks_of_length(g, length):
            if is_square_free(w):
                yield w


# --- square-free ternary source words -----------------------------------

_THUE_MORPHISM = {"a": "abc", "b": "ac", "c": "b"}


def thue_ternary(length: int) -> str:
    """Prefix of the square-free fixed point of a -> abc, b -> ac, c -> b."""
    if length < 0:
        raise BadN("length must be nonnegative")
    w = "a"
    while len(w) < length:
        w = "".join(_THUE_MORPHISM[ch] for ch in w)
    return w[:length]


def square_free_ternary_words_up_to_3(alphabet: str = "012") -> Iterator[str]:
    for a in alphabet:
        yield a
        for b in alphabet:
            if b == a:
                continue
            yield a + b
            for c in alphabet:
                if c != b:
                    yield a + b + c


# --- the walk substitution h ---------------------------------------------


def _walk_word(indices: Iterable[int]) -> str:
    return "".join(HATD_CHARS[i] for i in indices)


@lru_cache(maxsize=None)
def h_substitution() -> Substitution:
    """Ternary source {0,1,2} to walk words; every image starts at ()."""
    return Substitution({
        "0": (_walk_word([0, 7, 5, 2, 10, 3]),),
        "1": (_walk_word([0, 7, 10, 3, 11, 8]),),
        "2": (_walk_word([0, 7, 5, 9, 4, 8]),
              _walk_word([0, 7, 5, 9, 4, 1, 4, 8])),
    })


def square_free_walk(length: int) -> str:
    """A square-free walk word in the core digraph with `length` vertices.

    Deterministic: apply h (6-letter images only) to a square-free ternary
    word and truncate; prefixes of walks are walks and prefixes of
    square-free words are square-free.  Verified before returning.
    """
    if length < 1:
        raise BadN("walk length must be >= 1")
    blocks = -(-length // 6)
    source = thue_ternary(blocks).translate(str.maketrans("abc", "012"))
    walk = apply(h_substitution(), source, [0] * len(source))[:length]
    assert is_square_free(walk) and is_walk(digraph_D(), walk)
    return walk


# --- circular square-free ternary words (randomized backtracking) --------

_NO_CIRCULAR_TERNARY = frozenset({5, 7, 9, 10, 14, 17})


def _search_circular_ternary(m: int, rng: Optional[random.Random],
                             node_budget: int) -> Optional[str]:
    """DFS over linear square-free words, accepting circularly square-free
    leaves.  rng None means deterministic letter order (exhaustive)."""
    alphabet = "abc"
    stack: List[Tuple[str, List[str]]] = []
    first = list(alphabet) if rng is None else rng.sample(alphabet, 3)
    stack.append(("", first))
    nodes = 0
    while stack:
        prefix, options = stack[-1]
        if not options:
            stack.pop()
            continue
        letter = options.pop()
        cand = prefix + letter
        nodes += 1
        if nodes > node_budget:
            return None
        # reject if the new letter closes a square
        k = len(cand) - 1
        bad = False
        for half in range(1, (k + 1) // 2 + 1):
            if cand[k] == cand[k - half] and cand[k - 2 * half + 1:k - half + 1] == cand[k - half + 1:]:
                bad = True
                break
        if bad:
            continue
        if len(cand) == m:
            if circular_rep_square_free(cand):
                return cand
            continue
        nxt = list(alphabet) if rng is None else rng.sample(alphabet, 3)
        stack.append((cand, nxt))
    return None


@lru_cache(maxsize=None)
def circular_square_free_ternary(m: int, seed: int = 0) -> str:
    """A ternary word of length m all of whose conjugates are square-free.

    Exhaustive search below length 18 (where six lengths admit none);
    randomized backtracking with restarts above.
    """
    if m < 1:
        raise BadN("length must be >= 1")
    if m in _NO_CIRCULAR_TERNARY:
        raise NoSuchWord(f"no circular square-free ternary word of length {m}")
    if m < 18:
        found = _search_circular_ternary(m, None, 10 ** 9)
        if found is None:
            raise NoSuchWord(f"no circular square-free ternary word of length {m}")
        return found
    for attempt in range(64):
        rng = random.Random(seed * 1_000_003 + m * 1009 + attempt)
        found = _search_circular_ternary(m, rng, node_budget=200_000)
        if found is not None:
            return found
    raise SearchBudgetExceeded(f"circular ternary search failed at length {m}")


# --- walkable circular words in the core digraph --------------------------


def _search_walkable_circular(n: int, seed: int) -> Optional[str]:
    """Randomized DFS for a square-free, circularly walkable word of n
    vertices in the core digraph."""
    g = digraph_D()
    for attempt in range(256):
        rng = random.Random(seed * 1_000_003 + n * 1009 + attempt)
        start = rng.choice(VD_CHARS)
        stack: List[Tuple[str, List[str]]] = [(start, list(g.out_neighbors(start)))]
        rng.shuffle(stack[0][1])
        nodes = 0
        while stack:
            prefix, options = stack[-1]
            if len(prefix) == n:
                if g.has_arc(prefix[-1], prefix[0]) and circular_rep_square_free(prefix):
                    return prefix
                stack.pop()
                continue
            if not options:
                stack.pop()
                continue
            nodes += 1
            if nodes > 100_000:
                break
            y = options.pop()
            cand = prefix + y
            k = len(cand) - 1
            bad = False
            for half in range(1, (k + 1) // 2 + 1):
                if cand[k] == cand[k - half] and cand[k - 2 * half + 1:k - half + 1] == cand[k - half + 1:]:
                    bad = True
                    break
            if bad:
                continue
            nxt = list(g.out_neighbors(y))
            rng.shuffle(nxt)
            stack.append((cand, nxt))
    return None


@lru_cache(maxsize=None)
def even_walkable_circular(n: int, seed: int = 0) -> CircularWord:
    """A square-free circular word of even length n, walkable in the core
    digraph.

    For n >= 108, write n = 6m + r with m >= 18 and r in {0, 2, 4}; lift a
    circular square-free ternary word of length m through h, using the
    8-vertex image of '2' exactly r/2 times.  Smaller even lengths are
    found by randomized backtracking.  Output is re-verified.
    """
    if n < 2 or n % 2:
        raise BadN(f"walkable circular words need even length >= 2, got {n}")
    if n >= 108:
        r = n % 6
        m = (n - r) // 6
        u = circular_square_free_ternary(m, seed=seed)
        u = u.translate(str.maketrans("abc", "012"))
        long_uses = r // 2
        choices = []
        for ch in u:
            if ch == "2" and long_uses:
                choices.append(1)
                long_uses -= 1
            else:
                choices.append(0)
        assert long_uses == 0, "too few '2's for the requested length"
        word = apply(h_substitution(), u, choices)
    else:
        word = _search_walkable_circular(n, seed)
        if word is None:
            raise SearchBudgetExceeded(f"walkable circular search failed at {n}")
    cw = CircularWord.of(word)
    assert len(cw) == n
    assert circular_rep_square_free(cw.canonical)
    assert is_circular_walk(digraph_D(), cw)
    return cw
