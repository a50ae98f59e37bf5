"""The seed words, their localized variants, and the two substitutions
built from them.

Each seed word is embedded verbatim; `verify_catalog` re-derives every
asserted property (lengths, near/directional extremality, the insertion
identities relating Q, R, Q', R', and the cap products) so a transcription
error cannot survive unnoticed.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from .digraph import (
    HATD_CHARS,
    N_CORE,
    VD_CHARS,
    vertex_mirrored,
    vertex_perm,
)
from .errors import UnknownName
from .extremal import is_directional_extremal, is_nearly_extremal
from .squares import is_square_free
from .substitution import Substitution
from .words import apply_permutation

WORDS: Dict[str, str] = {
    "N": "abacbabcabacbcacbabcabacabcbabcabacbcabcb",
    "P": "abacbcabcbacabacbcabcbabcacbcabcbacabacbcabcbacbc",
    "Q": "abacbabcacbacabacbcacbacabcbabcabacbcabcb",
    "R": "abacabcacbacabcbabcacbacabacbcacbacabcbabcabacbcabcb",
    "S": "acabacbabcacbacabcbacbcabacbabcacbacabcbabcacbaca",
    "Q'": "abacabcacbacabcbabcacbacabacbcacbacabcbacbcabacbabcabacbcabcb",
    "R'": "abacabcacbacabcbabcacbacabacbcacbacabcbabcacbcabacbabcabacbcabcb",
}

CLAIMED_LENGTHS: Dict[str, int] = {
    "N": 41, "P": 49, "Q": 41, "R": 52, "S": 49, "Q'": 61, "R'": 64,
}


def constant(name: str) -> str:
    try:
        return WORDS[name]
    except KeyError:
        raise UnknownName(f"no catalog word named {name!r}") from None


def localized(name: str, x: str) -> str:
    """Permute `name` by the vertex's permutation; reverse if mirrored."""
    w = apply_permutation(constant(name), vertex_perm(x))
    return w[::-1] if vertex_mirrored(x) else w


@lru_cache(maxsize=None)
def delta() -> Substitution:
    """Over the capped digraph: {Q_x, R_x} on core vertices, single-image
    caps that swap P and S on mirrored vertices."""
    images: Dict[str, Tuple[str, ...]] = {}
    for i in range(N_CORE):
        x = HATD_CHARS[i]
        images[x] = (localized("Q", x), localized("R", x))
        prefix_name, suffix_name = ("P", "S") if i < 6 else ("S", "P")
        images[HATD_CHARS[12 + i]] = (localized(prefix_name, x),)
        images[HATD_CHARS[24 + i]] = (localized(suffix_name, x),)
    return Substitution(images)


@lru_cache(maxsize=None)
def delta_prime() -> Substitution:
    """Over the core digraph: {Q_x, R_x, Q'_x, R'_x}."""
    return Substitution({
        x: tuple(localized(name, x) for name in ("Q", "R", "Q'", "R'"))
        for x in VD_CHARS
    })


@dataclass(frozen=True)
class CatalogCheck:
    name: str
    passed: bool
    detail: str = ""


def _insert_after(w: str, k: int, factor: str) -> str:
    """Insert `factor` after the k-th letter (1-based)."""
    return w[:k] + factor + w[k:]


def verify_catalog() -> List[CatalogCheck]:
    checks: List[CatalogCheck] = []

    def add(name: str, passed: bool, detail: str = ""):
        checks.append(CatalogCheck(name, passed, detail))

    for name, claimed in CLAIMED_LENGTHS.items():
        add(f"length[{name}]", len(constant(name)) == claimed,
            f"got {len(constant(name))}, claimed {claimed}")

    for name in ("N", "Q", "R", "Q'", "R'"):
        add(f"nearly_extremal[{name}]", is_nearly_extremal(constant(name)))

    P, Q, R, S = (constant(k) for k in ("P", "Q", "R", "S"))
    add("left_extremal[PQ]", is_directional_extremal(P + Q, "left"))
    add("left_extremal[PR]", is_directional_extremal(P + R, "left"))
    add("right_extremal[QS]", is_directional_extremal(Q + S, "right"))
    add("right_extremal[RS]", is_directional_extremal(R + S, "right"))

    add("insertion[Q->R]", _insert_after(Q, 4, "abcacbacabc") == R)
    add("insertion[R->Q']", _insert_after(R, 40, "cbcabacba") == constant("Q'"))
    add("insertion[Q'->R']",
        _insert_after(constant("Q'"), 40, "bca") == constant("R'"))

    add("N_x_never_Q", all(localized("N", x) != Q for x in VD_CHARS))

    for name in WORDS:
        add(f"localized_square_free[{name}]",
            all(is_square_free(localized(name, x)) for x in VD_CHARS))

    # cap products: every word of delta(p_x x) left extremal, of
    # delta(x s_x) right extremal
    sub = delta()
    left_count = right_count = 0
    left_ok = right_ok = True
    for i in range(N_CORE):
        x = HATD_CHARS[i]
        cap_p = sub.images[HATD_CHARS[12 + i]][0]
        cap_s = sub.images[HATD_CHARS[24 + i]][0]
        for body in sub.images[x]:
            left_ok &= is_directional_extremal(cap_p + body, "left")
            left_count += 1
            right_ok &= is_directional_extremal(body + cap_s, "right")
            right_count += 1
    add("cap_products_left", left_ok, f"{left_count} products")
    add("cap_products_right", right_ok, f"{right_count} products")

    return checks
