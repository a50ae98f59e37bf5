"""The embedded seed words and their self-verification suite."""

import pytest

from extremalwords.catalog import (
    CLAIMED_LENGTHS,
    WORDS,
    constant,
    delta,
    delta_prime,
    localized,
    verify_catalog,
)
from extremalwords.digraph import HATD_CHARS, VD_CHARS
from extremalwords.errors import UnknownName
from extremalwords.extremal import is_nearly_extremal
from extremalwords.squares import is_square_free
from extremalwords.substitution import Substitution, check_condition_II


def test_constant_lookup():
    assert len(constant("Q")) == 41
    with pytest.raises(UnknownName):
        constant("T")


def test_lengths():
    for name, claimed in CLAIMED_LENGTHS.items():
        assert len(WORDS[name]) == claimed


def test_localized_identity_and_mirror():
    assert localized("Q", "0") == constant("Q")
    assert localized("Q", "6") == constant("Q")[::-1]
    for name in WORDS:
        for x in VD_CHARS:
            assert is_square_free(localized(name, x))
            assert sorted(set(localized(name, x))) == ["a", "b", "c"]


def test_localized_all_distinct():
    # permutation/reversal images of Q are pairwise distinct
    images = {localized("Q", x) for x in VD_CHARS}
    assert len(images) == 12


def test_delta_shape():
    sub = delta()
    assert len(sub.images) == 36
    for i in range(12):
        assert len(sub.images[HATD_CHARS[i]]) == 2
        assert len(sub.images[HATD_CHARS[12 + i]]) == 1
        assert len(sub.images[HATD_CHARS[24 + i]]) == 1
    # cap images swap sides on mirrored letters
    assert sub.images[HATD_CHARS[12]][0] == constant("P")
    assert sub.images[HATD_CHARS[12 + 6]][0] == constant("S")[::-1]


def test_delta_prime_shape():
    sub = delta_prime()
    assert len(sub.images) == 12
    for x in VD_CHARS:
        assert len(sub.images[x]) == 4
        assert tuple(len(w) for w in sub.images[x]) == (41, 52, 61, 64)


def test_verify_catalog_passes():
    checks = verify_catalog()
    failed = [c for c in checks if not c.passed]
    assert not failed, failed
    assert len(checks) == 29
    names = {c.name for c in checks}
    assert "cap_products_left" in names and "cap_products_right" in names


def test_catalog_mutation_detected():
    """Corrupting any single letter of Q must break some verified property
    (here: the nearly-extremal check or the substitution certificate)."""
    q = constant("Q")
    pos = 20
    for repl in "abc":
        if repl == q[pos]:
            continue
        mutated = q[:pos] + repl + q[pos + 1:]
        broken = not is_nearly_extremal(mutated)
        if not broken:
            sub = Substitution({"q": (mutated,), "r": (constant("R"),)})
            broken = not check_condition_II(sub).passed
        assert broken
