"""The permutation digraph, walk words, and the walk-language generators."""

import pytest

from extremalwords.digraph import (
    HATD_CHARS,
    N_CORE,
    VD_CHARS,
    circular_square_free_ternary,
    digraph_D,
    digraph_hatD,
    even_walkable_circular,
    format_walk,
    h_substitution,
    is_circular_walk,
    is_walk,
    mirror,
    parse_walk,
    square_free_walk,
    square_free_walks_up_to_3,
    thue_ternary,
    vertex_display,
    vertex_index,
    walks_of_length,
)
from extremalwords.errors import BadN, NoSuchWord, UnknownVertex
from extremalwords.squares import circular_rep_square_free, is_square_free
from extremalwords.words import CircularWord


def test_vertex_roundtrip():
    for i in range(36):
        assert vertex_index(HATD_CHARS[i]) == i
    with pytest.raises(UnknownVertex):
        vertex_index("!")


def test_vertex_display():
    assert vertex_display("0") == "()"
    assert vertex_display("1") == "(ab)"
    assert vertex_display("7") == "(~ab)"
    assert vertex_display(HATD_CHARS[12]) == "p()"
    assert vertex_display(HATD_CHARS[24 + 7]) == "s(~ab)"


def test_walk_serialization_roundtrip():
    word = "0752"
    text = format_walk(word)
    assert text == "(),(~ab),(acb),(ac)"
    assert parse_walk(text) == word
    assert parse_walk("") == ""
    with pytest.raises(UnknownVertex):
        parse_walk("(),(xy)")


def test_arc_checksums():
    d = digraph_D()
    assert len(d.vertices) == 12
    assert len(d.arcs) == 24
    for v in VD_CHARS:
        assert len(d.out_neighbors(v)) == 2
        assert sum(1 for (x, y) in d.arcs if y == v) == 2


def test_mirror_duality():
    d = digraph_D()
    for (x, y) in d.arcs:
        assert d.has_arc(mirror(y), mirror(x))
    assert mirror(mirror("3")) == "3"
    with pytest.raises(UnknownVertex):
        mirror(HATD_CHARS[12])


def test_hatD_shape():
    dh = digraph_hatD()
    assert len(dh.vertices) == 36
    assert len(dh.arcs) == 24 + 24
    for i in range(N_CORE):
        assert dh.has_arc(HATD_CHARS[12 + i], HATD_CHARS[i])
        assert dh.has_arc(HATD_CHARS[i], HATD_CHARS[24 + i])


def test_is_walk():
    d = digraph_D()
    assert is_walk(d, "0752")
    assert not is_walk(d, "01")
    assert is_walk(d, "")
    assert is_walk(d, "5")
    with pytest.raises(UnknownVertex):
        is_walk(d, "0Z")
    # a mutual pair is a circular walk of length 2
    assert is_circular_walk(d, CircularWord.of("03"))
    assert is_square_free("03")


def test_walks_of_length():
    d = digraph_D()
    assert sorted(walks_of_length(d, 1)) == sorted(VD_CHARS)
    two = list(walks_of_length(d, 2))
    assert len(two) == 24  # one per arc
    three = list(walks_of_length(d, 3))
    assert len(three) == 48  # out-degree 2 everywhere
    assert all(is_walk(d, w) for w in three)


def test_square_free_walks_up_to_3():
    d = digraph_D()
    ws = list(square_free_walks_up_to_3(d))
    assert all(is_walk(d, w) and is_square_free(w) for w in ws)
    assert all(len(w) <= 3 for w in ws)
    # no self-loops, and length-3 words cannot contain an even-length
    # square, so every short walk qualifies: 12 + 24 + 48
    assert len(ws) == 84


def test_thue_ternary():
    w = thue_ternary(2000)
    assert len(w) == 2000 and is_square_free(w)
    assert thue_ternary(0) == ""
    assert thue_ternary(6) == "abcacb"
    with pytest.raises(BadN):
        thue_ternary(-1)


def test_h_images_are_consistent_walks():
    d = digraph_D()
    h = h_substitution()
    images = [img for imgs in h.images.values() for img in imgs]
    for A in images:
        assert A[0] == "0"
        for B in images:
            assert is_walk(d, A + B)
        assert is_walk(d, A + "0")  # every image exits back to ()


def test_square_free_walk_properties():
    d = digraph_D()
    for length in range(1, 201):
        w = square_free_walk(length)
        assert len(w) == length
        assert is_walk(d, w)
        assert is_square_free(w)
    with pytest.raises(BadN):
        square_free_walk(0)


def test_circular_ternary_nonexistent_lengths():
    for m in (5, 7, 9, 10, 14, 17):
        with pytest.raises(NoSuchWord):
            circular_square_free_ternary(m)


def test_circular_ternary_agrees_with_exhaustive():
    def exists_brute(m):
        stack = [""]
        while stack:
            w = stack.pop()
            if len(w) == m:
                if circular_rep_square_free(w):
                    return True
                continue
            for a in "abc":
                if is_square_free(w + a):
                    stack.append(w + a)
        return False

    for m in range(1, 21):
        try:
            w = circular_square_free_ternary(m)
            found = True
            assert len(w) == m and circular_rep_square_free(w)
        except NoSuchWord:
            found = False
        assert found == exists_brute(m), f"length {m}"


def test_circular_ternary_midsize():
    for m in (18, 30, 59, 108, 150):
        w = circular_square_free_ternary(m)
        assert len(w) == m and circular_rep_square_free(w)


def test_even_walkable_circular_small_and_lifted():
    d = digraph_D()
    for n in range(2, 121, 2):
        cw = even_walkable_circular(n)
        assert len(cw) == n
        assert circular_rep_square_free(cw.canonical)
        assert is_circular_walk(d, cw)
    with pytest.raises(BadN):
        even_walkable_circular(7)
    with pytest.raises(BadN):
        even_walkable_circular(0)


def test_walks_have_even_circuits():
    # the digraph is bipartite by permutation parity, so every circular
    # walk has even length
    d = digraph_D()
    parity = {v: vertex_index(v) % 6 in (1, 2, 3) for v in VD_CHARS}
    for (x, y) in d.arcs:
        assert parity[x] != parity[y]
