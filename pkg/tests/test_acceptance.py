"""Acceptance suite: one printed pass/fail line per criterion.

Run with `pytest -s tests/test_acceptance.py` to see the lines as they
complete; several criteria are deliberately heavy (exhaustive spectra,
34 mid-range searches) and the whole file takes roughly half an hour on
one core.
"""

import random
import time

from extremalwords.catalog import WORDS, delta, delta_prime, localized, verify_catalog
from extremalwords.construct import (
    construct_extremal,
    construct_extremal_circular,
    postage,
    postage_even,
    spectrum,
)
from extremalwords.digraph import (
    HATD_CHARS,
    VD_CHARS,
    circular_square_free_ternary,
    digraph_D,
    digraph_hatD,
    h_substitution,
    square_free_ternary_words_up_to_3,
    square_free_walks_up_to_3,
)
from extremalwords.errors import NoSuchWord
from extremalwords.extremal import (
    irreducible_witness,
    is_extremal,
    is_extremal_circular,
    is_irreducibly_square_free,
)
from extremalwords.squares import (
    _find_square_oracle,
    circular_rep_square_free,
    find_square,
)
from extremalwords.substitution import Substitution, check_universal
from extremalwords.words import CircularWord

LINEAR_UP_TO_55 = {25, 41, 48, 50}
CIRCULAR_UP_TO_40 = {4, 6, 8, 13, 15, 16, 18, 20, 21, 22, 23, 24,
                     28, 30, 32, 33, 34, 35, 36, 38, 39, 40}


def emit(num, ok, detail):
    print(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}", flush=True)
    assert ok, f"criterion {num}: {detail}"


def test_criterion_01_linear_spectrum():
    t0 = time.monotonic()
    sp = spectrum(55)
    elapsed = time.monotonic() - t0
    ok = sp.admissible == frozenset(LINEAR_UP_TO_55) and elapsed <= 900
    emit(1, ok, f"spectrum(55) = {sorted(sp.admissible)} in {elapsed:.0f}s")


def test_criterion_02_circular_spectrum():
    t0 = time.monotonic()
    sp = spectrum(40, circular=True)
    elapsed = time.monotonic() - t0
    ok = sp.admissible == frozenset(CIRCULAR_UP_TO_40) and elapsed <= 900
    emit(2, ok, f"spectrum(40, circular) has {len(sp.admissible)} lengths "
                f"in {elapsed:.0f}s")


def test_criterion_03_catalog():
    t0 = time.monotonic()
    checks = verify_catalog()
    elapsed = time.monotonic() - t0
    failed = [c.name for c in checks if not c.passed]
    ok = not failed and elapsed <= 60
    emit(3, ok, f"{len(checks)} checks, failed={failed}, {elapsed:.1f}s")


def _mutations_all_detected():
    """Single-letter mutations of every catalog word must trip the
    certificate of a substitution built around the mutated word.

    Positions are strided (every 4th, plus both ends) to stay inside the
    five-minute window; each individual check costs about half a second.
    """
    base_words = dict(WORDS)
    d_walks = list(square_free_walks_up_to_3(digraph_D()))
    dhat_walks = list(square_free_walks_up_to_3(digraph_hatD()))

    def localized_mut(words, name, x):
        import extremalwords.catalog as catalog
        saved = dict(catalog.WORDS)
        catalog.WORDS.clear()
        catalog.WORDS.update(words)
        try:
            return localized(name, x)
        finally:
            catalog.WORDS.clear()
            catalog.WORDS.update(saved)

    missed = []
    for name, word in base_words.items():
        positions = sorted(set(range(0, len(word), 4)) | {len(word) - 1})
        for pos in positions:
            for repl in "abc":
                if repl == word[pos]:
                    continue
                words = dict(base_words)
                words[name] = word[:pos] + repl + word[pos + 1:]
                if name == "N":
                    sub = Substitution({
                        x: (localized_mut(words, "N", x),) for x in VD_CHARS})
                    walks = d_walks
                elif name in ("Q'", "R'"):
                    sub = Substitution({
                        x: tuple(localized_mut(words, k, x)
                                 for k in ("Q", "R", "Q'", "R'"))
                        for x in VD_CHARS})
                    walks = d_walks
                else:
                    # rebuild the capped substitution around the mutation
                    images = {}
                    for i in range(12):
                        x = HATD_CHARS[i]
                        images[x] = tuple(localized_mut(words, k, x)
                                          for k in ("Q", "R"))
                        pn, sn = ("P", "S") if i < 6 else ("S", "P")
                        images[HATD_CHARS[12 + i]] = (localized_mut(words, pn, x),)
                        images[HATD_CHARS[24 + i]] = (localized_mut(words, sn, x),)
                    sub = Substitution(images)
                    walks = dhat_walks
                if check_universal(sub, walks).passed:
                    missed.append((name, pos, repl))
    return missed


def test_criterion_04_certificates_and_mutations():
    t0 = time.monotonic()
    certs = [
        check_universal(delta(),
                        square_free_walks_up_to_3(digraph_hatD())).passed,
        check_universal(h_substitution(),
                        square_free_ternary_words_up_to_3("012")).passed,
        check_universal(delta_prime(),
                        square_free_walks_up_to_3(digraph_D())).passed,
    ]
    missed = _mutations_all_detected()
    elapsed = time.monotonic() - t0
    ok = all(certs) and not missed and elapsed <= 300
    emit(4, ok, f"certificates={certs}, undetected mutations={missed[:3]}"
                f"{'...' if len(missed) > 3 else ''}, {elapsed:.0f}s")


def test_criterion_05_linear_pipeline():
    results = []
    for n in (2138, 2500, 5000, 10007):
        t0 = time.monotonic()
        r = construct_extremal(n)
        elapsed = time.monotonic() - t0
        results.append(r.length == n and r.verified and is_extremal(r.word)
                       and elapsed <= 60)
        if n == 2138:
            word = r.word
    # oracle spot-check at 2138: square-freeness by the quadratic oracle,
    # and 200 sampled insertions each squared per the oracle
    oracle_ok = _find_square_oracle(word) is None
    rng = random.Random(0)
    for _ in range(200):
        i = rng.randrange(len(word) + 1)
        a = rng.choice("abc")
        ext = word[:i] + a + word[i:]
        if _find_square_oracle(ext) is None:
            oracle_ok = False
            break
    ok = all(results) and oracle_ok
    emit(5, ok, f"pipeline lengths ok={results}, oracle agreement={oracle_ok}")


def test_criterion_06_circular_pipeline():
    results = []
    for n in (470, 1001, 4172, 5000):
        t0 = time.monotonic()
        r = construct_extremal_circular(n)
        elapsed = time.monotonic() - t0
        results.append(r.length == n and r.verified
                       and is_extremal_circular(CircularWord(r.word))
                       and elapsed <= 120)
    emit(6, all(results), f"circular pipeline lengths ok={results}")


def test_criterion_07_midrange_search():
    t0 = time.monotonic()
    failures = []
    for n in range(87, 121):
        r = construct_extremal(n)
        if not (r.verified and len(r.word) == n and is_extremal(r.word)):
            failures.append(n)
    elapsed = time.monotonic() - t0
    ok = not failures and elapsed <= 3600
    emit(7, ok, f"n=87..120 searched in {elapsed:.0f}s, failures={failures}")


def test_criterion_08_circular_ternary_coverage():
    t0 = time.monotonic()
    bad = []
    for m in range(18, 201):
        w = circular_square_free_ternary(m)
        if len(w) != m or not circular_rep_square_free(w):
            bad.append(m)
    for m in (5, 7, 9, 10, 14, 17):
        try:
            circular_square_free_ternary(m)
            bad.append(m)
        except NoSuchWord:
            pass
    elapsed = time.monotonic() - t0
    ok = not bad and elapsed <= 600
    emit(8, ok, f"lengths 18..200 + nonexistence, bad={bad}, {elapsed:.0f}s")


def test_criterion_09_detector_equivalence_and_performance():
    rng = random.Random(42)
    mismatches = 0
    for _ in range(100_000):
        n = rng.randrange(0, 501)
        w = "".join(rng.choice("abc") for _ in range(n))
        fast = find_square(w)
        oracle = _find_square_oracle(w)
        if (fast is None) != (oracle is None):
            mismatches += 1
        elif fast is not None and not (fast.check(w) and oracle.check(w)):
            mismatches += 1
    for name in WORDS:
        for x in VD_CHARS:
            w = localized(name, x)
            if (find_square(w) is None) != (_find_square_oracle(w) is None):
                mismatches += 1
    word = construct_extremal(10007).word
    t0 = time.monotonic()
    extremal_ok = is_extremal(word)
    elapsed = time.monotonic() - t0
    ok = mismatches == 0 and extremal_ok and elapsed <= 60
    emit(9, ok, f"mismatches={mismatches}, length-10007 extremality "
                f"in {elapsed:.1f}s")


def test_criterion_10_postage():
    ok = all(postage(n, 41, 52) is not None for n in range(2040, 2201))
    ok &= postage(2039, 41, 52) is None
    for n in range(4172, 4301):
        plan = postage_even(n, (41, 52))
        ok &= plan is not None and plan.parity_sum % 2 == 0
    emit(10, ok, "postage [2040,2200] + even postage [4172,4300]")


def test_criterion_11_irreducible_witnesses():
    bad = [n for n in range(4, 13)
           if not is_irreducibly_square_free(irreducible_witness(n))]
    emit(11, not bad, f"witnesses 4..12, bad={bad}")
