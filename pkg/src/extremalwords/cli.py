"""Command line interface.

Results go to stdout (text or JSON); progress notes go to stderr.  Exit
codes: 0 success, 2 usage error, 3 no word of the requested length exists,
4 search budget exhausted, 1 anything else.
"""

import argparse
import json
import sys
from dataclasses import asdict
from typing import Dict, Iterable, List

from .catalog import delta, delta_prime, verify_catalog
from .construct import (
    construct_extremal,
    construct_extremal_circular,
    spectrum,
)
from .digraph import (
    digraph_D,
    digraph_hatD,
    h_substitution,
    square_free_ternary_words_up_to_3,
    square_free_walks_up_to_3,
)
from .errors import (
    BudgetRefused,
    ExtremalWordsError,
    NotInSpectrum,
    SearchBudgetExceeded,
)
from .extremal import irreducible_witness, is_irreducibly_square_free, report
from .substitution import check_universal, parse_substitution
from .words import CircularWord, TERNARY, parse_word
from .squares import circular_rep_square_free, find_square

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_IN_SPECTRUM = 3
EXIT_BUDGET = 4


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _emit(payload: Dict, fmt: str, text_lines: Iterable[str]) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_check(args) -> int:
    word = args.word
    if word.startswith("~"):
        args.circular = True
        word = word[1:]
    parse_word(word, TERNARY)
    if args.circular:
        cw = CircularWord.of(word)
        from .extremal import is_extremal_circular

        sf = circular_rep_square_free(cw.canonical)
        extremal = is_extremal_circular(cw)
        payload = {
            "word": str(cw),
            "circular": True,
            "square_free": sf,
            "extremal": extremal,
        }
        _emit(payload, args.format, [
            f"word: {cw}",
            f"square_free: {sf}",
            f"extremal: {extremal}",
        ])
        return EXIT_OK
    rep = report(word)
    occ = find_square(word)
    payload = {
        "word": word,
        "circular": False,
        "square_free": rep.square_free,
        "square": None if occ is None else
        {"start": occ.start, "half_length": occ.half_length},
        "extremal": rep.extremal,
        "nearly_extremal": rep.nearly_extremal,
        "left_extremal": rep.left_extremal,
        "right_extremal": rep.right_extremal,
        "square_free_extensions": sorted(rep.square_free_extensions),
    }
    lines = [
        f"word: {word}",
        f"square_free: {rep.square_free}",
        f"extremal: {rep.extremal}",
        f"nearly_extremal: {rep.nearly_extremal}",
        f"left_extremal: {rep.left_extremal}",
        f"right_extremal: {rep.right_extremal}",
        f"square_free_extensions: {len(rep.square_free_extensions)}",
    ]
    if occ is not None:
        lines.insert(2, f"square: start={occ.start} half_length={occ.half_length}")
    _emit(payload, args.format, lines)
    return EXIT_OK


def _cmd_construct(args) -> int:
    build = construct_extremal_circular if args.circular else construct_extremal
    result = build(args.length, seed=args.seed, budget=args.budget)
    _log(f"method={result.method} elapsed_ms={result.elapsed_ms}")
    payload = result.to_json_dict()
    # the result record is the output in either format
    _emit(payload, args.format, [json.dumps(payload, sort_keys=True)])
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    sp = spectrum(args.max_n, circular=args.circular, force=args.force)
    admissible = sorted(sp.admissible)
    payload = {
        "max_n": sp.max_n,
        "circular": args.circular,
        "admissible": admissible,
        "exhaustive": sp.exhaustive,
    }
    _emit(payload, args.format,
          [" ".join(str(n) for n in admissible)])
    return EXIT_OK


def _cmd_verify_catalog(args) -> int:
    checks = verify_catalog()
    failed = [c for c in checks if not c.passed]
    payload = {
        "total": len(checks),
        "failed": [asdict(c) for c in failed],
        "passed": not failed,
    }
    lines = [f"{'ok' if c.passed else 'FAIL'}  {c.name}"
             + (f"  ({c.detail})" if c.detail and not c.passed else "")
             for c in checks]
    lines.append(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    _emit(payload, args.format, lines)
    return EXIT_OK if not failed else 1


_BUILTIN_SUBSTITUTIONS = {
    "delta": lambda: (delta(), square_free_walks_up_to_3(digraph_hatD())),
    "delta-prime": lambda: (delta_prime(), square_free_walks_up_to_3(digraph_D())),
    "h": lambda: (h_substitution(), square_free_ternary_words_up_to_3("012")),
}


def _cmd_verify_substitution(args) -> int:
    if args.name is not None:
        sub, factors = _BUILTIN_SUBSTITUTIONS[args.name]()
    else:
        with open(args.file, encoding="utf-8") as fh:
            sub = parse_substitution(fh.read())
        letters = sub.source_alphabet
        factors = (u for length in (1, 2, 3)
                   for u in _free_monoid_words(letters, length))
    rep = check_universal(sub, factors)
    payload = {
        "passed": rep.passed,
        "violations": [{"condition": v.condition, "witness": list(v.witness)}
                       for v in rep.violations],
    }
    lines = [f"passed: {rep.passed}"]
    lines.extend(str(v) for v in rep.violations)
    _emit(payload, args.format, lines)
    return EXIT_OK if rep.passed else 1


def _free_monoid_words(letters: str, length: int) -> Iterable[str]:
    if length == 0:
        yield ""
        return
    for prefix in _free_monoid_words(letters, length - 1):
        for a in letters:
            yield prefix + a


def _cmd_witness(args) -> int:
    w = irreducible_witness(args.n)
    ok = is_irreducibly_square_free(w)
    payload = {"n": args.n, "word": w, "irreducibly_square_free": ok}
    _emit(payload, args.format, [w])
    return EXIT_OK if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extremalwords",
        description="Construct and verify extremal square-free ternary words.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="classify a ternary word")
    p.add_argument("word", help="ternary word; prefix '~' for circular")
    p.add_argument("--circular", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("construct",
                       help="an extremal word of the given length")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--circular", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=30_000_000,
                   help="search node budget (non-pipeline lengths)")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("spectrum",
                       help="exhaustive admissible lengths up to --max")
    p.add_argument("--max", dest="max_n", type=int, required=True)
    p.add_argument("--circular", action="store_true")
    p.add_argument("--force", action="store_true",
                   help="override the runtime guard on max_n")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("verify-catalog",
                       help="re-derive every property of the seed words")
    p.set_defaults(func=_cmd_verify_catalog)

    p = sub.add_parser("verify-substitution",
                       help="square-freeness certificate for a substitution")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--name", choices=sorted(_BUILTIN_SUBSTITUTIONS))
    group.add_argument("--file", help="rules file, one 'letter -> a | b' per line")
    p.set_defaults(func=_cmd_verify_substitution)

    p = sub.add_parser("witness",
                       help="irreducibly square-free word over {1..n}")
    p.add_argument("--irreducible", dest="n", type=int, required=True)
    p.set_defaults(func=_cmd_witness)

    return parser


def main(argv: List[str] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotInSpectrum as exc:
        _log(f"error: {exc}")
        return EXIT_NOT_IN_SPECTRUM
    except SearchBudgetExceeded as exc:
        _log(f"error: {exc}")
        return EXIT_BUDGET
    except BudgetRefused as exc:
        _log(f"error: {exc}")
        return EXIT_USAGE
    except (ExtremalWordsError, ValueError, OSError) as exc:
        _log(f"error: {exc}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
