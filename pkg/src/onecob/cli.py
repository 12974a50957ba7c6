"""Command-line front end.

Cobordisms are read and written as JSON documents, matrices as CSV
(``num/den`` cells) or JSON.  Verification subcommands print a JSON report
and exit 0 exactly when nothing failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import brauer, tqft
from . import matrix as mx
from .cobordism import CobordismError, compose, tensor
from .matrix import DimensionError, ExactMatrix
from .serialize import cobordism_to_doc, parse_cobordism, word_to_doc
from .words import decompose


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def load_cobordism(path: str):
    return parse_cobordism(_read(path))


def load_matrix(path: str) -> ExactMatrix:
    text = _read(path)
    stripped = text.lstrip()
    if path.endswith(".json") or stripped[:1] in ("{", "["):
        try:
            return mx.from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise UsageError(f"{path}: malformed JSON: {exc}") from None
    return mx.from_csv(text)


def _emit_json(doc) -> None:
    sys.stdout.write(json.dumps(doc, ensure_ascii=False) + "\n")


def _emit_matrix(m: ExactMatrix, fmt: str) -> None:
    if fmt == "csv":
        sys.stdout.write(mx.to_csv(m))
    else:
        _emit_json(mx.to_json(m))


def _emit_report(rep) -> int:
    _emit_json(rep.to_json())
    return 0 if rep.failed == 0 else 1


def cmd_compose(args) -> int:
    _emit_json(cobordism_to_doc(compose(load_cobordism(args.first), load_cobordism(args.second))))
    return 0


def cmd_tensor(args) -> int:
    _emit_json(cobordism_to_doc(tensor(load_cobordism(args.first), load_cobordism(args.second))))
    return 0


def cmd_decompose(args) -> int:
    _emit_json(word_to_doc(decompose(load_cobordism(args.cobordism))))
    return 0


def cmd_brauer(args) -> int:
    k = load_cobordism(args.cobordism)
    _emit_matrix(brauer.brauer_image(k, args.p, args.max_cells), args.format)
    return 0


def cmd_tqft_eval(args) -> int:
    t = tqft.tqft_new(load_matrix(args.x), args.max_cells)
    _emit_matrix(tqft.tqft_eval(t, load_cobordism(args.cobordism)), args.format)
    return 0


def cmd_tqft_check(args) -> int:
    return _emit_report(tqft.check_axioms(tqft.tqft_new(load_matrix(args.x))))


_DEFAULT_POINTS = {"functoriality": 3, "faithfulness": 8, "theta": 6}


def cmd_verify(args) -> int:
    if args.trials is not None and args.seed is None:
        raise UsageError("--trials needs an explicit --seed")
    brauer.check_base(args.p)
    n = args.max_points if args.max_points is not None else _DEFAULT_POINTS[args.suite]
    brauer.check_cells(args.p, n, n if args.suite == "functoriality" else 0, args.max_cells)
    if args.suite == "functoriality":
        if args.trials is None:
            rep = brauer.verify_functoriality_all(args.p, n, args.max_circles)
        else:
            rep = brauer.verify_functoriality_random(args.p, n, args.trials, args.seed,
                                                     args.max_circles)
    elif args.suite == "faithfulness":
        if args.x:
            t = tqft.tqft_new(load_matrix(args.x))
            if t.p != args.p:
                raise UsageError(f"--x is {t.p}x{t.p} but --p is {args.p}")
            rep = tqft.verify_tqft_faithfulness(t, n, args.max_circles)
        else:
            rep = brauer.verify_faithfulness_all(args.p, n, args.max_circles)
    else:
        rep = tqft.verify_theta(
            args.p, n,
            trials=100 if args.trials is None else args.trials,
            seed=0 if args.seed is None else args.seed,
            n_matrices=args.matrices,
        )
    return _emit_report(rep)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onecob",
        description="Oriented 1-cobordisms, their Brauer matrices, and strict 1-TQFTs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def cap(p):
        p.add_argument("--max-cells", type=int, default=brauer.DEFAULT_MAX_CELLS,
                       help="refuse matrices with more cells than this (default 2^24)")

    for name, fn in (("compose", cmd_compose), ("tensor", cmd_tensor)):
        p = sub.add_parser(name, help=f"{name} two cobordism JSON documents")
        p.add_argument("first")
        p.add_argument("second")
        p.set_defaults(func=fn)

    p = sub.add_parser("decompose", help="canonical generator word of a cobordism")
    p.add_argument("cobordism")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("brauer", help="Brauer matrix p^circles * A(K)")
    p.add_argument("cobordism")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    cap(p)
    p.set_defaults(func=cmd_brauer)

    p = sub.add_parser("tqft-eval", help="evaluate the strict 1-TQFT given by X on a cobordism")
    p.add_argument("cobordism")
    p.add_argument("--x", required=True, help="invertible p x p matrix, CSV or JSON")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    cap(p)
    p.set_defaults(func=cmd_tqft_eval)

    p = sub.add_parser("tqft-check", help="check the axioms of the theory given by X")
    p.add_argument("--x", required=True)
    p.set_defaults(func=cmd_tqft_check)

    p = sub.add_parser("verify", help="run a verification suite and print its report")
    p.add_argument("suite", choices=("functoriality", "faithfulness", "theta"))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--max-points", type=int,
                   help="functoriality: longest object; faithfulness/theta: most boundary points")
    p.add_argument("--max-circles", type=int, default=1)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--matrices", type=int, default=20, help="theta: number of random X")
    p.add_argument("--x", help="faithfulness: test the TQFT given by X instead of B")
    cap(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CobordismError, DimensionError, brauer.SizeCapError,
            brauer.DimensionBaseError, tqft.InvalidTqftError, OSError, ValueError) as exc:
        print(f"onecob: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
