"""Command-line front end: find-roots, gen, count-ops and bench."""

from __future__ import annotations

import argparse
import random
import sys
from typing import Sequence

from .bench import DEFAULT_DEGREES, format_rows, run_benchmark
from .errors import BadSpec, GFRootsError
from .field import Field, FieldSpec, build_field, default_spec
from .poly import normalize, random_poly, random_poly_with_roots
from .roots import brute_force_roots, chien_search, count_ops, fast_find_roots, predict_ops

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_MISMATCH = 3

MAX_GEN_DEGREE = 4096

_FINDERS = {
    "chien": chien_search,
    "fast": fast_find_roots,
    "oracle": brute_force_roots,
}


class _Parser(argparse.ArgumentParser):
    # Route argparse usage errors through the BadSpec path (exit code 1).
    def error(self, message):
        raise BadSpec(message)


def parse_poly_text(text: str, order: int) -> list[int]:
    """Comma-separated hex coefficients, constant term first."""
    parts = [part.strip() for part in text.split(",")]
    if any(not part for part in parts):
        raise BadSpec(f"empty coefficient in {text!r}")
    try:
        coeffs = [int(part, 16) for part in parts]
    except ValueError:
        raise BadSpec(f"coefficients must be hex values: {text!r}") from None
    for c in coeffs:
        if not 0 <= c < order:
            raise BadSpec(f"coefficient {c:#x} is outside the field")
    return normalize(coeffs)


def format_poly_text(coeffs: Sequence[int]) -> str:
    return ",".join(f"{c:x}" for c in coeffs)


def _format_root(field: Field, root: int) -> str:
    if root == 0:
        return "0 0"
    return f"{root:x} a^{field.log[root]}"


def _field_from_args(args) -> Field:
    if args.prim_poly is not None:
        return build_field(FieldSpec(args.m, args.prim_poly))
    return build_field(default_spec(args.m))


def _hex_mask(text: str) -> int:
    try:
        return int(text, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a hex mask: {text!r}") from None


def _degree_list(text: str) -> list[int]:
    try:
        degrees = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}") from None
    return degrees


def cmd_find_roots(args) -> int:
    field = _field_from_args(args)
    p = parse_poly_text(args.poly, field.order)
    if len(p) == 1 and p[0] != 0:
        return EXIT_OK  # a nonzero constant has no roots; not an error here
    for root in sorted(_FINDERS[args.method](p, field)):
        print(_format_root(field, root))
    return EXIT_OK


def cmd_gen(args) -> int:
    field = _field_from_args(args)
    if not 0 <= args.degree <= MAX_GEN_DEGREE:
        raise BadSpec(f"degree must be in [0, {MAX_GEN_DEGREE}]")
    rng = random.Random(args.seed)
    p, planted = random_poly_with_roots(args.degree, args.roots, field, rng)
    label = ",".join(f"{r:x}" for r in sorted(set(planted))) or "none"
    print(f"# roots: {label}")
    print(format_poly_text(p))
    return EXIT_OK


def cmd_count_ops(args) -> int:
    field = _field_from_args(args)
    if args.degree < 1:
        raise BadSpec("degree must be >= 1")
    rng = random.Random(args.seed)
    p = random_poly(args.degree, field, rng)
    measured = count_ops(args.method, p, field)
    predicted = predict_ops(args.method, args.degree, args.m)
    status = EXIT_OK
    for name in ("adds", "muls", "exps"):
        got = getattr(measured, name)
        want = getattr(predicted, name)
        verdict = "MATCH" if got == want else "MISMATCH"
        if got != want:
            status = EXIT_MISMATCH
        print(f"{name} {got} / {want} {verdict}")
    return status


def cmd_bench(args) -> int:
    rows = run_benchmark(
        args.m, args.degrees, trials=args.trials, seed=args.seed, prim_poly=args.prim_poly
    )
    print(format_rows(rows, args.format))
    return EXIT_OK


def _add_field_flags(parser, default_m: int | None = None) -> None:
    if default_m is None:
        parser.add_argument("--m", type=int, required=True, help="field extension degree (2..16)")
    else:
        parser.add_argument(
            "--m", type=int, default=default_m, help=f"field extension degree (default {default_m})"
        )
    parser.add_argument(
        "--prim-poly",
        type=_hex_mask,
        default=None,
        metavar="HEX",
        help="primitive polynomial bitmask in hex (default: built-in choice for m)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gfroots", description="Find all roots of polynomials over GF(2^m).")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("find-roots", help="list every root of a polynomial")
    _add_field_flags(p)
    p.add_argument("--poly", required=True, help="comma-separated hex coefficients, constant first")
    p.add_argument("--method", choices=sorted(_FINDERS), default="fast")
    p.set_defaults(handler=cmd_find_roots)

    p = sub.add_parser("gen", help="generate a random polynomial with planted roots")
    _add_field_flags(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--roots", type=int, default=0, help="number of planted roots")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("count-ops", help="compare measured and predicted operation counts")
    _add_field_flags(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--method", choices=("chien", "fast"), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_count_ops)

    p = sub.add_parser("bench", help="time both methods over a degree sweep")
    _add_field_flags(p, default_m=8)
    p.add_argument(
        "--degrees",
        type=_degree_list,
        default=list(DEFAULT_DEGREES),
        help="comma-separated degrees (default %s)" % ",".join(map(str, DEFAULT_DEGREES)),
    )
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(handler=cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except BadSpec as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GFRootsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
