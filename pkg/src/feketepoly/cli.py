"""Command line interface.

Subcommands: construct, compact, trace, mults, factor-mod, certify,
table, verify-table. Exit codes: 0 success, 2 invalid input, 3 no
certificate below the bound, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .ntheory import is_prime, quad_disc
from .fekete import FeketeDivisionError, fekete_compact
from .cyclotomic import strip_cyclotomic
from .ffpoly import factor_mod, factor_shape
from .galois import (
    VerificationError,
    certify_full_2cycle,
    certify_full_quadruple,
    certify_kernel,
    certify_trace_symmetric,
)
from .pipeline import (
    DEFAULT_BOUND,
    EXIT_INVALID_INPUT,
    EXIT_NOT_FOUND,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    TableMode,
    TableSpec,
    cache_load,
    cache_store,
    parse_family,
    rows_to_csv,
    rows_to_json,
    run_table,
    verify_csv,
    write_plot,
)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _bundle_or_exit(delta: int, cyclo_bound: int | None = None):
    try:
        return fekete_compact(quad_disc(delta), cyclo_bound)
    except (ValueError, FeketeDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID_INPUT)


def _cmd_construct(args) -> int:
    bundle = _bundle_or_exit(args.delta, args.cyclo_bound)
    _emit(json.dumps(bundle.to_json(), indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def _cmd_compact(args) -> int:
    bundle = _bundle_or_exit(args.delta)
    payload = {
        "delta": bundle.disc.delta,
        "family": bundle.disc.family.value,
        "sign": bundle.sign,
        "conjectural": bundle.conjectural,
        "f": bundle.f.to_json(),
        "f_text": str(bundle.f),
    }
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def _cmd_trace(args) -> int:
    bundle = _bundle_or_exit(args.delta)
    payload = {
        "delta": bundle.disc.delta,
        "g": bundle.g.to_json(),
        "g_text": str(bundle.g),
    }
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def _cmd_mults(args) -> int:
    bundle = _bundle_or_exit(args.delta)
    report = (
        strip_cyclotomic(bundle.F, args.cyclo_bound) if args.cyclo_bound else bundle.removed
    )
    _emit(json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def _cmd_factor_mod(args) -> int:
    if not is_prime(args.q):
        print(f"error: {args.q} is not prime", file=sys.stderr)
        return EXIT_INVALID_INPUT
    bundle = _bundle_or_exit(args.delta)
    poly = {"f": bundle.f, "g": bundle.g, "F": bundle.F}[args.which]
    try:
        shape = factor_shape(poly, args.q)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    payload = {"delta": args.delta, "which": args.which, "q": args.q, **shape.to_json()}
    if shape.squarefree and args.q % 2 == 1:
        rng = random.Random(args.seed)
        payload["factors"] = [str(m) for m in factor_mod(poly, args.q, rng)]
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def _certificate_payload(delta: int, mode: str, bound: int) -> tuple[int, dict | None]:
    bundle = _bundle_or_exit(delta)
    if mode == "triple":
        cert = certify_trace_symmetric(bundle.g, bound)
    else:
        g_cert = None
        if mode in ("2cycle", "kernel"):
            g_cert = certify_trace_symmetric(bundle.g, bound)
            if g_cert is None:
                return EXIT_NOT_FOUND, None
        if mode == "quadruple":
            cert = certify_full_quadruple(bundle.f, bound)
        elif mode == "2cycle":
            cert = certify_full_2cycle(bundle.f, g_cert, bound)
        else:
            cert = certify_kernel(bundle.f, g_cert, bound)
    if cert is None:
        return EXIT_NOT_FOUND, None
    return EXIT_OK, cert.to_json()


def _cmd_certify(args) -> int:
    if args.cache_dir:
        cached = cache_load(args.cache_dir, args.delta, args.mode, args.bound)
        if cached is not None:
            _emit(json.dumps(cached, indent=2, sort_keys=True) + "\n", args.out)
            return EXIT_OK
    try:
        code, payload = _certificate_payload(args.delta, args.mode, args.bound)
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    if code != EXIT_OK:
        print(
            f"no {args.mode} certificate for delta={args.delta} below bound {args.bound}",
            file=sys.stderr,
        )
        return code
    if args.cache_dir:
        cache_store(args.cache_dir, args.delta, args.mode, args.bound, payload)
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def _cmd_table(args) -> int:
    try:
        spec = TableSpec(
            family=parse_family(args.family),
            mode=TableMode(args.mode),
            p_min=args.p_min,
            p_max=args.p_max,
            bound=args.bound,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    rows = run_table(spec, jobs=args.jobs, joint=args.joint)
    text = rows_to_json(rows) if args.format == "json" else rows_to_csv(rows)
    _emit(text, args.out)
    if args.plot:
        write_plot(rows, args.plot)
    return EXIT_OK


def _cmd_verify_table(args) -> int:
    try:
        results = verify_csv(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    failures = 0
    lines = []
    for r in results:
        status = "skip" if r.skipped else ("ok" if r.ok else "FAIL")
        if not r.ok and not r.skipped:
            failures += 1
        where = f"{r.family.value} {r.mode.value} p={r.p}" if r.family else "(unparsed)"
        lines.append(f"line {r.line}: {status} {where}: {r.detail}")
    checked = sum(1 for r in results if not r.skipped)
    lines.append(f"verified {checked} rows, {failures} failures")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if failures == 0 else EXIT_VERIFICATION_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fekete",
        description="Generalized Fekete polynomials and their Galois certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("construct", help="full bundle for a fundamental discriminant")
    p.add_argument("delta", type=int)
    p.add_argument("--cyclo-bound", type=int, default=None)
    add_common(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("compact", help="the compact polynomial f")
    p.add_argument("delta", type=int)
    add_common(p)
    p.set_defaults(func=_cmd_compact)

    p = sub.add_parser("trace", help="the trace polynomial g")
    p.add_argument("delta", type=int)
    add_common(p)
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser("mults", help="cyclotomic multiplicity report for the raw polynomial")
    p.add_argument("delta", type=int)
    p.add_argument("--cyclo-bound", type=int, default=None)
    add_common(p)
    p.set_defaults(func=_cmd_mults)

    p = sub.add_parser("factor-mod", help="factorization shape (and factors) mod q")
    p.add_argument("delta", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--which", choices=["f", "g", "F"], default="f")
    p.add_argument("--seed", type=int, default=0)
    add_common(p)
    p.set_defaults(func=_cmd_factor_mod)

    p = sub.add_parser("certify", help="run a certification search")
    p.add_argument("delta", type=int)
    p.add_argument(
        "--mode",
        choices=["quadruple", "triple", "2cycle", "kernel"],
        default="quadruple",
    )
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--cache-dir", default=None)
    add_common(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("table", help="sweep a prime range and emit a witness table")
    p.add_argument(
        "--family",
        required=True,
        help="4p, 3p, minus4p or minus3p (use --family=-4p for the dashed forms)",
    )
    p.add_argument(
        "--mode",
        choices=[m.value for m in TableMode],
        required=True,
    )
    p.add_argument("--p-min", type=int, default=2)
    p.add_argument("--p-max", type=int, required=True)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--joint", action="store_true", help="minimize the largest witness")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--plot", help="also render a witness-size scatter plot to this file")
    add_common(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify-table", help="re-check reference witness rows from a CSV")
    p.add_argument("file")
    add_common(p)
    p.set_defaults(func=_cmd_verify_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID_INPUT
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED


if __name__ == "__main__":
    sys.exit(main())
