"""Command-line interface.

Three subcommands mirror the toolkit surface:

    kfactors check    --seq 3,3,2,2,2,2 --k 2
    kfactors generate --mode connected --a 6 --b 5 --k 2 --seed 1
    kfactors kfactor  --seq 3,3,3,3,2,2 --k 1 [--dot-dir out/]

Output is JSON by default (byte-stable: sorted keys, sorted edge lists),
``--format text`` for a human summary, and for ``kfactor`` also
``--format dot``.  Vertices are labeled 0..n-1 in every output format.

Exit codes: 0 success, 2 domain-negative (not graphic / not factorable),
64 usage or parse error, 65 parameter-domain error, 70 internal assertion.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .errors import (
    InconsistentReport,
    KFactorsError,
    NotFactorable,
    NotGraphic,
    SwitchNotFound,
)
from .graphs import to_dot
from .payloads import (
    GENERATE_MODES,
    canonical_json,
    check_payload,
    generate_payload,
    kfactor_payload,
)
from .sequences import DegreeSequence

EXIT_OK = 0
EXIT_DOMAIN_NEGATIVE = 2
EXIT_USAGE = 64
EXIT_PARAMETER = 65
EXIT_INTERNAL = 70


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 by default, which collides with our
    # domain-negative code; route usage problems to 64 instead.
    def error(self, message: str):
        raise _UsageError(message)


def parse_sequence(text: str) -> DegreeSequence:
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    if not parts:
        raise _UsageError("empty sequence")
    try:
        values = [int(p) for p in parts]
    except ValueError as exc:
        raise _UsageError(f"sequence must be integers: {exc}") from exc
    return DegreeSequence.from_unsorted(values)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kfactors", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="graphicality / k-factorability / Rao checks")
    check.add_argument("--seq", required=True, help="comma or space separated degrees")
    check.add_argument("--k", type=int, default=None)
    _output_options(check, formats=("json", "text"))

    gen = sub.add_parser("generate", help="run one of the sequence generators")
    gen.add_argument("--mode", required=True, choices=GENERATE_MODES)
    gen.add_argument("--a", type=int)
    gen.add_argument("--b", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--n", type=int)
    gen.add_argument("--x", type=int, help="middle degree; drawn from the seed if omitted")
    gen.add_argument("--variant", default="general", choices=("general", "k2", "k3"))
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--max-retries", type=int, default=1000)
    _output_options(gen, formats=("json", "text"))

    kf = sub.add_parser("kfactor", help="compute a k-factor with full trace")
    kf.add_argument("--seq", required=True)
    kf.add_argument("--k", type=int, required=True)
    kf.add_argument("--dot-dir", help="also write realization/d_minus_k/factor DOT files")
    _output_options(kf, formats=("json", "text", "dot"))

    return parser


def _output_options(p: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    p.add_argument("--format", default="json", choices=formats)
    p.add_argument("--output", default=None, help="write to file instead of stdout")


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_check(args) -> int:
    seq = parse_sequence(args.seq)
    payload = check_payload(seq, args.k)
    if args.format == "text":
        lines = [f"{key}: {value}" for key, value in sorted(payload.items())]
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(canonical_json(payload), args.output)
    return EXIT_OK if payload["graphic"] else EXIT_DOMAIN_NEGATIVE


def _cmd_generate(args) -> int:
    payload = generate_payload(
        args.mode,
        seed=args.seed,
        a=args.a,
        b=args.b,
        k=args.k,
        n=args.n,
        x=args.x,
        variant=args.variant,
        max_retries=args.max_retries,
    )
    if args.format == "text":
        seq = ",".join(str(v) for v in payload["sequence"])
        _emit(f"mode: {args.mode}\nseed: {args.seed}\nsequence: {seq}\n", args.output)
    else:
        _emit(canonical_json(payload), args.output)
    return EXIT_OK


def _cmd_kfactor(args) -> int:
    seq = parse_sequence(args.seq)
    payload = kfactor_payload(seq, args.k)
    if args.dot_dir:
        out = Path(args.dot_dir)
        out.mkdir(parents=True, exist_ok=True)
        for name in ("realization", "d_minus_k_graph", "factor"):
            g = payload[name]
            dot = _dot_from_dict(g)
            (out / f"{name}.dot").write_text(dot)
    if args.format == "dot":
        _emit(_dot_from_dict(payload["factor"]), args.output)
    elif args.format == "text":
        rep = payload["report"]
        lines = [
            f"sequence: {','.join(str(v) for v in payload['sequence'])}",
            f"k: {payload['k']}",
            f"switches: {payload['counters']['switch_count']}"
            f" (initial shared edges: {payload['counters']['initial_shared_edges']})",
            f"factor edges: {len(payload['factor']['edges'])}",
            f"factor connected: {rep['factor_connected']}"
            f" ({len(rep['factor_components'])} component(s))",
            f"rao verdict: {rep['rao_verdict']}",
        ]
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(canonical_json(payload), args.output)
    return EXIT_OK


def _dot_from_dict(graph_dict: dict) -> str:
    from .graphs import SimpleGraph

    g = SimpleGraph(graph_dict["n"], (tuple(e) for e in graph_dict["edges"]))
    return to_dot(g)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    handlers = {
        "check": _cmd_check,
        "generate": _cmd_generate,
        "kfactor": _cmd_kfactor,
    }
    try:
        return handlers[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotFactorable, NotGraphic) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN_NEGATIVE
    except (SwitchNotFound, InconsistentReport, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (KFactorsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER


if __name__ == "__main__":
    sys.exit(main())
