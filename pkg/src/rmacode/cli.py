"""Command-line front end.

Exit codes: 0 success/accept, 1 reject, 2 usage or parameter error,
3 guardrail exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .attack_sim import (
    SubstitutionStrategy,
    best_substitution_strategy,
    run_impersonation,
    run_substitution,
    trace_csv,
)
from .auth import (
    AuthConfig,
    authenticate,
    decode_message,
    dump_key,
    encode_message,
    load_key,
    sample_key,
    verify,
)
from .bits import BitVector
from .deception import authentication_matrix, key_order, matrix_csv, matrix_sources
from .errors import DimensionError, GuardrailError, NoWitnessError, ParameterError
from .report import analyze, render, sweep

EXIT_OK, EXIT_REJECT, EXIT_USAGE, EXIT_GUARDRAIL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_hex_value(text: str, nbits: int, what: str) -> BitVector:
    """Hex integer read as an ``nbits``-bit MSB-first vector."""
    try:
        value = int(text, 16)
    except ValueError:
        raise UsageError(f"{what} must be hexadecimal, got {text!r}") from None
    if value >> nbits:
        raise UsageError(f"{what} 0x{text} does not fit in {nbits} bits")
    return BitVector(nbits, value)


def hex_value(v: BitVector) -> str:
    return format(v.value, f"0{2 * ((len(v) + 7) // 8)}x")


def _config(args) -> AuthConfig:
    missing = [f"--{k}" for k in ("m", "r", "M", "l") if getattr(args, k) is None]
    if missing:
        raise UsageError(f"missing {' '.join(missing)}")
    return AuthConfig.create(args.m, args.r, args.M, args.l)


def _key_config(args):
    with open(args.key) as fh:
        try:
            config, key = load_key(fh.read())
        except ValueError as exc:
            raise UsageError(f"bad key file: {exc}") from None
    for name, value in (("m", config.code.m), ("r", config.code.r), ("M", config.M), ("l", config.l)):
        given = getattr(args, name)
        if given is not None and given != value:
            raise UsageError(f"--{name}={given} conflicts with key file {name}={value}")
    return config, key


def cmd_analyze(args, out):
    if args.sweep:
        mt = re.fullmatch(r"m=(\d+)\.\.(\d+)", args.sweep)
        if not mt:
            raise UsageError("--sweep must look like m=<a>..<b>")
        missing = [f"--{k}" for k in ("r", "M", "l") if getattr(args, k) is None]
        if missing:
            raise UsageError(f"missing {' '.join(missing)}")
        ms = range(int(mt[1]), int(mt[2]) + 1)
        method = "closed" if args.method == "all" else args.method
        reports, notes = sweep(ms, args.r, args.M, args.l, method)
    else:
        reports, notes = analyze(_config(args), args.method)
    out.write(render(reports, notes, args.output))
    return EXIT_OK


def cmd_keygen(args, out):
    config = _config(args)
    text = dump_key(config, sample_key(config, args.seed))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_tag(args, out):
    config, key = _key_config(args)
    s = parse_hex_value(args.source, config.M, "source")
    out.write(encode_message(authenticate(config, s, key)).hex() + "\n")
    return EXIT_OK


def cmd_verify(args, out):
    config, key = _key_config(args)
    try:
        msg = decode_message(bytes.fromhex(args.message), config)
    except (ValueError, DimensionError) as exc:
        raise UsageError(f"malformed message: {exc}") from None
    ok = verify(config, msg, key)
    out.write("accept\n" if ok else "reject\n")
    return EXIT_OK if ok else EXIT_REJECT


def cmd_simulate(args, out):
    config = _config(args)
    if args.attack == "impersonation":
        outcome = run_impersonation(config, args.trials, args.seed, trace=bool(args.trace))
    else:
        if (args.delta_s is None) != (args.delta_t is None):
            raise UsageError("give both --delta-s and --delta-t, or neither")
        if args.delta_s is None:
            strategy = best_substitution_strategy(config)
        else:
            ds = parse_hex_value(args.delta_s, config.M, "--delta-s")
            if ds.value == 0:
                raise UsageError("--delta-s must be nonzero")
            strategy = SubstitutionStrategy(ds, parse_hex_value(args.delta_t, config.l, "--delta-t"))
        outcome = run_substitution(config, strategy, args.trials, args.seed, trace=bool(args.trace))
    if args.trace:
        with open(args.trace, "w") as fh:
            fh.write(trace_csv(outcome))
    if args.output == "json":
        rec = dict(kv.split("=", 1) for kv in outcome.record(config).split())
        out.write(json.dumps(rec) + "\n")
    else:
        out.write(outcome.record(config) + "\n")
    return EXIT_OK


def cmd_authmatrix(args, out):
    config = _config(args)
    A = authentication_matrix(config)
    if args.output == "json":
        rows = [
            {"k1": list(k1), "k2": k2, "tags": [int(t) for t in row]}
            for (k1, k2), row in zip(key_order(config), A)
        ]
        sources = [str(s) for s in matrix_sources(config)]
        out.write(json.dumps({"sources": sources, "rows": rows}) + "\n")
    else:
        out.write(matrix_csv(config, A))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, help="blocklength exponent, n = 2^m")
    common.add_argument("--r", type=int, help="Reed-Muller order")
    common.add_argument("--M", type=int, help="source length in bits")
    common.add_argument("--l", type=int, help="tag length in bits")
    common.add_argument("--output", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(
        prog="rmacode", description="Reed-Muller authentication codes: keys, tags, deception analysis."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="exact P_I and P_S")
    p.add_argument("--method", choices=("closed", "brute", "definition", "all"), default="all")
    p.add_argument("--sweep", metavar="m=A..B", help="range of m; sweeps use the closed form unless --method is given")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("keygen", parents=[common], help="write a key file")
    p.add_argument("--out", help="key file path (default: stdout)")
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("tag", parents=[common], help="authenticate a source, print the message hex")
    p.add_argument("--key", required=True)
    p.add_argument("--source", required=True, help="source as a hex integer, MSB-first")
    p.set_defaults(func=cmd_tag)

    p = sub.add_parser("verify", parents=[common], help="exit 0 if the message is accepted, 1 if rejected")
    p.add_argument("--key", required=True)
    p.add_argument("--message", required=True, help="wire-format message hex")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", parents=[common], help="Monte-Carlo attack game")
    p.add_argument("--attack", choices=("impersonation", "substitution"), required=True)
    p.add_argument("--trials", type=int, default=100000)
    p.add_argument("--delta-s", help="source offset (hex); default: optimal strategy")
    p.add_argument("--delta-t", help="tag offset (hex)")
    p.add_argument("--trace", metavar="CSV", help="write per-trial outcomes")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("authmatrix", parents=[common], help="full key-by-source tag table")
    p.set_defaults(func=cmd_authmatrix)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except GuardrailError as exc:
        print(f"rmacode: guardrail: {exc}", file=sys.stderr)
        return EXIT_GUARDRAIL
    except (UsageError, ParameterError, DimensionError, NoWitnessError, OSError) as exc:
        print(f"rmacode: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
