"""Command-line interface: ``brieskorn <command> ...``.

Every command writes one JSON record (or, with ``--text``, a labeled listing)
to stdout; diagnostics go to stderr.  Exit status: 0 success, 1 usage error,
2 precondition violation, 3 failed property check.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import invariants as inv
from . import obstruction as obs
from .errors import (
    ConsistencyError,
    PreconditionError,
    TooFewExponents,
)
from .graded_root import build_root
from .semigroup import bound_N
from .seifert import (
    BrieskornExponents,
    branched_pair,
    brieskorn_seifert_data,
    free_quotient_data,
)

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_PROPERTY = 0, 1, 2, 3
_SAFE_INT = 1 << 53

# (exponents, N, rank, {p: quotient rank})
TABLE1 = (
    ((2, 3, 7), 1, 1, {}),
    ((2, 3, 11), 5, 1, {5: 1}),
    ((2, 3, 13), 7, 2, {5: 0, 7: 1}),
    ((2, 3, 17), 11, 2, {5: 1, 7: 0, 11: 1}),
    ((2, 5, 7), 11, 2, {3: 0, 11: 1}),
    ((2, 5, 9), 17, 2, {7: 1, 11: 0, 13: 0, 17: 1}),
    ((3, 4, 5), 13, 2, {2: 0, 7: 0, 11: 0, 13: 1}),
    ((3, 4, 7), 23, 2, {2: 1, 5: 0, 11: 1, 13: 0, 17: 0, 19: 0, 23: 1}),
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def jsonable(obj):
    """Exact JSON form: big ints and fractions become decimal strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > _SAFE_INT else obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalar
        return jsonable(obj.item())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def output_record(command: Sequence[str], inputs: dict, payload) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": list(command),
            "inputs": jsonable(inputs), "payload": jsonable(payload)}


def _text(obj, prefix: str = "") -> list[str]:
    if isinstance(obj, dict):
        lines = []
        for k in sorted(obj):
            lines.extend(_text(obj[k], f"{prefix}{k}." if isinstance(obj[k], dict) else f"{prefix}{k}"))
        return lines
    if isinstance(obj, list) and obj and isinstance(obj[0], dict):
        lines = []
        for i, item in enumerate(obj):
            lines.extend(_text(item, f"{prefix}[{i}]."))
        return lines
    value = json.dumps(obj) if isinstance(obj, list) else str(obj)
    return [f"{prefix.rstrip('.'):<40} {value}"]


def render(record: dict, text: bool) -> str:
    if text:
        return "\n".join(_text(record["payload"])) + "\n"
    return json.dumps(record, sort_keys=True, indent=2) + "\n"


# -- commands -----------------------------------------------------------------

def cmd_invariants(args) -> tuple[dict, dict, int]:
    a = BrieskornExponents(tuple(args.exponents))
    return {"exponents": a.original}, inv.invariant_report(a).to_dict(), EXIT_OK


def cmd_quotient(args) -> tuple[dict, dict, int]:
    a = BrieskornExponents(tuple(args.exponents))
    p = args.prime
    e0p, pairs = free_quotient_data(brieskorn_seifert_data(a), p)
    r0, rp = inv.hf_red_rank(a), inv.hf_red_rank(a, p)
    payload = {
        "quotient_seifert": {"e0": e0p, "pairs": [list(x) for x in pairs]},
        "N": bound_N(a), "N_p": bound_N(a) // p if bound_N(a) >= 0 else -1,
        "hf_red_rank": r0, "quotient_hf_red_rank": rp,
        "delta_inf_minus_delta": inv.delta_inf_minus_delta_free(a, p),
        "verdicts": {"free-rational-ball": obs.free_rational_ball_verdict(a, p).to_dict()},
    }
    if a.r == 3:
        payload["delta_sigma"] = inv.delta_sigma(a)
        payload["delta_inf"] = inv.delta_inf_free_absolute(a, p)
        payload["casson_lambda"] = inv.casson(a)
        payload["verdicts"]["positive-definite"] = obs.positive_definite_verdict(a, p).to_dict()
    return {"exponents": a.original, "p": p}, payload, EXIT_OK


def cmd_branched(args) -> tuple[dict, dict, int]:
    bp = branched_pair(tuple(args.exponents), args.prime)
    payload = {
        "base": bp.base.original,
        "divided_exponent": bp.divided,
        "hf_red_rank": inv.hf_red_rank(bp.total),
        "base_hf_red_rank": inv.hf_red_rank(bp.base),
        "bound": inv.branched_bound(bp),
        "bound_meaning": "lower bound for delta(-Y) - delta_inf^(p)(-Y)",
        "verdicts": {"branched-rational-ball": obs.branched_rational_ball_verdict(bp).to_dict()},
    }
    if bp.total.r == 3:
        payload["verdicts"]["positive-definite"] = obs.positive_definite_verdict(
            bp.total, bp.p).to_dict()
    return {"exponents": bp.total.original, "p": bp.p}, payload, EXIT_OK


def cmd_torus_knot(args) -> tuple[dict, dict, int]:
    rep = inv.torus_knot_report(args.a, args.b, args.prime)
    status = EXIT_OK if rep.theta_matches_milnor else EXIT_PROPERTY
    return {"a": args.a, "b": args.b, "c": args.prime}, rep.to_dict(), status


def table1_rows() -> list[dict]:
    rows = []
    for exps, N, rank, quot in TABLE1:
        got_q = {p: inv.hf_red_rank(exps, p, strict=False) for p in quot}
        rows.append({"exponents": list(exps), "N": bound_N(exps),
                     "hf_red_rank": inv.hf_red_rank(exps), "quotient_ranks": got_q})
    return rows


def table1_diff(rows: list[dict]) -> list[str]:
    diffs = []
    for row, (exps, N, rank, quot) in zip(rows, TABLE1):
        tag = "(" + ",".join(map(str, exps)) + ")"
        if row["N"] != N:
            diffs.append(f"{tag}: N {row['N']} != {N}")
        if row["hf_red_rank"] != rank:
            diffs.append(f"{tag}: rank {row['hf_red_rank']} != {rank}")
        for p, want in quot.items():
            if row["quotient_ranks"][p] != want:
                diffs.append(f"{tag}, p={p}: quotient rank {row['quotient_ranks'][p]} != {want}")
    return diffs


def cmd_table1(args) -> tuple[dict, dict, int]:
    rows = table1_rows()
    diffs = table1_diff(rows)
    payload = {"rows": rows, "mismatches": diffs, "status": "FAIL" if diffs else "PASS",
               "note": "p dividing an exponent (p=2 rows) is evaluated by the same formula"}
    return {}, payload, EXIT_PROPERTY if diffs else EXIT_OK


def cmd_scan(args) -> tuple[dict, dict, int]:
    from .sweeps import parse_prime_range, run_checks

    try:
        primes = parse_prime_range(args.primes)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    checks = args.check or ["all"]
    results = run_checks(checks, args.max_product, primes, workers=args.workers)
    payload = {"results": [r.to_dict() for r in results],
               "status": "PASS" if all(r.ok for r in results) else "FAIL"}
    inputs = {"max_product": args.max_product, "primes": list(primes),
              "checks": sorted(set(checks))}
    return inputs, payload, EXIT_OK if payload["status"] == "PASS" else EXIT_PROPERTY


def cmd_root(args) -> tuple[dict, dict, int]:
    tp, module = inv.analyse(tuple(args.exponents), args.prime)
    root = build_root(tp)
    payload = dict(root.to_json())
    payload["towers"] = [[t.bottom, t.length] for t in module.towers]
    payload["infinite_tower_bottom"] = module.infinite_bottom
    if args.format == "dot":
        payload = {"dot": root.to_dot()}
    return {"exponents": list(args.exponents), "p": args.prime}, payload, EXIT_OK


def cmd_connected_sum(args) -> tuple[dict, dict, int]:
    summands = []
    for text in args.summands:
        try:
            summands.append(tuple(int(x) for x in text.split(",")))
        except ValueError:
            raise UsageError(f"summand {text!r} is not a comma-separated list") from None
    v = obs.connected_sum_verdict(summands, args.prime, args.scenario)
    return {"summands": summands, "p": args.prime}, v.to_dict(), EXIT_OK


COMMANDS = {
    "invariants": cmd_invariants,
    "quotient": cmd_quotient,
    "branched": cmd_branched,
    "torus-knot": cmd_torus_knot,
    "table1": cmd_table1,
    "scan": cmd_scan,
    "root": cmd_root,
    "connected-sum": cmd_connected_sum,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="text", action="store_false", help="JSON output (default)")
    fmt.add_argument("--text", dest="text", action="store_true", help="labeled text output")
    common.add_argument("--output", metavar="FILE", help="write to FILE instead of stdout")
    common.set_defaults(text=False)

    parser = _Parser(prog="brieskorn",
                     description="Floer-theoretic and Casson-type invariants of Brieskorn spheres.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", parents=[common], help="full report for Sigma(a_1,...,a_r)")
    p.add_argument("exponents", nargs="+", type=int)

    p = sub.add_parser("quotient", parents=[common], help="free Z_p quotient ranks and delta_inf")
    p.add_argument("exponents", nargs="+", type=int)
    p.add_argument("--prime", "-p", type=int, required=True)

    p = sub.add_parser("branched", parents=[common], help="branched Z_p quotient and rank bound")
    p.add_argument("exponents", nargs="+", type=int)
    p.add_argument("--prime", "-p", type=int, required=True)

    p = sub.add_parser("torus-knot", parents=[common], help="j, sigma and theta of T_{a,b}")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--prime", "-p", type=int, required=True)

    sub.add_parser("table1", parents=[common], help="recompute the rank table and diff it")

    p = sub.add_parser("scan", parents=[common], help="property sweeps over a parameter range")
    p.add_argument("--max-product", type=int, default=10 ** 5)
    p.add_argument("--primes", default="2..37", metavar="LO..HI")
    p.add_argument("--check", action="append",
                   choices=("theta", "exceptions", "kl", "kappa", "symmetry", "free2", "all"))
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("root", parents=[common], help="export the graded root")
    p.add_argument("exponents", nargs="+", type=int)
    p.add_argument("--prime", "-p", type=int, default=1)
    p.add_argument("--format", choices=("dot", "json"), default="json")

    p = sub.add_parser("connected-sum", parents=[common],
                       help="verdict for an equivariant connected sum")
    p.add_argument("summands", nargs="+", metavar="A,B,C")
    p.add_argument("--prime", "-p", type=int, required=True)
    p.add_argument("--scenario", choices=("rational-ball", "positive-definite"),
                   default="rational-ball")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        inputs, payload, status = COMMANDS[args.command](args)
    except (UsageError, TooFewExponents) as exc:
        # too few exponents is a malformed command line rather than bad data
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ConsistencyError as exc:
        print(f"property failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PROPERTY
    if args.command == "root" and args.format == "dot":
        out = payload["dot"]
    else:
        out = render(output_record([args.command] + argv[1:], inputs, payload), args.text)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
