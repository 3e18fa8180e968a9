"""Command-line front end.

Exit codes: 0 on success, 1 on a domain error (reducible polynomial, wild prime,
undefined invariant, failed verification), 2 on a usage error (bad flags,
malformed polynomial, non-prime p).
"""
from __future__ import annotations

import argparse
import json
import sys

from .arith import factor_int
from .equivalence import DEFAULT_BOUND, compare_fields
from .errors import InvalidArgument, RamifyError
from .field import new_field
from .invariants import a_form, invariants
from .parse import render_poly
from .reproduce import run_checks
from .splitting import split_prime
from .trace import verify_local_trace

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


def _cmd_field(args):
    return new_field(args.poly).to_json()


def _cmd_split(args):
    return split_prime(new_field(args.poly), args.p).to_json()


def _cmd_invariants(args):
    return invariants(new_field(args.poly), args.p).to_json()


def _cmd_aform(args):
    form = a_form(new_field(args.poly), args.p)
    return {
        "p": args.p,
        "aform": form.render(),
        "entries": [str(x) for x in form.entries],
        "det": str(form.det),
    }


def _cmd_trace(args):
    return verify_local_trace(new_field(args.poly), args.p, oracle_only=args.oracle_only).to_json()


def _cmd_verify(args):
    L = new_field(args.poly)
    results, skipped = [], []
    for p in sorted(factor_int(abs(L.disc))):
        if args.pmax is not None and p > args.pmax:
            continue
        if split_prime(L, p).is_wild():
            skipped.append({"p": p, "reason": "wild ramification: Theorem hypotheses not met"})
            continue
        results.append(verify_local_trace(L, p).to_json())
    return {
        "disc": str(L.disc),
        "results": results,
        "skipped": skipped,
        "all_match": all(r["match"] is True for r in results),
    }


def _compare_json(K, L, bound):
    out = compare_fields(K, L, bound).to_json()
    return {"K": render_poly(K.min_poly), "L": render_poly(L.min_poly), **out}


def _cmd_compare(args):
    if args.batch:
        if args.polys:
            raise _UsageError("--batch reads polynomials from stdin and takes no positional ones")
        lines = [ln.strip() for ln in sys.stdin if ln.strip()]
        fields = [new_field(ln) for ln in lines]
        reports = [
            _compare_json(fields[i], fields[j], args.bound)
            for i in range(len(fields))
            for j in range(i + 1, len(fields))
        ]
        return {"reports": reports}
    if len(args.polys) != 2:
        raise _UsageError("compare needs exactly two polynomials (or --batch)")
    return _compare_json(new_field(args.polys[0]), new_field(args.polys[1]), args.bound)


def _cmd_reproduce(args):
    checks = [{"name": name, "pass": ok} for name, ok in run_checks()]
    return {"checks": checks, "passed": sum(c["pass"] for c in checks), "total": len(checks)}


def _render_text(command, data) -> str:
    if command == "paper-check":
        lines = [("PASS " if c["pass"] else "FAIL ") + c["name"] for c in data["checks"]]
        lines.append(f"passed {data['passed']}/{data['total']}")
        return "\n".join(lines)
    # one "key: json-value" line per top-level field, so text and JSON carry the same data
    return "\n".join(f"{k}: {json.dumps(v)}" for k, v in data.items())


def _place(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ramify", description="Ramification invariants and trace forms of number fields.")
    parser.add_argument("--format", choices=["json", "text"], default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, prime=False):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        if prime:
            sp.add_argument("poly", help="monic integer polynomial in x")
            sp.add_argument("-p", type=_place, required=True, help="prime, or -1 for the infinite place")
        # --format is accepted after the subcommand too
        sp.add_argument("--format", choices=["json", "text"], default=argparse.SUPPRESS)
        return sp

    sp = add("field", _cmd_field, "maximal order, discriminant and signature")
    sp.add_argument("poly")
    add("split", _cmd_split, "(e, f) pairs of a prime", prime=True)
    add("invariants", _cmd_invariants, "alpha, beta, nu and ramification flags", prime=True)
    add("aform", _cmd_aform, "the diagonal form a_p", prime=True)
    sp = add("trace", _cmd_trace, "predicted and computed Z_p trace form", prime=True)
    sp.add_argument("--oracle-only", action="store_true", help="only decompose the trace Gram matrix")
    sp = add("verify", _cmd_verify, "check the prediction at every tame p dividing disc")
    sp.add_argument("poly")
    sp.add_argument("--pmax", type=int, default=None)
    sp = add("compare", _cmd_compare, "compare alpha_p of two fields up to a bound")
    sp.add_argument("polys", nargs="*")
    sp.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    sp.add_argument("--batch", action="store_true", help="read one polynomial per line from stdin")
    add("paper-check", _cmd_reproduce, "reproduce the published example values")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    try:
        data = args.func(args)
    except (_UsageError, InvalidArgument) as exc:
        print(f"ramify {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RamifyError as exc:
        print(f"ramify {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.format == "text":
        print(_render_text(args.command, data))
    else:
        print(json.dumps(data, indent=2))
    if args.command == "paper-check" and data["passed"] != data["total"]:
        return EXIT_DOMAIN
    if args.command == "verify" and not data["all_match"]:
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
