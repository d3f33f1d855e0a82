"""Command-line front end.

Every command prints a JSON document on stdout (or the requested report
format) and exits 0; a failed mathematical check exits 1; bad input or usage
exits 2 with a JSON error object on stderr."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional

from . import _core
from .algebra import multiply, multiply_oracle
from .bracket import bracket_rs
from .chains import (ExternalTable, SearchBounds, check_conditions, corner_case_enumerator,
                     corner_cases_upto, search_min_chain)
from .errors import ConsistencyError, PreconditionError
from .report import FORMATS, emit_report
from .serialize import (FormatError, corners_to_obj, direction_to_obj, element_to_obj,
                        fraction_to_text, load_chain, load_element, point_to_obj)
from .transform import cut_step
from .valuation import Direction, corners, f_polynomial, leading_part, valuation_set

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _direction(args) -> Direction:
    try:
        return Direction(args.rho, args.sigma)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _add_dir(p):
    p.add_argument("--rho", type=int, required=True)
    p.add_argument("--sigma", type=int, required=True)


def _common(default):
    """--format and --seed, accepted before or after the verb."""
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=FORMATS, default=default or argparse.SUPPRESS)
    p.add_argument("--seed", type=int, default=None if default else argparse.SUPPRESS,
                   help="reserved; unused since every computation is deterministic")
    return p


class _Leaf(_Parser):
    def __init__(self, *a, **kw):
        kw.setdefault("parents", [_common(None)])
        super().__init__(*a, **kw)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fracweyl", description="Exact computations in W^(l).",
                     parents=[_common("json")])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Leaf)

    elem = sub.add_parser("elem", help="operations on single elements")
    esub = elem.add_subparsers(dest="op", required=True, parser_class=_Leaf)
    mul = esub.add_parser("mul")
    mul.add_argument("p")
    mul.add_argument("q")
    mul.add_argument("--oracle", action="store_true", help="also run the one-step oracle")
    br = esub.add_parser("bracket")
    _add_dir(br)
    br.add_argument("p")
    br.add_argument("q")
    for name in ("leading", "corners", "fpoly"):
        e = esub.add_parser(name)
        _add_dir(e)
        e.add_argument("p")

    cut = sub.add_parser("cut")
    _add_dir(cut)
    cut.add_argument("p")
    cut.add_argument("q", nargs="?")
    cut.add_argument("--dmax", type=int, default=None)

    chain = sub.add_parser("chain")
    csub = chain.add_subparsers(dest="op", required=True, parser_class=_Leaf)
    chk = csub.add_parser("check")
    chk.add_argument("chain")
    chk.add_argument("--m", type=int, required=True)
    chk.add_argument("--n", type=int, required=True)
    srch = csub.add_parser("search")
    srch.add_argument("--max-start-v11", type=int, required=True)
    srch.add_argument("--max-rho", type=int, required=True)
    srch.add_argument("--max-level", type=int, required=True)
    srch.add_argument("--max-len", type=int, required=True)
    srch.add_argument("--max-height", type=int, default=None)
    srch.add_argument("--workers", type=int, default=1)
    srch.add_argument("--checkpoint", default=None,
                      help="JSON-lines file; relative names go under $FRACWEYL_CHECKPOINT_DIR")

    corners_p = sub.add_parser("corners")
    cosub = corners_p.add_subparsers(dest="op", required=True, parser_class=_Leaf)
    enum = cosub.add_parser("enumerate")
    enum.add_argument("--max-sum", type=int, default=None)
    enum.add_argument("--r", type=int, default=None)
    enum.add_argument("--s", type=int, default=None)
    enum.add_argument("--table", choices=("external", "none"), default="external")

    ver = sub.add_parser("verify")
    ver.add_argument("group", choices=("all", "algebra", "bracket", "transform", "chains"))
    return parser


def _elem_cmd(args):
    P = load_element(args.p)
    if args.op == "mul":
        Q = load_element(args.q)
        prod = multiply(P, Q)
        out = {"result": element_to_obj(prod), "text": repr(prod)}
        if args.oracle:
            agree = multiply_oracle(P, Q) == prod
            out["oracle_agrees"] = agree
            return out, EXIT_OK if agree else EXIT_CHECK_FAILED
        return out, EXIT_OK
    d = _direction(args)
    if args.op == "bracket":
        Q = load_element(args.q)
        res = bracket_rs(P, Q, d)
        return {"proportional": res.proportional, "value": element_to_obj(res.value),
                "text": repr(res.value), "degree_witness": fraction_to_text(res.degree_witness)}, EXIT_OK
    if args.op == "leading":
        lead = leading_part(P, d)
        return {"leading": element_to_obj(lead), "text": repr(lead)}, EXIT_OK
    if args.op == "corners":
        out = corners_to_obj(corners(P, d))
        out["val"] = [direction_to_obj(e) for e in valuation_set(P)]
        return out, EXIT_OK
    f, start = f_polynomial(P, d)
    return {"coefficients": [fraction_to_text(c) for c in f.coeffs],
            "start": point_to_obj(start)}, EXIT_OK


def _cut_cmd(args):
    P = load_element(args.p)
    Q = load_element(args.q) if args.q else None
    rep = cut_step(P, Q, _direction(args), args.dmax)
    lam = rep.lam
    if isinstance(lam, Fraction):
        lam_obj = fraction_to_text(lam)
    elif lam is None:
        lam_obj = None
    else:  # irreducible factor with no rational root
        lam_obj = {"factor": [fraction_to_text(c) for c in lam.coeffs]}
    out = {"lambda": lam_obj, "m_lambda": rep.m_lambda, "new_level": rep.new_level,
           "new_dir": None if rep.new_dir is None else direction_to_obj(rep.new_dir),
           "predicted_corner": point_to_obj(rep.predicted_corner),
           "phiP": None if rep.phiP is None else element_to_obj(rep.phiP),
           "phiQ": None if rep.phiQ is None else element_to_obj(rep.phiQ),
           "hypotheses": rep.hypotheses,
           "items": [r.to_json() for r in rep.item_results]}
    failed = any(r.status == "fail" for r in rep.item_results)
    return out, EXIT_CHECK_FAILED if failed else EXIT_OK


def _checkpoint_path(name: Optional[str]) -> Optional[str]:
    if name is None:
        return None
    base = os.environ.get("FRACWEYL_CHECKPOINT_DIR")
    if base and not os.path.isabs(name):
        os.makedirs(base, exist_ok=True)
        return os.path.join(base, name)
    return name


def _chain_cmd(args):
    if args.op == "check":
        chain = load_chain(args.chain)
        rep = check_conditions(chain, args.m, args.n)
        return rep.to_json(), EXIT_OK if rep.all_pass else EXIT_CHECK_FAILED
    if args.workers <= 0:
        raise UsageError("--workers must be positive")
    try:
        bounds = SearchBounds(Fraction(args.max_start_v11), args.max_rho, args.max_level,
                              args.max_len, args.max_height)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    cert = search_min_chain(bounds, workers=args.workers,
                            checkpoint=_checkpoint_path(args.checkpoint))
    out = cert.to_json()
    out["kind"] = "search_certificate"
    out["backend"] = _core.BACKEND
    return out, EXIT_OK


def _corners_cmd(args):
    table = ExternalTable.bundled() if args.table == "external" else None
    if args.r is not None or args.s is not None:
        if args.r is None or args.s is None:
            raise UsageError("--r and --s go together")
        cases = corner_case_enumerator(args.r, args.s)
    elif args.max_sum is not None:
        cases = [c for group in corner_cases_upto(args.max_sum, table).values() for c in group]
    else:
        raise UsageError("give --max-sum N or --r R --s S")
    rows = [c.to_json() for c in cases]
    if table is not None:
        for row, c in zip(rows, cases):
            row["after_external"] = _surviving(table, c)
    return {"kind": "corner_table", "table": args.table, "cases": rows}, EXIT_OK


def _surviving(table: ExternalTable, case):
    left = table.surviving_starts(case.r, case.s, case.inner)
    return None if left is None else [list(p) for p in left]


def _verify_cmd(args):
    from . import selfcheck
    out = selfcheck.run(args.group)
    return out, EXIT_OK if out["all_pass"] else EXIT_CHECK_FAILED


HANDLERS = {"elem": _elem_cmd, "cut": _cut_cmd, "chain": _chain_cmd,
            "corners": _corners_cmd, "verify": _verify_cmd}


def _fail(kind: str, message: str, code: int) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    return code


def run_command(argv: List[str]) -> int:
    try:
        args = build_parser().parse_args(argv)
        out, code = HANDLERS[args.verb](args)
    except UsageError as exc:
        return _fail("usage", str(exc), EXIT_USAGE)
    except FormatError as exc:
        return _fail("input", str(exc), EXIT_USAGE)
    except OSError as exc:
        return _fail("io", str(exc), EXIT_USAGE)
    except PreconditionError as exc:
        return _fail("precondition", str(exc), EXIT_USAGE)
    except ConsistencyError as exc:
        return _fail("consistency", str(exc), EXIT_CHECK_FAILED)
    except (ValueError, ZeroDivisionError) as exc:
        return _fail("input", str(exc), EXIT_USAGE)
    sys.stdout.write(emit_report(out, args.format))
    return code


def main(argv: Optional[List[str]] = None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
