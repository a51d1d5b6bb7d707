"""Command-line front end: ``chernpn <command> ...`` (or ``python -m chernpn``).

Exit status is 0 on success, 1 when a check fails or a computation raises,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import textwrap
from fractions import Fraction

from . import expr as _expr
from .bundles import ChernData, chern
from .classify import catalog, enumerate_candidates, verify_catalog
from .claims import verify_claims
from .cohomology import cohomology_table
from .constraints import schwarzenberger_check, second_reduction
from .errors import BundleSyntaxError, ChernError
from .riemannroch import euler_char, hilbert_polynomial


class CommandFailed(Exception):
    """Carries a finished payload whose checks did not all pass."""

    def __init__(self, payload):
        self.payload = payload


def _chern_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma separated integers, got {text!r}") from None


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in x]
        return sorted(items, key=repr) if isinstance(x, (set, frozenset)) else items
    return x


def _chern_payload(c: ChernData) -> dict:
    return {"n": c.n, "rank": c.rank, "chern": list(c.classes),
            "c_t": c.polynomial()}


def _input_chern(args) -> ChernData:
    if args.expr is not None:
        return chern(args.expr, args.n)
    return ChernData.from_classes(args.n, args.rank, args.chern)


# -- commands --------------------------------------------------------------------

def cmd_chern(args):
    c = chern(args.expr, args.n)
    return {"expression": args.expr, **_chern_payload(c)}


def cmd_cohom(args):
    t = cohomology_table(args.expr, args.n, args.twist)
    return {"expression": args.expr, "n": args.n, "twist": args.twist,
            "h": list(t.entries), "euler": t.euler}


def cmd_chi(args):
    c = _input_chern(args)
    chi = euler_char(c)
    return {**_chern_payload(c), "chi": chi, "integral": chi.denominator == 1}


def cmd_hilbert(args):
    c = _input_chern(args)
    P = hilbert_polynomial(c)
    return {**_chern_payload(c), "coefficients": list(P.coeffs),
            "polynomial": str(P), "values": {j: P(j) for j in range(c.n + 1)}}


def cmd_schwarzenberger(args):
    c = ChernData.from_classes(args.n, args.rank, args.chern)
    r = schwarzenberger_check(c)
    out = {**_chern_payload(c), "condition": r.label,
           "verdict": "PASS" if r.passed else "FAIL"}
    if not r.passed:
        out.update(witness_twist=r.witness, chi=r.value)
        raise CommandFailed(out)
    return out


def cmd_reduce(args):
    c = ChernData.from_classes(args.n, args.rank, args.chern)
    k = second_reduction(c, args.h0)
    return {"input": _chern_payload(c), "h0": args.h0, "dual_kernel": _chern_payload(k)}


def cmd_classify(args):
    if not args.verify:
        return {"n": args.n, "entries": [
            {"id": e.id, "expression": e.expression(args.n), "c2": e.expected_c2}
            for e in catalog() if e.valid_at(args.n)]}
    rep = verify_catalog(args.n)
    out = {"n": args.n, "passed": rep.passed, "rows": [
        {"entry": r.entry, "check": r.check, "status": r.status, "detail": r.detail,
         **({"value": r.value} if r.value is not None else {})}
        for r in rep.rows]}
    if not rep.passed:
        raise CommandFailed(out)
    return out


def cmd_enumerate(args):
    return {"n": args.n, "c2_max": args.c2_max, "candidates": [
        {"summands": list(c.summands), **_chern_payload(c.chern)}
        for c in enumerate_candidates(args.n, args.c2_max)]}


def cmd_claims(args):
    results = verify_claims()
    out = {"passed": all(r.passed for r in results), "claims": [
        {"id": r.id, "statement": r.statement, "basis": r.basis,
         "status": "pass" if r.passed else "fail", "computed": r.computed,
         "expected": r.expected, **({"error": r.error} if r.error else {})}
        for r in results]}
    if not out["passed"]:
        raise CommandFailed(out)
    return out


# -- human-readable rendering ---------------------------------------------------------

def _render(cmd: str, p: dict) -> str:
    if cmd == "chern":
        return (f"{p['expression']} on P^{p['n']}\n  rank {p['rank']}\n"
                f"  c_t = {p['c_t']}\n"
                + "".join(f"  c_{i} = {v}\n" for i, v in enumerate(p["chern"], 1))).rstrip()
    if cmd == "cohom":
        hs = "  ".join(f"h^{q}={h}" for q, h in enumerate(p["h"]))
        return (f"{p['expression']} twisted by {p['twist']} on P^{p['n']}: "
                f"{hs}  (chi = {p['euler']})")
    if cmd == "chi":
        return f"rank {p['rank']}, c_t = {p['c_t']} on P^{p['n']}: chi = {p['chi']}"
    if cmd == "hilbert":
        vals = ", ".join(f"P({j}) = {v}" for j, v in p["values"].items())
        return f"chi(E(j)) = {p['polynomial']}\n  {vals}"
    if cmd == "schwarzenberger":
        line = f"{p['condition']} for c_t = {p['c_t']}: {p['verdict']}"
        if p["verdict"] == "FAIL":
            line += f" (chi(E({p['witness_twist']})) = {p['chi']})"
        return line
    if cmd == "reduce":
        k = p["dual_kernel"]
        return f"K* has rank {k['rank']}, c_t = {k['c_t']}"
    if cmd == "classify":
        if "rows" not in p:
            return "\n".join(f"{e['id']:<9} c2={e['c2']:<2} {e['expression']}"
                             for e in p["entries"])
        lines = [f"{r['status'].upper():<5} {r['entry']:<9} {r['check']:<16} {r['detail']}"
                 for r in p["rows"]]
        lines.append("all checks passed" if p["passed"] else "SOME CHECKS FAILED")
        return "\n".join(lines)
    if cmd == "enumerate":
        return "\n".join(f"c2={c['chern'][1]:<2} {' + '.join(c['summands']):<28} c_t = {c['c_t']}"
                         for c in p["candidates"]) or "(no candidates)"
    if cmd == "claims":
        lines = [f"{c['status'].upper():<5} [{c['basis']:<10}] {c['id']:<26} {c['statement']}"
                 for c in p["claims"]]
        n_ok = sum(c["status"] == "pass" for c in p["claims"])
        lines.append(f"{n_ok}/{len(p['claims'])} claims pass")
        return "\n".join(lines)
    return json.dumps(_jsonable(p), indent=2)


# -- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chernpn",
        description="Chern classes, cohomology and Riemann-Roch for bundles on P^n.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                       help="machine-readable output")
        p.set_defaults(func=func)
        return p

    def dim(p):
        p.add_argument("-n", type=int, required=True, help="ambient dimension of P^n")

    def chern_input(p, allow_expr=True):
        if allow_expr:
            g = p.add_mutually_exclusive_group(required=True)
            g.add_argument("expr", nargs="?", help="bundle expression, e.g. 'O(2)+T(-1)'")
            g.add_argument("--chern", type=_chern_list, metavar="LIST",
                           help="comma separated c_1,...,c_m")
        else:
            p.add_argument("--chern", type=_chern_list, metavar="LIST", required=True,
                           help="comma separated c_1,...,c_m")
        p.add_argument("-r", "--rank", type=int, help="rank (with --chern)")

    p = add("chern", cmd_chern, "total Chern class of an expression")
    p.add_argument("expr")
    dim(p)

    p = add("cohom", cmd_cohom, "Bott cohomology table of a direct sum")
    p.add_argument("expr")
    dim(p)
    p.add_argument("--twist", type=int, default=0)

    p = add("chi", cmd_chi, "Euler characteristic by Hirzebruch-Riemann-Roch")
    chern_input(p)
    dim(p)

    p = add("hilbert", cmd_hilbert, "Hilbert polynomial chi(E(j))")
    chern_input(p)
    dim(p)

    p = add("schwarzenberger", cmd_schwarzenberger, "integrality of chi(E(j))")
    chern_input(p, allow_expr=False)
    dim(p)

    p = add("reduce", cmd_reduce, "Chern data of K* for 0 -> K -> O^h0 -> E -> 0")
    chern_input(p, allow_expr=False)
    dim(p)
    p.add_argument("--h0", type=int, required=True)

    p = add("classify", cmd_classify, "list or verify the c1 = 3 catalog")
    p.add_argument("--verify", action="store_true")
    dim(p)

    p = add("enumerate", cmd_enumerate, "direct sums of standard atoms with c1 = 3")
    dim(p)
    p.add_argument("--c2-max", type=int, required=True)

    add("claims", cmd_claims, "run the regression ledger")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "chern", None) is not None and args.rank is None:
            parser.error("--chern requires -r/--rank")
    except SystemExit as exc:
        return int(exc.code or 0)

    status = 0
    try:
        payload = args.func(args)
    except CommandFailed as exc:
        payload, status = exc.payload, 1
    except BundleSyntaxError as exc:
        print(f"{args.command}: parse error: {exc}", file=stderr)
        print("grammar:\n" + _GRAMMAR, file=stderr)
        return 1
    except ChernError as exc:
        print(f"{args.command}: {type(exc).__name__}: {exc}", file=stderr)
        return 1

    if args.json:
        print(json.dumps(_jsonable(payload), indent=2, sort_keys=True), file=stdout)
    else:
        print(_render(args.command, payload), file=stdout)
    return status


_GRAMMAR = textwrap.indent(textwrap.dedent(
    _expr.__doc__.split("::")[1].split("\n\n")[1]), "  ")


def main():
    sys.exit(run())
