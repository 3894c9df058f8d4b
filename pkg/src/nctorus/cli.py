"""The nct command line tool.

Exit codes: 0 when every requested check passes, 1 when a verification
fails (any machine-readable report is still written), 2 on usage or
domain errors.  Human-readable results go to standard output; pass
-o FILE to also write a JSON report.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .chern import (
    crosscheck_closed_forms,
    top_eb_minus,
    top_eq_plus,
    verify_lemma_psizeta,
)
from .errors import (
    BadInput,
    ChainFailure,
    DomainPhase,
    ExprSyntaxError,
    IndeterminateSign,
    NoIntertwiner,
    NotUnitary,
    ParamMismatch,
)
from .exactscalar import parse_rat, rat_str
from .exprcli import parse as parse_expr
from .exprcli import unparse
from .gclass import (
    DEFAULT_KAPPAS,
    Kappas,
    SeedParams,
    certify,
    certify_grid,
    chain_parts,
    derive,
    gdelta_cover,
    interval,
    member,
    verify_identities,
)
from .matrixmodel import intertwiner_report, fourier_intertwiner, matrix_to_json
from .traces import TraceKind, psi, psi_star, run_trace_suite

Payload = Optional[Dict[str, object]]

USAGE_ERROR = 2
CHECK_FAILED = 1


def _print_results(results: Dict[str, bool]) -> bool:
    ok = True
    for name, passed in results.items():
        print(f"{name}: {'PASS' if passed else 'FAIL'}")
        ok = ok and passed
    return ok


def _kappas(args) -> Kappas:
    return Kappas(parse_rat(args.kappa1), parse_rat(args.kappa2))


def _seed(args) -> SeedParams:
    return SeedParams(args.k, args.m)


def _cmd_gclass_derive(args) -> Tuple[int, Payload]:
    d = derive(_seed(args))
    for name, value in d.to_json().items():
        print(f"{name} = {value}")
    return 0, {"seed": _seed(args).to_json(), "derived": d.to_json()}


def _cmd_gclass_identities(args) -> Tuple[int, Payload]:
    results = dict(verify_identities(_seed(args)))
    ok = _print_results(results)
    return (0 if ok else CHECK_FAILED), {"identities": results, "ok": ok}


def _cmd_gclass_chain(args) -> Tuple[int, Payload]:
    results = chain_parts(_seed(args), _kappas(args))
    ok = _print_results(results)
    return (0 if ok else CHECK_FAILED), {"chain": results, "ok": ok}


def _cmd_gclass_interval(args) -> Tuple[int, Payload]:
    iv = interval(_seed(args), _kappas(args))
    print(f"interval: ({rat_str(iv.lo)}, {rat_str(iv.hi)})")
    print(f"width: {rat_str(iv.width())}")
    return 0, {"interval": iv.to_json(), "width": rat_str(iv.width())}


def _cmd_gclass_certify(args) -> Tuple[int, Payload]:
    kappas = _kappas(args)
    if args.grid is not None:
        certs = certify_grid(args.grid, kappas)
        ok = True
        for cert in certs:
            seed = cert.seed
            print(f"seed {seed.k}/{seed.m}: {'PASS' if cert.overall else 'FAIL'}")
            ok = ok and cert.overall
        print(f"grid of {len(certs)} seeds: {'PASS' if ok else 'FAIL'}")
        return (0 if ok else CHECK_FAILED), {"certificates": [c.to_json() for c in certs], "ok": ok}
    if args.k is None or args.m is None:
        raise BadInput("certify needs either -k and -m or --grid MAX")
    cert = certify(_seed(args), kappas)
    flat = {
        **cert.identities,
        **cert.chain,
        "vector_sum": cert.sum_ok,
        "tau0_formula": cert.tau0_formula_ok,
        "tau0_positive": cert.tau0_positive,
        "kappa2_below_s_over_B": cert.kappa2_below_s_over_B,
        "split_identity": cert.lemma31.identity_ok,
        "split_bound": cert.lemma31.bound_ok,
        "flat_trace": cert.flat_trace_ok,
    }
    _print_results(flat)
    print(f"overall: {'PASS' if cert.overall else 'FAIL'}")
    return (0 if cert.overall else CHECK_FAILED), cert.to_json()


def _cmd_gclass_member(args) -> Tuple[int, Payload]:
    theta = parse_rat(args.theta)
    hits = member(theta, _kappas(args), args.kmax)
    for seed in hits:
        print(f"seed {seed.k}/{seed.m}")
    print(f"{len(hits)} seed(s) contain theta = {rat_str(theta)}")
    return 0, {"theta": rat_str(theta), "seeds": [s.to_json() for s in hits]}


def _cmd_gclass_cover(args) -> Tuple[int, Payload]:
    seeds = []
    for piece in args.seeds.split(","):
        frac = parse_rat(piece)
        seeds.append(SeedParams(frac.numerator, frac.denominator))
    ivs = gdelta_cover(seeds, _kappas(args))
    for seed, iv in zip(seeds, ivs):
        print(f"seed {seed.k}/{seed.m}: ({rat_str(iv.lo)}, {rat_str(iv.hi)})")
    return 0, {"intervals": [iv.to_json() for iv in ivs]}


def _cmd_traces_check(args) -> Tuple[int, Payload]:
    results = run_trace_suite(args.window)
    ok = _print_results(results)
    return (0 if ok else CHECK_FAILED), {"window": args.window, "results": results, "ok": ok}


def _cmd_traces_eval(args) -> Tuple[int, Payload]:
    kind = TraceKind(args.kind)
    el = parse_expr(args.expr)
    value = psi_star(kind, el) if args.adjoint else psi(kind, el)
    print(str(value))
    return 0, {"kind": args.kind, "expr": args.expr, "adjoint": args.adjoint, "value": str(value)}


def _cmd_chern_top(args) -> Tuple[int, Payload]:
    if args.charge == "plus":
        v = top_eq_plus(args.p, args.q)
    else:
        v = top_eb_minus(args.p, args.q)
    print(str(v))
    print(f"lattice: {'PASS' if v.top.in_lattice() else 'FAIL'}")
    return 0, {"charge": args.charge, "p": args.p, "q": args.q, "vector": v.to_json()}


def _cmd_chern_crosscheck(args) -> Tuple[int, Payload]:
    results = {}
    if args.charge in ("plus", "both"):
        results["plus"] = crosscheck_closed_forms(args.p, args.q, 1)
    if args.charge in ("minus", "both"):
        results["minus"] = crosscheck_closed_forms(args.p, args.q, -1)
    ok = _print_results(results)
    return (0 if ok else CHECK_FAILED), {"p": args.p, "q": args.q, "results": results, "ok": ok}


def _cmd_chern_lemma24(args) -> Tuple[int, Payload]:
    ok = verify_lemma_psizeta(args.nn, args.kk, args.window)
    print(f"transfer equations (nn={args.nn}, k={args.kk}, window={args.window}): "
          f"{'PASS' if ok else 'FAIL'}")
    return (0 if ok else CHECK_FAILED), {
        "nn": args.nn,
        "k": args.kk,
        "window": args.window,
        "ok": ok,
    }


def _cmd_matrix_verify(args) -> Tuple[int, Payload]:
    if args.sweep is not None:
        reports = []
        ok = True
        for q in range(1, args.sweep + 1):
            for p in range(1, q + 1):
                if math.gcd(p, q) != 1:
                    continue
                rep = intertwiner_report(q, p)
                reports.append(rep)
                ok = ok and rep.ok
                print(f"q={q} p={p}: worst residual "
                      f"{max(rep.resid_u, rep.resid_v, rep.resid_unitary):.2e} "
                      f"{'PASS' if rep.ok else 'FAIL'}")
        print(f"sweep q <= {args.sweep}: {'PASS' if ok else 'FAIL'}")
        return (0 if ok else CHECK_FAILED), {"reports": [r.to_json() for r in reports], "ok": ok}
    rep = intertwiner_report(args.q, args.p)
    print(f"resid WuW*-v     : {rep.resid_u:.3e}")
    print(f"resid WvW*-u*    : {rep.resid_v:.3e}")
    print(f"resid W*W-I      : {rep.resid_unitary:.3e}")
    print(f"order four       : {'PASS' if rep.order_four_ok else 'FAIL'}")
    print(f"overall          : {'PASS' if rep.ok else 'FAIL'}")
    payload: Dict[str, object] = dict(rep.to_json())
    if args.dump:
        payload["matrix"] = matrix_to_json(fourier_intertwiner(args.q, args.p))
    return (0 if rep.ok else CHECK_FAILED), payload


def _cmd_expr_echo(args) -> Tuple[int, Payload]:
    el = parse_expr(args.expr)
    canonical = unparse(el)
    print(canonical)
    return 0, {"input": args.expr, "canonical": canonical}


def _add_seed_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("-k", type=int, required=True, help="seed numerator k >= 1")
    sub.add_argument("-m", type=int, required=True, help="seed denominator m > 2k")


def _add_kappa_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--kappa1", default="3/4", help="slack 1/2 < kappa1 < 1 (rational)")
    sub.add_argument("--kappa2", default="1/2", help="slack 0 < kappa2 <= 1/2 (rational)")


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="nct",
        description="exact verification toolkit for the order-four transform of the "
        "two-unitary rotation algebra",
    )
    subs = top.add_subparsers(dest="command", required=True)

    out_parent = argparse.ArgumentParser(add_help=False)
    out_parent.add_argument("-o", "--output", metavar="FILE", help="write a JSON report")

    gclass = subs.add_parser("gclass", help="seed family: identities, intervals, certificates")
    gsubs = gclass.add_subparsers(dest="subcommand", required=True)

    g_derive = gsubs.add_parser("derive", parents=[out_parent], help="derived integers for a seed")
    _add_seed_flags(g_derive)
    g_derive.set_defaults(handler=_cmd_gclass_derive)

    g_ident = gsubs.add_parser("identities", parents=[out_parent], help="the eight exact identities")
    _add_seed_flags(g_ident)
    g_ident.set_defaults(handler=_cmd_gclass_identities)

    g_chain = gsubs.add_parser("chain", parents=[out_parent], help="the five-link inequality chain")
    _add_seed_flags(g_chain)
    _add_kappa_flags(g_chain)
    g_chain.set_defaults(handler=_cmd_gclass_chain)

    g_interval = gsubs.add_parser("interval", parents=[out_parent], help="the seed's open interval")
    _add_seed_flags(g_interval)
    _add_kappa_flags(g_interval)
    g_interval.set_defaults(handler=_cmd_gclass_interval)

    g_certify = gsubs.add_parser("certify", parents=[out_parent], help="full decomposition certificate")
    g_certify.add_argument("-k", type=int, help="seed numerator (single-seed mode)")
    g_certify.add_argument("-m", type=int, help="seed denominator (single-seed mode)")
    g_certify.add_argument("--grid", type=int, metavar="MAX", help="certify every odd-m seed with k, m <= MAX")
    _add_kappa_flags(g_certify)
    g_certify.set_defaults(handler=_cmd_gclass_certify)

    g_member = gsubs.add_parser("member", parents=[out_parent], help="seeds whose interval contains theta")
    g_member.add_argument("--theta", required=True, help="rational theta in (0,1), e.g. 73/1156")
    g_member.add_argument("--kmax", type=int, default=40, help="search bound for k, m")
    _add_kappa_flags(g_member)
    g_member.set_defaults(handler=_cmd_gclass_member)

    g_cover = gsubs.add_parser("cover", parents=[out_parent], help="intervals for a list of seeds")
    g_cover.add_argument("--seeds", required=True, help="comma-separated seeds, e.g. 1/3,2/5")
    _add_kappa_flags(g_cover)
    g_cover.set_defaults(handler=_cmd_gclass_cover)

    traces = subs.add_parser("traces", help="trace functionals: law suite and evaluation")
    tsubs = traces.add_subparsers(dest="subcommand", required=True)

    t_check = tsubs.add_parser("check", parents=[out_parent], help="exhaustive law suite on a window")
    t_check.add_argument("--window", type=int, default=6, help="monomial exponent window")
    t_check.set_defaults(handler=_cmd_traces_check)

    t_eval = tsubs.add_parser("eval", parents=[out_parent], help="evaluate one functional on an expression")
    t_eval.add_argument("--kind", required=True, choices=[k.value for k in TraceKind])
    t_eval.add_argument("--expr", required=True, help="element in the expression grammar")
    t_eval.add_argument("--adjoint", action="store_true", help="evaluate the Hermitian adjoint functional")
    t_eval.set_defaults(handler=_cmd_traces_eval)

    chern = subs.add_parser("chern", help="invariant vectors and transfer checks")
    csubs = chern.add_subparsers(dest="subcommand", required=True)

    c_top = csubs.add_parser("top", parents=[out_parent], help="closed-form vector of a charged projection")
    c_top.add_argument("--charge", required=True, choices=["plus", "minus"])
    c_top.add_argument("-p", type=int, required=True)
    c_top.add_argument("-q", type=int, required=True)
    c_top.set_defaults(handler=_cmd_chern_top)

    c_cross = csubs.add_parser("crosscheck", parents=[out_parent],
                               help="closed form vs transfer-route recomputation")
    c_cross.add_argument("-p", type=int, required=True)
    c_cross.add_argument("-q", type=int, required=True)
    c_cross.add_argument("--charge", default="both", choices=["plus", "minus", "both"])
    c_cross.set_defaults(handler=_cmd_chern_crosscheck)

    c_lemma = csubs.add_parser("lemma24", parents=[out_parent],
                               help="element-level transfer equations on a window")
    c_lemma.add_argument("--nn", type=int, required=True, help="scaling index, nonzero")
    c_lemma.add_argument("--kk", type=int, required=True, help="integer offset")
    c_lemma.add_argument("--window", type=int, default=6)
    c_lemma.set_defaults(handler=_cmd_chern_lemma24)

    matrix = subs.add_parser("matrix", help="clock/shift intertwiner witness")
    msubs = matrix.add_subparsers(dest="subcommand", required=True)

    m_verify = msubs.add_parser("verify", parents=[out_parent], help="solve and verify one pair or a sweep")
    m_verify.add_argument("-p", type=int, default=1)
    m_verify.add_argument("-q", type=int, default=2)
    m_verify.add_argument("--sweep", type=int, metavar="QMAX", help="verify all coprime pairs with q <= QMAX")
    m_verify.add_argument("--dump", action="store_true", help="include the matrix in the JSON report")
    m_verify.set_defaults(handler=_cmd_matrix_verify)

    expr = subs.add_parser("expr", help="expression grammar utilities")
    esubs = expr.add_subparsers(dest="subcommand", required=True)

    e_echo = esubs.add_parser("echo", parents=[out_parent], help="parse and print the canonical form")
    e_echo.add_argument("--expr", required=True)
    e_echo.set_defaults(handler=_cmd_expr_echo)

    return top


def run(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        code, payload = args.handler(args)
    except (BadInput, DomainPhase, ParamMismatch, ExprSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ChainFailure, IndeterminateSign, NoIntertwiner, NotUnitary) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return CHECK_FAILED
    output = getattr(args, "output", None)
    if output and payload is not None:
        with open(output, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, indent=2)
            handle.write("\n")
        print(f"report written to {output}")
    return code


def main() -> None:
    sys.exit(run())
