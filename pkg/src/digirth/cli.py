"""Command-line surface. Exit codes: 0 success, 1 domain failure, 2 usage.

Primary results go to stdout; diagnostics (including the effective seed of
every randomized command) go to stderr. Certificates are the only
cross-invocation state.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bounds, construct as cons
from .circular import chi_c, gen_ckd
from .digraph import DigraphFormatError, girth, parse_digraph, write_digraph
from .hom import check_acyclic_hom, core_witness, is_uniquely_colourable, solve_hom
from .construct import (
    ConstructParams,
    WitnessSearchError,
    blowup,
    construct_witness,
    verify_witness,
    witness_from_json,
    witness_to_json,
)


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_digraph(fh.read())
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    except DigraphFormatError as exc:
        raise CliError(f"{path}: {exc}") from exc


class CliError(Exception):
    pass


def _parse_eps(text):
    try:
        num, den = text.split("/")
        return Fraction(int(num), int(den))
    except (ValueError, ZeroDivisionError):
        raise CliError(f"bad fraction {text!r}, expected NUM/DEN") from None


def _parse_map(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise CliError(f"bad map {text!r}, expected comma-separated ints") from None


def _report_dict(rep):
    return {
        "girth_ok": rep.girth_ok,
        "d_colourable": rep.d_colourable,
        "not_c_colourable": rep.not_c_colourable,
        "solver_exhaustive": rep.solver_exhaustive,
        "uniquely_d_colourable": rep.uniquely_d_colourable,
    }


def _cmd_ckd(args, out):
    if args.d < 1 or args.d > args.k:
        raise CliError(f"need 1 <= d <= k, got k={args.k} d={args.d}")
    text = write_digraph(gen_ckd(args.k, args.d))
    if args.o:
        with open(args.o, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def _cmd_girth(args, out):
    g = girth(_load(args.file))
    out.write(("infinite" if g == float("inf") else str(int(g))) + "\n")
    return 0


def _cmd_chic(args, out):
    if args.cap is None:
        res = chi_c(_load(args.file))
    else:
        # an explicit cap is a hard bound: breach errors instead of expanding
        res = chi_c(_load(args.file), cap=args.cap, hard_cap=args.cap)
    out.write(f"{res.k}/{res.d}\n")
    return 0


def _cmd_hom(args, out):
    d = _load(args.from_file)
    c = _load(args.to_file)
    if args.map is not None:
        f = _parse_map(args.map)
        try:
            verdict = check_acyclic_hom(d, c, f)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        if verdict.valid:
            out.write("valid\n")
        else:
            v = verdict.violation
            if hasattr(v, "cycle"):
                cyc = ",".join(str(x) for x in v.cycle)
                out.write(f"invalid cyclic-fiber {v.vertex}: {cyc}\n")
            else:
                out.write(f"invalid bad-arc {v.u} {v.v}\n")
        return 0
    if args.count:
        out.write(f"{solve_hom(d, c, 'count')}\n")
        return 0
    if args.all:
        for h in solve_hom(d, c, "all"):
            out.write(",".join(str(x) for x in h.map) + "\n")
        return 0
    found = solve_hom(d, c, "first")
    out.write(",".join(str(x) for x in found[0].map) + "\n" if found else "none\n")
    return 0


def _cmd_core(args, out):
    witness = core_witness(_load(args.file))
    if witness is None:
        out.write("core\n")
    else:
        out.write("not-core " + ",".join(str(x) for x in witness) + "\n")
    return 0


def _cmd_unique(args, out):
    d = _load(args.from_file)
    c = _load(args.to_file)
    out.write("unique\n" if is_uniquely_colourable(d, c) else "not-unique\n")
    return 0


def _cmd_construct(args, out, err):
    base = _load(args.base)
    target = _load(args.target)
    try:
        params = ConstructParams(
            g=args.g, n=args.n,
            eps=_parse_eps(args.eps) if args.eps else None,
            p=args.p, seed=args.seed, max_tries=args.tries,
            independent=args.independent,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from None
    err.write(f"seed: {params.seed}\n")
    err.write(f"p: {params.p}\n")
    try:
        w = construct_witness(base, target, params)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    except WitnessSearchError as exc:
        err.write(str(exc) + "\n")
        return 1
    cert = witness_to_json(w, base, target)
    if args.o:
        with open(args.o, "w", encoding="utf-8") as fh:
            fh.write(cert)
        err.write(f"certificate written to {args.o} (try {w.tries_used})\n")
    else:
        out.write(cert)
    return 0


def _cmd_verify(args, out, err):
    try:
        with open(args.cert, "r", encoding="utf-8") as fh:
            w, cert_base, cert_target = witness_from_json(fh.read())
    except OSError as exc:
        raise CliError(f"cannot read {args.cert}: {exc}") from exc
    except (KeyError, ValueError) as exc:
        raise CliError(f"malformed certificate: {exc}") from None
    base = _load(args.base)
    target = _load(args.target)
    if base != cert_base or target != cert_target:
        raise CliError("certificate base/target do not match the given files")
    rep = verify_witness(w, base, target)
    out.write(json.dumps(_report_dict(rep), indent=2) + "\n")
    return 0 if rep.accepted else 1


def _cmd_estimate(args, out, err):
    err.write(f"seed: {args.seed}\n")
    if args.what == "cycles":
        base = _load(args.base)
        b = blowup(base, args.n)
        rep = bounds.mc_cycle_count(b, args.p, args.g, args.trials, args.seed)
        named = [("short_cycles", rep.cycles), ("digons", rep.digons)]
    else:
        base = _load(args.base)
        cycle = _parse_map(args.cycle)
        try:
            rep = bounds.mc_estimate_pl(base, cycle, args.w, args.p,
                                        args.trials, args.seed)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        named = [("acyclic_frequency", rep)]
    out.write(bounds.reports_json(named))
    err.write(bounds.reports_table(named))
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="digirth")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("ckd", help="generate C(k,d)")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-o", metavar="FILE")

    p = sub.add_parser("girth", help="shortest directed cycle length")
    p.add_argument("file", metavar="FILE")

    p = sub.add_parser("chic", help="exact circular chromatic number")
    p.add_argument("file", metavar="FILE")
    p.add_argument("--cap", type=int, default=None)

    p = sub.add_parser("hom", help="acyclic homomorphism search / check")
    p.add_argument("--from", dest="from_file", required=True, metavar="FILE")
    p.add_argument("--to", dest="to_file", required=True, metavar="FILE")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--all", action="store_true")
    g.add_argument("--count", action="store_true")
    g.add_argument("--map", metavar="MAP")

    p = sub.add_parser("core", help="core test")
    p.add_argument("file", metavar="FILE")

    p = sub.add_parser("unique", help="unique colourability test")
    p.add_argument("--from", dest="from_file", required=True, metavar="FILE")
    p.add_argument("--to", dest="to_file", required=True, metavar="FILE")

    p = sub.add_parser("construct", help="randomized large-girth witness search")
    p.add_argument("--base", required=True, metavar="FILE")
    p.add_argument("--target", required=True, metavar="FILE")
    p.add_argument("-g", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--eps", metavar="NUM/DEN")
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tries", type=int, default=32)
    p.add_argument("--independent", action="store_true")
    p.add_argument("-o", metavar="CERT.json")

    p = sub.add_parser("verify", help="re-verify a witness certificate")
    p.add_argument("cert", metavar="CERT.json")
    p.add_argument("--base", required=True, metavar="FILE")
    p.add_argument("--target", required=True, metavar="FILE")

    p = sub.add_parser("estimate", help="Monte Carlo estimators")
    est = p.add_subparsers(dest="what", required=True)
    pc = est.add_parser("cycles", help="short-cycle counts in sampled blow-ups")
    pc.add_argument("--base", required=True, metavar="FILE")
    pc.add_argument("-n", type=int, required=True)
    pc.add_argument("-g", type=int, required=True)
    pc.add_argument("--p", type=float, default=0.5)
    pc.add_argument("--trials", type=int, required=True)
    pc.add_argument("--seed", type=int, default=0)
    pl = est.add_parser("pl", help="acyclicity frequency along a base cycle")
    pl.add_argument("--base", required=True, metavar="FILE")
    pl.add_argument("--cycle", required=True, metavar="V,V,...")
    pl.add_argument("-w", type=int, required=True)
    pl.add_argument("--p", type=float, default=0.5)
    pl.add_argument("--trials", type=int, required=True)
    pl.add_argument("--seed", type=int, default=0)

    return ap


def run(argv, out=None, err=None):
    """Run one command; returns the exit code without calling sys.exit."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    try:
        if args.cmd == "ckd":
            return _cmd_ckd(args, out)
        if args.cmd == "girth":
            return _cmd_girth(args, out)
        if args.cmd == "chic":
            return _cmd_chic(args, out)
        if args.cmd == "hom":
            return _cmd_hom(args, out)
        if args.cmd == "core":
            return _cmd_core(args, out)
        if args.cmd == "unique":
            return _cmd_unique(args, out)
        if args.cmd == "construct":
            return _cmd_construct(args, out, err)
        if args.cmd == "verify":
            return _cmd_verify(args, out, err)
        if args.cmd == "estimate":
            return _cmd_estimate(args, out, err)
    except (CliError, DigraphFormatError, ValueError, RuntimeError) as exc:
        # domain failures (bad parameters, size limits, cap breaches, failed
        # repairs) exit 1; argparse already handled usage errors with 2
        err.write(f"error: {exc}\n")
        return 1
    raise AssertionError("unreachable")


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
