"""Command-line interface: ``lo-invariants <subcommand> ...``.

Exit status is 0 on success, 1 when ``reach`` finds the target UNREACHABLE,
and 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .averaging import average_monomial
from .combinat import as_partition, partitions
from .fock import Convention, convert, enumerate_occupations, norm_sq
from .lo_action import apply_unitary
from .molien import molien_closed_form, molien_truncated, phase_molien_truncated
from .phase_basis import GOLDEN_TABLES, compare_golden, hilbert_basis
from .poly import parse_monomial
from .reach import Status, decide_reachability
from .scalars import format_scalar
from .tensor_inv import build_generating_set
from .weingarten import weingarten_table


class InputError(Exception):
    pass


def _emit(args, lines: list[str], report: dict):
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _infer_nm(args, mono):
    occs = [occ for occ, _ in mono.alpha + mono.conj]
    n = args.n if args.n is not None else (sum(occs[0]) if occs else None)
    m = args.m if args.m is not None else (len(occs[0]) if occs else None)
    if n is None or m is None:
        raise InputError("cannot infer n and m from a constant monomial; pass -n and -m")
    for occ in occs:
        if len(occ) != m or sum(occ) != n:
            raise InputError(f"variable {list(occ)} does not belong to n={n}, m={m}")
    return n, m


def cmd_basis(args):
    basis = enumerate_occupations(args.n, args.m)
    lines = [" ".join(map(str, v)) for v in basis]
    _emit(args, lines, {"n": args.n, "m": args.m, "basis": [list(v) for v in basis]})
    return 0


def cmd_apply(args):
    state = io.load_state(args.state, args.exact)
    u = io.load_unitary(args.unitary, args.exact)
    out = io.state_to_dict(apply_unitary(u, state))
    print(json.dumps(out, indent=None if args.json else 2))
    return 0


def cmd_norm(args):
    state = io.load_state(args.state, args.exact)
    value = norm_sq(convert(state, Convention.MONOMIAL))
    text = format_scalar(value)
    _emit(args, [text], {"norm_sq": text})
    return 0


def cmd_avg(args):
    mono = parse_monomial(args.monomial)
    n, m = _infer_nm(args, mono)
    text = average_monomial(mono, n, m).to_text()
    _emit(args, [text], {"n": n, "m": m, "monomial": mono.to_text(), "average": text})
    return 0


def cmd_molien(args):
    if args.phase:
        series = phase_molien_truncated(args.n, args.m, args.D)
    else:
        series = molien_truncated(args.n, args.m, args.D)
    lines = [series.to_text()]
    report = {"kind": series.kind.value, "n": args.n, "m": args.m, "coeffs": list(series.coeffs)}
    if not args.phase and args.n <= 2:
        ok = molien_closed_form(args.n, args.m, args.D).coeffs == series.coeffs
        lines.append(f"closed form: {'match' if ok else 'MISMATCH'}")
        report["closed_form_match"] = ok
    _emit(args, lines, report)
    return 0


def cmd_phase_gens(args):
    basis = hilbert_basis(args.n, args.m, args.cap)
    lines = [g.to_text() for g in basis]
    summary = f"{len(basis)} generators"
    report = {"n": args.n, "m": args.m, "degree_cap": basis.degree_cap,
              "generators": lines, "count": len(basis), "certified": basis.certified,
              "note": basis.note}
    if args.golden:
        if (args.n, args.m) not in GOLDEN_TABLES:
            raise InputError(f"no reference table for n={args.n}, m={args.m}")
        ok, missing, extra = compare_golden(basis)
        summary += ", golden match" if ok else ", golden MISMATCH"
        report["golden_match"] = ok
        lines += [f"missing: {g.to_text()}" for g in missing]
        lines += [f"extra: {g.to_text()}" for g in extra]
    lines += [summary, basis.note]
    _emit(args, lines, report)
    return 0


def cmd_invariants(args):
    gs = build_generating_set(args.n, args.m, args.D)
    lines = [f"[d={g.degree}] {g.source}: {g.polynomial.to_text()}" for g in gs]
    for r in gs.report:
        lines.append(f"degree {r.degree}: molien {r.molien}, generated {r.achieved}, "
                     f"{'match' if r.match else 'MISMATCH'}")
    lines.append(gs.caveat)
    report = {"n": args.n, "m": args.m, "D": args.D,
              "generators": [{"degree": g.degree, "source": g.source,
                              "polynomial": g.polynomial.to_text()} for g in gs],
              "report": [{"degree": r.degree, "molien": r.molien, "achieved": r.achieved}
                         for r in gs.report],
              "caveat": gs.caveat}
    _emit(args, lines, report)
    return 0


def cmd_wg(args):
    table = weingarten_table(args.d, args.m)
    mus = [as_partition(args.cycle_type)] if args.cycle_type else list(partitions(args.d))
    rows = {",".join(map(str, mu)): format_scalar(table[mu]) for mu in mus}
    _emit(args, [f"Wg({k}) = {v}" for k, v in rows.items()], {"d": args.d, "m": args.m, "wg": rows})
    return 0


def cmd_reach(args):
    src = io.load_state(args.src, args.exact)
    dst = io.load_state(args.dst, args.exact)
    verdict = decide_reachability(src, dst, D=args.D, tol=args.tol, seed=args.seed)
    report = verdict.report()
    lines = [f"{verdict.status.value} ({verdict.method.value}, degree {verdict.degree_explored})"]
    if verdict.witness is not None:
        lines.append(f"witness {verdict.witness.to_text()}")
    lines += [f"also {w.to_text()}" for w in verdict.extra_witnesses]
    _emit(args, lines, report)
    return 1 if verdict.status == Status.UNREACHABLE else 0


def _cycle_type(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad cycle type {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    backend = common.add_mutually_exclusive_group()
    backend.add_argument("--exact", action="store_true", help="exact rational arithmetic")
    backend.add_argument("--float", dest="exact", action="store_false", help="floating point (default)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="single JSON report on stdout")

    parser = argparse.ArgumentParser(prog="lo-invariants",
                                     description="Linear-optics invariants of Fock states.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("basis", cmd_basis, "list occupation vectors")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)

    p = add("apply", cmd_apply, "apply a unitary to a state")
    p.add_argument("--state", required=True)
    p.add_argument("--unitary", required=True)

    p = add("norm", cmd_norm, "factorial-weighted squared norm")
    p.add_argument("--state", required=True)

    p = add("avg", cmd_avg, "Haar average of a monomial")
    p.add_argument("monomial")
    p.add_argument("-n", type=int)
    p.add_argument("-m", type=int)

    p = add("molien", cmd_molien, "truncated Molien series")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--full", dest="phase", action="store_false")
    kind.add_argument("--phase", dest="phase", action="store_true")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-D", type=int, required=True)

    p = add("phase-gens", cmd_phase_gens, "minimal phase-invariant monomials")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--golden", action="store_true", help="compare with the reference tables")

    p = add("invariants", cmd_invariants, "generating invariants up to degree D")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-D", type=int, required=True)

    p = add("wg", cmd_wg, "Weingarten function")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--cycle-type", type=_cycle_type)

    p = add("reach", cmd_reach, "decide reachability between two states")
    p.add_argument("--src", required=True)
    p.add_argument("--dst", required=True)
    p.add_argument("-D", type=int, default=3)
    p.add_argument("--tol", type=float, default=1e-8)
    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InputError, ValueError, KeyError, OSError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
