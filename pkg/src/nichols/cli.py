"""Command-line front end.  Exit codes: 0 pass, 1 mismatch, 2 usage or input error."""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import braidings as br
from . import catalog as cat
from .errors import NicholsError
from .expr import evaluate
from .nichols import hilbert_series, quadratic_relations
from .report import VerifyReport, render
from .scalars import embed, format_scalar, zeta

EXIT_PASS, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


def _parse_sets(items: list[str] | None) -> dict[str, str]:
    out = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise NicholsError(f"--set expects NAME=EXPR, got {item!r}")
        out[name.strip()] = value.strip()
    return out


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _exit_for(reports: list[VerifyReport]) -> int:
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_MISMATCH


# -- commands ------------------------------------------------------------------

def cmd_check(args) -> int:
    spec = br.load_braiding(args.input)
    R = spec if spec.kind is br.Kind.R_MATRIX else None
    rep = cat.check_braiding(spec, args.max_degree, R=R, cap=args.degree_cap)
    _emit(render([rep], args.format, args.timing), args.output)
    return _exit_for([rep])


def cmd_family(args) -> int:
    params = _parse_sets(args.set)
    rep = cat.verify_profile(args.id, params, args.max_degree, conductor=args.conductor,
                             order_bound=args.order_bound, cap=args.degree_cap)
    _emit(render([rep], args.format, args.timing), args.output)
    return _exit_for([rep])


def _run_witness(job) -> VerifyReport:
    w, D, cap, bound = job
    if D is not None:
        w = cat.Witness(w.family, w.params, w.conductor, D)
    return cat.run_witness(w, cap=cap, order_bound=bound)


def cmd_verify_all(args) -> int:
    witnesses = list(cat.WITNESSES)
    if args.include_known_discrepancies:
        witnesses += [w for w, _ in cat.KNOWN_DISCREPANCIES]
    jobs = [(w, args.max_degree, args.degree_cap, args.order_bound) for w in witnesses]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_witness, jobs))
    else:
        reports = [_run_witness(j) for j in jobs]
    _emit(render(reports, args.format, args.timing), args.output)
    failed = sum(not r.passed for r in reports)
    print(f"verify-all: {len(reports) - failed}/{len(reports)} rows pass", file=sys.stderr)
    return _exit_for(reports)


def sweep(fid: str, vary: str, fixed: dict[str, str], base_conductor: int,
          max_order: int, order_bound: int = 1000) -> list[VerifyReport]:
    """Compare the quadratic-relation predicate with the family's condition.

    ``vary`` runs over the distinct zeta_n^j, 1 <= n <= max_order; each sample
    lives in Q(zeta_lcm(n, base_conductor)) and the fixed parameters are read in
    the base field and embedded there.
    """
    f = cat.family(fid)
    if vary not in f.param_names:
        raise NicholsError(f"{fid} has no parameter {vary!r}")
    base = {k: cat.parse_param(v, base_conductor) for k, v in fixed.items()}
    reports = []
    seen: set[Fraction] = set()
    for n in range(1, max_order + 1):
        cond = math.lcm(n, base_conductor)
        for j in range(n):
            # each root is sampled once, at its smallest order
            if Fraction(j, n) in seen:
                continue
            seen.add(Fraction(j, n))
            e = j * cond // n
            params = {k: embed(v, cond) for k, v in base.items()}
            params[vary] = zeta(cond, e)
            label = {k: format_scalar(v) for k, v in params.items()}
            label[vary] = f"zeta_{n}^{j}"
            rep = VerifyReport(fid, label, cond, "sweep")
            try:
                values, _ = cat._coerce_params(f, params, cond)
                env = cat.family_env(f, values, order_bound)
            except NicholsError as exc:
                rep.add("domain", "constraints hold", str(exc), None)
                reports.append(rep)
                continue
            c = br.to_braiding(cat.r_matrix(f, env, cond))
            predicted = bool(evaluate(f.quad_condition, env))
            found = bool(quadratic_relations(c))
            rep.add("quad_condition", predicted, found, predicted == found)
            reports.append(rep)
    return reports


def cmd_sweep(args) -> int:
    fixed = _parse_sets(args.set)
    reports = sweep(args.id, args.vary, fixed, args.conductor or 1, args.max_order,
                    args.order_bound)
    _emit(render(reports, args.format, args.timing), args.output)
    return _exit_for(reports)


def transform_reports(spec: br.BraidingSpec, D: int = 5,
                      cap: int | None = None) -> list[VerifyReport]:
    if spec.kind is not br.Kind.R_MATRIX:
        raise NicholsError("transforms expects an R-matrix input (kind 'R')")
    R = spec.lex().operator
    Rt = br.transform(R, "transpose")
    variants = [("R", R), ("R^t", Rt), ("R^#", br.transform(R, "sharp")),
                ("(R^t)^#", br.transform(Rt, "sharp"))]
    reports = []
    for name, op in variants:
        Rs = br.BraidingSpec(spec.dim, op, br.Kind.R_MATRIX, br.Ordering.LEX)
        c = br.to_braiding(Rs)
        rep = VerifyReport(name, {}, spec.conductor, "lex R-matrix")
        rep.add("qybe", True, br.satisfies_qybe(op), br.satisfies_qybe(op))
        rep.add("quadratic_relations", "-", len(quadratic_relations(c)), None)
        rep.hilbert = list(hilbert_series(c, D, cap).dims)
        rep.notes.append("rows: " + " | ".join(" ".join(str(v) for v in r)
                                               for r in op.entries))
        reports.append(rep)
    return reports


def cmd_transforms(args) -> int:
    reports = transform_reports(br.load_braiding(args.input), args.max_degree or 5,
                                args.degree_cap)
    _emit(render(reports, args.format, args.timing), args.output)
    return _exit_for(reports)


def cmd_catalog(args) -> int:
    _emit(cat.dump_catalog(), args.output)
    return EXIT_PASS


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nichols", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, max_degree=6):
        sp.add_argument("--max-degree", type=int, default=max_degree)
        sp.add_argument("--output")
        sp.add_argument("--format", choices=("json", "csv", "text"), default="json")
        sp.add_argument("--order-bound", type=int, default=1000)
        sp.add_argument("--degree-cap", type=int)
        sp.add_argument("--timing", action="store_true",
                        help="include elapsed_ms in json output")

    sp = sub.add_parser("check", help="structural checks and Hilbert window of a braiding file")
    sp.add_argument("--input", required=True)
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("family", help="verify one catalog family at given parameters")
    sp.add_argument("--id", required=True)
    sp.add_argument("--conductor", type=int, default=1)
    sp.add_argument("--set", action="append", metavar="NAME=EXPR")
    common(sp)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("verify-all", help="run the built-in witness suite")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--include-known-discrepancies", action="store_true")
    common(sp, max_degree=None)
    sp.set_defaults(func=cmd_verify_all)

    sp = sub.add_parser("sweep", help="check the quadratic-relation condition over roots of unity")
    sp.add_argument("--id", required=True)
    sp.add_argument("--vary", required=True)
    sp.add_argument("--max-order", type=int, default=8)
    sp.add_argument("--conductor", type=int, default=1)
    sp.add_argument("--set", action="append", metavar="NAME=EXPR")
    common(sp)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("transforms", help="R, R^t, R^# and (R^t)^# side by side")
    sp.add_argument("--input", required=True)
    common(sp, max_degree=5)
    sp.set_defaults(func=cmd_transforms)

    sp = sub.add_parser("catalog", help="dump the family catalog as JSON")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    try:
        return args.func(args)
    except (NicholsError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
