"""Command-line front door: JSON in, JSON/CSV out.

Exit codes: 0 success; 1 a domination check reported violations;
2 validation failure (bad files, a = 0, denominator poles); 3 a coefficient
limit diverges or tail certification fails; 4 the requested exponent is not
an indicial root; 5 the expansion point is unsupported.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

from . import serialize
from .coefficients import certify_profile
from .domain import boundary_samples, domain_report
from .engine import partial_sums, run_variable
from .errors import (CertificationFailed, CoefficientPole, DenominatorPole,
                     DivergentLimit, NonFinite, NotAnIndicialRoot,
                     RecdomainError, SpecValidationError,
                     UnsupportedExpansionPoint)
from .frobenius import derive_recurrence, indicial_root_values
from .heun import HeunParams, heun_ode, heun_recurrence, indicial_roots
from .verify import check_domination, classify_with_tail

_EXIT_CODES = (
    (NotAnIndicialRoot, 4),
    (UnsupportedExpansionPoint, 5),
    (DivergentLimit, 3),
    (CertificationFailed, 3),
    (DenominatorPole, 2),
    (CoefficientPole, 2),
    (SpecValidationError, 2),
    (NonFinite, 3),
    (RecdomainError, 2),
)


def _complex_arg(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from exc


def _add_certification_flags(sub):
    sub.add_argument("--epsilon", type=float, default=0.05,
                     help="tail inflation bound (default 0.05)")
    sub.add_argument("--horizon", type=int, default=10 ** 6,
                     help="scan horizon for tail certification (default 1e6)")
    sub.add_argument("--tol", type=float, default=1e-12,
                     help="relative tolerance of the radius bisection (default 1e-12)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recdomain",
        description="Convergence domains for multi-term power-series recurrences.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("analyze", help="domain report for a recurrence JSON file")
    p.add_argument("spec", help="RecurrenceSpec JSON file, or - for stdin")
    _add_certification_flags(p)
    p.add_argument("--boundary-csv", metavar="PATH",
                   help="also write (theta, re, im) samples of the domain circle")

    p = subs.add_parser("heun", help="build and analyze the Heun 3-term recurrence")
    p.add_argument("--params-file", metavar="PATH",
                   help="JSON object with a/alpha/beta/gamma/delta/q "
                        "(replaces the parameter flags)")
    p.add_argument("--a", type=_complex_arg, default=None)
    p.add_argument("--alpha", type=_complex_arg, default=1 + 0j)
    p.add_argument("--beta", type=_complex_arg, default=1 + 0j)
    p.add_argument("--gamma", type=_complex_arg, default=1 + 0j)
    p.add_argument("--delta", type=_complex_arg, default=1 + 0j)
    p.add_argument("--q", type=_complex_arg, default=0j)
    p.add_argument("--lambda-root", choices=("0", "second"), default="0",
                   help="series exponent: 0 or 1-gamma")
    p.add_argument("--n-show", type=int, default=8,
                   help="how many coefficient rows to print (default 8)")
    p.add_argument("--x", type=_complex_arg, action="append", default=[],
                   help="evaluate the truncated series here (repeatable)")
    p.add_argument("--terms", type=int, default=200,
                   help="series truncation order for --x (default 200)")
    p.add_argument("--emit-ode", metavar="PATH",
                   help="write the cleared-denominator ODE as JSON")
    _add_certification_flags(p)

    p = subs.add_parser("verify", help="domination check plus a radial sweep")
    p.add_argument("spec", help="RecurrenceSpec JSON file, or - for stdin")
    _add_certification_flags(p)
    p.add_argument("--j", dest="j_max", type=int, default=200,
                   help="how many tail terms to dominate (default 200)")
    p.add_argument("--n-max", type=int, default=10 ** 5,
                   help="iteration budget per classification (default 1e5)")
    p.add_argument("--sweep-csv", metavar="PATH", default="verify_sweep.csv",
                   help="radial sweep output (default verify_sweep.csv)")

    p = subs.add_parser("frobenius", help="derive a recurrence from an ODE JSON file")
    p.add_argument("ode", help="ODESpec JSON file, or - for stdin")
    p.add_argument("--lam", type=_complex_arg, default=None,
                   help="series exponent; defaults to an indicial root")
    p.add_argument("--root-index", type=int, default=0,
                   help="which indicial root to use when --lam is omitted")
    p.add_argument("-o", "--output", default="-",
                   help="where to write the recurrence JSON (default stdout)")
    return parser


def _analysis_fields(spec, epsilon, horizon, tol):
    profile = certify_profile(spec, epsilon, horizon)
    report = domain_report(profile.limits, tol)
    out = serialize.report_to_dict(report)
    out["epsilon"] = profile.epsilon
    out["tail_index"] = profile.tail_index
    return out, report


def cmd_analyze(args) -> int:
    spec = serialize.dict_to_spec(serialize.load_json(args.spec))
    out, report = _analysis_fields(spec, args.epsilon, args.horizon, args.tol)
    out["k"] = spec.k
    serialize.dump_json(out)
    if args.boundary_csv:
        if math.isinf(report.abs_radius):
            print("boundary circle skipped: the domain radius is infinite",
                  file=sys.stderr)
        else:
            with open(args.boundary_csv, "w", encoding="utf-8") as fh:
                serialize.boundary_to_csv(boundary_samples(report.abs_radius), fh)
    return 0


def cmd_heun(args) -> int:
    if args.params_file:
        params = serialize.dict_to_heun_params(serialize.load_json(args.params_file))
    elif args.a is None:
        raise SpecValidationError("--a is required unless --params-file is given")
    else:
        params = HeunParams(args.a, args.alpha, args.beta, args.gamma,
                            args.delta, args.q)
    roots = indicial_roots(params)
    lam = roots[0] if args.lambda_root == "0" else roots[1]
    spec = heun_recurrence(params, lam)
    out, _ = _analysis_fields(spec, args.epsilon, args.horizon, args.tol)
    out["params"] = serialize.heun_params_to_dict(params)
    out["indicial_roots"] = [serialize.complex_to_pair(r) for r in roots]
    out["indicial_roots_coincide"] = abs(roots[0] - roots[1]) < 1e-12
    out["lambda"] = serialize.complex_to_pair(lam)
    show = max(args.n_show, 0)
    out["coefficient_values"] = [
        [serialize.complex_to_pair(f(n)) for f in spec.coefficients]
        for n in range(show)
    ]
    if args.x:
        window = run_variable(spec, args.terms)
        out["series"] = [
            {"x": serialize.complex_to_pair(x),
             "terms": args.terms,
             "partial_sum": serialize.complex_to_pair(
                 partial_sums(window, x, args.terms)[-1])}
            for x in args.x
        ]
    serialize.dump_json(out)
    if args.emit_ode:
        with open(args.emit_ode, "w", encoding="utf-8") as fh:
            serialize.dump_json(serialize.ode_to_dict(heun_ode(params)), fh)
    return 0


def _sweep_radii(r_abs: float):
    if r_abs == float("inf"):
        return [float(2 ** i) for i in range(7)]
    fracs = (0.2, 0.4, 0.6, 0.8, 0.9, 0.95, 1.05, 1.2, 1.5)
    return [f * r_abs for f in fracs]


def cmd_verify(args) -> int:
    spec = serialize.dict_to_spec(serialize.load_json(args.spec))
    profile = certify_profile(spec, args.epsilon, args.horizon)
    report = check_domination(spec, profile, args.j_max)
    sweep = []
    for radius in _sweep_radii(domain_report(profile.limits, args.tol).abs_radius):
        label, tail = classify_with_tail(spec, radius, args.n_max)
        sweep.append((radius, label.value, tail))
    sweep.sort(key=lambda row: row[0])
    out = serialize.domination_to_dict(report)
    out["thresholds"] = {"divergence_cap": 1e50, "convergence_floor": 1e-12,
                         "n_max": args.n_max}
    out["sweep"] = [{"radius": r, "classification": c, "tail_magnitude": t}
                    for r, c, t in sweep]
    serialize.dump_json(out)
    with open(args.sweep_csv, "w", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["radius", "classification", "tail_magnitude"])
        for r, c, t in sweep:
            writer.writerow([repr(r), c, repr(t)])
    return 1 if report.violations else 0


def cmd_frobenius(args) -> int:
    ode = serialize.dict_to_ode(serialize.load_json(args.ode))
    roots = indicial_root_values(ode)
    if args.lam is not None:
        lam = args.lam
    else:
        if not roots:
            raise NotAnIndicialRoot("the indicial polynomial has no roots")
        if not 0 <= args.root_index < len(roots):
            raise SpecValidationError(
                f"--root-index must be in [0, {len(roots) - 1}]")
        lam = roots[args.root_index]
    spec = derive_recurrence(ode, lam)
    out = serialize.spec_to_dict(spec)
    out["indicial_roots"] = [serialize.complex_to_pair(r) for r in roots]
    out["lambda"] = serialize.complex_to_pair(lam)
    if args.output == "-":
        serialize.dump_json(out)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            serialize.dump_json(out, fh)
    return 0


_HANDLERS = {
    "analyze": cmd_analyze,
    "heun": cmd_heun,
    "verify": cmd_verify,
    "frobenius": cmd_frobenius,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except RecdomainError as exc:
        for kind, code in _EXIT_CODES:
            if isinstance(exc, kind):
                print(f"error: {exc}", file=sys.stderr)
                return code
        raise


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
