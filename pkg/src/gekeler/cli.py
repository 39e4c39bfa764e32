"""Command-line front end.

Subcommands: primes, overorders, icm, ratio, product, zeta, oracle.
Reports are JSON on stdout (or --out), byte-identical across runs for
identical invocations; timings go to stderr.  Exit codes: 0 success,
2 rejected input, 1 internal invariant failure.
"""

import argparse
import json
import math
import sys
import time
from fractions import Fraction

from . import __version__
from .errors import InputError, InternalCheckError, InseparableError
from .gf import gf_of_order
from .fqpoly import is_irreducible
from .parse import parse_bipoly, parse_fqpoly
from .bipoly import is_separable
from .bifactor import is_irreducible_bivariate
from .context import AlgebraContext
from .ideals import Order
from .primes import kummer_dedekind, singular_primes, discriminant_of_f
from .overorders import p_overorders
from .weakeq import local_icm
from .zeta import l_polynomial, constant_field_degree, genus
from .ratios import (gekeler_ratio, gekeler_product, finite_level_ratio,
                     partial_products, format_fraction)
from . import oracle as oracle_mod


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="gekeler",
        description="exact local ideal class monoids and Gekeler ratios "
                    "for F_q[T][x]/f")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, prime=False, need_f=True):
        sp.add_argument("--q", type=int, required=True,
                        help="field size, a prime power")
        if need_f:
            sp.add_argument("--f", type=str, required=True,
                            help="defining polynomial, monic in x")
        sp.add_argument("--prime", type=str, required=prime,
                        help="monic irreducible of F_q[T]")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--budget", type=int, default=oracle_mod.DEFAULT_BUDGET)
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--out", type=str, default=None)

    sp = sub.add_parser("primes", help="splitting / singular primes of R")
    common(sp)
    sp = sub.add_parser("overorders", help="p-overorders of R")
    common(sp, prime=True)
    sp = sub.add_parser("icm", help="local ideal class monoid at p")
    common(sp, prime=True)
    sp = sub.add_parser("ratio", help="exact local ratio at p")
    common(sp, prime=True)
    sp.add_argument("--level", type=int, default=None,
                    help="also report the truncated ratio at this level")
    sp = sub.add_parser("product", help="exact product of local ratios")
    common(sp)
    sp.add_argument("--check-depth", type=int, default=None,
                    help="also report partial products over deg p <= D")
    sp = sub.add_parser("zeta", help="constant field degree, genus, L-polynomial")
    common(sp)
    sp = sub.add_parser("oracle", help="brute-force validators")
    sp.add_argument("what", choices=["count", "orbits", "commutant", "slcount"])
    common(sp)
    sp.add_argument("--level", type=int, default=1)
    return ap


def _parse_job(args, need_prime=False):
    q = args.q
    field = gf_of_order(q)
    f = parse_bipoly(field, args.f)
    if f.deg_x < 1 or not f.is_monic_in_x():
        raise InputError("f must be monic in x of degree >= 1")
    if f.derivative_x().is_zero():
        raise InseparableError()
    if not is_irreducible_bivariate(f, seed=args.seed):
        raise InputError("f reducible over F_q(T)")
    if not is_separable(f):
        raise InseparableError()
    ctx = AlgebraContext(field, f, seed=args.seed, check=False)
    p = None
    if getattr(args, "prime", None) is not None:
        p = parse_fqpoly(field, args.prime)
        if not p.is_monic() or not is_irreducible(p):
            raise InputError(f"--prime {args.prime!r} is not a monic irreducible")
    elif need_prime:
        raise InputError("--prime is required")
    return ctx, p


def _echo(args, ctx):
    out = {
        "command": args.command,
        "version": __version__,
        "q": args.q,
        "f": ctx.f.to_str(),
        "seed": args.seed,
    }
    if getattr(args, "prime", None) is not None:
        out["prime"] = parse_fqpoly(ctx.field, args.prime).to_str()
    return out


def _run_primes(args):
    ctx, p = _parse_job(args)
    report = _echo(args, ctx)
    if p is not None:
        split = kummer_dedekind(Order.monogenic(ctx), p)
        report.update(split.to_json_dict())
    else:
        report["discriminant"] = discriminant_of_f(ctx).to_str()
        report["singular_primes"] = [s.to_str() for s in singular_primes(ctx)]
    return report


def _run_overorders(args):
    ctx, p = _parse_job(args, need_prime=True)
    report = _echo(args, ctx)
    report["orders"] = p_overorders(ctx, p).to_json_list()
    return report


def _run_icm(args):
    ctx, p = _parse_job(args, need_prime=True)
    report = _echo(args, ctx)
    report.update(local_icm(ctx, p).to_json_dict())
    return report


def _run_ratio(args):
    ctx, p = _parse_job(args, need_prime=True)
    report = _echo(args, ctx)
    report.update(gekeler_ratio(ctx, p).to_json_dict())
    if args.level is not None:
        report["level"] = args.level
        report["level_value"] = format_fraction(
            finite_level_ratio(ctx, p, args.level, budget=args.budget))
    return report


def _worker_ratio(payload):
    q, fstr, seed, pstr = payload
    field = gf_of_order(q)
    ctx = AlgebraContext(field, parse_bipoly(field, fstr), seed=seed, check=False)
    p = parse_fqpoly(field, pstr)
    return format_fraction(gekeler_ratio(ctx, p).value)


def _run_product(args):
    ctx, _ = _parse_job(args)
    report = _echo(args, ctx)
    pr = gekeler_product(ctx)
    report.update(pr.to_json_dict())
    if args.check_depth is not None:
        if args.jobs > 1:
            partials = _parallel_partials(args, ctx, pr.value)
        else:
            partials = []
            for d, val in partial_products(ctx, args.check_depth):
                gap = abs(math.log(float(val / pr.value)))
                partials.append({"depth": d,
                                 "value": format_fraction(val),
                                 "log_gap": f"{gap:.6f}"})
        report["check"] = partials
    return report


def _parallel_partials(args, ctx, limit_value):
    """Per-prime local ratios in a worker pool, merged in canonical order."""
    from multiprocessing import Pool
    from .fqpoly import monic_irreducibles
    jobs = []
    for d in range(1, args.check_depth + 1):
        for p in monic_irreducibles(ctx.field, d):
            jobs.append((d, (args.q, ctx.f.to_str(), args.seed, p.to_str())))
    with Pool(processes=args.jobs) as pool:
        values = pool.map(_worker_ratio, [payload for _, payload in jobs])
    acc = Fraction(1)
    partials = []
    idx = 0
    for d in range(1, args.check_depth + 1):
        while idx < len(jobs) and jobs[idx][0] == d:
            num, den = values[idx].split("/")
            acc *= Fraction(int(num), int(den))
            idx += 1
        gap = abs(math.log(float(acc / limit_value)))
        partials.append({"depth": d,
                         "value": format_fraction(acc),
                         "log_gap": f"{gap:.6f}"})
    return partials


def _run_zeta(args):
    ctx, _ = _parse_job(args)
    report = _echo(args, ctx)
    lp = l_polynomial(ctx)
    report["m"] = constant_field_degree(ctx)
    report["g"] = genus(ctx)
    report["L"] = list(lp.coeffs)
    return report


def _run_oracle(args):
    ctx, p = _parse_job(args)
    report = _echo(args, ctx)
    report["what"] = args.what
    if args.what == "commutant":
        report["dimension"] = oracle_mod.commutant_dimension(ctx)
        return report
    if p is None:
        raise InputError("--prime is required for this oracle")
    report["level"] = args.level
    if args.what == "count":
        report["count"] = oracle_mod.count_matrices_with_charpoly(
            ctx, p, args.level, budget=args.budget)
    elif args.what == "orbits":
        report["orbits"] = oracle_mod.brute_orbit_count(
            ctx, p, args.level, budget=args.budget)
    else:
        sl, gl, units = oracle_mod.brute_sl_count(
            ctx.r, p, args.level, budget=args.budget)
        report["sl"] = sl
        report["gl"] = gl
        report["units"] = units
        report["sl_closed_form"] = oracle_mod.sl_order_closed_form(
            ctx.r, ctx.field.q ** int(p.degree), args.level)
    return report


_RUNNERS = {
    "primes": _run_primes,
    "overorders": _run_overorders,
    "icm": _run_icm,
    "ratio": _run_ratio,
    "product": _run_product,
    "zeta": _run_zeta,
    "oracle": _run_oracle,
}


def main(argv=None):
    ap = _build_parser()
    args = ap.parse_args(argv)
    t0 = time.monotonic()
    try:
        report = _RUNNERS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalCheckError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return 1
    text = json.dumps(report, indent=2, sort_keys=False)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    print(f"elapsed: {time.monotonic() - t0:.3f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
