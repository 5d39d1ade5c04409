"""Command-line front end: ``twopoint compute ...`` and ``twopoint verify ...``."""

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import checks, opers, series
from .env import lstorto, sugawara1, sugawara2
from .errors import TwopointError, WeightConstraint

SCHEMA = 1


class UsageError(Exception):
    pass


def _level2(text):
    """Parse a level given in index units (integer or half-integer) to doubled form."""
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("invalid level %r" % text)
    if (2 * q).denominator != 1:
        raise argparse.ArgumentTypeError("level must be an integer or a half-integer")
    return int(2 * q)


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError("--%s is required" % n.replace("_", "-"))


# --------------------------------------------------------------------------
# compute

def compute(args):
    obj = args.object
    if obj == "plambda":
        _need(args, "lam")
        if args.lam < 1:
            raise UsageError("--lambda must be at least 1")
        p = opers.p_lambda(args.lam)
        return str(p), {"object": obj, "lambda": args.lam, "polynomial": str(p)}
    if obj == "flambda":
        _need(args, "lam", "mu")
        if args.lam < 0 or args.mu < 0:
            raise UsageError("weights must be nonnegative")
        f = opers.f_lambda(args.lam, args.mu)
        data = {"object": obj, "lambda": args.lam, "mu": args.mu, "polynomial": str(f)}
        if not args.factored:
            return str(f), data
        z = opers.CoordVar("Z", -2)
        uni = f.univariate(z)
        lead = uni[max(uni)]
        roots = opers.f_lambda_roots(args.lam, args.mu)
        if f != opers.poly_from_roots(("Z", -2), roots, lead):
            data["factored"] = None
            return str(f) + "\n(no factorisation over the expected roots)", data
        rs = ", ".join(str(r) for r in roots)
        factors = "*".join("(z[-2] - %s)" % r if r else "z[-2]" for r in roots)
        text = "%s*%s\nroots: {%s}" % (lead, factors, rs)
        data.update({"leading": str(lead), "roots": [str(r) for r in roots]})
        return text, data
    if obj in ("sugawara1", "sugawara2", "lstorto"):
        _need(args, "level")
        if obj == "sugawara1":
            _need(args, "k")
            if args.level % 2:
                raise UsageError("the one-variable algebra needs an integer level")
            x = sugawara1(args.k, args.level)
        else:
            _need(args, "k2")
            x = (sugawara2 if obj == "sugawara2" else lstorto)(args.k2, args.level)
        return str(x), dict(object=obj, **x.to_json())
    if obj == "hyper":
        _need(args, "lam", "mu", "nu")
        h = opers.hyper_oper(args.lam, args.mu, args.nu)
        lines = ["a[%d] = %s, b[%d] = %s" % (i, ai, i, bi) for i, (ai, bi) in sorted(h.coords.items())]
        lines.append("f = %s" % series.format_basis(series.to_basis(h.to_fun())))
        data = {"object": obj, "lambda": args.lam, "mu": args.mu, "nu": args.nu, "coords": h.to_json()}
        if args.lam <= args.mu and (args.lam + args.mu - args.nu) // 2 <= args.lam:
            phi = opers.hyper_series(args.lam, args.mu, args.nu)
            lines.append("phi = %s" % phi)
            data["series"] = str(phi)
        return "\n".join(lines), data
    if obj == "coordmap":
        _need(args, "family", "n")
        p = opers.coord_expand(args.family, args.n, args.floor)
        d = opers.coord_diag(args.n)
        text = "%s\ndiagonal: z[%d] -> %s" % (p, args.n, d)
        return text, {"object": obj, "family": args.family, "n": args.n, "floor": args.floor,
                      "expansion": str(p), "diagonal": str(d)}
    raise UsageError("unknown object %r" % obj)


# --------------------------------------------------------------------------
# verify

def _timed(job):
    suite, name, params = job
    t0 = time.perf_counter()
    try:
        ok, expected, actual = checks.run_case(suite, params)
        status = "pass" if ok else "fail"
    except Exception as exc:  # reported as a failing case
        status, expected, actual = "fail", "no error", "%s: %s" % (type(exc).__name__, exc)
    ms = (time.perf_counter() - t0) * 1000.0
    return {"name": name, "params": params, "status": status,
            "expected": expected, "actual": actual, "elapsed_ms": round(ms, 1)}


def _clip(text, width=240):
    return text if len(text) <= width else text[:width] + " ..."


def verify(args):
    base = dict(checks.DEFAULTS["quick" if args.quick else "full"])
    for key in ("kmax", "level", "max_weight"):
        val = getattr(args, key)
        if val is not None:
            base[key] = val
    base["seed"] = args.seed
    base["index_offset"] = args.index_offset
    if args.suite not in checks.SUITES and args.suite not in checks.GROUPS and args.suite != "all":
        raise UsageError("unknown suite %r" % args.suite)
    suites = checks.expand_suite(args.suite)
    jobs = [(s, name, params) for s in suites for name, params in checks.suite_cases(s, base)]
    workers = args.jobs or os.cpu_count() or 1
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_timed, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        results = [_timed(j) for j in jobs]
    reports = []
    for s in suites:
        cases = [r for (suite, _, _), r in zip(jobs, results) if suite == s]
        if not args.timings:
            for c in cases:
                c.pop("elapsed_ms")
        reports.append({"suite": s, "cases": cases})
    ok = all(c["status"] == "pass" for r in reports for c in r["cases"])
    lines = []
    for r in reports:
        npass = sum(c["status"] == "pass" for c in r["cases"])
        lines.append("%s: %d/%d pass" % (r["suite"], npass, len(r["cases"])))
        for c in r["cases"]:
            if c["status"] != "pass" or args.verbose:
                extra = " (%.1f ms)" % c["elapsed_ms"] if args.timings else ""
                lines.append("  %s %s%s" % (c["status"].upper(), c["name"], extra))
                if c["status"] != "pass":
                    lines.append("    expected: %s" % _clip(c["expected"]))
                    lines.append("    actual:   %s" % _clip(c["actual"]))
    lines.append("OK" if ok else "FAILED")
    return ok, "\n".join(lines), {"suites": reports, "ok": ok}


# --------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="twopoint", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=0, help="worker processes (0: all cores)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="compute an object")
    c.add_argument("object", choices=["plambda", "flambda", "sugawara1", "sugawara2",
                                      "lstorto", "hyper", "coordmap"])
    c.add_argument("--lambda", dest="lam", type=int)
    c.add_argument("--mu", type=int)
    c.add_argument("--nu", type=int)
    c.add_argument("--k", type=int, help="integer index (one-variable operators)")
    c.add_argument("--k2", type=int, help="twice the (half-integer) index")
    c.add_argument("--level", type=_level2, help="truncation level, integer or half-integer")
    c.add_argument("--factored", action="store_true")
    c.add_argument("--family", choices=["t", "s"])
    c.add_argument("--n", type=int)
    c.add_argument("--floor", type=int, default=2)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("suite", help="suite name or 'all'")
    v.add_argument("--quick", action="store_true")
    v.add_argument("--kmax", type=int)
    v.add_argument("--level", type=int, help="target level for centrality")
    v.add_argument("--max-weight", dest="max_weight", type=int)
    v.add_argument("--index-offset", dest="index_offset", type=int, default=0,
                   help="one-variable index offset in the specialisation suite")
    v.add_argument("--timings", action="store_true", help="include elapsed times")
    v.add_argument("--verbose", action="store_true")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.command == "compute":
            text, data = compute(args)
            ok = True
        else:
            ok, text, data = verify(args)
    except (UsageError, WeightConstraint) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except TwopointError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    if args.json:
        data = dict(schema=SCHEMA, **data)
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
