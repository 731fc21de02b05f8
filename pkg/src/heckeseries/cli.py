"""Command-line driver.

    heckeseries omega --n 4 --delta 0,0,1,1
    heckeseries theorem --n 3 --out results/n3 --cache cache
    heckeseries verify --check golden-2 --check lp-oracle

Progress goes to stderr; stdout carries results only.  Exit codes: 0 on
success, 1 when a check or a solve fails, 2 on usage errors.  Each of
--cache, --jobs, --degree, --format and --out falls back to the environment
variable HECKESERIES_<NAME> when the flag is absent.
"""
import argparse
import json
import logging
import os
import sys

from .glhecke import LpGateFailure, erratum_note, omega_t
from .inversion import InversionError
from .kernel import KernelError, UsageError

log = logging.getLogger("heckeseries")

CHECK_IDS = (
    "golden-1",
    "golden-2",
    "golden-3",
    "golden-4",
    "omega-hom",
    "lp-oracle",
    "functional-eq",
    "denom-symmetry",
    "satake",
    "genus-reduction",
    "series-crosscheck",
    "generator-images",
    "omega-examples",
    "e3-image",
)

ENV_PREFIX = "HECKESERIES_"


def _env(args, name, default=None, cast=str):
    """Flag value if given, else the environment, else ``default``."""
    v = getattr(args, name, None)
    if v is not None:
        return v
    raw = os.environ.get(ENV_PREFIX + name.upper())
    if raw is None or raw == "":
        return default
    try:
        return cast(raw)
    except ValueError:
        raise UsageError("bad value %r for %s%s" % (raw, ENV_PREFIX, name.upper()))


def _parse_delta(text):
    try:
        d = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError("delta must be comma-separated integers, got %r" % text)
    return d


# ---------------------------------------------------------------------------


def cmd_omega(args, out):
    d = _parse_delta(args.delta)
    if len(d) != args.n:
        raise UsageError("delta has %d entries, genus is %d" % (len(d), args.n))
    if any(v < 0 for v in d) or list(d) != sorted(d):
        raise UsageError("delta must be non-decreasing and non-negative, got %s" % args.delta)
    value = omega_t(d)
    note = erratum_note(d)
    fmt = _env(args, "format", "text")
    if fmt == "json":
        body = {
            "n": args.n,
            "delta": list(d),
            "terms": [{"part": list(k), "p": {"min": c.lo, "coeffs": list(c.c)}} for k, c in value.sorted_terms()],
        }
        if note:
            body["erratum"] = note
        out.write(json.dumps(body, indent=1) + "\n")
    elif fmt == "canonical":
        out.write(value.to_text())
    elif fmt == "text":
        out.write(value.pretty() + "\n")
        if note:
            out.write("erratum: %s\n" % note)
    else:
        raise UsageError("unknown format %r" % fmt)
    return 0


def _run(n, args):
    from .pipeline import run_theorem

    return run_theorem(
        n,
        degree=_env(args, "degree", None, int),
        cache=_env(args, "cache", None),
        jobs=_env(args, "jobs", 1, int),
    )


def cmd_theorem(args, out):
    from .spseries import generator_names
    from .pipeline import write_result

    fmt = _env(args, "format", "text")
    if fmt not in ("text", "json", "both"):
        raise UsageError("unknown format %r" % fmt)
    jobs = _env(args, "jobs", 1, int)
    if jobs < 1:
        raise UsageError("--jobs must be positive")
    try:
        result = _run(args.n, args)
    except InversionError as exc:
        log.error("solve failed: %s", exc)
        return 1
    dest = _env(args, "out", None)
    if dest:
        formats = ("text", "json") if fmt == "both" else (fmt,)
        for path in write_result(result, dest, formats):
            log.info("wrote %s", path)
    names = generator_names(args.n)
    out.write("# genus %d; generators %s\n" % (args.n, ", ".join(names)))
    for label, polys in (("e", result.E), ("f", result.F)):
        for k, h in enumerate(polys):
            out.write("%s_%d = %s\n" % (label, k, h.pretty()))
    return 0


def cmd_verify(args, out):
    from . import verify as V

    ids = []
    for item in args.check or ["all"]:
        ids.extend(v for v in item.split(",") if v)
    if "all" in ids:
        ids = list(CHECK_IDS)
    bad = [i for i in ids if i not in CHECK_IDS]
    if bad:
        raise UsageError("unknown check id %s; valid ids: %s" % (", ".join(bad), ", ".join(CHECK_IDS)))

    runs = {}

    def run(n):
        if n not in runs:
            log.info("computing genus %d", n)
            runs[n] = _run(n, args)
        return runs[n]

    reports = []
    for cid in ids:
        log.info("check %s", cid)
        if cid.startswith("golden-"):
            rep = V.check_golden_formulas(run(int(cid[-1])))
        elif cid == "omega-hom":
            rep = V.check_omega_hom()
        elif cid == "lp-oracle":
            rep = V.check_lp_oracle()
        elif cid == "functional-eq":
            rep = V.check_functional_equation(run(4).omega_E, 4)
            for n in (2, 3):
                low = V.check_functional_equation(run(n).omega_E, n)
                rep.notes.append("n=%d analogue (informational): %s" % (n, low.status))
        elif cid == "satake":
            rep = V.check_satake_specialization(run(4).omega_E, 4)
            low = V.check_satake_specialization(run(3).omega_E, 3)
            rep.notes.append("n=3 self-consistency (informational): %s" % low.status)
        elif cid == "denom-symmetry":
            rep = _first_failure("denom-symmetry", [V.check_denominator_symmetry(run(n)) for n in (1, 2, 3, 4)])
        elif cid == "genus-reduction":
            rep = _first_failure("genus-reduction", [V.check_genus_reduction(run(n), run(n - 1)) for n in (4, 3, 2)])
        elif cid == "series-crosscheck":
            rep = _first_failure("series-crosscheck", [V.check_series_crosscheck(run(n)) for n in (2, 3, 4)])
        elif cid == "generator-images":
            rep = V.check_generator_images()
        elif cid == "omega-examples":
            rep = V.check_omega_examples()
        elif cid == "e3-image":
            rep = V.check_e3_image(run(4).omega_E)
        reports.append(rep)

    if _env(args, "format", "text") == "json":
        out.write(V.reports_json(reports))
    else:
        for rep in reports:
            out.write(rep.line() + "\n")
    return 0 if all(r.ok for r in reports) else 1


def _first_failure(check, reports):
    from .verify import CheckReport

    for r in reports:
        if not r.ok:
            return r
    notes = [n for r in reports for n in r.notes]
    status = "erratum-noted" if any(r.status == "erratum-noted" for r in reports) else "pass"
    return CheckReport(check, status, None, notes)


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="heckeseries", description="Exact Hecke series E(X)/F(X) for Sp_n.")
    p.add_argument("-q", "--quiet", action="store_true", help="no progress output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--cache", help="omega cache directory")
        sp.add_argument("--jobs", type=int, help="worker processes for the omega table")
        sp.add_argument("--degree", type=int, help="truncate E and F at this X-degree")
        sp.add_argument("--format", help="output format")

    o = sub.add_parser("omega", help="spherical image of a diagonal coset t(p^d)")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--delta", required=True, help="non-decreasing exponents, e.g. 0,0,1,1")
    o.add_argument("--format", help="text, canonical or json")
    o.set_defaults(func=cmd_omega)

    t = sub.add_parser("theorem", help="compute E and F for one genus")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--out", help="directory for result files and the manifest")
    common(t)
    t.set_defaults(func=cmd_theorem)

    v = sub.add_parser("verify", help="run checks; ids: %s, or all" % ", ".join(CHECK_IDS))
    v.add_argument("--check", action="append", help="check id (repeatable or comma-separated)")
    common(v)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        sys.stderr.write("usage error: %s\n" % exc)
        return 2
    if not logging.getLogger().handlers:
        logging.basicConfig(stream=sys.stderr, format="%(message)s")
    log.setLevel(logging.WARNING if args.quiet else logging.INFO)
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write("usage error: %s\n" % exc)
        return 2
    except (KernelError, InversionError, LpGateFailure) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
