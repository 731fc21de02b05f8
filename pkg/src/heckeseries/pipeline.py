"""End-to-end computation of E(X), F(X) for one genus.

Stages: l_p gate, omega table (cached on disk, optionally parallel), the two
spherical-side series, then inversion coefficient by coefficient.
"""
import hashlib
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from .glhecke import lp_gate, omega_t, primitive_tuples, seed_omega
from .inversion import (
    InversionError,
    enumerate_monomials,
    invert_coefficient,
    invert_with_scalar,
    scalar_factor,
    series_to_json,
    series_to_text,
)
from .kernel import SymPoly, UsageError
from .spseries import e_bound, e_factor, f_image, numerator_sum_from_values

log = logging.getLogger("heckeseries")


# ---------------------------------------------------------------------------
# omega cache


class OmegaCache:
    """One file per primitive tuple: ``<root>/n<g>/d<d2>_..._<dn>.sym``.

    The file holds the canonical text followed by ``# sha256 <hex>``.
    """

    def __init__(self, root, n):
        self.root = root
        self.n = n
        self.dir = os.path.join(root, "n%d" % n)

    def path(self, d):
        return os.path.join(self.dir, "d%s.sym" % "_".join(str(v) for v in d[1:]))

    def load(self, d):
        path = self.path(d)
        try:
            with open(path) as fh:
                text = fh.read()
        except FileNotFoundError:
            return None
        body, sep, tail = text.rpartition("# sha256 ")
        digest = hashlib.sha256(body.encode()).hexdigest()
        if not sep or tail.strip() != digest:
            log.warning("cache entry %s fails its checksum; recomputing", path)
            return None
        try:
            return SymPoly.from_text(self.n, body)
        except Exception:  # malformed but checksummed by someone else
            log.warning("cache entry %s does not parse; recomputing", path)
            return None

    def store(self, d, value):
        os.makedirs(self.dir, exist_ok=True)
        body = value.to_text()
        text = body + "# sha256 %s\n" % hashlib.sha256(body.encode()).hexdigest()
        tmp = self.path(d) + ".tmp%d" % os.getpid()
        with open(tmp, "w") as fh:
            fh.write(text)
        os.replace(tmp, self.path(d))


def _omega_text(d):
    return omega_t(d).to_text()


def omega_table(n, bound, cache=None, jobs=1):
    """omega_t on every primitive tuple with d_n <= bound.

    Returns (values keyed by tuple, stats).  Worker results are collected in
    tuple order, so the table does not depend on ``jobs``.
    """
    tuples = primitive_tuples(n, bound)
    store = OmegaCache(cache, n) if cache else None
    values = {}
    missing = []
    for d in tuples:
        v = store.load(d) if store else None
        if v is None:
            missing.append(d)
        else:
            values[d] = v
            seed_omega(d, v)
    log.info("omega: %d tuples, %d from cache, %d to compute", len(tuples), len(values), len(missing))
    if missing and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            texts = list(pool.map(_omega_text, missing, chunksize=max(1, len(missing) // (4 * jobs))))
        for d, text in zip(missing, texts):
            v = SymPoly.from_text(n, text)
            seed_omega(d, v)
            values[d] = v
    else:
        for i, d in enumerate(missing):
            values[d] = omega_t(d)
            if (i + 1) % 100 == 0:
                log.info("omega: %d/%d", i + 1, len(missing))
    if store:
        for d in missing:
            store.store(d, values[d])
    return values, {"tuples": len(tuples), "cached": len(tuples) - len(missing), "computed": len(missing)}


# ---------------------------------------------------------------------------


@dataclass
class TheoremResult:
    n: int
    degree: int
    E: list
    F: list
    omega_E: object
    omega_F: object
    manifest: dict = field(default_factory=dict)


def _timed(timings, name):
    class _T:
        def __enter__(self):
            self.t = time.perf_counter()

        def __exit__(self, *exc):
            timings[name] = round(time.perf_counter() - self.t, 3)

    return _T()


def run_theorem(n, degree=None, cache=None, jobs=1, check_scalar_route=True):
    """Compute E and F for genus n through X^degree (default: full degrees)."""
    if n < 1:
        raise UsageError("genus must be positive")
    top = 2 ** n
    half = top // 2
    degree = top if degree is None else degree
    if degree < 0:
        raise UsageError("degree must be non-negative")
    eb = min(e_bound(n), degree)
    timings = {}
    counts = {}

    with _timed(timings, "lp_gate"):
        lp_gate(n)
    with _timed(timings, "omega"):
        values, stats = omega_table(n, eb, cache, jobs)
    counts["omega_evaluations"] = stats["tuples"]
    with _timed(timings, "omega_E"):
        num = numerator_sum_from_values(n, eb, values)
        omega_E = num * e_factor(n, eb)
    with _timed(timings, "omega_F"):
        omega_F = f_image(n).truncate(min(degree, top))

    E = []
    sizes = {}
    with _timed(timings, "invert_E"):
        for k in range(eb + 1):
            log.info("inverting e_%d", k)
            try:
                if k >= half and omega_E[k]:
                    h = invert_with_scalar(omega_E[k], k, n)
                else:
                    h = invert_coefficient(omega_E[k], k, n)
            except InversionError as exc:
                raise InversionError("e_%d: %s" % (k, exc)) from exc
            sizes["e%d" % k] = len(enumerate_monomials(n, k))
            E.append(h)
    F = []
    with _timed(timings, "invert_F"):
        for k in range(min(degree, top) + 1):
            if k <= half:
                log.info("inverting f_%d", k)
                try:
                    h = invert_coefficient(omega_F[k], k, n)
                except InversionError as exc:
                    raise InversionError("f_%d: %s" % (k, exc)) from exc
                sizes["f%d" % k] = len(enumerate_monomials(n, k))
            else:
                j = top - k
                h = F[j] * scalar_factor(n, half - j)
            F.append(h)
    counts["system_columns"] = sizes

    mid = half + 1
    if check_scalar_route and n >= 3 and mid <= eb and omega_E[mid]:
        with _timed(timings, "scalar_route_check"):
            direct = invert_coefficient(omega_E[mid], mid, n)
        if direct != E[mid]:
            raise InversionError("e_%d: direct solve disagrees with the scalar route" % mid)
        counts["scalar_route_checked"] = "e%d" % mid

    manifest = {
        "genus": n,
        "degree": degree,
        "numerator_bound": eb,
        "engine_version": __version__,
        "counts": counts,
        "timings": timings,
        "cache": {"dir": cache, "hits": stats["cached"], "jobs": jobs},
    }
    return TheoremResult(n, degree, E, F, omega_E, omega_F, manifest)


def run_id(manifest):
    """Digest of the manifest without timings and cache details; stable
    across identical runs whatever the cache state or worker count."""
    stable = {k: v for k, v in manifest.items() if k not in ("timings", "cache", "run", "files")}
    return hashlib.sha256(json.dumps(stable, sort_keys=True).encode()).hexdigest()[:16]


def write_result(result, out_dir, formats=("text", "json")):
    """Write E/F and the spherical series; returns the written paths."""
    os.makedirs(out_dir, exist_ok=True)
    rid = run_id(result.manifest)
    header = "# manifest manifest.json run %s\n" % rid
    written = []

    def put(name, text):
        path = os.path.join(out_dir, name)
        with open(path, "w") as fh:
            fh.write(text)
        written.append(path)

    if "text" in formats:
        put("E.txt", header + series_to_text(result.E))
        put("F.txt", header + series_to_text(result.F))
        put("omega_E.txt", header + result.omega_E.to_text())
        put("omega_F.txt", header + result.omega_F.to_text())
    if "json" in formats:
        for name, polys in (("E", result.E), ("F", result.F)):
            body = json.loads(series_to_json(polys))
            put(name + ".json", json.dumps({"manifest": "manifest.json", "run": rid, "series": body}, indent=1) + "\n")
    manifest = dict(result.manifest, run=rid, files=[os.path.basename(p) for p in written])
    put("manifest.json", json.dumps(manifest, indent=1, sort_keys=True) + "\n")
    return written
