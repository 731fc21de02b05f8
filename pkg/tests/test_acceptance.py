"""Acceptance criteria.  Each test carries a ``criterion`` marker and the
session prints one PASS/FAIL line per criterion (see conftest.py)."""
import filecmp
import json
import os
import subprocess
import sys
import time

import pytest

from heckeseries import verify as V
from heckeseries.glhecke import erratum_note, omega_t
from heckeseries.golden import ERRATA, expanded, golden, parse_hecke, parse_sym
from heckeseries.inversion import HeckePoly, invert_coefficient, scalar_factor
from heckeseries.kernel import LaurentP, SymPoly

criterion = pytest.mark.criterion


def _assert_ok(report):
    assert report.ok, report.line()


@criterion(1, "genus-1 golden, < 1 s")
def test_genus1_golden(runs):
    r = runs(1)
    assert r.E == [HeckePoly.one(1)]
    assert r.F == [parse_hecke(s, 1) for s in ("1", "-T", "p P")]
    _assert_ok(V.check_golden_formulas(r))
    assert runs.seconds[1] < 1.0


@criterion(2, "genus-2 golden, < 10 s")
def test_genus2_golden(runs):
    r = runs(2)
    assert r.E == [parse_hecke(s, 2) for s in ("1", "0", "-p^2 P")]
    _assert_ok(V.check_golden_formulas(r))
    assert len(r.F) == 5
    assert runs.seconds[2] < 10.0


@criterion(3, "genus-3 golden (E through X^6, F through X^8), < 5 min")
def test_genus3_golden(runs):
    r = runs(3)
    rep = V.check_golden_formulas(r)
    _assert_ok(rep)
    ge, gf = golden(3)
    assert r.E == ge
    assert r.F[:7] == gf[:7]
    # f_7, f_8 from f_i = f_{8-i} (p^6 [p])^{i-4}
    for i in (7, 8):
        assert r.F[i] == r.F[8 - i] * scalar_factor(3, i - 4)
    # the one printed coefficient that differs is a recorded misprint
    assert rep.status == "erratum-noted"
    assert set(k for (g, _, k) in ERRATA if g == 3) == {4}
    assert runs.seconds[3] < 300.0


@criterion(4, "genus-4 theorem: e_0..e_14, f_0..f_16 exact, <= 2 h")
def test_genus4_theorem(runs):
    r = runs(4)
    ge, gf = golden(4)
    be, bf = expanded(4)
    assert len(r.E) == 15 and len(r.F) == 17
    for k in range(15):
        assert r.E[k] == ge[k] == be[k], "e_%d" % k
    for k in range(9):
        assert r.F[k] == gf[k] == bf[k], "f_%d" % k
    for j in range(1, 9):
        assert r.F[8 + j] == r.F[8 - j] * LaurentP.mono(1, 10 * j) * HeckePoly.generator(4, 4, j)
    _assert_ok(V.check_golden_formulas(r))
    assert runs.seconds[4] < 2 * 3600


@criterion(5, "generator images for n=4, < 5 s")
def test_generator_images():
    t = time.perf_counter()
    _assert_ok(V.check_generator_images())
    assert time.perf_counter() - t < 5.0


@criterion(6, "omega examples with the t(1,p,p,p) erratum")
def test_omega_erratum():
    rep = V.check_omega_examples()
    assert rep.status == "erratum-noted", rep.line()
    assert omega_t((0, 1, 1, 1)) == SymPoly(4, {(1, 1, 1, 0): LaurentP.mono(1, -6)})
    note = erratum_note((0, 1, 1, 1))
    assert note and "p^-3" in note
    assert erratum_note((0, 0, 1, 1)) is None


@criterion(7, "l_p closed form against the enumeration oracle, < 1 min")
def test_lp_oracle_gate():
    t = time.perf_counter()
    _assert_ok(V.check_lp_oracle(primes=(2, 3, 5), max_size=4))
    assert time.perf_counter() - t < 60.0


@criterion(8, "omega(pi_i pi_j) = omega(pi_i) omega(pi_j) for n <= 4, < 1 min")
def test_homomorphism():
    t = time.perf_counter()
    _assert_ok(V.check_omega_hom(max_n=4))
    assert time.perf_counter() - t < 60.0


@criterion(9, "series cross-check through X^3 for n = 2, 3, 4, < 10 min")
def test_series_crosscheck(runs):
    for n in (2, 3, 4):
        t = time.perf_counter()
        _assert_ok(V.check_series_crosscheck(runs(n), kmax=3))
        assert time.perf_counter() - t < 600.0


@criterion(10, "functional equation, Satake specialisation, denominator symmetry, genus reduction")
def test_structural_checks(runs):
    r4, r3 = runs(4), runs(3)
    for check in (
        lambda: V.check_functional_equation(r4.omega_E, 4),
        lambda: V.check_satake_specialization(r4.omega_E, 4),
        lambda: V.check_denominator_symmetry(r4),
        lambda: V.check_genus_reduction(r4, r3, sphere_bound=6),
    ):
        t = time.perf_counter()
        _assert_ok(check())
        assert time.perf_counter() - t < 600.0


@criterion(11, "inversion of Omega(e_3): only T T_3 and T [p] survive")
def test_e3_inversion(runs):
    target = runs(4).omega_E[3]
    _assert_ok(V.check_e3_image(runs(4).omega_E))
    h = invert_coefficient(target, 3, 4)
    p = LaurentP((0, 1))
    assert h.terms == {
        (1, 0, 0, 1, 0): p ** 4 * (p + 1),
        (1, 0, 0, 0, 1): p ** 4 * (p + 1) * (p ** 2 + 1) * (p ** 3 - p ** 2 + 1),
    }
    assert (3, 0, 0, 0, 0) not in h.terms
    assert h == parse_hecke("p^4 (p+1) T (T3 + (p^2+1)(p^3-p^2+1) P)", 4)
    assert target == parse_sym(V.E3_IMAGE_4, 4)


def _cli(tmp, *args):
    env = dict(os.environ)
    for k in list(env):
        if k.startswith("HECKESERIES_"):
            del env[k]
    cmd = [sys.executable, "-m", "heckeseries", "-q", *args]
    subprocess.run(cmd, check=True, env=env, cwd=tmp, stdout=subprocess.DEVNULL)


def _same_tree(a, b):
    names = sorted(f for f in os.listdir(a) if f != "manifest.json")
    assert names == sorted(f for f in os.listdir(b) if f != "manifest.json")
    match, mismatch, errors = filecmp.cmpfiles(a, b, names, shallow=False)
    assert not mismatch and not errors, mismatch + errors
    ma, mb = (json.loads((x / "manifest.json").read_text()) for x in (a, b))
    for m in (ma, mb):
        del m["timings"], m["cache"]
    assert ma == mb


@criterion(12, "determinism: repeated runs and --jobs 1 vs --jobs 8 are byte-identical")
def test_determinism(tmp_path):
    t = str(tmp_path)
    _cli(t, "theorem", "--n", "3", "--out", "n3a", "--format", "both")
    _cli(t, "theorem", "--n", "3", "--out", "n3b", "--format", "both")
    _same_tree(tmp_path / "n3a", tmp_path / "n3b")
    _cli(t, "theorem", "--n", "4", "--degree", "6", "--jobs", "1", "--out", "j1", "--format", "both")
    _cli(t, "theorem", "--n", "4", "--degree", "6", "--jobs", "8", "--cache", "c", "--out", "j8", "--format", "both")
    _cli(t, "theorem", "--n", "4", "--degree", "6", "--jobs", "8", "--cache", "c", "--out", "warm", "--format", "both")
    _same_tree(tmp_path / "j1", tmp_path / "j8")
    _same_tree(tmp_path / "j1", tmp_path / "warm")
    assert len(os.listdir(tmp_path / "j1")) == 7
