import dataclasses
import json

import pytest

from heckeseries import verify as V
from heckeseries.inversion import HeckePoly
from heckeseries.kernel import ONE, LaurentP, SymPoly, UsageError


def test_report_requires_witness():
    with pytest.raises(ValueError):
        V.CheckReport("x", "fail")
    rep = V.CheckReport("x", "erratum-noted", notes=["a"])
    assert rep.ok
    assert json.loads(V.reports_json([rep])) == [{"check": "x", "status": "erratum-noted", "notes": ["a"]}]
    assert "witness: w" in V.CheckReport("x", "fail", "w").line()


def test_functional_transform_is_an_involution(runs):
    e = runs(4).omega_E
    for k in range(15):
        assert V.functional_transform(V.functional_transform(e[k], k, 4), 14 - k, 4) == e[k]


def test_functional_transform_middle_and_zero(runs):
    e7 = runs(4).omega_E[7]
    assert e7 and V.functional_transform(e7, 7, 4) == e7
    assert V.functional_transform(SymPoly.zero(4), 3, 4) == SymPoly.zero(4)
    with pytest.raises(UsageError):
        V.functional_transform(SymPoly.sym(8, 0, 0, 0), 0, 4)
    with pytest.raises(UsageError):
        V.functional_transform(SymPoly.zero(4), 15, 4)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_functional_equation_all_genera(runs, n):
    rep = V.check_functional_equation(runs(n).omega_E, n)
    assert rep.status == "pass", rep.line()
    literal = rep.notes[0]
    assert ("holds" in literal) == (n < 4)


def test_functional_equation_negative_control(runs):
    bad = V.perturb(runs(4).omega_E, 5, (1, 1, 0, 0))
    rep = V.check_functional_equation(bad, 4)
    assert rep.status == "fail"
    assert rep.witness.startswith("k=")


def test_satake_product_degree():
    poly = V.satake_product_4()
    assert len(poly) == 15
    assert poly[0] == ONE and poly[14]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_satake(runs, n):
    rep = V.check_satake_specialization(runs(n).omega_E, n)
    assert rep.status == "pass", rep.line()


def test_satake_negative_control(runs):
    bad = V.perturb(runs(4).omega_E, 2, (1, 0, 0, 0), LaurentP.mono(1, 3))
    assert V.check_satake_specialization(bad, 4).status == "fail"


def test_genus_reduce_hecke():
    t, t1, t2, scalar = (HeckePoly.generator(3, i) for i in range(4))
    h = t * t + t2 * LaurentP.mono(2, 1) + scalar * t1
    want = HeckePoly.generator(2, 0, 2) + HeckePoly.generator(2, 2) * LaurentP.mono(2, 1)
    assert V.genus_reduce_hecke(h) == want
    with pytest.raises(UsageError):
        V.genus_reduce_hecke(HeckePoly.one(1))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_genus_reduction(runs, n):
    rep = V.check_genus_reduction(runs(n), runs(n - 1))
    assert rep.status == "pass", rep.line()


def test_genus_reduction_negative_control(runs):
    r4 = runs(4)
    f = list(r4.F)
    f[8] = f[8] + HeckePoly.generator(4, 0, 8)
    rep = V.check_genus_reduction(dataclasses.replace(r4, F=f), runs(3))
    assert rep.status == "fail" and "F X^8" in rep.witness
    with pytest.raises(UsageError):
        V.check_genus_reduction(r4, runs(2))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_denominator_symmetry(runs, n):
    assert V.check_denominator_symmetry(runs(n)).status == "pass"


def test_denominator_symmetry_negative_control(runs):
    r3 = runs(3)
    f = list(r3.F)
    f[6] = f[6] * LaurentP.mono(1, 1)
    rep = V.check_denominator_symmetry(dataclasses.replace(r3, F=f))
    assert rep.status == "fail" and rep.witness.startswith("f_6")


def test_golden_negative_control(runs):
    r2 = runs(2)
    e = list(r2.E)
    e[2] = e[2] + HeckePoly.generator(2, 1)
    rep = V.check_golden_formulas(dataclasses.replace(r2, E=e))
    assert rep.status == "fail" and "E X^2" in rep.witness


def test_golden_statuses(runs):
    assert V.check_golden_formulas(runs(2)).status == "pass"
    assert V.check_golden_formulas(runs(3)).status == "erratum-noted"


def test_series_crosscheck_small(runs):
    assert V.check_series_crosscheck(runs(2), kmax=4).status == "pass"


def test_first_difference():
    a = SymPoly(2, {(1, 0): 1, (0, 0): 2})
    b = SymPoly(2, {(1, 0): 1})
    assert V.first_difference(a, a) is None
    assert V.first_difference(a, b).startswith("sym[0, 0]")
