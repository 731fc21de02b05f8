import json

import pytest

from heckeseries.golden import golden
from heckeseries.inversion import (
    HeckePoly,
    LinearDependence,
    NotDivisible,
    NotInImage,
    divide_out_scalar,
    enumerate_monomials,
    hecke_image,
    invert_coefficient,
    invert_with_scalar,
    monomial_image,
    scalar_factor,
    scalar_image,
    series_from_text,
    series_to_json,
    series_to_text,
    solve_exact,
)
from heckeseries.kernel import LaurentP, RatFnP, SymPoly, UsageError
from heckeseries.spseries import e_image, f_image

P = LaurentP((0, 1))


def test_enumerate_monomials():
    m = enumerate_monomials(4, 3)
    assert m[0] == (3, 0, 0, 0, 0)
    assert set(m) == {(3, 0, 0, 0, 0), (1, 1, 0, 0, 0), (1, 0, 1, 0, 0), (1, 0, 0, 1, 0), (1, 0, 0, 0, 1)}
    assert enumerate_monomials(2, 2) == [(2, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert enumerate_monomials(3, 0) == [(0, 0, 0, 0)]
    assert enumerate_monomials(2, 1) == [(1, 0, 0)]


def test_monomial_image():
    assert monomial_image((0, 0, 1)) == SymPoly(2, {(1, 1): LaurentP.mono(1, -3)})
    t = SymPoly(2, {(1, 1): 1, (1, 0): 1, (0, 0): 1})
    assert monomial_image((2, 0, 0)) == t * t
    assert monomial_image((1, 0, 1)) == t * monomial_image((0, 0, 1))


def test_solve_exact_one_by_one():
    k = P ** 3 + 2
    sol = solve_exact([[P ** 2 - 1]], [(P ** 2 - 1) * k])
    assert sol == [RatFnP.from_laurent(k)]


def test_solve_exact_square():
    # [[1, p], [p, 1]] K = [1 + p^2, 2p] -> K = (1, p)
    sol = solve_exact([[1, P], [P, 1]], [1 + P ** 2, 2 * P])
    assert [s.to_laurent() for s in sol] == [LaurentP.const(1), P]


def test_solve_exact_non_laurent_solution():
    sol = solve_exact([[P - 1]], [LaurentP.const(1)])
    assert not sol[0].is_laurent()


def test_solve_exact_errors():
    with pytest.raises(LinearDependence):
        solve_exact([[1, 1], [1, 1]], [1, 1])
    with pytest.raises(NotInImage):
        solve_exact([[1], [1]], [1, 2])
    with pytest.raises(UsageError):
        solve_exact([[1, 1]], [1])


def test_invert_coefficient_round_trip():
    h = HeckePoly.generator(3, 0, 2) * P + HeckePoly.generator(3, 2) * (P ** 4 - 1)
    assert invert_coefficient(hecke_image(h), 2, 3) == h
    assert invert_coefficient(SymPoly.zero(3), 4, 3) == HeckePoly(3)


def test_invert_coefficient_not_in_image():
    # x_1 + x_2 alone is not the image of anything of x_0-degree 1 in genus 2
    with pytest.raises(NotInImage):
        invert_coefficient(SymPoly.sym(1, 0), 1, 2)
    with pytest.raises(UsageError):
        invert_coefficient(SymPoly.sym(1, 0), 1, 3)


def test_divide_out_scalar():
    s = scalar_image(2)
    target = s * s * SymPoly(2, {(1, 0): P})
    assert divide_out_scalar(target, 2) == SymPoly(2, {(1, 0): P})
    with pytest.raises(NotDivisible):
        divide_out_scalar(SymPoly.sym(1, 0), 1)


def test_scalar_route_agrees_with_direct():
    target = e_image(3).coeffs[5]
    assert invert_with_scalar(target, 5, 3) == invert_coefficient(target, 5, 3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_invert_reference_series(n):
    ge, gf = golden(n)
    e, f = e_image(n), f_image(n)
    for k in range(len(ge)):
        assert invert_coefficient(e.coeffs[k], k, n) == ge[k]
    for k in range(2 ** (n - 1) + 1):
        assert invert_coefficient(f.coeffs[k], k, n) == gf[k]


def test_scalar_factor():
    assert scalar_factor(4, 1) == HeckePoly.generator(4, 4) * LaurentP.mono(1, 10)
    assert scalar_factor(2, 0) == HeckePoly.one(2)


def test_series_formats():
    polys = golden(3)[0]
    text = series_to_text(polys)
    assert series_from_text(3, text) == polys
    assert series_from_text(3, "# header\n" + text) == polys
    body = json.loads(series_to_json(polys))
    assert isinstance(body, (list, dict))
    for h in polys:
        assert HeckePoly.from_text(3, h.to_text()) == h
