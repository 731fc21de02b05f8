from itertools import combinations_with_replacement, permutations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from heckeseries.glhecke import (
    LpGateFailure,
    lp,
    lp_gate,
    lp_oracle,
    omega_pi,
    omega_t,
    phi,
    phi_quotient,
    pi_label,
    pi_product,
    primitive_tuples,
    scalar_shift,
)
from heckeseries.golden import OMEGA_CORRECTED_4, OMEGA_EXAMPLES_4, parse_sym
from heckeseries.kernel import LaurentP, RatFnP, SymPoly, UsageError

P = LaurentP((0, 1))


def test_phi():
    assert phi(0, 5) == RatFnP.const(1)
    assert phi(3, 2) == RatFnP.const(1 * 3 * 7)
    assert phi_quotient(2, 1, 1) == P + 1
    assert phi_quotient(4, 2, 2) == P ** 4 + P ** 3 + 2 * P ** 2 + P + 1
    with pytest.raises(UsageError):
        phi(-1, 2)


def test_lp_oracle_examples():
    # symmetric 2x2 over F_2: 1 zero, 3 of rank one, 4 invertible
    assert lp_oracle(2, 2) == {0: 1, 1: 3, 2: 4}
    assert lp_oracle(3, 2) == {0: 1, 1: 8, 2: 18}
    assert lp_oracle(2, 3) == {0: 1, 1: 7, 2: 28, 3: 28}
    assert lp_oracle(5, 0) == {0: 1}


def test_lp_oracle_budget_refusal():
    with pytest.raises(ValueError):
        lp_oracle(5, 4, budget=1000)
    with pytest.raises(UsageError):
        lp_oracle(4, 2)


def test_lp_closed_form():
    lp_gate()
    assert lp(0, 3) == LaurentP.const(1)
    assert lp(1, 2) == P ** 2 - 1
    assert lp(2, 2) == P ** 3 - P ** 2
    for a in range(5):
        assert sum((lp(r, a) for r in range(a + 1)), LaurentP()) == P ** (a * (a + 1) // 2)
    with pytest.raises(UsageError):
        lp(0, 5)
    with pytest.raises(UsageError):
        lp(3, 2)
    assert issubclass(LpGateFailure, AssertionError)


def test_primitive_tuples():
    assert len(primitive_tuples(4, 14)) == 680
    assert primitive_tuples(2, 2) == [(0, 0), (0, 1), (0, 2)]
    assert all(d[0] == 0 and list(d) == sorted(d) for d in primitive_tuples(3, 4))


def test_omega_printed_examples():
    for d, (text, prov) in OMEGA_EXAMPLES_4.items():
        want = parse_sym(OMEGA_CORRECTED_4[d] if prov == "misprint" else text, 4)
        assert omega_t(d) == want, d


def test_omega_small():
    assert omega_t((0,)) == SymPoly.one(1)
    assert omega_t((3,)) == SymPoly(1, {(3,): LaurentP.mono(1, -3)})
    assert omega_t((0, 1)) == SymPoly(2, {(1, 0): LaurentP.mono(1, -1)})
    with pytest.raises(UsageError):
        omega_t((1, 0))


# Independent oracle: omega(t(p^d)) = p^(-sum (n+1-i) d_i) P_lambda(x; 1/p),
# with P the Hall-Littlewood polynomial built from its symmetrisation formula.

def _hall_littlewood(lam, t, xs):
    n = len(xs)
    total = 0
    for w in permutations(range(n)):
        y = [xs[i] for i in w]
        term = sympy.Mul(*[y[i] ** lam[i] for i in range(n)])
        for i in range(n):
            for j in range(i + 1, n):
                term *= (y[i] - t * y[j]) / (y[i] - y[j])
        total += term
    v = 1
    for m in set(lam):
        k = lam.count(m)
        for j in range(1, k + 1):
            v *= (1 - t ** j) / (1 - t)
    return sympy.factor(sympy.cancel(total / v))


def _to_sympy(s, xs, psym):
    out = 0
    for part, c in s.terms.items():
        coeff = sum(v * psym ** e for e, v in c.terms())
        for e in set(permutations(part)):
            out += coeff * sympy.Mul(*[x ** k for x, k in zip(xs, e)])
    return out


@pytest.mark.parametrize("n,bound", [(2, 3), (3, 2)])
def test_omega_matches_hall_littlewood(n, bound):
    xs = sympy.symbols("x1:%d" % (n + 1))
    psym = sympy.Symbol("p")
    for d in combinations_with_replacement(range(bound + 1), n):
        lam = list(reversed(d))
        weight = psym ** (-sum((n - i) * v for i, v in enumerate(d)))
        want = weight * _hall_littlewood(lam, 1 / psym, xs)
        got = _to_sympy(omega_t(d), xs, psym)
        assert sympy.simplify(got - want) == 0, d


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=2, max_size=3), st.integers(0, 3))
def test_scalar_shift(d, c):
    d = tuple(sorted(d))
    base = tuple(v - d[0] for v in d)
    shifted = tuple(v + c for v in base)
    assert omega_t(shifted) == scalar_shift(omega_t(base), c)


def test_pi_product_examples():
    prod = pi_product(1, 1, 2)
    assert prod == [(P + 1, pi_label(2, 2, 0)), (LaurentP.const(1), pi_label(2, 0, 1))]
    assert pi_label(4, 1, 2).delta == (0, 1, 2, 2)
    with pytest.raises(UsageError):
        pi_product(0, 1, 2)


@pytest.mark.parametrize("n", [2, 3])
def test_omega_homomorphism(n):
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            lhs = omega_pi(pi_label(n, i, 0)) * omega_pi(pi_label(n, j, 0))
            rhs = SymPoly.zero(n)
            for c, lbl in pi_product(i, j, n):
                rhs = rhs + omega_pi(lbl).scale(c)
            assert lhs == rhs
