"""The GL_n side: phi-functions, symmetric-matrix rank counts, and the
spherical image omega of diagonal double cosets t(p^d1, ..., p^dn)."""
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from typing import NamedTuple

import numpy as np
from numba import njit

from .kernel import (
    InexactDivision,
    LaurentP,
    MultiPoly,
    ONE,
    RatFnP,
    SymPoly,
    UsageError,
    multi_divexact,
    sym_from_multi,
    vandermonde,
)
from .kernel import zpoly

# ---------------------------------------------------------------------------
# delta tuples


def check_delta(d):
    d = tuple(int(v) for v in d)
    if any(v < 0 for v in d) or any(d[i] > d[i + 1] for i in range(len(d) - 1)):
        raise UsageError("delta must be non-decreasing and non-negative: %r" % (d,))
    return d


def is_primitive(d):
    return d[0] == 0


def multiplicities(d):
    """Run lengths (k_1, ..., k_t) of the distinct values of a sorted tuple."""
    out = []
    for i, v in enumerate(d):
        if i and v == d[i - 1]:
            out[-1] += 1
        else:
            out.append(1)
    return tuple(out)


def primitive_tuples(n, bound):
    """All (0, d2, ..., dn) with 0 <= d2 <= ... <= dn <= bound, ordered by dn
    then lexicographically."""
    tails = combinations_with_replacement(range(bound + 1), n - 1)
    return sorted(((0,) + t for t in tails), key=lambda d: (d[-1], d))


class PiLabel(NamedTuple):
    """The double coset diag(1^(n-alpha-beta), p^alpha, (p^2)^beta)."""

    n: int
    alpha: int
    beta: int

    @property
    def delta(self):
        return (0,) * (self.n - self.alpha - self.beta) + (1,) * self.alpha + (2,) * self.beta


def pi_label(n, alpha, beta):
    if alpha < 0 or beta < 0 or alpha + beta > n:
        raise UsageError("invalid pi label (%d, %d) for n=%d" % (alpha, beta, n))
    return PiLabel(n, alpha, beta)


# ---------------------------------------------------------------------------
# phi and l_p


def phi(i, at):
    """(x - 1)(x^2 - 1)...(x^i - 1) evaluated exactly at ``at``."""
    if i < 0:
        raise UsageError("phi index must be non-negative")
    if isinstance(at, int):
        out = 1
        for j in range(1, i + 1):
            out *= at ** j - 1
        return RatFnP.const(out)
    if isinstance(at, LaurentP):
        at = RatFnP.from_laurent(at)
    out = RatFnP.const(1)
    for j in range(1, i + 1):
        out = out * (at ** j - 1)
    return out


_P = RatFnP.p()


def phi_quotient(top, *bottom):
    """phi_top(p) / prod phi_b(p) as a LaurentP; the division must be exact."""
    q = phi(top, _P)
    for b in bottom:
        q = q / phi(b, _P)
    if not q.is_polynomial():
        raise InexactDivision("phi quotient %d / %r is not a polynomial" % (top, bottom))
    return q.to_laurent()


ORACLE_BUDGET = 10 ** 7


@njit(cache=True)
def _rank_counts(p, a):  # pragma: no cover - compiled
    free = a * (a + 1) // 2
    total = p ** free
    counts = np.zeros(a + 1, dtype=np.int64)
    m = np.zeros((a, a), dtype=np.int64)
    inv = np.zeros(p, dtype=np.int64)
    for v in range(1, p):
        inv[v] = 1
        for _ in range(p - 2):
            inv[v] = inv[v] * v % p
    for idx in range(total):
        rest = idx
        for i in range(a):
            for j in range(i, a):
                d = rest % p
                rest //= p
                m[i, j] = d
                m[j, i] = d
        rank = 0
        for c in range(a):
            piv = -1
            for r in range(rank, a):
                if m[r, c] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            for k in range(a):
                t = m[rank, k]
                m[rank, k] = m[piv, k]
                m[piv, k] = t
            s = inv[m[rank, c]]
            for k in range(a):
                m[rank, k] = m[rank, k] * s % p
            for r in range(a):
                if r != rank and m[r, c] != 0:
                    f = m[r, c]
                    for k in range(a):
                        m[r, k] = (m[r, k] - f * m[rank, k]) % p
            rank += 1
        counts[rank] += 1
    return counts


def lp_oracle(p, a, budget=ORACLE_BUDGET):
    """Count symmetric a x a matrices over F_p by rank, by enumeration and
    Gaussian elimination mod p.

    Returns a dict rank -> count.  Refuses (ValueError) when p**(a(a+1)/2)
    exceeds ``budget``; there is no sampling fallback.
    """
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise UsageError("p must be prime, got %r" % p)
    total = p ** (a * (a + 1) // 2)
    if total > budget:
        raise ValueError("enumeration of %d matrices exceeds budget %d" % (total, budget))
    counts = _rank_counts(p, a)
    return {r: int(c) for r, c in enumerate(counts)}


def _lp_diagonal(r):
    # p^(r(r+1)/2) * prod_{odd j <= r} (1 - p^-j)
    out = LaurentP.mono(1, r * (r + 1) // 2)
    for j in range(1, r + 1, 2):
        out = out * (ONE - LaurentP.mono(1, -j))
    if out.lo < 0:
        raise InexactDivision("l_p(%d,%d) is not a polynomial" % (r, r))
    return out


class LpGateFailure(AssertionError):
    pass


GATE_PRIMES = (2, 3, 5)
GATE_MAX_SIZE = 4
_gated_sizes = set()


def _gate_size(a):
    if a in _gated_sizes:
        return
    counts = {p0: lp_oracle(p0, a) for p0 in GATE_PRIMES}
    for p0 in GATE_PRIMES:
        for r in range(a + 1):
            v = _lp_formula(r, a)(p0)
            if v != counts[p0][r]:
                raise LpGateFailure(
                    "l_p(%d,%d) at p=%d: closed form %s, oracle %d" % (r, a, p0, v, counts[p0][r])
                )
    _gated_sizes.add(a)


def lp_gate(max_size=GATE_MAX_SIZE):
    """Compare the closed form with the enumeration oracle for every matrix
    size up to ``max_size``.  Each size is checked once per process, and
    ``lp`` refuses to return a value for a size that has not passed."""
    for a in range(min(max_size, GATE_MAX_SIZE) + 1):
        _gate_size(a)


@lru_cache(maxsize=None)
def _lp_formula(r, a):
    return _lp_diagonal(r) * phi_quotient(a, r, a - r)


def lp(r, a):
    """Number of symmetric a x a matrices of rank r over F_p, as a polynomial in p."""
    if r < 0 or r > a:
        raise UsageError("need 0 <= r <= a, got r=%d a=%d" % (r, a))
    if a > GATE_MAX_SIZE:
        raise UsageError("l_p only validated for a <= %d" % GATE_MAX_SIZE)
    _gate_size(a)
    return _lp_formula(r, a)


# ---------------------------------------------------------------------------
# omega of t(p^delta)

# Packed p-polynomials: sum c_k p^k stored as the int sum c_k * 2**(64 k).
# Only additions and multiplications by small ints happen on packed values.
_BITS = 64
_BASE = 1 << _BITS
_HALF = _BASE >> 1


def _unpack(v):
    out = []
    while v:
        d = v & (_BASE - 1)
        if d >= _HALF:
            d -= _BASE
        if abs(d) >= _HALF >> 8:
            raise OverflowError("packed coefficient too large to decode safely")
        out.append(d)
        v = (v - d) >> _BITS
    return tuple(out)


@lru_cache(maxsize=None)
def _kernel_numerator(n):
    """prod_{i<j} (p x_j - x_i), packed coefficients."""
    out = MultiPoly.constant(n, 1)
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (MultiPoly.variable(n, j, _BASE) - MultiPoly.variable(n, i, 1))
    return out


@lru_cache(maxsize=None)
def _signed_perms(n):
    out = []
    for w in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
        out.append((w, -1 if inv % 2 else 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _vandermonde(n):
    return vandermonde(n)


def antisymmetrized_numerator(d):
    """sum_w sgn(w) * w(x^d * prod_{i<j}(p x_j - x_i)), packed in p.

    Returns (MultiPoly, number_of_permutation_terms).
    """
    n = len(d)
    g = _kernel_numerator(n)
    shifted = [(tuple(a + b for a, b in zip(e, d)), c) for e, c in g.terms.items()]
    acc = {}
    count = 0
    for w, sgn in _signed_perms(n):
        count += 1
        for e, c in shifted:
            f = [0] * n
            for i, a in enumerate(e):
                f[w[i]] = a
            f = tuple(f)
            v = acc.get(f, 0) + sgn * c
            if v:
                acc[f] = v
            else:
                acc.pop(f, None)
    return MultiPoly._raw(n, acc), count


def _inverse_normaliser(d):
    """1 / P^(k)(1/p) as a RatFnP, P^(k)(x) = prod phi_ki(x) / phi_1(x)^n."""
    inv_p = RatFnP((1,), (0, 1))
    n = len(d)
    num = phi(1, inv_p) ** n
    den = RatFnP.const(1)
    for k in multiplicities(d):
        den = den * phi(k, inv_p)
    return num / den


def _omega_primitive(d):
    n = len(d)
    num, count = antisymmetrized_numerator(d)
    assert count == _factorial(n)
    quotient = multi_divexact(num, _vandermonde(n))
    sym = sym_from_multi(quotient, convert=lambda v: v)
    scal = _inverse_normaliser(d)
    # p^{-sum (n-i) d_i} * p^{-n(n-1)/2} from c(x), then x_i -> x_i / p
    shift = -sum((n - 1 - i) * v for i, v in enumerate(d)) - n * (n - 1) // 2 - sum(d)
    snum = LaurentP(scal.num)
    sden = LaurentP(scal.den)
    out = {}
    for part, packed in sym.terms.items():
        c = LaurentP(_unpack(packed)) * snum
        try:
            c = c.divexact(sden)
        except InexactDivision as exc:
            raise InexactDivision("residual denominator in omega%r at %r" % (d, part)) from exc
        out[part] = c.shift(shift)
    return SymPoly(n, out)


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


_omega_memo = {}


def omega_t(d):
    """Spherical image of t(p^d1, ..., p^dn) for a non-decreasing tuple d.

    Primitive tuples (d1 = 0) are computed and memoised; others use
    omega(t(p^(d+c))) = (p^(-n(n+1)/2) x_1...x_n)^c omega(t(p^d)).
    """
    d = check_delta(d)
    c = d[0]
    if c:
        base = omega_t(tuple(v - c for v in d))
        return scalar_shift(base, c)
    r = _omega_memo.get(d)
    if r is None:
        r = _omega_memo[d] = _omega_primitive(d)
    return r


def scalar_shift(s, c):
    """Multiply by (p^(-n(n+1)/2) x_1...x_n)^c."""
    n = s.n
    e = -c * n * (n + 1) // 2
    return SymPoly._raw(n, {tuple(a + c for a in k): v.shift(e) for k, v in s.terms.items()})


def seed_omega(d, value):
    """Insert a precomputed primitive value (e.g. loaded from disk)."""
    _omega_memo[check_delta(d)] = value


def omega_pi(lbl):
    return omega_t(lbl.delta)


def pi_product(i, j, n):
    """pi_i * pi_j = sum phi_{a+j-b} / (phi_a phi_{j-b}) pi_{a+j-b, b}.

    Returns a list of (LaurentP coefficient, PiLabel).
    """
    if not (1 <= i <= n and 1 <= j <= n):
        raise UsageError("need 1 <= i, j <= n")
    out = []
    for b in range(0, j + 1):
        a = i - b
        if 0 <= a <= n - j:
            coeff = phi_quotient(a + j - b, a, j - b)
            out.append((coeff, pi_label(n, a + j - b, b)))
    return out


# Recorded misprint: the displayed omega(t(1,p,p,p)) carries p^-3.
ERRATA = {
    (0, 1, 1, 1): (
        "printed value p^-3 * sym[1,1,1,0] for omega(t(1,p,p,p)) is a misprint; "
        "consistent normalisation gives p^-6"
    ),
}
PRINTED_VALUES = {
    (0, 1, 1, 1): SymPoly(4, {(1, 1, 1, 0): LaurentP.mono(1, -3)}),
}


def erratum_note(d):
    """Diagnostic text when a computed value differs from a known misprint."""
    d = tuple(d)
    if d in ERRATA and omega_t(d) != PRINTED_VALUES[d]:
        return ERRATA[d]
    return None
