"""The Sp_n side: images of the generators and the truncated series
Omega(D), Omega(E), Omega(F).

x_0 is never stored.  In every series here the X^k coefficient carries an
implicit x_0^k, and a generator image carries x_0^1 (T(p)) or x_0^2 (the
others), recorded as ``x0_degree``.
"""
from itertools import combinations
from typing import NamedTuple

from .glhecke import lp, omega_pi, omega_t, pi_label, primitive_tuples
from .kernel import LaurentP, MultiPoly, ONE, SymPoly, UsageError, sym_from_multi


class GeneratorImage(NamedTuple):
    name: str
    x0_degree: int
    image: SymPoly


def generator_names(n):
    return ["T"] + ["T%d" % i for i in range(1, n)] + ["[p]"]


def image_T(n):
    """Omega(T(p)) / x_0 = prod (1 + x_i) = sum of elementary symmetric polys."""
    return SymPoly(n, {(1,) * a + (0,) * (n - a): ONE for a in range(n + 1)})


def image_Ti(n, i):
    """Omega(T_i(p^2)) / x_0^2, 1 <= i <= n (T_n is [p])."""
    if not 1 <= i <= n:
        raise UsageError("T_i needs 1 <= i <= n")
    out = SymPoly.zero(n)
    for a in range(i, n + 1):
        for b in range(0, n - a + 1):
            coeff = LaurentP.mono(1, b * (a + b + 1)) * lp(a - i, a)
            out = out + omega_pi(pi_label(n, a, b)).scale(coeff)
    return out


def generator_images(n):
    """Images of T(p), T_1(p^2), ..., T_{n-1}(p^2), [p] in that order."""
    if n < 1:
        raise UsageError("genus must be positive")
    out = [GeneratorImage("T", 1, image_T(n))]
    for i in range(1, n):
        out.append(GeneratorImage("T%d" % i, 2, image_Ti(n, i)))
    out.append(GeneratorImage("[p]", 2, image_Ti(n, n)))
    return out


class SymSeries:
    """Truncated power series in X with SymPoly coefficients, indices 0..bound."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        self.n = n
        self.coeffs = list(coeffs)

    @classmethod
    def zero(cls, n, bound):
        return cls(n, [SymPoly.zero(n) for _ in range(bound + 1)])

    @classmethod
    def one(cls, n, bound):
        out = cls.zero(n, bound)
        out.coeffs[0] = SymPoly.one(n)
        return out

    @property
    def bound(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def degree(self):
        for k in range(self.bound, -1, -1):
            if self.coeffs[k]:
                return k
        return -1

    def truncate(self, bound):
        c = self.coeffs[: bound + 1]
        c += [SymPoly.zero(self.n)] * (bound + 1 - len(c))
        return SymSeries(self.n, c)

    def __add__(self, other):
        b = min(self.bound, other.bound)
        return SymSeries(self.n, [self.coeffs[k] + other.coeffs[k] for k in range(b + 1)])

    def __sub__(self, other):
        b = min(self.bound, other.bound)
        return SymSeries(self.n, [self.coeffs[k] - other.coeffs[k] for k in range(b + 1)])

    def __mul__(self, other):
        """Product truncated at the smaller bound; overflow is never formed."""
        b = min(self.bound, other.bound)
        out = [SymPoly.zero(self.n) for _ in range(b + 1)]
        for i in range(b + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(b + 1 - i):
                c = other.coeffs[j]
                if c:
                    out[i + j] = out[i + j] + a * c
        return SymSeries(self.n, out)

    def inverse(self):
        """Series inverse by recursive convolution; needs constant term 1."""
        if self.coeffs[0] != SymPoly.one(self.n):
            raise UsageError("series inverse needs constant term 1")
        inv = [SymPoly.one(self.n)]
        for k in range(1, self.bound + 1):
            acc = SymPoly.zero(self.n)
            for j in range(1, k + 1):
                if self.coeffs[j] and inv[k - j]:
                    acc = acc + self.coeffs[j] * inv[k - j]
            inv.append(-acc)
        return SymSeries(self.n, inv)

    def __eq__(self, other):
        return isinstance(other, SymSeries) and self.n == other.n and self.coeffs == other.coeffs

    def to_text(self):
        return "".join("X^%d\n%s" % (k, c.to_text()) for k, c in enumerate(self.coeffs))

    @classmethod
    def from_text(cls, n, text):
        blocks = []
        cur = None
        for line in text.splitlines():
            if line.startswith("X^"):
                cur = []
                blocks.append(cur)
            elif line.strip() and not line.startswith("#"):
                cur.append(line)
        return cls(n, [SymPoly.from_text(n, "\n".join(b)) for b in blocks])


# ---------------------------------------------------------------------------


def numerator_weight(d):
    """p^{sum_i (n+1-i) d_i}, the weight attached to omega(t(p^d))."""
    n = len(d)
    return LaurentP.mono(1, sum((n - i) * v for i, v in enumerate(d)))


def numerator_sum(n, bound, omega=omega_t):
    """sum over primitive d of p-weight * omega(t(p^d)) * X^{d_n}, X <= bound.

    Returns (SymSeries, number of omega evaluations).
    """
    acc = [SymPoly.zero(n) for _ in range(bound + 1)]
    count = 0
    for d in primitive_tuples(n, bound):
        count += 1
        acc[d[-1]] = acc[d[-1]] + omega(d).scale(numerator_weight(d))
    return SymSeries(n, acc), count


def numerator_sum_from_values(n, bound, values):
    """Same as numerator_sum with omega values given as a dict keyed by tuple;
    accumulation runs in the fixed primitive_tuples order."""
    acc = [SymPoly.zero(n) for _ in range(bound + 1)]
    for d in primitive_tuples(n, bound):
        acc[d[-1]] = acc[d[-1]] + values[d].scale(numerator_weight(d))
    return SymSeries(n, acc)


def subset_group(n, size, bound):
    """prod over |S| = size of (1 - x_S X), as a SymSeries."""
    terms = {(0,) + (0,) * n: 1}
    for s in combinations(range(n), size):
        e = [0] * n
        for i in s:
            e[i] = 1
        step = (1,) + tuple(e)
        new = dict(terms)
        for key, c in terms.items():
            if key[0] + 1 > bound:
                continue
            k2 = tuple(a + b for a, b in zip(key, step))
            new[k2] = new.get(k2, 0) - c
        terms = {k: v for k, v in new.items() if v}
    by_deg = [dict() for _ in range(bound + 1)]
    for key, c in terms.items():
        by_deg[key[0]][key[1:]] = c
    return SymSeries(n, [sym_from_multi(MultiPoly(n, t)) for t in by_deg])


def f_image(n, bound=None):
    """prod_{S subset of {1..n}} (1 - x_S X), truncated at ``bound`` (default 2^n)."""
    if bound is None:
        bound = 2 ** n
    out = SymSeries.one(n, bound)
    for size in range(0, n + 1):
        out = out * subset_group(n, size, bound)
    return out


def e_factor(n, bound):
    """The 2^n - 2 factors of Omega(F) other than (1 - X) and (1 - x_1...x_n X),
    multiplied in ascending subset-size order."""
    out = SymSeries.one(n, bound)
    for size in range(1, n):
        out = out * subset_group(n, size, bound)
    return out


def e_bound(n):
    return 2 ** n - 2


def e_image(n, omega=omega_t, numerator=None):
    """Omega(E) through X^{2^n - 2}."""
    bound = e_bound(n)
    if numerator is None:
        numerator, _ = numerator_sum(n, bound, omega)
    return numerator.truncate(bound) * e_factor(n, bound)


def d_coefficient_direct(n, k, omega=omega_t):
    """Omega(T(p^k)) / x_0^k = sum over 0 <= d_1 <= ... <= d_n <= k of
    p^{n d_1 + ... + d_n} omega(t(p^d))."""
    from itertools import combinations_with_replacement

    acc = SymPoly.zero(n)
    for d in combinations_with_replacement(range(k + 1), n):
        acc = acc + omega(d).scale(numerator_weight(d))
    return acc


def geometric_split(n, numerator):
    """numerator / ((1 - X)(1 - x_1...x_n X)), truncated at numerator's bound."""
    b = numerator.bound
    geo = SymSeries(n, [SymPoly.one(n)] * (b + 1))
    geo_e = SymSeries(n, [SymPoly(n, {(k,) * n: ONE}) for k in range(b + 1)])
    return numerator * geo * geo_e
