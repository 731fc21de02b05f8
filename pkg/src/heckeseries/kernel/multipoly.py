"""Sparse polynomials in x_1..x_n with non-negative exponents.

Coefficients are any exact ring elements supporting ``+ - *`` and truth
testing (``LaurentP`` in the public API, plain ``int`` on hot paths).
"""
import heapq
from itertools import permutations

from .errors import InexactDivision, UsageError
from .laurent import LaurentP


class MultiPoly:
    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if len(e) != n:
                    raise UsageError("exponent vector %r has wrong length for n=%d" % (e, n))
                if min(e) < 0:
                    raise UsageError("negative x exponent %r" % (e,))
                if c:
                    self.terms[tuple(e)] = c

    @classmethod
    def _raw(cls, n, terms):
        obj = object.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n, i, coeff=1):
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): coeff})

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if not isinstance(other, MultiPoly):
            return False
        if other.n != self.n:
            raise UsageError("variable count mismatch: %d vs %d" % (self.n, other.n))
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.n, out)

    def __neg__(self):
        return MultiPoly._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentP)):
            if not other:
                return MultiPoly._raw(self.n, {})
            return MultiPoly._raw(self.n, {e: c * other for e, c in self.terms.items()})
        if not self._check(other):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return MultiPoly._raw(self.n, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self):
        return "MultiPoly(n=%d, %d terms)" % (self.n, len(self.terms))

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def permute(self, perm):
        """Apply x_i -> x_perm[i]."""
        out = {}
        for e, c in self.terms.items():
            f = [0] * self.n
            for i, a in enumerate(e):
                f[perm[i]] = a
            out[tuple(f)] = c
        return MultiPoly._raw(self.n, out)

    def is_symmetric(self):
        for e, c in self.terms.items():
            for f in set(permutations(e)):
                if self.terms.get(f) != c:
                    return False
        return True

    def sorted_terms(self):
        """Terms in graded-lex descending order."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)


def multi_divexact(num, den):
    """Exact quotient ``num / den``; InexactDivision if any remainder.

    Standard leading-term division in lex order.  The leading coefficient
    of ``den`` must divide exactly (units +-1 and +-p**k always do).
    """
    if num.n != den.n:
        raise UsageError("variable count mismatch: %d vs %d" % (num.n, den.n))
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num:
        return MultiPoly._raw(num.n, {})
    lead = max(den.terms)
    lc = den.terms[lead]
    rest = [(e, c) for e, c in den.terms.items() if e != lead]
    if isinstance(lc, int) and lc in (1, -1):
        div = lc.__mul__
    elif isinstance(lc, int):
        def div(c):
            q, r = divmod(c, lc)
            if r:
                raise InexactDivision("coefficient not divisible by leading coefficient")
            return q
    else:
        div = lambda c: c.divexact(lc)  # noqa: E731

    rem = dict(num.terms)
    heap = [tuple(-a for a in e) for e in rem]
    heapq.heapify(heap)
    quot = {}
    n = num.n
    while heap:
        key = heapq.heappop(heap)
        e = tuple(-a for a in key)
        c = rem.pop(e, None)
        if not c:
            continue
        qe = tuple(a - b for a, b in zip(e, lead))
        if min(qe) < 0:
            raise InexactDivision("leading monomial %r not divisible by %r" % (e, lead))
        qc = div(c)
        quot[qe] = qc
        for f, d in rest:
            g = tuple(a + b for a, b in zip(qe, f))
            v = rem.get(g)
            if v is None:
                rem[g] = -qc * d
                heapq.heappush(heap, tuple(-a for a in g))
            else:
                v = v - qc * d
                rem[g] = v
    if any(rem.values()):
        raise InexactDivision("nonzero remainder")
    return MultiPoly._raw(n, quot)


def vandermonde(n, coeff_one=1):
    """prod_{i<j} (x_j - x_i)."""
    out = MultiPoly.constant(n, coeff_one)
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (MultiPoly.variable(n, j, coeff_one) - MultiPoly.variable(n, i, coeff_one))
    return out
