"""Symmetric polynomials over LaurentP in the monomial (partition) basis.

``SymPoly(n, {(i1, ..., in): c})`` stands for ``sum c * sym_{i1...in}``,
where ``sym_lambda`` is the orbit sum of ``x**lambda`` under S_n with unit
leading coefficient.  Partitions are non-increasing tuples of length n.
"""
from functools import lru_cache
from itertools import permutations
from math import factorial

from .errors import SymmetryViolation, UsageError
from .laurent import LaurentP, ONE, ZERO
from .multipoly import MultiPoly


@lru_cache(maxsize=None)
def orbit(part):
    """Distinct rearrangements of an exponent vector, sorted."""
    return tuple(sorted(set(permutations(part))))


@lru_cache(maxsize=None)
def orbit_size(part):
    size = factorial(len(part))
    run = 1
    for i in range(1, len(part) + 1):
        if i < len(part) and part[i] == part[i - 1]:
            run += 1
        else:
            size //= factorial(run)
            run = 1
    return size


def is_partition(part, n):
    return len(part) == n and all(part[i] >= part[i + 1] for i in range(n - 1)) and (n == 0 or part[-1] >= 0)


def grlex_key(part):
    return (sum(part), part)


@lru_cache(maxsize=1 << 18)
def _structure(lam, mu):
    """Coefficients c_nu with sym_lam * sym_mu = sum c_nu sym_nu.

    Fix the representative x**lam, add every rearrangement of mu, re-sort;
    the count N_nu of hits relates to c_nu by |orb(lam)| N_nu = |orb(nu)| c_nu.
    """
    counts = {}
    for v in orbit(mu):
        nu = tuple(sorted((a + b for a, b in zip(lam, v)), reverse=True))
        counts[nu] = counts.get(nu, 0) + 1
    ol = orbit_size(lam)
    out = []
    for nu, k in counts.items():
        c, r = divmod(ol * k, orbit_size(nu))
        assert not r
        out.append((nu, c))
    return tuple(out)


class SymPoly:
    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for part, c in terms.items():
                part = tuple(part)
                if not is_partition(part, n):
                    raise UsageError("%r is not a partition of length %d" % (part, n))
                if isinstance(c, int):
                    c = LaurentP.const(c)
                if c:
                    self.terms[part] = c

    @classmethod
    def _raw(cls, n, terms):
        obj = object.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    @classmethod
    def one(cls, n):
        return cls._raw(n, {(0,) * n: ONE})

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(0,) * n: c})

    @classmethod
    def sym(cls, *parts, coeff=ONE):
        """``SymPoly.sym(1, 1, 0, 0)`` -> sym_1100."""
        return cls(len(parts), {tuple(parts): coeff})

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, part):
        return self.terms.get(tuple(part), ZERO)

    def _check(self, other):
        if not isinstance(other, SymPoly):
            return False
        if other.n != self.n:
            raise UsageError("variable count mismatch: %d vs %d" % (self.n, other.n))
        return True

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            v = c if v is None else v + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return SymPoly._raw(self.n, out)

    def __neg__(self):
        return SymPoly._raw(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def scale(self, s):
        if isinstance(s, int):
            s = LaurentP.const(s)
        if not s:
            return SymPoly.zero(self.n)
        return SymPoly._raw(self.n, {k: c * s for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentP)):
            return self.scale(other)
        if not self._check(other):
            return NotImplemented
        return sym_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = SymPoly.one(self.n)
        for _ in range(k):
            out = sym_mul(out, self)
        return out

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # -- structure ----------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def degrees(self):
        return {sum(k) for k in self.terms}

    def leading(self):
        """Graded-lex leading partition."""
        return max(self.terms, key=grlex_key) if self.terms else None

    def map_coeffs(self, f):
        out = {}
        for k, c in self.terms.items():
            v = f(c)
            if v:
                out[k] = v
        return SymPoly._raw(self.n, out)

    def expand(self):
        return sym_expand(self)

    # -- text ---------------------------------------------------------
    def to_text(self):
        return "".join(
            "%s -> %s\n" % (" ".join(str(i) for i in k), c.to_text()) for k, c in self.sorted_terms()
        )

    @classmethod
    def from_text(cls, n, text):
        terms = {}
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            lhs, _, rhs = line.partition("->")
            part = tuple(int(v) for v in lhs.split())
            terms[part] = LaurentP.from_text(rhs)
        return cls(n, terms)

    def pretty(self):
        if not self.terms:
            return "0"
        out = []
        for k, c in self.sorted_terms():
            sym = "sym[%s]" % ",".join(str(i) for i in k)
            const = not any(k)
            if c.is_monomial():
                v, e = c.c[0], c.lo
                sign = "-" if v < 0 else "+"
                mag = abs(v)
                if e == 0:
                    body = str(mag) if const else (sym if mag == 1 else "%d * %s" % (mag, sym))
                else:
                    pp = "p^%d" % e
                    pp = pp if mag == 1 else "%d*%s" % (mag, pp)
                    body = pp if const else "%s * %s" % (pp, sym)
            else:
                sign = "+"
                body = "(%s)" % c.pretty() + ("" if const else " * %s" % sym)
            out.append((sign, body))
        head = ("-" if out[0][0] == "-" else "") + out[0][1]
        return head + "".join(" %s %s" % t for t in out[1:])

    def __repr__(self):
        return "SymPoly(n=%d, %s)" % (self.n, self.pretty())


def sym_mul(a, b):
    """Product in the partition basis.

    Expands the orbits of the operand with fewer orbit elements and adds them
    to the partitions of the other one.
    """
    if a.n != b.n:
        raise UsageError("variable count mismatch: %d vs %d" % (a.n, b.n))
    if not a.terms or not b.terms:
        return SymPoly.zero(a.n)
    if sum(orbit_size(k) for k in a.terms) < sum(orbit_size(k) for k in b.terms):
        a, b = b, a
    acc = {}
    for lam, ca in a.terms.items():
        for mu, cb in b.terms.items():
            cab = ca * cb
            for nu, k in _structure(lam, mu):
                term = cab if k == 1 else cab * k
                v = acc.get(nu)
                acc[nu] = term if v is None else v + term
    return SymPoly._raw(a.n, {k: c for k, c in acc.items() if c})


def sym_expand(s):
    """Plain monomial expansion as a MultiPoly."""
    out = {}
    for part, c in s.terms.items():
        for e in orbit(part):
            out[e] = c
    return MultiPoly._raw(s.n, out)


def sym_from_multi(m, convert=None):
    """Collect a symmetric MultiPoly into the partition basis.

    ``convert`` maps raw coefficients; by default ints become LaurentP
    constants and LaurentP values are kept.
    """
    terms = {}
    for e, c in m.terms.items():
        part = tuple(sorted(e, reverse=True))
        if part == e:
            terms[part] = c
    for part, c in terms.items():
        for e in orbit(part):
            if m.terms.get(e) != c:
                raise SymmetryViolation("coefficient of %r differs from that of %r" % (e, part))
    total = sum(orbit_size(k) for k in terms)
    if total != len(m.terms):
        raise SymmetryViolation("monomials outside any collected orbit")
    if convert is None:
        convert = _as_laurent
    terms = {k: convert(v) for k, v in terms.items()}
    return SymPoly._raw(m.n, terms)


def _as_laurent(v):
    return v if isinstance(v, LaurentP) else LaurentP.const(v)


def sym_substitute(s, values):
    """Evaluate at x_i := values[i] (LaurentP or int), exactly."""
    if len(values) != s.n:
        raise UsageError("need %d values, got %d" % (s.n, len(values)))
    values = [_as_laurent(v) for v in values]
    powers = {}

    def pw(i, k):
        key = (i, k)
        r = powers.get(key)
        if r is None:
            r = powers[key] = values[i] ** k
        return r

    total = ZERO
    for part, c in s.terms.items():
        acc = ZERO
        for e in orbit(part):
            m = ONE
            for i, k in enumerate(e):
                if k:
                    m = m * pw(i, k)
                    if not m:
                        break
            acc = acc + m
        total = total + c * acc
    return total


def sym_set_last_zero(s):
    """x_n := 0, giving a SymPoly in n-1 variables."""
    out = {k[:-1]: c for k, c in s.terms.items() if k[-1] == 0}
    return SymPoly._raw(s.n - 1, out)


def sym_invert_variables(s, c):
    """Multiply by (x_1...x_n)**c and substitute x_i -> 1/x_i.

    A partition lam maps to (c - lam_n, ..., c - lam_1); raises if any part
    of lam exceeds c (a negative exponent would survive).
    """
    out = {}
    for k, v in s.terms.items():
        if k[0] > c:
            raise UsageError("partition %r has a part above %d" % (k, c))
        out[tuple(c - a for a in reversed(k))] = v
    return SymPoly._raw(s.n, out)


def e_n_power(n, m, coeff=ONE):
    """coeff * (x_1...x_n)**m."""
    return SymPoly._raw(n, {(m,) * n: coeff}) if coeff else SymPoly.zero(n)
