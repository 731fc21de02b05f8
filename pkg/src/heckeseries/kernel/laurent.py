"""Exact Laurent polynomials in the single variable p."""
from fractions import Fraction

from . import zpoly
from .errors import InexactDivision


class LaurentP:
    """Immutable Laurent polynomial ``p**lo * (c[0] + c[1] p + ...)``.

    Canonical form: ``c[0] != 0`` and ``c[-1] != 0``; zero is ``lo=0, c=()``.
    """

    __slots__ = ("lo", "c", "_hash")

    def __init__(self, coeffs=(), lo=0):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        k = 0
        while k < len(c) and c[k] == 0:
            k += 1
        if k == len(c):
            self.lo, self.c = 0, ()
        else:
            self.lo, self.c = lo + k, tuple(c[k:])
        self._hash = None

    @classmethod
    def _raw(cls, c, lo):
        obj = object.__new__(cls)
        obj.c = c
        obj.lo = lo
        obj._hash = None
        return obj

    @classmethod
    def const(cls, v):
        v = int(v)
        return cls._raw((v,), 0) if v else ZERO

    @classmethod
    def mono(cls, coeff=1, exp=0):
        coeff = int(coeff)
        return cls._raw((coeff,), exp) if coeff else ZERO

    @classmethod
    def from_dict(cls, d):
        d = {e: v for e, v in d.items() if v}
        if not d:
            return ZERO
        lo, hi = min(d), max(d)
        c = [0] * (hi - lo + 1)
        for e, v in d.items():
            c[e - lo] = v
        return cls._raw(tuple(c), lo)

    # -- inspection ---------------------------------------------------
    def __bool__(self):
        return bool(self.c)

    def is_zero(self):
        return not self.c

    @property
    def hi(self):
        return self.lo + len(self.c) - 1

    def is_monomial(self):
        return len(self.c) == 1

    def is_unit(self):
        return len(self.c) == 1 and self.c[0] in (1, -1)

    def terms(self):
        """(exponent, coefficient) pairs with nonzero coefficient, ascending."""
        return [(self.lo + i, v) for i, v in enumerate(self.c) if v]

    def to_dict(self):
        return dict(self.terms())

    def coeff(self, e):
        i = e - self.lo
        if 0 <= i < len(self.c):
            return self.c[i]
        return 0

    # -- arithmetic ---------------------------------------------------
    @staticmethod
    def _coerce(x):
        if isinstance(x, LaurentP):
            return x
        if isinstance(x, int):
            return LaurentP.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.c:
            return self
        if not self.c:
            return other
        lo = min(self.lo, other.lo)
        n = max(self.hi, other.hi) - lo + 1
        out = [0] * n
        off = self.lo - lo
        for i, v in enumerate(self.c):
            out[off + i] += v
        off = other.lo - lo
        for i, v in enumerate(other.c):
            out[off + i] += v
        return LaurentP(out, lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentP._raw(tuple(-v for v in self.c), self.lo)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentP._raw(tuple(other * v for v in self.c), self.lo)
        if not isinstance(other, LaurentP):
            return NotImplemented
        if not self.c or not other.c:
            return ZERO
        return LaurentP._raw(zpoly.mul(self.c, other.c), self.lo + other.lo)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if not self.is_unit():
                raise InexactDivision("negative power of a non-unit Laurent polynomial")
            return LaurentP._raw((self.c[0] ** (-k),), self.lo * k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, e):
        """Multiply by p**e."""
        if not self.c:
            return self
        return LaurentP._raw(self.c, self.lo + e)

    def divexact(self, other):
        """Exact quotient in Z[p, 1/p]; raises InexactDivision otherwise."""
        other = self._coerce(other)
        if not other.c:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self.c:
            return ZERO
        q = zpoly.divexact(self.c, other.c)
        return LaurentP(q, self.lo - other.lo)

    def invert_p(self):
        """Substitute p -> 1/p."""
        if not self.c:
            return self
        return LaurentP._raw(tuple(reversed(self.c)), -self.hi)

    def __call__(self, x):
        """Evaluate at an int or Fraction."""
        if self.lo >= 0:
            return zpoly.evaluate(self.c, x) * x ** self.lo
        return zpoly.evaluate(self.c, x) * Fraction(1, 1) / Fraction(x) ** (-self.lo)

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentP.const(other)
        if not isinstance(other, LaurentP):
            return NotImplemented
        return self.lo == other.lo and self.c == other.c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.lo, self.c))
        return self._hash

    # -- text ---------------------------------------------------------
    def to_text(self):
        return "[%d; %s]" % (self.lo, ",".join(str(v) for v in self.c))

    @classmethod
    def from_text(cls, s):
        s = s.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError("bad p-poly text: %r" % s)
        lo, _, rest = s[1:-1].partition(";")
        rest = rest.strip()
        coeffs = [int(v) for v in rest.split(",")] if rest else []
        obj = cls(coeffs, int(lo))
        if obj.to_text() != "[%s; %s]" % (lo.strip(), rest.replace(" ", "")) and coeffs:
            raise ValueError("non-canonical p-poly text: %r" % s)
        return obj

    def pretty(self):
        if not self.c:
            return "0"
        parts = []
        for e, v in reversed(self.terms()):
            if e == 0:
                mon = str(abs(v))
            else:
                pp = "p" if e == 1 else "p^%d" % e
                mon = pp if abs(v) == 1 else "%d*%s" % (abs(v), pp)
            sign = "-" if v < 0 else "+"
            parts.append((sign, mon))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(" %s %s" % (s, m) for s, m in parts[1:])

    def __repr__(self):
        return "LaurentP(%s)" % self.pretty()


ZERO = LaurentP._raw((), 0)
ONE = LaurentP._raw((1,), 0)
P = LaurentP._raw((1,), 1)


def p_pow(e, coeff=1):
    return LaurentP.mono(coeff, e)
