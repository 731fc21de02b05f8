"""Reduced quotients of integer polynomials in p."""
from math import gcd

from . import zpoly
from .errors import InexactDivision
from .laurent import LaurentP


class RatFnP:
    """``num / den`` with num, den in Z[p], gcd 1, den content-normalized
    with positive leading coefficient."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=zpoly.ONE, _reduced=False):
        num, den = zpoly.trim(num), zpoly.trim(den)
        if not den:
            raise ZeroDivisionError("RatFnP with zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @classmethod
    def from_laurent(cls, x):
        if isinstance(x, int):
            x = LaurentP.const(x)
        if not x:
            return cls(zpoly.ZERO, zpoly.ONE, _reduced=True)
        if x.lo >= 0:
            return cls((0,) * x.lo + x.c, zpoly.ONE, _reduced=True)
        return cls(x.c, (0,) * (-x.lo) + (1,))

    @classmethod
    def const(cls, v):
        return cls.from_laurent(LaurentP.const(v))

    @classmethod
    def p(cls):
        return cls((0, 1), _reduced=True)

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_laurent(self):
        """True when the denominator is a pure power of p."""
        return len(self.den) >= 1 and all(v == 0 for v in self.den[:-1]) and self.den[-1] == 1

    def is_polynomial(self):
        return self.den == zpoly.ONE

    def to_laurent(self):
        if not self.is_laurent():
            raise InexactDivision("denominator %r is not a power of p" % (self.den,))
        return LaurentP(self.num, -(len(self.den) - 1))

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFnP):
            return x
        if isinstance(x, (int, LaurentP)):
            return RatFnP.from_laurent(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFnP(zpoly.add(self.num, other.num), self.den)
        num = zpoly.add(zpoly.mul(self.num, other.den), zpoly.mul(other.num, self.den))
        return RatFnP(num, zpoly.mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFnP(zpoly.neg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFnP(zpoly.mul(self.num, other.num), zpoly.mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise ZeroDivisionError("RatFnP division by zero")
        return RatFnP(zpoly.mul(self.num, other.den), zpoly.mul(self.den, other.num))

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k):
        if k < 0:
            return RatFnP.const(1) / (self ** (-k))
        out = RatFnP.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        from fractions import Fraction
        return Fraction(zpoly.evaluate(self.num, x)) / zpoly.evaluate(self.den, x)

    def __repr__(self):
        n = LaurentP(self.num).pretty()
        if self.den == zpoly.ONE:
            return "RatFnP(%s)" % n
        return "RatFnP((%s)/(%s))" % (n, LaurentP(self.den).pretty())


def _reduce(num, den):
    if not num:
        return zpoly.ZERO, zpoly.ONE
    if len(den) > 1:
        g = zpoly.gcd_poly(num, den)
        if len(g) > 1:
            num = zpoly.divexact(num, g)
            den = zpoly.divexact(den, g)
    c = gcd(zpoly.content(num), zpoly.content(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(v // c for v in num)
        den = tuple(v // c for v in den)
    return num, den
