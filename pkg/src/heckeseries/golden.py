"""Reference E/F coefficients for genera 1..4 and a small expression parser.

Expressions use the names ``p``, ``T``, ``T1`` .. ``T{n-1}`` and ``P`` for the
scalar operator [p]; juxtaposition means multiplication.  Each genus has a
second encoding (expanded canonical text in ``data/golden_n<g>.txt``) so the
two can be diffed against each other.

Provenance tags:
  printed    taken verbatim from the published display
  corrected  published display has a misprint; see ``ERRATA``
  derived    no published value; built from a stated relation
"""
import re
from importlib import resources

from .inversion import HeckePoly, scalar_factor, series_from_text
from .kernel import LaurentP, SymPoly, UsageError

_TOKEN = re.compile(r"\s*(?:(\d+)|(sym\[[\d,\s]+\]|T\d*|P|p)|(.))")


def _tokens(text):
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        elif not op.isspace():
            if op not in "+-*^()":
                raise UsageError("unexpected character %r in %r" % (op, text))
            out.append(("op", op))
        pos = m.end()
    return out


class _HeckeRing:
    def __init__(self, n):
        self.n = n
        self.names = {"T": 0, "P": n}
        for j in range(1, n):
            self.names["T%d" % j] = j

    def const(self, c):
        return HeckePoly.one(self.n) * c

    def p_pow(self, e):
        return HeckePoly.one(self.n) * LaurentP.mono(1, e)

    def symbol(self, name):
        if name not in self.names:
            raise UsageError("generator %s does not exist for n=%d" % (name, self.n))
        return HeckePoly.generator(self.n, self.names[name])


class _SymRing:
    def __init__(self, n):
        self.n = n

    def const(self, c):
        return SymPoly.constant(self.n, c)

    def p_pow(self, e):
        return SymPoly.constant(self.n, LaurentP.mono(1, e))

    def symbol(self, name):
        if not name.startswith("sym["):
            raise UsageError("unknown symbol %s in a symmetric expression" % name)
        part = tuple(int(v) for v in name[4:-1].split(","))
        if len(part) != self.n:
            raise UsageError("%s has the wrong length for n=%d" % (name, self.n))
        return SymPoly(self.n, {part: 1})


class _Parser:
    """Recursive descent over + - * ^ and juxtaposition; negative exponents
    are accepted on p only."""

    def __init__(self, text, ring):
        self.toks = _tokens(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expr(self):
        kind, v = self.peek()
        neg = kind == "op" and v == "-"
        if kind == "op" and v in "+-":
            self.take()
        acc = self.term()
        if neg:
            acc = -acc
        while True:
            kind, v = self.peek()
            if kind == "op" and v in "+-":
                self.take()
                t = self.term()
                acc = acc + t if v == "+" else acc - t
            else:
                return acc

    def term(self):
        acc = self.power()
        while True:
            kind, v = self.peek()
            if kind == "op" and v == "*":
                self.take()
                acc = acc * self.power()
            elif kind in ("num", "name") or (kind == "op" and v == "("):
                acc = acc * self.power()
            else:
                return acc

    def power(self):
        is_p = self.peek() == ("name", "p")
        base = self.atom()
        if self.peek() != ("op", "^"):
            return base
        self.take()
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        kind, e = self.take()
        if kind != "num":
            raise UsageError("exponent must be an integer")
        if sign < 0:
            if not is_p:
                raise UsageError("negative exponents are only allowed on p")
            return self.ring.p_pow(-e)
        return self.ring.p_pow(e) if is_p else base ** e

    def atom(self):
        kind, v = self.take()
        if kind == "num":
            return self.ring.const(v)
        if kind == "name":
            return self.ring.p_pow(1) if v == "p" else self.ring.symbol(v)
        if kind == "op" and v == "(":
            out = self.expr()
            if self.take() != ("op", ")"):
                raise UsageError("unbalanced parenthesis")
            return out
        raise UsageError("unexpected token %r" % (v,))

    def parse(self):
        out = self.expr()
        if self.i != len(self.toks):
            raise UsageError("trailing input after token %d" % self.i)
        return out


def parse_hecke(text, n):
    """Parse an expression like ``p^4 (p+1) (T3 + P) T`` into a HeckePoly."""
    return _Parser(text, _HeckeRing(n)).parse()


def parse_sym(text, n):
    """Parse an expression like ``p^-3 (p+1) sym[1,1,1,0]`` into a SymPoly."""
    return _Parser(text, _SymRing(n)).parse()


# ---------------------------------------------------------------------------
# encoding A: factored expressions

_E = {
    1: ["1"],
    2: ["1", "0", "-p^2 P"],
    3: [
        "1",
        "0",
        "-p^2 (T2 + (p^2-p+1)(p^2+p+1) P)",
        "p^4 (p+1) P T",
        "-p^7 P (T2 + (p^2-p+1)(p^2+p+1) P)",
        "0",
        "p^15 P^3",
    ],
    4: [
        "1",
        "0",
        "-p^2 ((p^8+p^6+2p^4+2p^2+1) P +(p^2+p+1) (p^2-p+1) T3 + T2)",
        "p^4 (p+1) ((p^2+1) (p^3-p^2+1) P + T3) T",
        "p^7 ((p^2+p+1) (p^2-p+1) (p^8+3p^7+p^5+2p^3+p-1) P^2 +(p^2+p+1) (p^2-p+1) (2p^3+p-2) T3 P"
        " -(p^2+p+1) (p^2-p+1) T3^2 +(2p^5+2p^3+p^2+p-1) T2 P - T2 T3 +p (p^2+p+1) T1 P"
        " -(p^2+p+1) T^2 P)",
        "- p^10 (p+1) ((p^2+1) (p^7-p^6-p^2-1) P -(p^2+1) T3 - T2) T P",
        "p^14 ((p^16-p^15-2p^14-3p^12-5p^10-8p^8+p^7-8p^6-5p^4-4p^2-1) P^3"
        " +(p^12-p^10-p^9-5p^8+2p^7-7p^6-6p^4-8p^2+p-2) T3 P^2 +(p^7-p^4-4p^2+2p-1) T3^2 P"
        " +p T3^3 -(2p^8+3p^6+p^4-p^3+3p^2+p+1) T2 P^2 -(3p^2+p+1) T2 T3 P -(p^6-p^3+1) T1 P^2"
        " - T1 T3 P +p^2 (p^3+p-1) T^2 P^2)",
        "- p^19 (p-1) (p+1) ((p^2+p+1) (p^2-p+1) (p^2+1) P +(p^2+p+1) (p^2-p+1) T3 + T2) T P^2",
        "- p^24 ((p^16-3 p^12-3 p^10-p^9-9 p^8-8 p^6-7 p^4-5 p^2+p-1) P^3"
        " +(p^10-p^9-4 p^8-6 p^6-8 p^4-9 p^2+3 p-2) T3 P^2 -(p^4+4 p^2-3 p+1) T3^2 P +p T3^3"
        " -(p^8+2 p^6-p^5+2 p^4+p^3+4 p^2+1) T2 P^2 -(p^3+3 p^2+1) T2 T3 P +(p^5-p^2-1) T1 P^2"
        " - T1 T3 P -p (p^3-p^2-1) T^2 P^2) P",
        "p^29 (p+1) ((p^2+1) (p^5-2 p^4-1) P -(p^4+1) T3 - T2) T P^3",
        "- p^35 ((p^2-p+1) (p^2+p+1) (p^8+2 p^7+p^5+3 p^3+p-1) P^2"
        " -(p^2-p+1) (p^2+p+1) (p^5-3 p^3-p+2) T3 P -(p^2-p+1) (p^2+p+1) T3^2"
        " +(p^5+3 p^3+p^2+p-1) T2 P - T2 T3 +p (p^2+p+1) T1 P -(p^2+p+1) T^2 P) P^3",
        "- p^41 (p+1) ((p^2+1) (p^3-p^2+1) P + T3) T P^4",
        "p^48 ((2 p^6+2 p^4+2 p^2+1) P +(p^2-p+1) (p^2+p+1) T3 + T2) P^5",
        "0",
        "- p^64 P^7",
    ],
}

_F = {
    1: ["1", "-T", "p P"],
    2: ["1", "-T", "p (T1 + (p^2+1) P)", "-p^3 P T", "p^6 P^2"],
    3: [
        "1",
        "-T",
        "p (T1 + (p^2+1) T2 + (p^2+1)^2 P)",
        "-p^3 (T2 + P) T",
        "p^6 (T2^2 + P (T^2 - 2p T1 - 2(p-1) T2 - (p^2+2p-1)(p^2-p+1)(p^2+p+1) P))",
        "-p^9 P (T2 + P) T",
        "p^13 P^2 (T1 + (p^2+1) T2 + (p^2+1)^2 P)",
    ],
    4: [
        "1",
        "-T",
        "p ((p^8+2 p^6+2 p^4+2 p^2+1) P +(p^4+2 p^2+1) T3 +(p^2+1) T2 + T1)",
        "p^3 ((p^7-p^6-p^4-p^2-1) P - T3 - T2) T",
        "-p^6 ((p^4+1)^2 (p^6-p^4+2 p^3-2 p^2+2 p-1) P^2 +2 (p^2-p+1) (p^4+1) (p^4+2 p^3+p^2+p-1) T3 P"
        " +(p^2-p+1) (p^2+p+1) (p^2+2 p-1) T3^2 -2 (p^2-p+1) (p^4+1) T2 P +2 (p-1) T2 T3 - T2^2"
        " +2 p (p^4+1) T1 P +2 p T1 T3 - T^2 P - T^2 T3)",
        "p^9 ((p^11+p^10+4 p^8+2 p^7+3 p^6+3 p^4+2 p^2-1) P^2 +(2 p^7+2 p^6+3 p^4+2 p^2-2) T3 P - T3^2"
        " +(p^4+3 p^2-1) T2 P - T2 T3 +3 p^2 T1 P -p T^2 P) T",
        "-p^13 ((p^4+1) (p^2+1)^2 (2 p^8+2 p^7+2 p^5+2 p^3+2 p-1) P^3"
        " +(p^2+1)^2 (2 p^8+2 p^7+4 p^5-2 p^4+2 p^3+4 p-3) T3 P^2 -(p^2+1)^2 (p^4-2 p+3) T3^2 P"
        " -(p^2+1)^2 T3^3 +(p^2+1) (2 p^8+4 p^7+4 p^5+4 p^3+4 p-1) T2 P^2"
        " +2 (p^2+1) (p^3+2 p-1) T2 T3 P -(p^2+1) T2 T3^2 +2 p (p^2+1) T2^2 P"
        " +(2 p^8+2 p^7+2 p^5+2 p^3+2 p-1) T1 P^2 +2 (p-1) T1 T3 P - T1 T3^2 +2 p T1 T2 P"
        " -(p^2+1) (p^5+p^4-p^3+1) T^2 P^2 +(p-1) (p^2+p+1) T^2 T3 P - T^2 T2 P)",
        "-p^17 ((2 p^13+p^12+3 p^10+p^9+p^8+2 p^6-p^5+p^4-p^2+p+1) P^3"
        " +(p^9+2 p^6-2 p^5+2 p^4-2 p^2+3 p+2) T3 P^2 -(p^5-p^4+p^2-3 p-1) T3^2 P +p T3^3"
        " +(p^6+2 p^4-2 p^2+1) T2 P^2 -(2 p^2-1) T2 T3 P +(2 p^4+1) T1 P^2 + T1 T3 P -p^3 T^2 P^2) T",
        "p^22 ((p^18+4 p^17+3 p^16+8 p^15+12 p^14+8 p^13+14 p^12+12 p^11+20 p^10"
        " +4 p^9+20 p^8+16 p^6+10 p^4-4 p^3+5 p^2+1) P^4"
        " +2 (2 p^10+2 p^9+p^8+6 p^7+4 p^6+8 p^4-6 p^3+6 p^2+1) (p^4+1) T3 P^3"
        " +(p^8+4 p^6+8 p^4-12 p^3+10 p^2+1) T3^2 P^2 -4 p^2 (p-1) T3^3 P +p^2 T3^4"
        " +2 (2 p^7+3 p^6+2 p^5+5 p^4-2 p^3+3 p^2+1) (p^4+1) T2 P^3"
        " +(2 p^6+4 p^5+10 p^4-8 p^3+6 p^2+2) T2 T3 P^2 -4 p^3 T2 T3^2 P +(3 p^4+2 p^2+1) T2^2 P^2"
        " +2 (2 p^5+p^4+2 p^2+1) (p^4+1) T1 P^3 +(4 p^5+2 p^4+4 p^2+2) T1 T3 P^2"
        " +2 (p^2+1) T1 T2 P^2 + T1^2 P^2 -(p^8+2 p^7+2 p^5+2 p^4+2 p^3+2 p-1) T^2 P^3"
        " -2 (p^4+p-1) T^2 T3 P^2 + T^2 T3^2 P -2 p T^2 T2 P^2)",
    ],
}

# (genus, "E"/"F", k) -> (printed expression, explanation)
ERRATA = {
    (3, "F", 4): (
        "p^6 (T2 + P (T^2 - 2p T1 - 2(p-1) T2 - (p^2+2p-1)(p^2-p+1)(p^2+p+1) P))",
        "the printed leading T_2(p^2) has x_0-degree 2 inside the X^4 coefficient; "
        "homogeneity and the genus-4 reduction of f_4 both force T_2(p^2)^2",
    ),
}


def symmetric_tail(n, lower):
    """Extend f_0..f_{2^{n-1}} to f_0..f_{2^n} via f_{2^n - j} = f_j (p^{n(n+1)/2}[p])^{2^{n-1}-j}."""
    top = 2 ** n
    half = top // 2
    out = list(lower)
    for k in range(len(lower), top + 1):
        j = top - k
        out.append(lower[j] * scalar_factor(n, half - j))
    return out


def provenance(n, which, k):
    if (n, which, k) in ERRATA:
        return "corrected"
    printed = len(_E[n]) if which == "E" else len(_F[n])
    return "printed" if k < printed else "derived"


def expressions(n):
    if n not in _E:
        raise UsageError("no reference data for genus %d" % n)
    return list(_E[n]), list(_F[n])


def golden(n):
    """(E, F) as lists of HeckePoly; F is completed to degree 2^n with the
    symmetry relation where the display stops early."""
    e_src, f_src = expressions(n)
    e = [parse_hecke(s, n) for s in e_src]
    e += [HeckePoly(n)] * (2 ** n - 1 - len(e))
    f = [parse_hecke(s, n) for s in f_src]
    if len(f) <= 2 ** (n - 1):
        raise UsageError("reference display for genus %d stops before the middle" % n)
    f = symmetric_tail(n, f)
    return e, f


def expanded(n):
    """Second encoding: canonical text shipped with the package."""
    text = resources.files("heckeseries").joinpath("data/golden_n%d.txt" % n).read_text()
    head, _, rest = text.partition("# F\n")
    e_text = head.partition("# E\n")[2]
    return series_from_text(n, e_text), series_from_text(n, rest)


# ---------------------------------------------------------------------------
# spherical-side reference values (genus 4, x_0 stripped)

GENERATOR_IMAGES_4 = {
    "T": (1, "sym[1,1,1,1] + sym[1,1,1,0] + sym[1,1,0,0] + sym[1,0,0,0] + 1"),
    "T1": (
        2,
        "p^-8 ((p-1)^2 (p+1) (4p^4+3p^3+3p^2+p+1) sym[1,1,1,1]"
        " + p^4 (p-1) (3p^2+2p+1) (sym[2,1,1,1] + sym[1,1,1,0])"
        " + p^5 (p-1) (p+1) (sym[2,2,1,1] + sym[2,1,1,0] + sym[1,1,0,0])"
        " + p^7 (sym[2,2,2,1] + sym[2,2,1,0] + sym[2,1,0,0] + sym[1,0,0,0]))",
    ),
    "T2": (
        2,
        "p^-8 ((p-1) (4p^4+3p^3+3p^2+p+1) sym[1,1,1,1]"
        " + p^2 (p-1) (p^2+p+1) (sym[2,1,1,1] + sym[1,1,1,0])"
        " + p^5 (sym[2,2,1,1] + sym[2,1,1,0] + sym[1,1,0,0]))",
    ),
    "T3": (2, "p^-10 ((p-1) (p+1) (p^2+1) sym[1,1,1,1] + p^4 (sym[2,1,1,1] + sym[1,1,1,0]))"),
    "[p]": (2, "p^-10 sym[1,1,1,1]"),
}

# delta -> (printed value, provenance)
OMEGA_EXAMPLES_4 = {
    (0, 0, 0, 0): ("1", "printed"),
    (0, 0, 0, 1): ("p^-1 sym[1,0,0,0]", "printed"),
    (0, 0, 1, 1): ("p^-3 sym[1,1,0,0]", "printed"),
    (0, 1, 1, 1): ("p^-3 sym[1,1,1,0]", "misprint"),
    (0, 1, 1, 3): ("p^-9 (p sym[3,1,1,0] + (p-1) sym[2,2,1,0] + 3 (p-1) sym[2,1,1,1])", "printed"),
}
OMEGA_CORRECTED_4 = {(0, 1, 1, 1): "p^-6 sym[1,1,1,0]"}

E3_IMAGE_4 = (
    "p^-3 (p+1) (p (sym[3,2,2,2] + sym[3,2,2,1] + sym[3,2,1,1] + sym[3,1,1,1]"
    " + sym[2,2,2,0] + sym[2,2,1,0] + sym[2,1,1,0] + sym[1,1,1,0])"
    " + (p^2+4p+1) (sym[2,2,2,2] + sym[2,2,2,1] + sym[2,2,1,1] + sym[2,1,1,1] + sym[1,1,1,1]))"
)

# Omega(E) at (x_0, ..., x_4) = (1, p, p^2, p^3, p^4): linear factors (sign, p-exponent, multiplicity)
# for (1 + sign p^e X)^mult, then the quadratic 1 + (sum) X + p^9 X^2.
SATAKE_LINEAR_4 = [(-1, 1, 1), (-1, 2, 1), (-1, 3, 2), (-1, 4, 1), (1, 5, 1), (-1, 5, 2), (-1, 6, 2), (-1, 7, 1), (-1, 8, 1)]
SATAKE_QUADRATIC_4 = ("p + p^2 + 2p^3 + p^4 + p^5 + 2p^6 + p^7 + p^8", "p^9")


def parse_laurent(text):
    """A p-only expression as a LaurentP."""
    s = parse_sym(text, 1)
    if set(s.terms) - {(0,)}:
        raise UsageError("%r is not a scalar" % text)
    return s.coeff((0,))
