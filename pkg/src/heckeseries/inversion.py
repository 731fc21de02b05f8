"""Recover Hecke-algebra expressions from spherical images.

A generator monomial T(p)^a T_1(p^2)^b1 ... T_{n-1}(p^2)^b_{n-1} [p]^e is
the tuple ``(a, b1, ..., b_{n-1}, e)``; its image carries x_0^{a + 2(sum b + e)}.
"""
import json
from math import gcd

from .kernel import LaurentP, ONE, RatFnP, SymPoly, UsageError, ZERO
from .kernel import zpoly
from .spseries import generator_images, generator_names


class InversionError(ArithmeticError):
    pass


class NotInImage(InversionError):
    """The target is not the image of any Hecke-algebra element."""


class LinearDependence(InversionError):
    """The monomial images are linearly dependent (a programming error)."""


class NotDivisible(InversionError):
    pass


# ---------------------------------------------------------------------------
# Hecke polynomials


def x0_degree(mono):
    return mono[0] + 2 * sum(mono[1:])


def mono_key(mono):
    return (sum(mono), mono)


class HeckePoly:
    """Polynomial in T(p), T_1(p^2), ..., T_{n-1}(p^2), [p] over Z[p, 1/p]."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != n + 1 or min(m) < 0:
                raise UsageError("bad generator monomial %r for n=%d" % (m, n))
            if isinstance(c, int):
                c = LaurentP.const(c)
            if c:
                self.terms[m] = c

    @classmethod
    def one(cls, n):
        return cls(n, {(0,) * (n + 1): ONE})

    @classmethod
    def generator(cls, n, index, power=1):
        m = [0] * (n + 1)
        m[index] = power
        return cls(n, {tuple(m): ONE})

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, ZERO) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return HeckePoly(self.n, out)

    def __neg__(self):
        return HeckePoly(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentP)):
            return HeckePoly(self.n, {m: c * other for m, c in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, ZERO) + c1 * c2
        return HeckePoly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = HeckePoly.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, HeckePoly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def x0_degrees(self):
        return {x0_degree(m) for m in self.terms}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: mono_key(t[0]), reverse=True)

    def to_text(self):
        return "".join(
            "%s -> %s\n" % (",".join(str(v) for v in m), c.to_text()) for m, c in self.sorted_terms()
        )

    @classmethod
    def from_text(cls, n, text):
        terms = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            lhs, _, rhs = line.partition("->")
            terms[tuple(int(v) for v in lhs.split(","))] = LaurentP.from_text(rhs)
        return cls(n, terms)

    def to_json_terms(self):
        return [
            {"gen": list(m), "p": {"min": c.lo, "coeffs": list(c.c)}} for m, c in self.sorted_terms()
        ]

    def pretty(self):
        if not self.terms:
            return "0"
        names = generator_names(self.n)
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                nm if k == 1 else "%s^%d" % (nm, k) for nm, k in zip(names, m) if k
            )
            if c.is_monomial():
                cs = c.pretty()
                neg = cs.startswith("-")
                cs = cs.lstrip("-")
                if mono:
                    body = mono if cs == "1" else "%s*%s" % (cs, mono)
                else:
                    body = cs
                parts.append(("-" if neg else "+", body))
            else:
                body = "(%s)" % c.pretty() + ("*" + mono if mono else "")
                parts.append(("+", body))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(" %s %s" % t for t in parts[1:])

    def __repr__(self):
        return "HeckePoly(n=%d, %s)" % (self.n, self.pretty())


def series_to_text(polys):
    return "".join("X^%d\n%s" % (k, h.to_text()) for k, h in enumerate(polys))


def series_from_text(n, text):
    blocks = []
    for line in text.splitlines():
        if line.startswith("X^"):
            blocks.append([])
        elif line.strip() and not line.startswith("#"):
            blocks[-1].append(line)
    return [HeckePoly.from_text(n, "\n".join(b)) for b in blocks]


def series_to_json(polys):
    return json.dumps(
        [{"X": k, "terms": h.to_json_terms()} for k, h in enumerate(polys)], indent=1
    ) + "\n"


# ---------------------------------------------------------------------------
# monomials and their images


def enumerate_monomials(n, k):
    """All generator monomials with x_0-degree k, graded-lex descending."""
    out = []
    for a in range(k, -1, -1):
        if (k - a) % 2:
            continue
        out.extend((a,) + rest for rest in _compositions((k - a) // 2, n))
    return sorted(out, key=mono_key, reverse=True)


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class ImageTable:
    """Memoised Omega(monomial) / x_0^deg for one genus."""

    def __init__(self, n):
        self.n = n
        self.gens = [g.image for g in generator_images(n)]
        self.memo = {(0,) * (n + 1): SymPoly.one(n)}

    def __call__(self, mono):
        mono = tuple(mono)
        r = self.memo.get(mono)
        if r is not None:
            return r
        j = next(i for i, v in enumerate(mono) if v)
        prev = list(mono)
        prev[j] -= 1
        r = self(tuple(prev)) * self.gens[j]
        self.memo[mono] = r
        return r


_tables = {}


def image_table(n):
    t = _tables.get(n)
    if t is None:
        t = _tables[n] = ImageTable(n)
    return t


def monomial_image(mono, n=None):
    if n is None:
        n = len(mono) - 1
    return image_table(n)(mono)


def hecke_image(h):
    """Omega(h) / x_0^k for a HeckePoly homogeneous of x_0-degree k."""
    t = image_table(h.n)
    out = SymPoly.zero(h.n)
    for m, c in h.terms.items():
        out = out + t(m).scale(c)
    return out


# ---------------------------------------------------------------------------
# exact linear solving


def _as_ratfn(v):
    return v if isinstance(v, RatFnP) else RatFnP.from_laurent(v)


def _lcm(a, b):
    g = zpoly.gcd_poly(a, b)
    return zpoly.divexact(zpoly.mul(a, b), g)


def _normalise_row(row):
    """Strip the integer content and the common power of p."""
    g = 0
    lo = None
    for v in row.values():
        for c in v.c:
            g = gcd(g, c)
        lo = v.lo if lo is None else min(lo, v.lo)
    if not row:
        return row
    out = {}
    for k, v in row.items():
        c = tuple(x // g for x in v.c) if g > 1 else v.c
        out[k] = LaurentP._raw(c, v.lo - lo)
    return out


def solve_exact(system, rhs, pivot_log=None):
    """Solve ``system @ K = rhs`` exactly; rows >= columns.

    Entries may be int, LaurentP or RatFnP.  Each row is cleared of
    denominators, then eliminated without fractions over Z[p, 1/p]: unit
    pivots (+-p^k) divide exactly, other pivots cross-multiply and the row's
    content is removed.  The pivot is taken in the sparsest remaining row.
    Raises LinearDependence on rank deficiency and NotInImage when the rhs
    is not in the column space.  Returns a list of RatFnP.
    """
    nrows = len(system)
    if nrows != len(rhs):
        raise UsageError("rhs length does not match the row count")
    ncols = len(system[0]) if nrows else 0
    if nrows < ncols:
        raise UsageError("need at least as many rows as columns")
    rhs_col = ncols
    rows = []
    for r in range(nrows):
        entries = [_as_ratfn(v) for v in system[r]] + [_as_ratfn(rhs[r])]
        den = zpoly.ONE
        for v in entries:
            if v and v.den != den:
                den = _lcm(den, v.den)
        row = {}
        for c, v in enumerate(entries):
            if v:
                row[c] = LaurentP(zpoly.mul(v.num, zpoly.divexact(den, v.den)))
        rows.append(_normalise_row(row))

    active = set(range(nrows))
    col_rows = {}
    for r in active:
        for c in rows[r]:
            if c != rhs_col:
                col_rows.setdefault(c, set()).add(r)
    pivots = []
    unresolved = set(range(ncols))
    while unresolved:
        best = None
        for r in active:
            row = rows[r]
            nnz = sum(1 for c in row if c != rhs_col)
            if not nnz:
                continue
            for c in row:
                if c == rhs_col:
                    continue
                v = row[c]
                score = (nnz, 0 if v.is_unit() else len(v.c), c)
                if best is None or score < best[0]:
                    best = (score, r, c)
            if best is not None and best[0][0] == 1 and best[0][1] == 0:
                break
        if best is None:
            raise LinearDependence("columns %s have no pivot" % sorted(unresolved))
        _, pr, pc = best
        active.discard(pr)
        unresolved.discard(pc)
        pivots.append((pr, pc))
        if pivot_log is not None:
            pivot_log.append((pr, pc))
        prow = rows[pr]
        pv = prow[pc]
        for r in list(col_rows.get(pc, ())):
            if r not in active:
                continue
            row = rows[r]
            a = row.get(pc)
            if not a:
                continue
            if pv.is_unit():
                f = a.divexact(pv)
                new = dict(row)
                for c, v in prow.items():
                    w = new.get(c, ZERO) - f * v
                    if w:
                        new[c] = w
                    else:
                        new.pop(c, None)
                new.pop(pc, None)
            else:
                new = {}
                for c in set(row) | set(prow):
                    w = pv * row.get(c, ZERO) - a * prow.get(c, ZERO)
                    if w:
                        new[c] = w
                new.pop(pc, None)
                new = _normalise_row(new)
            for c in row:
                if c not in new and c != rhs_col:
                    col_rows[c].discard(r)
            for c in new:
                if c not in row and c != rhs_col:
                    col_rows.setdefault(c, set()).add(r)
            rows[r] = new
    for r in active:
        if rows[r]:
            raise NotInImage("inconsistent row %d after elimination" % r)

    sol = [None] * ncols
    for pr, pc in reversed(pivots):
        row = rows[pr]
        acc = _as_ratfn(row.get(rhs_col, ZERO))
        for c, v in row.items():
            if c not in (pc, rhs_col):
                acc = acc - _as_ratfn(v) * sol[c]
        sol[pc] = acc / _as_ratfn(row[pc])
    return sol


# ---------------------------------------------------------------------------


def build_system(target, monos, table):
    images = [table(m) for m in monos]
    parts = set(target.terms)
    for im in images:
        parts.update(im.terms)
    parts = sorted(parts, key=lambda k: (sum(k), k), reverse=True)
    system = [[im.terms.get(k, ZERO) for im in images] for k in parts]
    rhs = [target.terms.get(k, ZERO) for k in parts]
    return system, rhs, parts


def invert_coefficient(target, k, n, monos=None):
    """Solve sum K_j Omega(m_j) = target over all monomials of x_0-degree k."""
    if target.n != n:
        raise UsageError("target has n=%d, expected %d" % (target.n, n))
    table = image_table(n)
    if monos is None:
        monos = enumerate_monomials(n, k)
    if any(x0_degree(m) != k for m in monos):
        raise UsageError("monomial of the wrong x_0-degree supplied")
    if not target:
        return HeckePoly(n)
    system, rhs, _ = build_system(target, monos, table)
    sol = solve_exact(system, rhs)
    terms = {}
    for m, v in zip(monos, sol):
        if v:
            if not v.is_laurent():
                raise NotInImage("coefficient of %r is not a Laurent polynomial: %r" % (m, v))
            terms[m] = v.to_laurent()
    out = HeckePoly(n, terms)
    residual = hecke_image(out) - target
    if residual:
        raise NotInImage("nonzero residual after solving degree %d" % k)
    if any(x0_degree(m) != k for m in out.terms):
        raise NotInImage("solution left the x_0-degree %d" % k)
    return out


def scalar_image(n):
    """Omega([p]) / x_0^2 = p^(-n(n+1)/2) x_1...x_n."""
    return SymPoly(n, {(1,) * n: LaurentP.mono(1, -n * (n + 1) // 2)})


def divide_out_scalar(target, m):
    """target / Omega([p])^m in the x-variables; NotDivisible if some
    partition has a part below m."""
    n = target.n
    e = m * n * (n + 1) // 2
    out = {}
    for k, c in target.terms.items():
        if k[-1] < m:
            raise NotDivisible("partition %r has a part below %d" % (k, m))
        out[tuple(a - m for a in k)] = c.shift(e)
    return SymPoly._raw(n, out)


def max_scalar_power(target):
    return min((k[-1] for k in target.terms), default=0)


def invert_with_scalar(target, k, n, m=None):
    """Divide out [p]^m (maximal by default), invert, multiply back."""
    if m is None:
        m = min(max_scalar_power(target), k // 2)
    reduced = divide_out_scalar(target, m) if m else target
    h = invert_coefficient(reduced, k - 2 * m, n)
    return h * HeckePoly.generator(n, n, m)


def scalar_factor(n, j):
    """(p^{n(n+1)/2} [p])^j, the factor in the denominator symmetry."""
    return HeckePoly.generator(n, n, j) * LaurentP.mono(1, j * n * (n + 1) // 2)
