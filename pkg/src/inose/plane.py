"""Plane curves over Q(u) in homogeneous coordinates ``(x1 : x2 : z)``."""

from __future__ import annotations

import gmpy2
from gmpy2 import mpq, mpz

from .algebra import RatFunc, Rational, UniPoly, _to_int_list, poly_gcd, poly_lcm, rational
from .errors import CommonComponent, PointNotOnCurve, SingularPoint
from .linsolve import det_bareiss

U = "u"


def monomial_basis(degree: int) -> list:
    """Exponent triples of degree ``degree`` in the order x1**l, x1**(l-1)*x2, ..., z**l."""
    out = []
    for i in range(degree, -1, -1):
        for j in range(degree - i, -1, -1):
            out.append((i, j, degree - i - j))
    return out


def _ratfunc(c) -> RatFunc:
    if isinstance(c, RatFunc):
        return c
    if isinstance(c, UniPoly):
        return RatFunc(c)
    return RatFunc.const(rational(c), U)


class TriPoly:
    """Homogeneous polynomial of fixed degree in ``x1, x2, z`` over Q(u)."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms):
        clean = {}
        for exps, c in dict(terms).items():
            if sum(exps) != degree or len(exps) != 3:
                raise ValueError(f"exponent {exps} does not have degree {degree}")
            c = _ratfunc(c)
            if c:
                clean[tuple(exps)] = c
        self.degree = degree
        self.terms = clean

    @classmethod
    def from_vector(cls, degree: int, vector) -> "TriPoly":
        return cls(degree, dict(zip(monomial_basis(degree), vector)))

    def vector(self) -> list:
        """Coefficients in :func:`monomial_basis` order."""
        zero = RatFunc.const(0, U)
        return [self.terms.get(m, zero) for m in monomial_basis(self.degree)]

    def coefficient(self, i: int, j: int, k: int) -> RatFunc:
        return self.terms.get((i, j, k), RatFunc.const(0, U))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, TriPoly):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __add__(self, other: "TriPoly") -> "TriPoly":
        if other.degree != self.degree:
            raise ValueError("cannot add forms of different degree")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return TriPoly(self.degree, out)

    def __neg__(self):
        return TriPoly(self.degree, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TriPoly):
            out = {}
            for (a, b, c), x in self.terms.items():
                for (d, e, f), y in other.terms.items():
                    m = (a + d, b + e, c + f)
                    out[m] = out[m] + x * y if m in out else x * y
            return TriPoly(self.degree + other.degree, out)
        c = _ratfunc(other)
        return TriPoly(self.degree, {m: x * c for m, x in self.terms.items()})

    __rmul__ = __mul__

    def partial(self, var: int) -> "TriPoly":
        """Derivative with respect to x1 (0), x2 (1) or z (2)."""
        out = {}
        for m, c in self.terms.items():
            if m[var]:
                n = list(m)
                n[var] -= 1
                out[tuple(n)] = c * m[var]
        return TriPoly(self.degree - 1, out)

    def negate_var(self) -> "TriPoly":
        """Apply ``u -> -u`` to every coefficient."""
        return TriPoly(self.degree, {m: c.negate_var() for m, c in self.terms.items()})

    def swap_x1_z(self) -> "TriPoly":
        """Exchange the roles of x1 and z (chart change to x1 = 1)."""
        return TriPoly(self.degree, {(k, j, i): c for (i, j, k), c in self.terms.items()})

    def specialize(self, value) -> "TriPoly":
        """Evaluate every coefficient at ``u = value``."""
        value = rational(value)
        return TriPoly(self.degree, {m: c(value) for m, c in self.terms.items()})

    def poly_coefficients(self) -> dict:
        """Scale to coprime polynomial coefficients in Q[u] (integer content 1)."""
        if not self.terms:
            return {}
        den = None
        for c in self.terms.values():
            den = c.den if den is None else poly_lcm(den, c.den)
        polys = {m: c.num * den.exact_div(c.den) for m, c in self.terms.items()}
        g = None
        for p in polys.values():
            g = p if g is None else poly_gcd(g, p)
            if g.degree == 0:
                break
        if g.degree > 0:
            polys = {m: p.exact_div(g) for m, p in polys.items()}
        dens = mpz(1)
        for p in polys.values():
            dens = gmpy2.lcm(dens, _to_int_list(p.coeffs)[1])
        num = mpz(0)
        for p in polys.values():
            for c in p.coeffs:
                num = gmpy2.gcd(num, (c * dens).numerator)
        scale = mpq(dens, num)
        return {m: p.scale(scale) for m, p in polys.items()}

    def primitive(self) -> "TriPoly":
        return TriPoly(self.degree, {m: RatFunc(p) for m, p in self.poly_coefficients().items()})

    def evaluate_at(self, coords):
        """Evaluate at arbitrary ring elements ``(x1, x2, z)``."""
        x, y, w = coords
        powers = [_powers(c, self.degree) for c in (x, y, w)]
        acc = None
        for (i, j, k), c in self.terms.items():
            mono = powers[0][i] * powers[1][j] * powers[2][k]
            term = mono * c
            acc = term if acc is None else acc + term
        if acc is None:
            return RatFunc.const(0, U)
        return acc

    def affine_in_x2(self, chart_swap: bool = False) -> UniPoly:
        """``f(x1, x2, 1)`` as a polynomial in x2 over ``Q[u][x1]`` (coefficients cleared)."""
        polys = (self.swap_x1_z() if chart_swap else self).poly_coefficients()
        by_j = {}
        for (i, j, k), p in polys.items():
            by_j.setdefault(j, {})[i] = p
        coeffs = []
        for j in range(self.degree + 1):
            row = by_j.get(j, {})
            top = max(row) if row else -1
            zero = UniPoly._make([], U)
            coeffs.append(UniPoly._make([row.get(i, zero) for i in range(top + 1)], "x1"))
        return UniPoly._make(coeffs, "x2")

    def substitute_x1_z(self, x1: UniPoly, z: UniPoly) -> UniPoly:
        """``f(x1(u), x2, z(u))`` as a polynomial in x2 with Q[u] coefficients."""
        polys = self.poly_coefficients()
        px = _powers(x1, self.degree)
        pz = _powers(z, self.degree)
        out = {}
        for (i, j, k), p in polys.items():
            t = px[i] * pz[k] * p
            out[j] = out[j] + t if j in out else t
        zero = UniPoly._make([], U)
        return UniPoly._make([out.get(j, zero) for j in range(self.degree + 1)], "x2")

    def __str__(self):
        parts = []
        names = ("x1", "x2", "z")
        for m in monomial_basis(self.degree):
            c = self.terms.get(m)
            if c is None:
                continue
            mono = "*".join(
                n if e == 1 else f"{n}**{e}" for n, e in zip(names, m) if e
            ) or "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


def _powers(x, n):
    one = x ** 0 if not isinstance(x, Rational) else mpq(1)
    out = [one]
    for _ in range(n):
        out.append(out[-1] * x)
    return out


# ---------------------------------------------------------------------------


def _canonical_coords(coords):
    rfs = [_ratfunc(c) for c in coords]
    var = next((r.var for r in rfs if not r.is_constant()), U)
    if not any(rfs):
        raise ValueError("projective point with all coordinates zero")
    den = None
    for r in rfs:
        if r:
            den = r.den if den is None else poly_lcm(den, r.den)
    polys = [UniPoly._make((r.num * den.exact_div(r.den)).coeffs, var) if r else UniPoly._make([], var)
             for r in rfs]
    g = None
    for p in polys:
        if p:
            g = p if g is None else poly_gcd(g, p)
            if g.degree == 0:
                break
    if g.degree > 0:
        polys = [p.exact_div(g) if p else p for p in polys]
    dens = mpz(1)
    for p in polys:
        if p:
            dens = gmpy2.lcm(dens, _to_int_list(p.coeffs)[1])
    num = mpz(0)
    for p in polys:
        for c in p.coeffs:
            num = gmpy2.gcd(num, (c * dens).numerator)
    scale = mpq(dens, num)
    first = next(p for p in polys if p)
    if first.lc < 0:
        scale = -scale
    return tuple(p.scale(scale) if p else p for p in polys)


class ProjPoint:
    """Point ``(x1 : x2 : z)`` with coprime polynomial coordinates in Q[u].

    The stored representative has integer coefficients of content 1 and the
    first nonzero coordinate has a positive leading coefficient.
    """

    __slots__ = ("coords",)

    def __init__(self, x1, x2, z):
        self.coords = _canonical_coords((x1, x2, z))

    @property
    def x1(self) -> UniPoly:
        return self.coords[0]

    @property
    def x2(self) -> UniPoly:
        return self.coords[1]

    @property
    def z(self) -> UniPoly:
        return self.coords[2]

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        a, b = self.coords, other.coords
        return all(a[i] * b[j] == a[j] * b[i] for i, j in ((0, 1), (0, 2), (1, 2)))

    def __hash__(self):
        return hash(self.coords)

    def negate_var(self) -> "ProjPoint":
        return ProjPoint(*(c.negate_var() for c in self.coords))

    def specialize(self, value) -> "ProjPoint":
        value = rational(value)
        vals = [c(value) if c else mpq(0) for c in self.coords]
        return ProjPoint(*vals)

    def affine(self):
        """``(x1/z, x2/z)`` as rational functions; raises if the point is at infinity."""
        if not self.z:
            raise ZeroDivisionError("point lies on the line z = 0")
        return RatFunc(self.x1, self.z), RatFunc(self.x2, self.z)

    def __repr__(self):
        return f"ProjPoint({self.x1} : {self.x2} : {self.z})"


# ---------------------------------------------------------------------------


def evaluate(f: TriPoly, p: ProjPoint) -> RatFunc:
    """Value of ``f`` at the canonical representative of ``p``."""
    polys = f.poly_coefficients() if f.terms else {}
    if not polys:
        return RatFunc.const(0, U)
    value = f.evaluate_at(p.coords)
    return value if isinstance(value, RatFunc) else _ratfunc(value)


def tangent_third_point(c: TriPoly, p: ProjPoint) -> ProjPoint:
    """Residual intersection of the tangent line at ``p`` with the cubic ``c``.

    The line is parametrized as ``p + t*v`` with ``v`` a second point on the
    tangent; ``c(p + t v) = t**2 (a + b t)`` and the residual point is
    ``b*p - a*v``.  An inflection point is returned unchanged.
    """
    if c.degree != 3:
        raise ValueError("tangent_third_point needs a cubic")
    if evaluate(c, p):
        raise PointNotOnCurve(f"{p} is not on the cubic")
    grad = [_ratfunc(c.partial(k).evaluate_at(p.coords)) for k in range(3)]
    if not any(grad):
        raise SingularPoint(f"{p} is a singular point of the cubic")
    pc = [_ratfunc(x) for x in p.coords]
    v = None
    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        cand = _cross(grad, [RatFunc.const(x, U) for x in e])
        if any(cand) and any(_cross(cand, pc)):
            v = cand
            break
    t_coords = [UniPoly._make([a, b], "t") for a, b in zip(pc, v)]
    g = c.evaluate_at(t_coords)
    if g[0] or g[1]:
        raise SingularPoint("tangent computation lost contact order")
    a, b = g[2], g[3]
    if not a and not b:
        raise CommonComponent("the tangent line is a component of the cubic")
    return ProjPoint(*(b * x - a * y for x, y in zip(pc, v)))


def _cross(a, b):
    return [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]


def sylvester(f: UniPoly, g: UniPoly) -> list:
    """Sylvester matrix of ``f`` and ``g`` (rows of coefficient-ring elements)."""
    m, n = f.degree, g.degree
    size = m + n
    zero = f.lc - f.lc
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def resultant(f: UniPoly, g: UniPoly):
    """Resultant via the Bareiss determinant of the Sylvester matrix."""
    if not f or not g:
        return f.lc - f.lc if f else g.lc - g.lc
    if f.degree == 0 and g.degree == 0:
        return f.lc ** 0
    if f.degree == 0:
        return f.lc ** g.degree
    if g.degree == 0:
        return g.lc ** f.degree
    return det_bareiss(sylvester(f, g))


def resultant_x2_poly(f: TriPoly, g: TriPoly, chart_swap: bool = False):
    """Resultant w.r.t. x2 of the affine parts, as a polynomial in ``Q[u][x1]``.

    Returns ``(res, deficiency)`` where ``deficiency = deg f * deg g - deg res``
    counts intersections on the line at infinity of the chart.
    """
    fa = f.affine_in_x2(chart_swap)
    ga = g.affine_in_x2(chart_swap)
    res = resultant(fa, ga)
    if not isinstance(res, UniPoly) or not res:
        raise CommonComponent("the curves share a component (resultant vanishes)")
    return res, f.degree * g.degree - res.degree


def resultant_x2(f: TriPoly, g: TriPoly, chart_swap: bool = False):
    """Resultant of ``f(x1, x2, 1)`` and ``g(x1, x2, 1)`` with respect to x2.

    Returns ``(res, deficiency)`` with ``res`` a polynomial in x1 whose
    coefficients are :class:`RatFunc` values in u.  With ``chart_swap`` the
    roles of x1 and z are exchanged, so the roots are values of ``z/x1``.
    """
    res, deficiency = resultant_x2_poly(f, g, chart_swap)
    return res.map_coeffs(_ratfunc), deficiency
