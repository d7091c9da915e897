"""Sections of the Inose fibration attached to an isogeny.

Outline of :func:`run_pipeline`:

1. build the cubic ``C_u`` and the point ``O = (1 : u**2 : 0)``; find ``Ō`` as
   the third point of the tangent at ``O``;
2. split the degree ``3d`` divisor cut out by ``x2 = phi_x(x1)`` into the two
   halves ``p+``, ``p-`` (numerators of ``phi_y ∓ u**3``);
3. for each sign, solve for a curve of degree ``ceil(d/2)`` through the
   half-divisor (plus ``O`` and ``Ō`` when ``d`` is odd);
4. read off the one remaining intersection point with ``C_u``;
5. move both points to ``F6`` and subtract them there;
6. rewrite the difference in ``s = u**6`` and compute its height.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from gmpy2 import mpq

from .algebra import (RatFunc, Rational, UniPoly, _ring_subresultant_gcd, descend_to_s,
                      lift_from_s, poly_gcd, poly_sqrt, rational)
from .elliptic import (ECPoint, EllipticCurve, RationalMap, WeierstrassModel, discriminant,
                       ec_sub, verify_isogeny)
from .errors import (DegenerateSection, DegreeMismatch, EmptyFamily,
                     EqualJInvariant, GcdNotLinear, HeightMismatch, IsogenyInvalid,
                     NonIntegralIntersection, NotSquarefree, PointNotOnCurve,
                     ResidualNotLinear, SingularInput, TransformDenominatorVanishes)
from .linsolve import FFMatrix, nullspace, reduce_basis
from .plane import (ProjPoint, TriPoly, evaluate, monomial_basis, resultant_x2_poly,
                    tangent_third_point)

log = logging.getLogger(__name__)

U = "u"
_u = UniPoly.gen(U)


def _upoly(c) -> UniPoly:
    return UniPoly.const(c, U)


# ---------------------------------------------------------------------------
# coefficient block and models


@dataclass(frozen=True)
class InoseData:
    A: Rational
    B: Rational
    delta1: Rational
    delta2: Rational


def inose_coefficients(e1: EllipticCurve, e2: EllipticCurve) -> InoseData:
    d1, d2 = discriminant(e1), discriminant(e2)
    if not d1 or not d2:
        raise SingularInput("both curves must have nonzero discriminant")
    a2, a4, a6 = e1.coefficients()
    b2, b4, b6 = e2.coefficients()
    A = (a2 ** 2 - 3 * a4) * (b2 ** 2 - 3 * b4)
    B = mpq(32, 27) * (2 * a2 ** 3 - 9 * a2 * a4 + 27 * a6) * (2 * b2 ** 3 - 9 * b2 * b4 + 27 * b6)
    return InoseData(A, B, d1, d2)


def build_model(data: InoseData, n: int = 6, var: str | None = None) -> WeierstrassModel:
    """``F^(n): Y² = X³ - (A/3)X + (Δ1 tⁿ + B + Δ2/tⁿ)/64``.

    ``var`` defaults to ``"s"`` for ``n == 1`` and ``"u"`` otherwise.
    """
    if n < 1:
        raise ValueError("n must be positive")
    var = var or ("s" if n == 1 else U)
    tn = UniPoly.monomial(1, n, var)
    beta = RatFunc(tn * tn * data.delta1 + tn * data.B + UniPoly.const(data.delta2, var),
                   tn * 64)
    return WeierstrassModel(RatFunc.const(-data.A / 3, var), beta)


def build_cubic(e1: EllipticCurve, e2: EllipticCurve) -> TriPoly:
    """``x2³ + a2'x2²z + a4'x2z² + a6'z³ - u⁶(x1³ + a2x1²z + a4x1z² + a6z³)``."""
    a2, a4, a6 = e1.coefficients()
    b2, b4, b6 = e2.coefficients()
    u6 = _u ** 6
    terms = {
        (0, 3, 0): 1, (0, 2, 1): b2, (0, 1, 2): b4,
        (3, 0, 0): -u6, (2, 0, 1): u6 * -a2, (1, 0, 2): u6 * -a4,
        (0, 0, 3): u6 * -a6 + b6,
    }
    return TriPoly(3, terms)


def origin() -> ProjPoint:
    return ProjPoint(1, _u ** 2, 0)


def origin_bar(cubic: TriPoly) -> ProjPoint:
    return tangent_third_point(cubic, origin())


@dataclass(frozen=True)
class TransformTables:
    """Linear forms ``c*`` and quadratic forms ``d*`` of the map from the cubic to F6."""

    c6: TriPoly
    c4: TriPoly
    c2: TriPoly
    c0: TriPoly
    d10: TriPoly
    d6: TriPoly
    d4: TriPoly
    d0: TriPoly

    @classmethod
    def from_curves(cls, e1: EllipticCurve, e2: EllipticCurve) -> "TransformTables":
        a2, a4, a6 = e1.coefficients()
        b2, b4, b6 = e2.coefficients()
        p1 = a2 ** 2 - 3 * a4
        p2 = b2 ** 2 - 3 * b4
        q1 = 2 * a2 ** 3 - 9 * a2 * a4 + 27 * a6
        q2 = 2 * b2 ** 3 - 9 * b2 * b4 + 27 * b6

        def lin(x1=0, x2=0, z=0):
            return TriPoly(1, {(1, 0, 0): x1, (0, 1, 0): x2, (0, 0, 1): z})

        def quad(x1x1=0, x1z=0, x2x2=0, x2z=0, zz=0):
            return TriPoly(2, {(2, 0, 0): x1x1, (1, 0, 1): x1z, (0, 2, 0): x2x2,
                               (0, 1, 1): x2z, (0, 0, 2): zz})

        return cls(
            c6=lin(x1=6 * p1, z=3 * (a2 * a4 - 9 * a6)),
            c4=lin(x2=3 * p1, z=p1 * b2),
            c2=lin(x1=-3 * p2, z=-p2 * a2),
            c0=lin(x2=-6 * p2, z=-3 * (b2 * b4 - 9 * b6)),
            d10=quad(x1x1=-3 * q1,
                     x1z=2 * (a2 ** 4 - 9 * a2 ** 2 * a4 - 27 * a2 * a6 + 27 * a4 ** 2),
                     zz=a2 ** 3 * a4 - 27 * a2 ** 2 * a6 + 54 * a4 * a6),
            d6=quad(x1z=-6 * p1 * p2, x2x2=3 * q1, x2z=2 * b2 * q1,
                    zz=2 * a2 ** 3 * b4 - 3 * a2 * a4 * b2 ** 2 + 27 * a6 * b2 ** 2 - 54 * a6 * b4),
            d4=quad(x1x1=3 * q2, x1z=2 * a2 * q2, x2z=-6 * p1 * p2,
                    zz=-(3 * a2 ** 2 * b2 * b4 - 2 * a4 * b2 ** 3 - 27 * a2 ** 2 * b6
                         + 54 * a4 * b6)),
            d0=quad(x2x2=-3 * q2,
                    x2z=2 * (b2 ** 4 - 9 * b2 ** 2 * b4 - 27 * b2 * b6 + 27 * b4 ** 2),
                    zz=b2 ** 3 * b4 - 27 * b2 ** 2 * b6 + 54 * b4 * b6),
        )


def _eval_form(form: TriPoly, coords) -> UniPoly:
    """Value of a form with rational coefficients at polynomial coordinates."""
    x, y, z = coords
    acc = UniPoly._make([], U)
    for (i, j, k), c in form.terms.items():
        acc = acc + (x ** i * y ** j * z ** k).scale(c.num.constant())
    return acc


def psi_transform(e1: EllipticCurve, e2: EllipticCurve, p: ProjPoint,
                  tables: TransformTables | None = None, u=None,
                  extend: bool = False) -> ECPoint:
    """Image of a point of ``C_u`` on ``F6`` (``O`` goes to the point at infinity).

    With ``u`` given, ``p`` is a point of the specialized cubic and the image
    lies on the specialized model (see :meth:`WeierstrassModel.specialize`).

    The common denominator of the formulas is the tangent line at ``O``, so
    they read 0/0 at ``Ō``.  By default that raises
    :class:`TransformDenominatorVanishes`; with ``extend=True`` the value is
    taken as the limit along the cubic instead.
    """
    uu = _u if u is None else _upoly(rational(u))
    if p == ProjPoint(1, uu * uu, 0):
        return ECPoint.infinity()
    t = tables or TransformTables.from_curves(e1, e2)
    x1, x2, z = (RatFunc(c) for c in p.coords)
    den = _psi_parts(e1, e2, t, uu, (x1, x2, z))[0]
    if den:
        return _psi_quotient(*_psi_parts(e1, e2, t, uu, (x1, x2, z)))
    if not extend:
        raise TransformDenominatorVanishes(f"(3x1 + a2 z)u² - (3x2 + a2' z) vanishes at {p}")
    cubic = build_cubic(e1, e2)
    cubic = cubic if u is None else cubic.specialize(u)
    return _psi_limit(e1, e2, t, uu, cubic, (x1, x2, z))


def _psi_parts(e1, e2, t, uu, coords):
    """Denominator line and the X, Y numerators at ``coords`` (any ring)."""
    x1, x2, z = coords
    u2 = uu * uu
    u4 = u2 * u2
    u6 = u4 * u2
    den = (x1 * 3 + z * e1.a2) * u2 - (x2 * 3 + z * e2.a2)
    c = {k: _eval_form(getattr(t, f"c{k}"), coords) for k in (6, 4, 2, 0)}
    d = {k: _eval_form(getattr(t, f"d{k}"), coords) for k in (10, 6, 4, 0)}
    xnum = c[6] * u6 + c[4] * u4 + c[2] * u2 + c[0]
    ynum = d[10] * u6 * u4 + d[6] * u6 + d[4] * u4 + d[0]
    return den, xnum, ynum, uu


def _psi_quotient(den, xnum, ynum, uu):
    u2 = RatFunc(uu * uu)
    return ECPoint(xnum / (u2 * den * 3), ynum / (u2 * RatFunc(uu) * den * den * 2))


def _eval_form(form: TriPoly, coords):
    """Value of a form with constant coefficients at ``coords``."""
    x, y, z = coords
    acc = None
    for (i, j, k), c in form.terms.items():
        term = x ** i * y ** j * z ** k * c.num.constant()
        acc = term if acc is None else acc + term
    return acc if acc is not None else x * 0


class _Series:
    """Truncated power series in a local parameter, coefficients in Q(u)."""

    __slots__ = ("c", "N")

    def __init__(self, coeffs, n: int):
        zero = RatFunc.const(0)
        c = list(coeffs)[:n]
        self.N = n
        self.c = c + [zero] * (n - len(c))

    def _lift(self, other):
        if isinstance(other, _Series):
            return other
        return _Series([RatFunc(other) if isinstance(other, UniPoly) else
                        other if isinstance(other, RatFunc) else RatFunc.const(other)], self.N)

    def __add__(self, other):
        other = self._lift(other)
        return _Series([a + b for a, b in zip(self.c, other.c)], self.N)

    __radd__ = __add__

    def __neg__(self):
        return _Series([-a for a in self.c], self.N)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        other = self._lift(other)
        out = [RatFunc.const(0)] * self.N
        for i, a in enumerate(self.c):
            if a:
                for j in range(self.N - i):
                    if other.c[j]:
                        out[i + j] = out[i + j] + a * other.c[j]
        return _Series(out, self.N)

    __rmul__ = __mul__

    def __pow__(self, n):
        acc = _Series([RatFunc.const(1)], self.N)
        for _ in range(n):
            acc = acc * self
        return acc

    def inverse(self):
        a0 = self.c[0].inverse()
        out = [a0]
        for k in range(1, self.N):
            acc = RatFunc.const(0)
            for j in range(1, k + 1):
                acc = acc + self.c[j] * out[k - j]
            out.append(-acc * a0)
        return _Series(out, self.N)

    def order(self):
        return next((k for k, a in enumerate(self.c) if a), None)


def _psi_limit(e1, e2, t, uu, cubic, coords):
    """Evaluate the transform along a formal branch of the cubic through ``coords``."""
    chart = next(k for k in (2, 0, 1) if coords[k])
    base = [c / coords[chart] for c in coords]
    grad = [cubic.partial(k).evaluate_at(base) for k in range(3)]
    free = [k for k in range(3) if k != chart]
    # parameter along one free coordinate, solve for the other by Newton's method
    solve = next(k for k in free if grad[k])
    param = next(k for k in free if k != solve)
    deriv = cubic.partial(solve)
    n = 4
    while True:
        eps = _Series([RatFunc.const(0), RatFunc.const(1)], n)
        pt = [None] * 3
        pt[chart] = _Series([RatFunc.const(1)], n)
        pt[param] = _Series([base[param]], n) + eps
        pt[solve] = _Series([base[solve]], n)
        for _ in range(n.bit_length()):
            f = _series_form(cubic, pt, n)
            df = _series_form(deriv, pt, n)
            pt[solve] = pt[solve] - f * df.inverse()
        den, xnum, ynum, _ = _psi_parts(e1, e2, t, uu, pt)
        u2 = RatFunc(uu * uu)
        xden = den * u2 * 3
        yden = den * den * u2 * RatFunc(uu) * 2
        if yden.order() is not None:
            return ECPoint(_series_limit(xnum, xden), _series_limit(ynum, yden))
        if n >= 32:
            raise TransformDenominatorVanishes("the denominator vanishes along the cubic")
        n *= 2


def _series_form(form, pt, n):
    acc = _Series([], n)
    for (i, j, k), c in form.terms.items():
        acc = acc + pt[0] ** i * pt[1] ** j * pt[2] ** k * c
    return acc


def _series_limit(num, den):
    k = den.order()
    if k is None or (num.order() is not None and num.order() < k):
        raise TransformDenominatorVanishes("the transform has a pole along the cubic")
    return num.c[k] / den.c[k]


# ---------------------------------------------------------------------------
# divisor splitting and curve fitting


def expected_half_degree(d: int) -> int:
    return (3 * d - 3) // 2 if d % 2 else (3 * d - 2) // 2


def fitting_degree(d: int) -> int:
    return (d + 1) // 2


@dataclass(frozen=True)
class SplitPair:
    """The two halves ``p±`` of the divisor, polynomials in x1 over Q[u]."""

    p_plus: UniPoly
    p_minus: UniPoly
    r: int
    x_num: UniPoly
    x_den: UniPoly

    def for_sign(self, sign: int) -> UniPoly:
        return self.p_plus if sign > 0 else self.p_minus


def _lift_x1(p: UniPoly) -> UniPoly:
    """View a Q[x1] polynomial inside Q[u][x1]."""
    return UniPoly._make([_upoly(c) for c in p.coeffs], "x1")


def split_divisor(e1: EllipticCurve, e2: EllipticCurve, phi: RationalMap) -> SplitPair:
    """``p± = y_num ∓ u³ y_den`` with degree and squarefreeness checks."""
    _check_inputs(e1, e2, phi)
    u3 = _u ** 3
    n = max(len(phi.y_num), len(phi.y_den))
    plus, minus = [], []
    for k in range(n):
        a, b = phi.y_num[k], phi.y_den[k]
        plus.append(_upoly(a) - u3 * b)
        minus.append(_upoly(a) + u3 * b)
    p_plus = UniPoly._make(plus, "x1")
    p_minus = UniPoly._make(minus, "x1")
    r = expected_half_degree(phi.degree)
    if p_plus.degree != r or p_minus.degree != r:
        raise DegreeMismatch(f"deg p± = {p_plus.degree}, expected {r} for d = {phi.degree}")
    cubic = _lift_x1(e1.cubic())
    for name, p in (("p+", p_plus), ("p-", p_minus)):
        if poly_gcd(p, p.derivative()).degree > 0:
            raise NotSquarefree(f"{name} has a repeated root")
        if poly_gcd(p, cubic).degree > 0:
            raise NotSquarefree(f"{name} shares a root with the cubic of E1")
    if poly_gcd(p_plus, p_minus).degree > 0:
        raise NotSquarefree("p+ and p- share a root")
    return SplitPair(p_plus, p_minus, r, phi.x_num, phi.x_den)


def _check_inputs(e1, e2, phi):
    if not discriminant(e1) or not discriminant(e2):
        raise SingularInput("both curves must have nonzero discriminant")
    if e1.j_invariant == e2.j_invariant:
        raise EqualJInvariant(f"j(E1) = j(E2) = {e1.j_invariant}")
    report = verify_isogeny(e1, e2, phi)
    if not report.passed:
        raise IsogenyInvalid(f"the map is not an isogeny of the declared degree: {report}")


def _uniform_rem(m: UniPoly, p: UniPoly, top: int) -> UniPoly:
    """``lc(p)**(top - deg p + 1) * m mod p`` for any ``deg m <= top``."""
    lc = p.lc
    if m.degree < p.degree:
        return m.scale(lc ** (top - p.degree + 1))
    return m.scale(lc ** (top - m.degree)).pseudo_rem(p)


def fitting_system(pair: SplitPair, sign: int, obar: ProjPoint | None, degree: int) -> FFMatrix:
    """Linear conditions on the coefficients of a curve of the given degree.

    Rows say that ``q(x1, phi_x(x1), 1)`` vanishes modulo ``p±`` and, when
    ``obar`` is given, that ``q`` passes through ``O`` and ``Ō``.
    """
    p = pair.for_sign(sign)
    basis = monomial_basis(degree)
    xn, xd = pair.x_num, pair.x_den
    x = UniPoly.gen("x1")
    images = [x ** i * xn ** j * xd ** (degree - j) for (i, j, k) in basis]
    top = max(m.degree for m in images)
    rems = [_uniform_rem(_lift_x1(m), p, top) for m in images]
    rows = []
    zero = _upoly(0)
    for k in range(p.degree):
        rows.append([RatFunc(r[k] if k < len(r) else zero) for r in rems])
    if obar is not None:
        o = origin()
        rows.append([RatFunc(_mono_value(m, o.coords)) for m in basis])
        rows.append([RatFunc(_mono_value(m, obar.coords)) for m in basis])
    return FFMatrix.from_rows(rows)


def _mono_value(m, coords) -> UniPoly:
    (i, j, k), (x, y, z) = m, coords
    return x ** i * y ** j * z ** k


def is_multiple_of_cubic(q: TriPoly, cubic: TriPoly) -> bool:
    """Whether the form ``q`` is divisible by ``cubic`` (which is monic in x2)."""
    if q.degree < cubic.degree:
        return False
    a = q.affine_in_x2()
    b = cubic.affine_in_x2()
    # b has leading coefficient 1 in x2, so the pseudo-remainder is the remainder
    return not a.pseudo_rem(b)


def fitting_family(cubic: TriPoly, pair: SplitPair, sign: int, obar: ProjPoint,
                   d: int) -> list:
    """Reduced kernel basis of the fitting system, as forms."""
    degree = fitting_degree(d)
    m = fitting_system(pair, sign, obar if d % 2 else None, degree)
    kernel = reduce_basis(nullspace(m))
    return [TriPoly.from_vector(degree, v) for v in kernel]


def fit_curve(cubic: TriPoly, pair: SplitPair, sign: int, obar: ProjPoint, d: int) -> TriPoly:
    """A curve of degree ``ceil(d/2)`` through the half divisor (and ``O``, ``Ō`` for odd d).

    Among the reduced kernel basis the first form that is not a multiple of
    the cubic is returned, so the choice is deterministic.
    """
    for q in fitting_family(cubic, pair, sign, obar, d):
        if not is_multiple_of_cubic(q, cubic):
            return q
    raise EmptyFamily("every fitted curve is a multiple of the cubic")


def check_fit(q: TriPoly, cubic: TriPoly, pair: SplitPair, sign: int, obar: ProjPoint | None,
              d: int) -> bool:
    """Verify the fitting conditions for an arbitrary form ``q``."""
    m = fitting_system(pair, sign, obar if d % 2 else None, q.degree)
    return not any(m.apply(q.vector())) and not is_multiple_of_cubic(q, cubic)


# ---------------------------------------------------------------------------
# residual intersection point


def ninth_point(cubic: TriPoly, q: TriPoly, pair: SplitPair, sign: int, obar: ProjPoint,
                d: int) -> ProjPoint:
    """The last intersection point of ``q`` with the cubic.

    The resultant in x2 is divided exactly by every known factor (the half
    divisor, and ``Ō``'s x1-coordinate for odd ``d``); ``O`` is accounted for
    by the degree drop.  What remains must be linear.
    """
    p = pair.for_sign(sign)
    odd = bool(d % 2)
    try:
        return _residual(cubic, q, p, obar if odd else None, odd, chart_swap=False)
    except _AtInfinity:
        log.debug("residual point lies on z = 0, switching to the chart x1 = 1")
        return _residual(cubic, q, p, obar if odd else None, odd, chart_swap=True)


class _AtInfinity(Exception):
    pass


def _residual(cubic, q, p, obar, through_origin, chart_swap):
    res, deficiency = resultant_x2_poly(cubic, q, chart_swap)
    expected_def = 0
    known = []
    if chart_swap:
        # roots are z/x1; the half divisor maps to reversed polynomials, O to t = 0
        known.append(p.reverse())
        if through_origin:
            known.append(UniPoly._make([_upoly(0), _upoly(1)], "x1"))
    else:
        known.append(p)
        if through_origin:
            expected_def += 1
    if obar is not None:
        a, c = (obar.z, obar.x1) if chart_swap else (obar.x1, obar.z)
        if c:
            known.append(UniPoly._make([-a, c], "x1"))
        else:
            expected_def += 1
    for factor in known:
        try:
            res = res.exact_div(factor)
        except ArithmeticError:
            raise ResidualNotLinear("a prescribed point is missing from the intersection") from None
    if res.degree == 0 and deficiency == expected_def + 1 and not chart_swap:
        raise _AtInfinity()
    if res.degree != 1 or deficiency != expected_def:
        raise ResidualNotLinear(
            f"residual factor has degree {res.degree} (deficiency {deficiency}, "
            f"expected {expected_def})")
    b, a = res.coeffs
    x1 = RatFunc(-b, a)
    chart = cubic.swap_x1_z() if chart_swap else cubic
    qc = q.swap_x1_z() if chart_swap else q
    X, Z = x1.num, x1.den
    f = chart.substitute_x1_z(X, Z)
    g = qc.substitute_x1_z(X, Z)
    h = _ring_subresultant_gcd(f, g)
    if h.degree != 1:
        raise GcdNotLinear(f"common factor in x2 has degree {h.degree}")
    h0, h1 = h.coeffs
    try:
        W = (-h0).exact_div(h1)
        coords = (X, W, Z)
    except ArithmeticError:
        w = RatFunc(-h0, h1)
        coords = (X * w.den, w.num, Z * w.den)
    if chart_swap:
        coords = (coords[2], coords[1], coords[0])
    point = ProjPoint(*coords)
    if evaluate(cubic, point) or evaluate(q, point):
        raise PointNotOnCurve("residual point fails to lie on both curves")
    return point


# ---------------------------------------------------------------------------
# sections and heights


@dataclass(frozen=True)
class SectionF1:
    X: RatFunc
    Y: RatFunc
    height: Rational
    intersection: int
    degree: int

    def point(self) -> ECPoint:
        return ECPoint(self.X, self.Y)


def lift_to_f6(section: "SectionF1 | ECPoint") -> ECPoint:
    p = section.point() if isinstance(section, SectionF1) else section
    if p.is_infinity:
        return p
    return ECPoint(lift_from_s(p.x), lift_from_s(p.y))


def _pole_excess(order: int, place: str) -> int:
    if order <= 0:
        return 0
    if order % 2:
        raise NonIntegralIntersection(f"odd pole order {order + 2} of X at s = {place}")
    return order // 2


def intersection_with_zero(x: RatFunc) -> int:
    """``(P.O)`` from the X-coordinate of a section of F1 in the variable s."""
    den = x.den
    ord0 = den.ord0()
    rest = UniPoly._make(den.coeffs[ord0:], den.var)
    if poly_sqrt(rest.monic()) is None:
        raise NonIntegralIntersection("the denominator of X is not a square away from s = 0")
    finite = rest.degree // 2
    at_zero = _pole_excess(ord0 - 2, "0")
    at_infinity = _pole_excess(x.num.degree - x.den.degree - 2, "infinity")
    return finite + at_zero + at_infinity


def section_height(section, data: InoseData | None = None) -> Rational:
    """Height ``4 + 2(P.O)``; the two II* fibres contribute nothing.

    With ``data`` the point is first checked to lie on F1.
    """
    if isinstance(section, SectionF1):
        point = section.point()
    else:
        point = section
    if point.is_infinity:
        return mpq(0)
    if data is not None and not build_model(data, 1).contains(point):
        raise PointNotOnCurve("section is not on F1")
    return mpq(4 + 2 * intersection_with_zero(point.x))


def assemble_section(p_plus: ECPoint, p_minus: ECPoint, data: InoseData, degree: int = 0,
                     check: bool = True) -> SectionF1:
    """Difference of the two lifts on F6, rewritten over Q(s) on F1."""
    f6 = build_model(data, 6)
    diff = ec_sub(f6, p_plus, p_minus, check=check)
    if diff.is_infinity:
        raise DegenerateSection("P+ = P-, the difference is the zero section")
    X, Y = descend_to_s(diff.x), descend_to_s(diff.y)
    f1 = build_model(data, 1)
    point = ECPoint(X, Y)
    if not f1.contains(point):
        raise PointNotOnCurve("descended point is not on F1")
    po = intersection_with_zero(X)
    return SectionF1(X, Y, mpq(4 + 2 * po), po, degree)


@dataclass
class PipelineRun:
    """Every intermediate of one run, keyed by sign (+1 / -1) where applicable."""

    e1: EllipticCurve
    e2: EllipticCurve
    phi: RationalMap
    data: InoseData
    cubic: TriPoly
    origin: ProjPoint
    origin_bar: ProjPoint
    pair: SplitPair
    fitted: dict = field(default_factory=dict)
    ninth: dict = field(default_factory=dict)
    lifted: dict = field(default_factory=dict)
    section: SectionF1 | None = None


def run_pipeline(e1: EllipticCurve, e2: EllipticCurve, phi: RationalMap) -> PipelineRun:
    data = inose_coefficients(e1, e2)
    pair = split_divisor(e1, e2, phi)
    cubic = build_cubic(e1, e2)
    o = origin()
    obar = origin_bar(cubic)
    run = PipelineRun(e1, e2, phi, data, cubic, o, obar, pair)
    tables = TransformTables.from_curves(e1, e2)
    f6 = build_model(data, 6)
    d = phi.degree
    for sign in (1, -1):
        q = fit_curve(cubic, pair, sign, obar, d)
        point = ninth_point(cubic, q, pair, sign, obar, d)
        lifted = psi_transform(e1, e2, point, tables)
        if not f6.contains(lifted):
            raise PointNotOnCurve("image under the transform is not on F6")
        run.fitted[sign], run.ninth[sign], run.lifted[sign] = q, point, lifted
        log.debug("sign %+d: ninth point %s", sign, point)
    run.section = assemble_section(run.lifted[1], run.lifted[-1], data, d, check=False)
    return run


def compute_section(e1: EllipticCurve, e2: EllipticCurve, phi: RationalMap) -> SectionF1:
    """End-to-end: the section of F1 attached to ``phi``; its height must be ``2 deg phi``."""
    section = run_pipeline(e1, e2, phi).section
    if section.height != 2 * phi.degree:
        raise HeightMismatch(f"height {section.height} != 2 * {phi.degree}")
    return section
