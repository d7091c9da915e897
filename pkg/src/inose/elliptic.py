"""Elliptic curves over Q, explicit isogenies, and short Weierstrass models over Q(u)."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import RatFunc, Rational, UniPoly, poly_gcd, rational
from .errors import PointNotOnCurve

X1 = "x1"


@dataclass(frozen=True)
class EllipticCurve:
    """``y**2 = x**3 + a2*x**2 + a4*x + a6`` over Q."""

    a2: Rational
    a4: Rational
    a6: Rational

    def __post_init__(self):
        for name in ("a2", "a4", "a6"):
            object.__setattr__(self, name, rational(getattr(self, name)))

    def cubic(self, var: str = X1) -> UniPoly:
        return UniPoly([self.a6, self.a4, self.a2, 1], var)

    @property
    def discriminant(self) -> Rational:
        return discriminant(self)

    @property
    def j_invariant(self) -> Rational:
        d = discriminant(self)
        if not d:
            raise ZeroDivisionError("singular curve has no j-invariant")
        c4 = 16 * (self.a2 ** 2 - 3 * self.a4)
        return c4 ** 3 / d

    def coefficients(self) -> tuple:
        return self.a2, self.a4, self.a6


def discriminant(e: EllipticCurve) -> Rational:
    """``16(a2²a4² - 4a4³ - 4a2³a6 + 18a2a4a6 - 27a6²)``."""
    a2, a4, a6 = e.a2, e.a4, e.a6
    return 16 * (a2 ** 2 * a4 ** 2 - 4 * a4 ** 3 - 4 * a2 ** 3 * a6
                 + 18 * a2 * a4 * a6 - 27 * a6 ** 2)


@dataclass(frozen=True)
class RationalMap:
    """Isogeny ``(x, y) -> (x_num/x_den, (y_num/y_den) * y)`` given by polynomials in x1."""

    x_num: UniPoly
    x_den: UniPoly
    y_num: UniPoly
    y_den: UniPoly
    degree: int

    @classmethod
    def from_coefficients(cls, x_num, x_den, y_num, y_den, degree: int) -> "RationalMap":
        """Build from ascending coefficient lists (ints, ``"p/q"`` strings...)."""
        return cls(UniPoly(x_num, X1), UniPoly(x_den, X1), UniPoly(y_num, X1),
                   UniPoly(y_den, X1), int(degree))

    def shape_problems(self) -> list:
        problems = []
        if poly_gcd(self.x_num, self.x_den).degree > 0:
            problems.append("x numerator and denominator share a factor")
        if poly_gcd(self.y_num, self.y_den).degree > 0:
            problems.append("y numerator and denominator share a factor")
        if self.x_num.degree != self.x_den.degree + 1:
            problems.append("deg x_num != deg x_den + 1")
        if self.degree < 2:
            problems.append("degree must be at least 2")
        return problems

    def phi_x(self) -> RatFunc:
        return RatFunc(self.x_num, self.x_den)

    def phi_y(self) -> RatFunc:
        return RatFunc(self.y_num, self.y_den)


@dataclass(frozen=True)
class IsogenyReport:
    identity_holds: bool
    degree_matches: bool
    shape_problems: tuple

    @property
    def passed(self) -> bool:
        return self.identity_holds and self.degree_matches

    def __bool__(self):
        return self.passed


def verify_isogeny(e1: EllipticCurve, e2: EllipticCurve, phi: RationalMap) -> IsogenyReport:
    """Check that ``phi`` maps ``e1`` into ``e2``.

    The curve-map identity ``E2(phi_x) = phi_y**2 * E1(x)`` is tested after
    clearing denominators, i.e.
    ``(xn³ + a2'xn²xd + a4'xn xd² + a6'xd³) yd² = yn² (x³ + a2x² + a4x + a6) xd³``.
    """
    xn, xd, yn, yd = phi.x_num, phi.x_den, phi.y_num, phi.y_den
    b2, b4, b6 = e2.coefficients()
    lhs = (xn ** 3 + xn ** 2 * xd * b2 + xn * xd ** 2 * b4 + xd ** 3 * b6) * yd ** 2
    rhs = yn ** 2 * e1.cubic() * xd ** 3
    identity = bool(xd) and bool(yd) and lhs == rhs
    return IsogenyReport(identity, xn.degree == phi.degree, tuple(phi.shape_problems()))


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeierstrassModel:
    """``Y**2 = X**3 + alpha*X + beta`` over a rational function field."""

    alpha: RatFunc
    beta: RatFunc

    def __post_init__(self):
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if not isinstance(v, RatFunc):
                object.__setattr__(self, name, RatFunc(v) if isinstance(v, UniPoly)
                                   else RatFunc.const(v))
        if not self.discriminant():
            raise ValueError("singular Weierstrass model")

    def discriminant(self) -> RatFunc:
        return (self.alpha ** 3 * 4 + self.beta ** 2 * 27) * -16

    def rhs(self, x: RatFunc) -> RatFunc:
        return x * x * x + self.alpha * x + self.beta

    def specialize(self, value) -> "WeierstrassModel":
        """The model over Q at ``t = value`` (a constant model in the same variable)."""
        value = rational(value)
        var = self.alpha.var
        return WeierstrassModel(RatFunc.const(self.alpha(value), var),
                                RatFunc.const(self.beta(value), var))

    def contains(self, p: "ECPoint") -> bool:
        if p.is_infinity:
            return True
        return p.y * p.y == self.rhs(p.x)


class ECPoint:
    """Point of a short Weierstrass model: the point at infinity or affine ``(x, y)``."""

    __slots__ = ("x", "y")

    def __init__(self, x=None, y=None):
        if (x is None) != (y is None):
            raise ValueError("both coordinates or neither")
        self.x = x if x is None or isinstance(x, RatFunc) else RatFunc(x) if isinstance(x, UniPoly) \
            else RatFunc.const(x)
        self.y = y if y is None or isinstance(y, RatFunc) else RatFunc(y) if isinstance(y, UniPoly) \
            else RatFunc.const(y)

    @classmethod
    def infinity(cls) -> "ECPoint":
        return cls()

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __eq__(self, other):
        if not isinstance(other, ECPoint):
            return NotImplemented
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def negate_var(self) -> "ECPoint":
        if self.is_infinity:
            return self
        return ECPoint(self.x.negate_var(), self.y.negate_var())

    def __repr__(self):
        if self.is_infinity:
            return "ECPoint(infinity)"
        return f"ECPoint({self.x}, {self.y})"


def _check(m: WeierstrassModel, p: ECPoint):
    if not m.contains(p):
        raise PointNotOnCurve(f"{p} does not satisfy the model equation")


def ec_neg(m: WeierstrassModel, p: ECPoint) -> ECPoint:
    if p.is_infinity:
        return p
    return ECPoint(p.x, -p.y)


def ec_add(m: WeierstrassModel, p: ECPoint, q: ECPoint, check: bool = True) -> ECPoint:
    """Chord-tangent addition; both inputs are validated unless ``check`` is False."""
    if check:
        _check(m, p)
        _check(m, q)
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    if p.x == q.x:
        if p.y == -q.y:
            return ECPoint.infinity()
        lam = (p.x * p.x * 3 + m.alpha) / (p.y * 2)
    else:
        lam = (q.y - p.y) / (q.x - p.x)
    x3 = lam * lam - p.x - q.x
    y3 = lam * (p.x - x3) - p.y
    return ECPoint(x3, y3)


def ec_sub(m: WeierstrassModel, p: ECPoint, q: ECPoint, check: bool = True) -> ECPoint:
    return ec_add(m, p, ec_neg(m, q), check=check)


def ec_mul(m: WeierstrassModel, n: int, p: ECPoint) -> ECPoint:
    if n < 0:
        return ec_mul(m, -n, ec_neg(m, p))
    acc = ECPoint.infinity()
    base = p
    while n:
        if n & 1:
            acc = ec_add(m, acc, base, check=False)
        n >>= 1
        if n:
            base = ec_add(m, base, base, check=False)
    return acc
