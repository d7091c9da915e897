"""Constructions shared by the property tests."""

import random

from gmpy2 import mpq

from inose.algebra import RatFunc, UniPoly
from inose.core import (build_model, fitting_family, inose_coefficients, is_multiple_of_cubic,
                        origin, psi_transform)
from inose.plane import ProjPoint, TriPoly, evaluate, tangent_third_point


def third_point(cubic: TriPoly, p: ProjPoint, q: ProjPoint) -> ProjPoint:
    """Third intersection of the line pq (tangent if p == q) with a cubic."""
    if p == q:
        return tangent_third_point(cubic, p)
    pc = [RatFunc(c) for c in p.coords]
    qc = [RatFunc(c) for c in q.coords]
    line = [UniPoly._make([a, b], "t") for a, b in zip(pc, qc)]
    g = cubic.evaluate_at(line)
    g1, g2 = g[1], g[2]
    if not g2:
        return q
    return ProjPoint(*(g2 * a - g1 * b for a, b in zip(pc, qc)))


def collinear_triples(cubic: TriPoly, seeds, count: int, rng: random.Random):
    """Random collinear triples grown from ``seeds`` by chords and tangents."""
    pool = list(seeds)
    triples = []
    while len(triples) < count:
        p = rng.choice(pool[:len(seeds) + 3])
        q = rng.choice(pool)
        r = third_point(cubic, p, q)
        assert not evaluate(cubic, r)
        triples.append((p, q, r))
        if r not in pool:
            pool.append(r)
    return triples


def specialized_setting(ex, run, u0):
    """Specialized cubic, F6 model and seed points at ``u = u0``."""
    cubic = run.cubic.specialize(u0)
    model = build_model(inose_coefficients(ex.e1, ex.e2), 6).specialize(u0)
    seeds = [origin().specialize(u0), run.origin_bar.specialize(u0),
             run.ninth[1].specialize(u0), run.ninth[-1].specialize(u0)]
    return cubic, model, seeds


def psi_points(ex, points, u0):
    return [psi_transform(ex.e1, ex.e2, p, u=u0, extend=True) for p in points]


def random_poly(rng: random.Random, degree: int = 2):
    return UniPoly([mpq(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(degree + 1)], "u")


def random_fitted_curves(run, sign: int, count: int, rng: random.Random):
    """Distinct random Q[u]-combinations of the fitted family, avoiding the cubic."""
    d = run.phi.degree
    family = fitting_family(run.cubic, run.pair, sign, run.origin_bar, d)
    curves = []
    while len(curves) < count:
        coeffs = [random_poly(rng) for _ in family]
        q = None
        for c, f in zip(coeffs, family):
            term = TriPoly(f.degree, {m: v * RatFunc(c) for m, v in f.terms.items()})
            q = term if q is None else q + term
        if not q or is_multiple_of_cubic(q, run.cubic):
            continue
        if all(q.primitive() != other.primitive() for other in curves):
            curves.append(q)
    return curves


def odd_isogeny(e1, kernel):
    """Normalized isogeny with the given kernel polynomial (odd degree).

    The x-map is Kohel's formula; the y-map multiplies y by the derivative of
    the x-map, and the codomain is found by matching coefficients.
    """
    from inose.algebra import RatFunc as R
    from inose.elliptic import EllipticCurve, RationalMap
    from inose.errors import IsogenyInvalid

    x = R.gen("x1")
    psi = R(kernel)
    dpsi = R(kernel.derivative())
    ell = 2 * kernel.degree + 1
    s1 = -kernel.coeffs[-2] / kernel.coeffs[-1]
    b2, b4, b6 = 4 * e1.a2, 2 * e1.a4, 4 * e1.a6
    t = dpsi / psi
    dt = R(kernel.derivative().derivative()) / psi - t * t
    fx = x * ell - 2 * s1 - (x ** 3 * 4 + x * x * b2 + x * 2 * b4 + b6) * dt \
        - (x * x * 6 + x * b2 + b4) * t
    fy = R(fx.num.derivative() * fx.den - fx.num * fx.den.derivative(), fx.den * fx.den)
    # E2(fx) = fy^2 E1(x) is linear in the target coefficients; sample at points
    rows, rhs = [], []
    for x0 in range(3, 40):
        try:
            X = fx(x0)
            lhs = fy(x0) ** 2 * e1.cubic()(x0) - X ** 3
        except ZeroDivisionError:
            continue
        rows.append([X * X, X, mpq(1)])
        rhs.append(lhs)
        if len(rows) == 3:
            break
    a2, a4, a6 = _solve3(rows, rhs)
    e2 = EllipticCurve(a2, a4, a6)
    phi = RationalMap(fx.num, fx.den, fy.num, fy.den, ell)
    return e2, phi


def _solve3(rows, rhs):
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    for c in range(3):
        p = next(i for i in range(c, 3) if m[i][c])
        m[c], m[p] = m[p], m[c]
        for i in range(3):
            if i != c and m[i][c]:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return [m[i][3] / m[i][i] for i in range(3)]


def compose(e1, first, e2, second, e3):
    """``second ∘ first`` as a single rational map ``E1 -> E3``."""
    from inose.algebra import RatFunc as R, substitute
    from inose.elliptic import RationalMap

    fx1, fy1 = first.phi_x(), first.phi_y()
    fx = substitute(second.phi_x(), fx1)
    fy = substitute(second.phi_y(), fx1) * fy1
    return RationalMap(fx.num, fx.den, fy.num, fy.den, first.degree * second.degree)


def translate(e, r):
    """Move x -> x + r: returns the curve ``y² = f(x + r)`` and the map back."""
    from inose.elliptic import EllipticCurve
    a2, a4, a6 = e.coefficients()
    return EllipticCurve(a2 + 3 * r, a4 + 2 * a2 * r + 3 * r * r, a6 + a4 * r + a2 * r * r + r ** 3)


def three_isogeny(a2, a4):
    """3-isogeny with kernel ``x = 0`` on ``y² = x³ + a2x² + a4x + a4²/(4a2)``."""
    from inose.elliptic import EllipticCurve
    e1 = EllipticCurve(a2, a4, mpq(a4 * a4, 4 * a2))
    e2, phi = odd_isogeny(e1, UniPoly.gen("x1"))
    return e1, e2, phi


def cyclic_two_power(a, c, steps):
    """Cyclic isogeny of degree ``2**steps`` from ``y² = x(x² + ax + c²)``.

    Each step quotients by a rational 2-torsion point other than the kernel
    of the dual of the previous step.  Returns None if the chain stops.
    """
    from inose.catalog import two_isogeny
    from inose.elliptic import RationalMap
    e1, e_cur, phi = two_isogeny(a, c * c)
    for _ in range(steps - 1):
        cubic = e_cur.cubic()
        # rational roots of x(x² + a2 x + a4) other than 0
        a2, a4 = e_cur.a2, e_cur.a4
        disc = a2 * a2 - 4 * a4
        import gmpy2
        num, den = disc.numerator, disc.denominator
        if disc < 0 or not gmpy2.is_square(num) or not gmpy2.is_square(den):
            return None
        root = (-a2 + mpq(gmpy2.isqrt(num), gmpy2.isqrt(den))) / 2
        assert not cubic(root)
        shifted = translate(e_cur, root)
        shift = RationalMap.from_coefficients([-root, 1], [1], [1], [1], 1)
        _, e_next, step = two_isogeny(shifted.a2, shifted.a4)
        phi = compose(e1, compose(e1, phi, e_cur, shift, shifted), shifted, step, e_next)
        e_cur = e_next
    return e1, e_cur, phi
