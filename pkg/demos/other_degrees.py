"""
Isogenies of other degrees
==========================

Build a few isogenies from scratch with Velu-style formulas and check that
the section height always comes out as twice the degree.
"""

import time

from gmpy2 import mpq

from inose import EllipticCurve, RationalMap, compute_section, verify_isogeny
from inose.catalog import two_isogeny

# a 2-isogeny with kernel (0, 0) on y^2 = x^3 + x^2 - x
e1, e2, phi = two_isogeny(1, -1)
print(e1, "->", e2)
print("valid:", verify_isogeny(e1, e2, phi).passed)
print("height:", compute_section(e1, e2, phi).height)

# a 3-isogeny: y^2 = x^3 + a x^2 + b x + b^2/(4a) has 3-torsion at x = 0
a, b = mpq(1), mpq(2)
c = b * b / (4 * a)
e1 = EllipticCurve(a, b, c)
# kernel polynomial x, so phi_x = x + t/x + w/x^2 with t = 2b, w = 4c
t, w = 2 * b, 4 * c
e3 = EllipticCurve(a, b - 5 * t, c - 4 * a * t - 7 * w)
phi = RationalMap.from_coefficients(
    [w, t, 0, 1], [0, 0, 1],
    [-2 * w, -t, 0, 1], [0, 0, 0, 1], 3)
print(e1, "->", e3)
report = verify_isogeny(e1, e3, phi)
print("valid:", report.passed)
if report.passed:
    start = time.perf_counter()
    sec = compute_section(e1, e3, phi)
    print("height:", sec.height, "in %.1f s" % (time.perf_counter() - start))
