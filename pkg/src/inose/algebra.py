"""Exact arithmetic: rationals, dense univariate polynomials, rational functions.

The coefficient tower used throughout the package is ``Q ⊂ Q[u] ⊂ Q(u)``.
Rationals are ``gmpy2.mpq`` values.  :class:`UniPoly` is a dense polynomial in
one named indeterminate whose coefficients may themselves be rationals,
integers, :class:`UniPoly` objects in a different indeterminate (giving
``Q[u][x1]`` and friends) or :class:`RatFunc` objects (giving ``Q(u)[x1]``).
All values are immutable.
"""

from __future__ import annotations

import operator
from fractions import Fraction

import gmpy2
from gmpy2 import mpq, mpz

from .errors import IndeterminateMismatch, NotInSubfield

Rational = type(mpq())

_ZERO = mpq(0)
_ONE = mpq(1)

# Below this length the schoolbook product beats packing into big integers.
_KRONECKER_CUTOFF = 16

# Primes for the modular coprimality shortcut in the integer gcd.
_GCD_PRIMES = (2305843009213693951, 4611686018427387847, 9223372036854775783)


def rational(value) -> Rational:
    """Parse ``value`` (int, ``"p/q"`` string, Fraction or mpq) into an exact rational."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, type(mpz()))):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            n, d = int(num.strip()), int(den.strip())
            if d == 0:
                raise ZeroDivisionError(f"zero denominator in {value!r}")
            return mpq(n, d)
        return mpq(int(text))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rational_arith(a, b, op: str) -> Rational:
    ops = {"+": operator.add, "-": operator.sub, "*": operator.mul, "/": operator.truediv}
    a, b = rational(a), rational(b)
    if op == "/" and b == 0:
        raise ZeroDivisionError("rational division by zero")
    return ops[op](a, b)


def rational_str(q) -> str:
    q = rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _is_int(c) -> bool:
    return isinstance(c, (int, type(mpz())))


# ---------------------------------------------------------------------------
# coefficient-list kernels


def _strip(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _to_int_list(a):
    """Scale a list of rationals to integers; return ``(ints, denominator)``."""
    den = mpz(1)
    for c in a:
        d = c.denominator
        if d != 1:
            den = gmpy2.lcm(den, d)
    if den == 1:
        return [c.numerator if isinstance(c, Rational) else mpz(c) for c in a], den
    return [c.numerator * (den // c.denominator) for c in a], den


def _pack(a, bits):
    x = mpz(0)
    for c in reversed(a):
        x = (x << bits) + c
    return x


def _unpack(x, bits, n):
    out = []
    mask = (mpz(1) << bits) - 1
    half = mpz(1) << (bits - 1)
    full = mpz(1) << bits
    for _ in range(n):
        c = x & mask
        x >>= bits
        if c >= half:
            c -= full
            x += 1
        out.append(c)
    return out


def _kron_mul_int(a, b):
    """Product of two integer coefficient lists via one big-integer multiplication."""
    ba = max(abs(c).bit_length() for c in a)
    bb = max(abs(c).bit_length() for c in b)
    bits = ba + bb + min(len(a), len(b)).bit_length() + 2
    return _unpack(_pack(a, bits) * _pack(b, bits), bits, len(a) + len(b) - 1)


def _schoolbook(a, b):
    out = [None] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if not y:
                continue
            k = i + j
            if out[k] is None:
                out[k] = x * y
            else:
                out[k] += x * y
    zero = a[0] - a[0]
    return [zero if c is None else c for c in out]


def _mul_lists(a, b):
    if not a or not b:
        return []
    if min(len(a), len(b)) < _KRONECKER_CUTOFF:
        return _schoolbook(a, b)
    x = a[0]
    if isinstance(x, Rational):
        ia, da = _to_int_list(a)
        ib, db = _to_int_list(b)
        den = da * db
        if den == 1:
            return [mpq(c) for c in _kron_mul_int(ia, ib)]
        return [mpq(c, den) for c in _kron_mul_int(ia, ib)]
    if _is_int(x):
        return [mpz(c) for c in _kron_mul_int(a, b)]
    if isinstance(x, UniPoly) and _all_rational_polys(a) and _all_rational_polys(b):
        return _bivariate_mul(a, b)
    return _schoolbook(a, b)


def _all_rational_polys(a):
    return all(isinstance(c, UniPoly) and (not c.coeffs or isinstance(c.coeffs[0], Rational))
               for c in a)


def _bivariate_mul(a, b):
    """Multiply lists of ``Q[u]`` polynomials by Kronecker substitution x -> u**K."""
    var = next((c.var for c in a if c.coeffs), a[0].var)
    da = max(c.degree for c in a)
    db = max(c.degree for c in b)
    if da < 0 or db < 0:
        return [UniPoly._make([], var) for _ in range(len(a) + len(b) - 1)]
    k = da + db + 1

    def flatten(lst, deg):
        flat = [_ZERO] * (k * (len(lst) - 1) + deg + 1)
        for i, c in enumerate(lst):
            flat[i * k:i * k + len(c.coeffs)] = c.coeffs
        return flat

    prod = _mul_lists(flatten(a, da), flatten(b, db))
    n = len(a) + len(b) - 1
    prod.extend([_ZERO] * (n * k - len(prod)))
    return [UniPoly._make(prod[i * k:(i + 1) * k], var) for i in range(n)]


def _exact_scalar(a, b):
    """Exact quotient ``a / b`` in the coefficient ring (raises if inexact)."""
    if isinstance(a, Rational) or isinstance(b, Rational):
        return a / b
    if _is_int(a):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact integer division")
        return q
    if isinstance(a, UniPoly):
        if isinstance(b, UniPoly):
            return a.exact_div(b)
        return a.scale_div(b)
    return a / b


# ---------------------------------------------------------------------------


class UniPoly:
    """Dense polynomial in the indeterminate ``var``; coefficients ascending.

    >>> u = UniPoly.gen("u")
    >>> (u - 1) * (u + 1)
    UniPoly('u**2 - 1')
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var: str = "u"):
        c = [x if isinstance(x, (UniPoly, RatFunc)) else rational(x) for x in coeffs]
        self.coeffs = tuple(_strip(c))
        self.var = var

    @classmethod
    def _make(cls, coeffs, var):
        obj = object.__new__(cls)
        obj.coeffs = tuple(_strip(list(coeffs)))
        obj.var = var
        return obj

    @classmethod
    def gen(cls, var: str = "u") -> "UniPoly":
        return cls._make([_ZERO, _ONE], var)

    @classmethod
    def const(cls, c, var: str = "u") -> "UniPoly":
        if not isinstance(c, (UniPoly, RatFunc)):
            c = rational(c)
        return cls._make([c], var)

    @classmethod
    def monomial(cls, c, k: int, var: str = "u") -> "UniPoly":
        if not isinstance(c, (UniPoly, RatFunc)):
            c = rational(c)
        return cls._make([c - c] * k + [c], var)

    # -- basic properties -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else _ZERO

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self):
        return self.coeffs[0] if self.coeffs else _ZERO

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self._zero_coeff()

    def _zero_coeff(self):
        if self.coeffs:
            c = self.coeffs[0]
            return c - c
        return _ZERO

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            if not self.coeffs and not other.coeffs:
                return True
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, RatFunc):
            return other == self
        if isinstance(other, str):
            return NotImplemented
        try:
            other = rational(other)
        except TypeError:
            return NotImplemented
        if not other:
            return not self.coeffs
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.constant())
        return hash((self.var, self.coeffs))

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other):
        """Return ``other`` as a polynomial in ``self.var`` or raise."""
        if isinstance(other, UniPoly):
            if other.var == self.var:
                return other
            if not other.coeffs:
                return UniPoly._make([], self.var)
            if self.coeffs and isinstance(self.coeffs[0], (UniPoly, RatFunc)):
                return UniPoly._make([other], self.var)
            if other.is_constant():
                return UniPoly._make(list(other.coeffs), self.var)
            if self.is_constant():
                # a bare constant adopts the other operand's indeterminate
                return other
            raise IndeterminateMismatch(f"{self.var} vs {other.var}")
        if isinstance(other, RatFunc):
            if self.coeffs and isinstance(self.coeffs[0], (UniPoly, RatFunc)):
                return UniPoly._make([other], self.var)
            # Q[u] op Q(u) promotes to Q(u)
            return NotImplemented
        if isinstance(other, (int, Rational, Fraction, type(mpz()))) and not isinstance(other, bool):
            if _is_int(other) and self.coeffs and _is_int(self.coeffs[0]):
                return UniPoly._make([mpz(other)], self.var)
            return UniPoly._make([rational(other)], self.var)
        return NotImplemented

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly._make(out, other.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._make([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not self.coeffs:
            return self
        if isinstance(other, (int, Rational, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.coeffs) == 1:
            return self.scale(other.coeffs[0])
        if len(self.coeffs) == 1:
            return UniPoly._make([self.coeffs[0] * c for c in other.coeffs], other.var)
        return UniPoly._make(_mul_lists(list(self.coeffs), list(other.coeffs)), self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly._make([self._one_coeff()], self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def _one_coeff(self):
        if self.coeffs and isinstance(self.coeffs[0], (UniPoly, RatFunc)):
            c = self.coeffs[0]
            return c ** 0
        if self.coeffs and _is_int(self.coeffs[0]):
            return mpz(1)
        return _ONE

    def scale(self, c):
        """Multiply every coefficient by the ring element ``c``."""
        if isinstance(c, (int, Fraction)) and not _is_int(c):
            c = rational(c)
        if not c:
            return UniPoly._make([], self.var)
        return UniPoly._make([x * c for x in self.coeffs], self.var)

    def scale_div(self, c):
        """Divide every coefficient exactly by the ring element ``c``."""
        return UniPoly._make([_exact_scalar(x, c) for x in self.coeffs], self.var)

    def shift(self, k: int) -> "UniPoly":
        """Multiply by ``var**k``."""
        if not self.coeffs:
            return self
        z = self._zero_coeff()
        return UniPoly._make([z] * k + list(self.coeffs), self.var)

    # -- division -------------------------------------------------------------

    def divrem(self, other):
        """Quotient and remainder over a coefficient field (Q or Q(u))."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        b = other.coeffs
        db = len(b) - 1
        r = list(self.coeffs)
        if len(r) <= db:
            return UniPoly._make([], self.var), self
        inv = b[-1] ** -1
        q = [None] * (len(r) - db)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if not c:
                q[k - db] = c
                continue
            t = c * inv
            q[k - db] = t
            for i in range(db):
                if b[i]:
                    r[k - db + i] = r[k - db + i] - t * b[i]
            r[k] = c - c
        return UniPoly._make(q, self.var), UniPoly._make(r[:db], self.var)

    def __divmod__(self, other):
        return self.divrem(other)

    def __floordiv__(self, other):
        return self.divrem(other)[0]

    def __mod__(self, other):
        return self.divrem(other)[1]

    def exact_div(self, other) -> "UniPoly":
        """Quotient when ``other`` divides ``self`` over the coefficient ring.

        Raises ``ArithmeticError`` if the division leaves a remainder.
        """
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        b = other.coeffs
        db = len(b) - 1
        if db == 0:
            return self.scale_div(b[0])
        r = list(self.coeffs)
        if len(r) <= db:
            if r:
                raise ArithmeticError("inexact polynomial division")
            return UniPoly._make([], self.var)
        lb = b[-1]
        q = [None] * (len(r) - db)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if not c:
                q[k - db] = c
                continue
            t = _exact_scalar(c, lb)
            q[k - db] = t
            for i in range(db):
                if b[i]:
                    r[k - db + i] = r[k - db + i] - t * b[i]
        if any(r[:db]):
            raise ArithmeticError("inexact polynomial division")
        return UniPoly._make(q, self.var)

    def pseudo_rem(self, other) -> "UniPoly":
        """``lc(other)**(deg self - deg other + 1) * self mod other`` without division."""
        other = self._coerce(other)
        b = other.coeffs
        db = len(b) - 1
        r = list(self.coeffs)
        if len(r) <= db:
            return self
        lb = b[-1]
        e = len(r) - db
        while len(r) > db and r:
            c = r[-1]
            shift = len(r) - 1 - db
            r = [x * lb for x in r]
            for i in range(db):
                if b[i]:
                    r[shift + i] = r[shift + i] - c * b[i]
            r.pop()
            _strip(r)
            e -= 1
        if e:
            f = lb ** e
            r = [x * f for x in r]
        return UniPoly._make(r, self.var)

    # -- calculus and substitution -------------------------------------------

    def derivative(self) -> "UniPoly":
        return UniPoly._make([c * k for k, c in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, x):
        """Horner evaluation at any ring element ``x``."""
        if not self.coeffs:
            return self._zero_coeff()
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def compose(self, g: "UniPoly") -> "UniPoly":
        return self(g)

    def negate_var(self) -> "UniPoly":
        """Substitute ``var -> -var``."""
        return UniPoly._make([-c if k & 1 else c for k, c in enumerate(self.coeffs)], self.var)

    def inflate(self, k: int, var: str | None = None) -> "UniPoly":
        """Substitute ``var -> var**k`` (optionally renaming the indeterminate)."""
        z = self._zero_coeff()
        out = [z] * (k * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return UniPoly._make(out, var or self.var)

    def deflate(self, k: int, var: str | None = None) -> "UniPoly":
        """Inverse of :meth:`inflate`; raises :class:`NotInSubfield` if impossible."""
        for i, c in enumerate(self.coeffs):
            if c and i % k:
                raise NotInSubfield(f"exponent {i} of {self.var} is not divisible by {k}")
        return UniPoly._make(self.coeffs[::k], var or self.var)

    def reverse(self, n: int | None = None) -> "UniPoly":
        """``var**n * self(1/var)`` with ``n`` defaulting to the degree."""
        n = self.degree if n is None else n
        c = list(self.coeffs) + [self._zero_coeff()] * (n + 1 - len(self.coeffs))
        return UniPoly._make(c[::-1], self.var)

    def ord0(self) -> int:
        """Multiplicity of the root 0 (``-1`` for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    # -- rational-coefficient helpers -----------------------------------------

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        inv = lc ** -1
        return UniPoly._make([c * inv for c in self.coeffs[:-1]] + [lc ** 0], self.var)

    def content(self) -> Rational:
        """Positive rational ``c`` such that ``self / c`` has coprime integer coefficients."""
        if not self.coeffs:
            return _ZERO
        ints, den = _to_int_list(self.coeffs)
        g = mpz(0)
        for c in ints:
            g = gmpy2.gcd(g, c)
            if g == 1:
                break
        return mpq(g, den)

    def primitive(self) -> "UniPoly":
        """Integer-coefficient primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        ints, _ = _to_int_list(self.coeffs)
        g = mpz(0)
        for c in ints:
            g = gmpy2.gcd(g, c)
            if g == 1:
                break
        if ints[-1] < 0:
            g = -g
        return UniPoly._make([mpq(c // g) for c in ints], self.var)

    def integer_coeffs(self) -> list:
        return [int(c) for c in _to_int_list(self.coeffs)[0]]

    def map_coeffs(self, fn) -> "UniPoly":
        return UniPoly._make([fn(c) for c in self.coeffs], self.var)

    # -- display --------------------------------------------------------------

    def to_str(self, var: str | None = None) -> str:
        """Expanded form in descending powers, e.g. ``'3*u**2 - u + 1/2'``."""
        v = var or self.var
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if isinstance(c, (UniPoly, RatFunc)):
                body = f"({c})"
                sign = "+"
            else:
                sign = "-" if c < 0 else "+"
                a = abs(c)
                body = rational_str(a)
            mono = "" if k == 0 else (v if k == 1 else f"{v}**{k}")
            if mono and body == "1":
                text = mono
            elif mono:
                text = f"{body}*{mono}"
            else:
                text = body
            terms.append((sign, text))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in terms[1:]:
            out += f" {sign} {text}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"UniPoly({self.to_str()!r})"


def poly_arith(f: UniPoly, g: UniPoly, op: str):
    """Dispatch ``+ - * divrem`` on two polynomials in the same indeterminate."""
    if f.var != g.var and f and g:
        raise IndeterminateMismatch(f"{f.var} vs {g.var}")
    if op == "+":
        return f + g
    if op == "-":
        return f - g
    if op == "*":
        return f * g
    if op == "divrem":
        return f.divrem(g)
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# gcd


def _int_prem(a, b):
    """Pseudo-remainder of integer lists (ascending, deg a >= deg b)."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    e = len(r) - db
    while len(r) > db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for i in range(db):
            if b[i]:
                r[shift + i] -= c * b[i]
        r.pop()
        _strip(r)
        e -= 1
    if e and r:
        f = lb ** e
        r = [x * f for x in r]
    return r


def _int_content(a):
    g = mpz(0)
    for c in a:
        g = gmpy2.gcd(g, c)
        if g == 1:
            break
    return g


def _modular_gcd_degree(a, b, p):
    """Degree of ``gcd(a mod p, b mod p)``; ``None`` if p divides a leading coefficient."""
    if a[-1] % p == 0 or b[-1] % p == 0:
        return None
    x = [int(c % p) for c in a]
    y = [int(c % p) for c in b]
    while y:
        _strip(y)
        if not y:
            break
        inv = pow(y[-1], -1, p)
        dy = len(y) - 1
        while len(x) >= len(y):
            t = x[-1] * inv % p
            if t:
                off = len(x) - len(y)
                for i in range(dy):
                    x[off + i] = (x[off + i] - t * y[i]) % p
            x.pop()
            _strip(x)
            if not x:
                break
        x, y = y, x
    return len(x) - 1


def _int_poly_gcd(a, b):
    """Primitive gcd of two nonzero integer lists (subresultant PRS)."""
    ca, cb = _int_content(a), _int_content(b)
    a = [c // ca for c in a]
    b = [c // cb for c in b]
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        return [mpz(1)]
    for p in _GCD_PRIMES:
        deg = _modular_gcd_degree(a, b, p)
        if deg is not None:
            if deg == 0:
                return [mpz(1)]
            break
    g = h = mpz(1)
    while True:
        delta = len(a) - len(b)
        r = _int_prem(a, b)
        if not r:
            break
        if len(r) == 1:
            return [mpz(1)]
        a = b
        div = g * h ** delta
        b = [c // div for c in r]
        g = a[-1]
        if delta:
            h = g ** delta // h ** (delta - 1)
    cb = _int_content(b)
    b = [c // cb for c in b]
    if b[-1] < 0:
        b = [-c for c in b]
    return b


def _ring_subresultant_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """gcd up to a unit of the fraction field, for coefficients in an exact-division ring."""
    if a.degree < b.degree:
        a, b = b, a
    if b.degree == 0:
        return UniPoly._make([b.lc ** 0], a.var)
    one = b.lc ** 0
    g = h = one
    while True:
        delta = a.degree - b.degree
        r = a.pseudo_rem(b)
        if not r:
            return b
        if r.degree == 0:
            return UniPoly._make([one], a.var)
        a = b
        b = r.scale_div(g * h ** delta)
        g = a.lc
        if delta:
            h = _exact_scalar(g ** delta, h ** (delta - 1))


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic greatest common divisor.

    Works for coefficients in Q (subresultant PRS over Z on primitive parts),
    in ``Q[t]`` and in ``Q(t)``; the latter two return a gcd that is monic over
    ``Q(t)`` with :class:`RatFunc` coefficients.
    """
    if f and g and f.var != g.var:
        raise IndeterminateMismatch(f"{f.var} vs {g.var}")
    if not f and not g:
        raise ValueError("gcd(0, 0) is undefined")
    if not f:
        return _monic_any(g)
    if not g:
        return _monic_any(f)
    x = f.coeffs[0]
    if isinstance(x, Rational):
        if f.degree == 0 or g.degree == 0:
            return UniPoly._make([_ONE], f.var)
        a, _ = _to_int_list(f.coeffs)
        b, _ = _to_int_list(g.coeffs)
        return UniPoly._make([mpq(c) for c in _int_poly_gcd(a, b)], f.var).monic()
    fp, gp = _clear_to_poly_coeffs(f), _clear_to_poly_coeffs(g)
    h = _ring_subresultant_gcd(fp, gp)
    return _monic_any(h)


def _clear_to_poly_coeffs(f: UniPoly) -> UniPoly:
    """Scale a ``Q(t)[x]`` polynomial into ``Q[t][x]``."""
    if f.coeffs and isinstance(f.coeffs[0], RatFunc):
        den = None
        for c in f.coeffs:
            if c:
                den = c.den if den is None else poly_lcm(den, c.den)
        return UniPoly._make([(c * den).as_poly() for c in f.coeffs], f.var)
    return f


def _monic_any(f: UniPoly) -> UniPoly:
    if f.coeffs and isinstance(f.coeffs[0], UniPoly):
        lc = RatFunc(f.lc)
        return UniPoly._make([RatFunc(c) / lc for c in f.coeffs], f.var)
    if f.coeffs and isinstance(f.coeffs[0], RatFunc):
        return f.monic()
    return f.monic()


def poly_lcm(f: UniPoly, g: UniPoly) -> UniPoly:
    if not f or not g:
        return UniPoly._make([], f.var)
    return (f * g.exact_div(poly_gcd(f, g))).monic()


def is_squarefree(f: UniPoly) -> bool:
    return poly_gcd(f, f.derivative()).degree == 0


def poly_sqrt(f: UniPoly):
    """Polynomial ``s`` with ``s*s == f`` or ``None`` when ``f`` is not a square in Q[x]."""
    if not f:
        return f
    if f.degree % 2:
        return None
    n = f.degree // 2
    lc = f.lc
    if lc < 0:
        return None
    num, den = lc.numerator, lc.denominator
    rn, en = gmpy2.iroot(num, 2)
    rd, ed = gmpy2.iroot(den, 2)
    if not (en and ed):
        return None
    # Build the root top-down: s = sum_{k<=n} s_k x^k.
    s = [None] * (n + 1)
    s[n] = mpq(rn, rd)
    two_lead = 2 * s[n]
    for k in range(n - 1, -1, -1):
        idx = n + k
        acc = f[idx]
        for i in range(k + 1, n):
            j = idx - i
            if k < j <= n:
                acc -= s[i] * s[j]
        s[k] = acc / two_lead
    root = UniPoly._make(s, f.var)
    return root if root * root == f else None


# ---------------------------------------------------------------------------


class RatFunc:
    """Element of ``Q(t)`` in lowest terms with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var: str | None = None):
        if not isinstance(num, UniPoly):
            num = UniPoly.const(num, var or (den.var if isinstance(den, UniPoly) else "u"))
        if den is None:
            den = UniPoly._make([_ONE], num.var)
        elif not isinstance(den, UniPoly):
            den = UniPoly.const(den, num.var)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if num and den and num.var != den.var and not (num.is_constant() or den.is_constant()):
            raise IndeterminateMismatch(f"{num.var} vs {den.var}")
        v = num.var if not num.is_constant() else den.var
        num = UniPoly._make(num.coeffs, v)
        den = UniPoly._make(den.coeffs, v)
        if not num:
            self.num, self.den = num, UniPoly._make([_ONE], v)
            return
        if den.degree > 0 and num.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lc
        if lc != 1:
            inv = lc ** -1
            num, den = num.scale(inv), den.monic()
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: UniPoly, den: UniPoly) -> "RatFunc":
        obj = object.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def gen(cls, var: str = "u") -> "RatFunc":
        return cls._raw(UniPoly.gen(var), UniPoly._make([_ONE], var))

    @classmethod
    def const(cls, c, var: str = "u") -> "RatFunc":
        return cls._raw(UniPoly.const(rational(c), var), UniPoly._make([_ONE], var))

    @property
    def var(self) -> str:
        return self.num.var

    def __bool__(self):
        return bool(self.num)

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> UniPoly:
        if not self.is_poly():
            raise ArithmeticError("rational function is not a polynomial")
        return self.num

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            if not self.num and not other.num:
                return True
            return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs \
                and (self.is_constant() or self.var == other.var)
        if isinstance(other, UniPoly):
            return self.den.degree == 0 and self.num == other
        if isinstance(other, str):
            return NotImplemented
        try:
            other = rational(other)
        except TypeError:
            return NotImplemented
        return self.den.degree == 0 and self.num == other

    def __hash__(self):
        if self.is_constant():
            return hash(self.num.constant())
        return hash((self.num.coeffs, self.den.coeffs))

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, UniPoly):
            return RatFunc._raw(other, UniPoly._make([_ONE], other.var))
        if isinstance(other, (int, Rational, Fraction, type(mpz()))) and not isinstance(other, bool):
            return RatFunc._raw(UniPoly.const(other, self.var), UniPoly._make([_ONE], self.var))
        return NotImplemented

    def _check_var(self, other):
        if self.var != other.var and not self.is_constant() and not other.is_constant():
            raise IndeterminateMismatch(f"{self.var} vs {other.var}")

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        self._check_var(other)
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a:
            return other
        if not c:
            return self
        if b.degree == 0 and d.degree == 0:
            return RatFunc._raw(a + c, b)
        if b == d:
            return RatFunc(a + c, b)
        if b.degree == 0 or d.degree == 0:
            # one side is a polynomial: a/b + c = (a + c*b)/b stays reduced
            if d.degree == 0:
                return RatFunc._raw(a + c.scale(d.lc ** -1) * b, b)
            return RatFunc._raw(c + a.scale(b.lc ** -1) * d, d)
        g = poly_gcd(b, d)
        if g.degree == 0:
            return RatFunc._raw(a * d + c * b, b * d)
        b1, d1 = b.exact_div(g), d.exact_div(g)
        num = a * d1 + c * b1
        if not num:
            return RatFunc._raw(num, UniPoly._make([_ONE], self.var))
        t = poly_gcd(num, g)
        if t.degree > 0:
            num, g = num.exact_div(t), g.exact_div(t)
        den = b1 * d1 * g
        return RatFunc._raw(num.scale(den.lc ** -1), den.monic())

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

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
        self._check_var(other)
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a or not c:
            return RatFunc._raw(UniPoly._make([], self.var), UniPoly._make([_ONE], self.var))
        if d.degree > 0 and a.degree > 0:
            g1 = poly_gcd(a, d)
            if g1.degree > 0:
                a, d = a.exact_div(g1), d.exact_div(g1)
        if b.degree > 0 and c.degree > 0:
            g2 = poly_gcd(c, b)
            if g2.degree > 0:
                c, b = c.exact_div(g2), b.exact_div(g2)
        return RatFunc._raw(a * c, (b * d).monic())

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        lc = self.num.lc
        inv = lc ** -1
        return RatFunc._raw(self.den.scale(inv), self.num.scale(inv))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return RatFunc.const(1, self.var)
        return RatFunc._raw(self.num ** n, self.den ** n)

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def negate_var(self) -> "RatFunc":
        num, den = self.num.negate_var(), self.den.negate_var()
        if den.lc != 1:
            return RatFunc._raw(-num, -den)
        return RatFunc._raw(num, den)

    def __str__(self):
        if self.den.degree == 0:
            return self.num.to_str()
        return f"({self.num.to_str()})/({self.den.to_str()})"

    def __repr__(self):
        return f"RatFunc({self})"


def ratfunc_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    ops = {"+": operator.add, "-": operator.sub, "*": operator.mul, "/": operator.truediv}
    return ops[op](a, b)


def substitute(f, target) -> RatFunc:
    """Compose ``f(t)`` with ``t -> target``.

    ``target`` is either the string ``"-"`` (meaning ``t -> -t``) or a
    :class:`RatFunc` / :class:`UniPoly`.
    """
    if isinstance(f, UniPoly):
        f = RatFunc(f)
    if isinstance(target, str):
        if target not in ("-", "neg"):
            raise ValueError(f"unknown substitution {target!r}")
        return f.negate_var()
    if isinstance(target, UniPoly):
        target = RatFunc(target)
    num = _homogeneous_eval(f.num, target)
    den = _homogeneous_eval(f.den, target)
    n = max(f.num.degree, f.den.degree)
    # Both sides were multiplied by target.den**n.
    return RatFunc(num[0] * target.den ** (n - num[1]), den[0] * target.den ** (n - den[1]))


def _homogeneous_eval(p: UniPoly, g: RatFunc):
    """Return ``(P, deg p)`` with ``P = g.den**deg(p) * p(g)`` as a polynomial."""
    a, b = g.num, g.den
    n = max(p.degree, 0)
    acc = UniPoly._make([], a.var)
    apow = UniPoly._make([_ONE], a.var)
    bpows = [UniPoly._make([_ONE], a.var)]
    for _ in range(n):
        bpows.append(bpows[-1] * b)
    for k, c in enumerate(p.coeffs):
        if c:
            acc = acc + (apow * bpows[n - k]).scale(c)
        apow = apow * a
    return acc, n


def descend(f: RatFunc, k: int = 6, var: str = "s") -> RatFunc:
    """Rewrite ``f(t)`` lying in ``Q(t**k)`` as a function of ``var = t**k``."""
    return RatFunc._raw(f.num.deflate(k, var), f.den.deflate(k, var))


def descend_to_s(f: RatFunc) -> RatFunc:
    """Replace ``u**6`` by ``s``; raises :class:`NotInSubfield` if ``f`` is not in Q(u**6)."""
    return descend(f, 6, "s")


def lift_from_s(f: RatFunc, var: str = "u") -> RatFunc:
    """Substitute ``s -> u**6``."""
    return RatFunc._raw(f.num.inflate(6, var), f.den.inflate(6, var))
