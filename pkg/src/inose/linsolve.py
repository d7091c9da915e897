"""Fraction-free linear algebra over ``Q[u]`` / ``Q(u)``.

Entries are cleared to polynomials before elimination, so every division
performed is an exact polynomial division (Bareiss).
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq, mpz

from .algebra import RatFunc, UniPoly, poly_gcd, poly_lcm


@dataclass(frozen=True)
class FFMatrix:
    """Dense matrix of :class:`RatFunc` entries."""

    entries: tuple

    @classmethod
    def from_rows(cls, rows) -> "FFMatrix":
        out = []
        for row in rows:
            out.append(tuple(e if isinstance(e, RatFunc) else RatFunc(e) for e in row))
        widths = {len(r) for r in out}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        return cls(tuple(out))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def apply(self, v) -> list:
        """Matrix-vector product ``M v`` with entries of ``v`` in Q(u)."""
        out = []
        for row in self.entries:
            acc = RatFunc.const(0)
            for a, x in zip(row, v):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return out


def det_bareiss(matrix):
    """Determinant of a square matrix over an exact-division ring (Bareiss).

    ``matrix`` is a list of rows whose entries support ``+ - *`` and
    ``exact_div``/``/``.  The input is not modified.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return mpq(1)
    sign = 1
    prev = None
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return a[0][0] - a[0][0]
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                val = piv * row_i[j] - aik * row_k[j]
                if prev is not None:
                    val = _exact(val, prev)
                row_i[j] = val
            row_i[k] = aik - aik
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def _exact(a, b):
    if isinstance(a, UniPoly):
        return a.exact_div(b)
    return a / b


def _clear_row(row) -> list:
    """Scale a row of RatFuncs to coprime polynomials."""
    den = None
    for e in row:
        if e:
            den = e.den if den is None else poly_lcm(den, e.den)
    if den is None:
        return [e.num for e in row]
    polys = [(e.num * den.exact_div(e.den)) if e else e.num for e in row]
    return _normalize_vector(polys)


def _normalize_vector(v):
    """Divide out the polynomial gcd and integer content; first nonzero entry positive."""
    g = None
    for e in v:
        if e:
            g = e if g is None else poly_gcd(g, e)
            if g.degree == 0:
                break
    if g is None:
        return list(v)
    if g.degree > 0:
        v = [e.exact_div(g) if e else e for e in v]
    from .algebra import _to_int_list
    import gmpy2
    den = mpz(1)
    num = mpz(0)
    for e in v:
        if e:
            ints, d = _to_int_list(e.coeffs)
            den = gmpy2.lcm(den, d)
    for e in v:
        if e:
            for c in e.coeffs:
                num = gmpy2.gcd(num, (c * den).numerator)
    first = next(e for e in v if e)
    scale = mpq(den, num)
    if first.lc < 0:
        scale = -scale
    return [e.scale(scale) if e else e for e in v]


def nullspace(m: FFMatrix) -> list:
    """Basis of the right kernel of ``m`` over Q(u).

    Each basis vector is returned as a list of :class:`UniPoly` entries with no
    common polynomial factor and integer content 1.  Elimination is
    fraction-free Gauss-Jordan with the pivot of least degree in each column
    (lowest row index on ties), so the output is deterministic.
    """
    ncols = m.cols
    a = [_clear_row(row) for row in m.entries]
    a = [row for row in a if any(row)]
    nrows = len(a)
    if ncols == 0:
        return []
    var = next((e.var for row in a for e in row if e), "u")
    zero = UniPoly._make([], var)
    prev = None
    pivots = []
    r = 0
    for c in range(ncols):
        cand = [i for i in range(r, nrows) if a[i][c]]
        if not cand:
            continue
        p = min(cand, key=lambda i: (a[i][c].degree, i))
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        row_r = a[r]
        for i in range(nrows):
            if i == r:
                continue
            row_i = a[i]
            aic = row_i[c]
            new = []
            for j in range(ncols):
                val = piv * row_i[j] - aic * row_r[j] if aic else piv * row_i[j]
                if prev is not None and val:
                    val = val.exact_div(prev)
                new.append(val)
            a[i] = new
        prev = piv
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    if not pivots:
        det = UniPoly._make([mpq(1)], var)
    else:
        det = a[len(pivots) - 1][pivots[-1]]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = det
        for i, c in enumerate(pivots):
            v[c] = -a[i][f]
        basis.append(_normalize_vector(v))
    return basis


def rank(m: FFMatrix) -> int:
    return m.cols - len(nullspace(m))


def _vec_degree(v) -> int:
    return max(e.degree for e in v)


def _leading_position(v) -> int:
    d = _vec_degree(v)
    return max(j for j, e in enumerate(v) if e.degree == d)


def reduce_basis(basis) -> list:
    """Minimal-degree basis of the Q[u]-span of ``basis`` (Mulders-Storjohann).

    The vectors are brought into weak Popov form by cancelling leading
    coefficients, which minimizes the degree sum; the result is sorted by
    (degree, leading position).
    """
    vs = [list(v) for v in basis if any(v)]
    changed = True
    while changed:
        changed = False
        for i in range(len(vs)):
            for j in range(len(vs)):
                if i == j:
                    continue
                pi, pj = _leading_position(vs[i]), _leading_position(vs[j])
                if pi != pj:
                    continue
                di, dj = _vec_degree(vs[i]), _vec_degree(vs[j])
                if di < dj:
                    continue
                factor = UniPoly.monomial(vs[i][pi].lc / vs[j][pj].lc, di - dj, vs[i][pi].var)
                new = [x - y * factor for x, y in zip(vs[i], vs[j])]
                if not any(new):
                    raise ValueError("linearly dependent kernel basis")
                vs[i] = _normalize_vector(new)
                changed = True
                break
            if changed:
                break
    vs.sort(key=lambda v: (_vec_degree(v), _leading_position(v)))
    return vs
