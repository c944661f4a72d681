"""Exact linear algebra over the rationals and over Q(t).

Rank is computed fraction-free (integer Bareiss elimination); no floating
point anywhere.  The pivot rule is fixed once and for all: sweep columns in
increasing index, pick the surviving row of smallest index with a nonzero
entry.  Kernel bases and span membership use exact Fraction row reduction
with the same pivot rule, so results are deterministic across runs.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

from .errors import InputError
from .laurent import LaurentPoly

ZERO = Fraction(0)
ONE = Fraction(1)

# Bareiss products must stay clear of int64 overflow on the fast path.
_INT64_GUARD = 2 ** 62
_FAST_PATH_MIN_SIDE = 48


class RatMatrix:
    """Sparse exact-rational matrix: stored entries are nonzero."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise InputError("matrix dims must be nonnegative")
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            items = entries.items() if isinstance(entries, dict) else entries
            for (r, c), v in items:
                v = Fraction(v)
                if not (0 <= r < rows and 0 <= c < cols):
                    raise InputError("matrix entry (%d, %d) out of range" % (r, c))
                if v:
                    self.entries[(r, c)] = v

    @staticmethod
    def identity(n: int) -> "RatMatrix":
        return RatMatrix(n, n, {(i, i): ONE for i in range(n)})

    @staticmethod
    def from_rows(rows) -> "RatMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        ent = {}
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise InputError("ragged rows in matrix")
            for j, v in enumerate(r):
                v = Fraction(v)
                if v:
                    ent[(i, j)] = v
        return RatMatrix(len(rows), ncols, ent)

    def to_rows(self):
        out = [[ZERO] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def entry(self, r: int, c: int) -> Fraction:
        return self.entries.get((r, c), ZERO)

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows,
                         {(c, r): v for (r, c), v in self.entries.items()})

    def row_dicts(self):
        rows = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def __eq__(self, other):
        return (isinstance(other, RatMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def __repr__(self):
        return "RatMatrix(%d x %d, %d nonzero)" % (self.rows, self.cols, len(self.entries))

    # -- rank ---------------------------------------------------------------

    def rank(self) -> int:
        """Exact rank over Q, via fraction-free integer elimination."""
        if not self.entries:
            return 0
        int_rows = _integer_rows(self.row_dicts())
        if min(self.rows, self.cols) >= _FAST_PATH_MIN_SIDE:
            try:
                return _bareiss_rank_int64(int_rows, self.rows, self.cols)
            except OverflowError:
                pass
        return _bareiss_rank_sparse(int_rows, self.cols)

    # -- kernel -------------------------------------------------------------

    def kernel_basis(self):
        """Basis of the right null space, deterministic for the fixed pivot rule.

        Returns a list of (cols)-tuples of Fractions; each basis vector has a 1
        in one free column and vanishes in the other free columns.
        """
        echelon, pivots = _rref(self.row_dicts(), self.cols)
        pivot_set = {c for _, c in pivots}
        basis = []
        for f in range(self.cols):
            if f in pivot_set:
                continue
            vec = [ZERO] * self.cols
            vec[f] = ONE
            for i, c in pivots:
                vec[c] = -echelon[i].get(f, ZERO)
            basis.append(tuple(vec))
        return basis

    def mul_vector(self, vec):
        out = [ZERO] * self.rows
        for (r, c), v in self.entries.items():
            if vec[c]:
                out[r] += v * vec[c]
        return tuple(out)


def in_span(v, basis):
    """Express v in the given basis if possible.

    Returns the coefficient tuple, or None when v is not in the span.
    Raises InputError when dimensions disagree.
    """
    dim = len(v)
    for b in basis:
        if len(b) != dim:
            raise InputError("basis vector dimension %d != vector dimension %d"
                             % (len(b), dim))
    if not basis:
        return () if all(not Fraction(x) for x in v) else None
    rows = [dict() for _ in range(dim)]
    for j, b in enumerate(basis):
        for i, x in enumerate(b):
            x = Fraction(x)
            if x:
                rows[i][j] = x
    ncols = len(basis) + 1
    for i, x in enumerate(v):
        x = Fraction(x)
        if x:
            rows[i][len(basis)] = x
    echelon, pivots = _rref(rows, ncols)
    coeffs = [ZERO] * len(basis)
    for i, c in pivots:
        if c == len(basis):
            return None
        coeffs[c] = echelon[i].get(len(basis), ZERO)
    return tuple(coeffs)


# ---------------------------------------------------------------------------
# Internals: Fraction RREF and fraction-free elimination.

def _rref(rows, ncols):
    """Reduced row echelon form of dict-rows; returns (rows, [(row, pivcol)])."""
    rows = [dict(r) for r in rows]
    pivots = []
    used = [False] * len(rows)
    for c in range(ncols):
        pr = None
        for i, r in enumerate(rows):
            if not used[i] and r.get(c):
                pr = i
                break
        if pr is None:
            continue
        used[pr] = True
        piv = rows[pr][c]
        if piv != 1:
            rows[pr] = {k: v / piv for k, v in rows[pr].items()}
        prow = rows[pr]
        for i, r in enumerate(rows):
            if i == pr:
                continue
            f = r.get(c)
            if not f:
                continue
            for k, v in prow.items():
                w = r.get(k, ZERO) - f * v
                if w:
                    r[k] = w
                elif k in r:
                    del r[k]
        pivots.append((pr, c))
    order = {pr: n for n, (pr, _) in enumerate(pivots)}
    echelon = [rows[pr] for pr, _ in pivots]
    pivots = [(order[pr], c) for pr, c in pivots]
    return echelon, pivots


def _integer_rows(rows):
    """Clear denominators per row; returns dict-rows with int values."""
    out = []
    for r in rows:
        if not r:
            out.append({})
            continue
        den = 1
        for v in r.values():
            den = den * v.denominator // gcd(den, v.denominator)
        out.append({c: int(v * den) for c, v in r.items()})
    return out


def _bareiss_rank_sparse(rows, ncols) -> int:
    """Bareiss fraction-free elimination on sparse integer dict-rows."""
    rows = [dict(r) for r in rows]
    active = list(range(len(rows)))
    prev = 1
    rank = 0
    for c in range(ncols):
        pi = None
        for pos, ri in enumerate(active):
            if rows[ri].get(c):
                pi = pos
                break
        if pi is None:
            continue
        pr = active.pop(pi)
        prow = rows[pr]
        piv = prow[c]
        for ri in active:
            r = rows[ri]
            f = r.get(c)
            if f is None:
                if prev == 1:
                    for k in list(r):
                        r[k] = r[k] * piv
                else:
                    for k in list(r):
                        r[k] = r[k] * piv // prev
                continue
            for k in set(r) | set(prow):
                w = r.get(k, 0) * piv - f * prow.get(k, 0)
                if w:
                    r[k] = w // prev
                elif k in r:
                    del r[k]
        prev = piv
        rank += 1
        if not active:
            break
    return rank


def _bareiss_rank_int64(rows, nrows, ncols) -> int:
    """Dense int64 Bareiss rank; raises OverflowError if growth gets risky."""
    M = np.zeros((nrows, ncols), dtype=np.int64)
    for r, row in enumerate(rows):
        for c, v in row.items():
            if abs(v) >= _INT64_GUARD:
                raise OverflowError
            M[r, c] = v
    prev = 1
    r = 0
    for c in range(ncols):
        nz = np.nonzero(M[r:, c])[0]
        if len(nz) == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            M[[r, pr]] = M[[pr, r]]
        piv = int(M[r, c])
        if r + 1 < nrows:
            sub = M[r + 1:, :]
            bound = (int(np.abs(sub).max(initial=0)) * abs(piv)
                     + int(np.abs(sub[:, c]).max(initial=0))
                     * int(np.abs(M[r, :]).max(initial=0)))
            if bound >= _INT64_GUARD:
                raise OverflowError
            M[r + 1:, :] = (sub * piv - sub[:, c:c + 1] * M[r:r + 1, :]) // prev
        prev = piv
        r += 1
        if r == nrows:
            break
    return r


# ---------------------------------------------------------------------------
# Kernels over the rational function field Q(t).

class _RatFn:
    """Unreduced quotient num/den of Laurent polynomials (den nonzero)."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = None):
        self.num = num
        self.den = den if den is not None else LaurentPoly.const(1)

    @property
    def is_zero(self):
        return self.num.is_zero

    def __add__(self, other):
        return _RatFn(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    def __sub__(self, other):
        return _RatFn(self.num * other.den - other.num * self.den,
                      self.den * other.den)

    def __mul__(self, other):
        return _RatFn(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.num.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return _RatFn(self.num * other.den, self.den * other.num)

    def __neg__(self):
        return _RatFn(-self.num, self.den)


def laurent_kernel(rows):
    """Right kernel over Q(t) of a matrix given as rows of LaurentPoly.

    Returns kernel vectors with polynomial entries: each Q(t)-kernel vector
    is cleared of denominators and normalized by t-content.  Deterministic
    under the shared pivot rule.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    m = [[_RatFn(p) for p in r] for r in rows]
    nrows = len(m)
    pivots = []
    used = [False] * nrows
    for c in range(ncols):
        pr = None
        for i in range(nrows):
            if not used[i] and not m[i][c].is_zero:
                pr = i
                break
        if pr is None:
            continue
        used[pr] = True
        piv = m[pr][c]
        m[pr] = [x / piv for x in m[pr]]
        for i in range(nrows):
            if i == pr or m[i][c].is_zero:
                continue
            f = m[i][c]
            m[i] = [x - f * y for x, y in zip(m[i], m[pr])]
        pivots.append((pr, c))
    pivot_cols = {c for _, c in pivots}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        entries = {f: _RatFn(LaurentPoly.const(1))}
        for pr, c in pivots:
            entries[c] = -m[pr][f]
        # Clear the common denominator: every entry gets multiplied by the
        # product of all entry denominators (x.num * prod of the others).
        vec = []
        for c in range(ncols):
            x = entries.get(c)
            if x is None or x.is_zero:
                vec.append(LaurentPoly())
            else:
                other = LaurentPoly.const(1)
                for cc, y in entries.items():
                    if cc != c:
                        other = other * y.den
                vec.append(x.num * other)
        shift = min(p.valuation() for p in vec if not p.is_zero)
        basis.append(tuple(p.shift(-shift) for p in vec))
    return basis
