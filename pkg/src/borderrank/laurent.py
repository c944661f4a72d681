"""Laurent polynomials in one deformation parameter t, with exact rational
coefficients.

A LaurentPoly is an immutable sparse map exponent -> Fraction with no zero
coefficients; exponents may be negative.  Vectors with LaurentPoly entries
(plain tuples) model curves of vectors x(t), and ``t_content_normalize``
divides out the largest common power of t so that evaluation at t = 0 is
nonzero.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError

ZERO = Fraction(0)


class LaurentPoly:
    """Finite Laurent polynomial sum_e c_e t^e over the rationals."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                v = Fraction(v)
                if v:
                    c[int(e)] = c.get(int(e), ZERO) + v
                    if not c[int(e)]:
                        del c[int(e)]
        self._c = c

    @staticmethod
    def const(v) -> "LaurentPoly":
        return LaurentPoly({0: Fraction(v)})

    @staticmethod
    def t(exp: int = 1, coeff=1) -> "LaurentPoly":
        return LaurentPoly({exp: Fraction(coeff)})

    @property
    def is_zero(self) -> bool:
        return not self._c

    def items(self):
        return sorted(self._c.items())

    def coeff(self, e: int) -> Fraction:
        return self._c.get(e, ZERO)

    def valuation(self):
        """Minimal exponent with nonzero coefficient; None for the zero poly."""
        return min(self._c) if self._c else None

    def degree(self):
        return max(self._c) if self._c else None

    def at_zero(self) -> Fraction:
        """Value at t = 0; requires valuation >= 0."""
        if self._c and min(self._c) < 0:
            raise ValueError("pole at t = 0")
        return self._c.get(0, ZERO)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        out = LaurentPoly()
        out._c = {e + k: v for e, v in self._c.items()}
        return out

    def scale(self, s) -> "LaurentPoly":
        s = Fraction(s)
        out = LaurentPoly()
        if s:
            out._c = {e: v * s for e, v in self._c.items()}
        return out

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = dict(self._c)
        for e, v in other._c.items():
            w = c.get(e, ZERO) + v
            if w:
                c[e] = w
            elif e in c:
                del c[e]
        out = LaurentPoly()
        out._c = c
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly()
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                w = c.get(e, ZERO) + v1 * v2
                if w:
                    c[e] = w
                elif e in c:
                    del c[e]
        out = LaurentPoly()
        out._c = c
        return out

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for e, v in self.items():
            if e == 0:
                parts.append(str(v))
            elif e == 1:
                parts.append("%s*t" % v)
            else:
                parts.append("%s*t^%d" % (v, e))
        return " + ".join(parts)

    def to_pairs(self):
        """Serialize as [[exponent, "p/q"], ...] with exponents ascending."""
        return [[e, str(v)] for e, v in self.items()]

    @staticmethod
    def from_pairs(pairs, where: str = "poly") -> "LaurentPoly":
        """Parse the [[exponent, "p/q"], ...] wire form, validating shape."""
        if not isinstance(pairs, list):
            raise InputError("%s: expected a list of [exponent, coefficient] pairs" % where)
        out = LaurentPoly()
        for idx, pair in enumerate(pairs):
            if not (isinstance(pair, list) and len(pair) == 2):
                raise InputError("%s[%d]: expected [exponent, coefficient]" % (where, idx))
            e, v = pair
            if not isinstance(e, int) or isinstance(e, bool):
                raise InputError("%s[%d]: exponent must be an integer" % (where, idx))
            out = out + LaurentPoly({e: parse_fraction(v, "%s[%d]" % (where, idx))})
        return out


def parse_fraction(text, where: str = "value") -> Fraction:
    """Parse "p/q" (or "p") into an exact Fraction."""
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise InputError("%s: expected a rational string like \"3/2\"" % where)
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError("%s: not a valid rational: %r" % (where, text)) from None


def format_fraction(v: Fraction) -> str:
    return str(Fraction(v))


# ---------------------------------------------------------------------------
# Vectors with LaurentPoly entries.

def laurent_vec(entries) -> tuple:
    """Coerce a sequence of LaurentPoly/Fraction/int into a LaurentVec tuple."""
    out = []
    for x in entries:
        if isinstance(x, LaurentPoly):
            out.append(x)
        else:
            out.append(LaurentPoly.const(x))
    return tuple(out)


def vec_is_zero(v) -> bool:
    return all(p.is_zero for p in v)


def t_content_normalize(v):
    """Divide a LaurentVec by its t-content.

    Returns (valuation, normalized) where normalized = t^(-valuation) * v,
    the minimum valuation over entries of normalized is 0, and the t = 0
    evaluation of normalized is a nonzero rational vector.
    """
    vals = [p.valuation() for p in v if not p.is_zero]
    if not vals:
        raise ValueError("cannot normalize the zero vector")
    c = min(vals)
    return c, tuple(p.shift(-c) for p in v)


def vec_at_zero(v):
    """Evaluate a LaurentVec at t = 0 (requires all valuations >= 0)."""
    return tuple(p.at_zero() for p in v)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(v, s):
    return tuple(p.scale(s) for p in v)


def vec_combination(coeffs, vecs):
    """Rational combination sum_i coeffs[i] * vecs[i]."""
    n = len(vecs[0])
    out = [LaurentPoly() for _ in range(n)]
    for c, v in zip(coeffs, vecs):
        if not c:
            continue
        for i, p in enumerate(v):
            if not p.is_zero:
                out[i] = out[i] + p.scale(c)
    return tuple(out)
