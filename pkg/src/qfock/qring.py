"""Exact Laurent-polynomial arithmetic in v, where v**2 = q.

Every coefficient in the library lives in the ring of Laurent polynomials
in v over the integers (class:`HalfLaurent`) or over the rationals
(class:`RatHalfLaurent`, used only by the brute-force oracle, whose
exponential series divide by part sizes and by z_lambda).  Exponents are
kept in units of v so that half-integer powers of q stay exact; a value
whose exponents are all even prints in terms of q.

There is no floating point anywhere: all comparisons in the test suites
are exact equalities.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping


class _Laurent:
    """Shared implementation for the integer and rational variants.

    ``terms`` maps v-exponent to a nonzero coefficient.  Instances are
    treated as immutable: no method mutates ``terms`` after construction.
    """

    __slots__ = ("terms",)
    _coeff = staticmethod(int)

    def __init__(self, terms: Mapping[int, object] | None = None):
        coerce = self._coeff
        self.terms = (
            {int(e): coerce(c) for e, c in terms.items() if c}
            if terms
            else {}
        )

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[int, object]]):
        acc: dict[int, object] = {}
        for e, c in pairs:
            acc[e] = acc.get(e, 0) + c
        return cls(acc)

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def vpow(cls, e: int, c=1):
        return cls({e: c})

    @classmethod
    def qpow(cls, e: int, c=1):
        """c * q**e, i.e. c * v**(2e)."""
        return cls({2 * e: c})

    # -- ring structure ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, _Laurent):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return type(self)({e: -c for e, c in self.terms.items()})

    def _pair(self, other):
        """Coerce (self, other) to a common class, or return None."""
        if isinstance(other, RatHalfLaurent):
            return (RatHalfLaurent(self.terms), other)
        if isinstance(other, HalfLaurent):
            if isinstance(self, RatHalfLaurent):
                return (self, RatHalfLaurent(other.terms))
            return (self, other)
        if isinstance(other, int):
            return (self, type(self)({0: other} if other else {}))
        if isinstance(other, Fraction):
            return (RatHalfLaurent(self.terms), RatHalfLaurent.const(other))
        return None

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        acc = dict(a.terms)
        for e, c in b.terms.items():
            acc[e] = acc.get(e, 0) + c
        return type(a)(acc)

    __radd__ = __add__

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        acc = dict(a.terms)
        for e, c in b.terms.items():
            acc[e] = acc.get(e, 0) - c
        return type(a)(acc)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        acc: dict[int, object] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return type(a)(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in this ring")
        out = type(self).const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shifted(self, vexp: int):
        """Multiply by v**vexp (fast path used by the action kernels)."""
        if not vexp:
            return self
        return type(self)({e + vexp: c for e, c in self.terms.items()})

    # -- structure queries ---------------------------------------------------

    def bar(self):
        """The bar involution v -> 1/v."""
        return type(self)({-e: c for e, c in self.terms.items()})

    def at_one(self):
        """Evaluate at v = 1 (hence q = 1)."""
        return sum(self.terms.values(), self._coeff(0))

    def max_exp(self) -> int:
        return max(self.terms)

    def min_exp(self) -> int:
        return min(self.terms)

    def is_q_poly(self) -> bool:
        """True when all exponents are even, i.e. the value lies in Z[q, 1/q]."""
        return all(e % 2 == 0 for e in self.terms)

    # -- text and JSON forms -------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        base = "q" if self.is_q_poly() else "v"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            k = e // 2 if base == "q" else e
            parts.append((k, c))
        pieces = []
        for idx, (k, c) in enumerate(parts):
            neg = c < 0
            mag = -c if neg else c
            if k == 0:
                body = _coeff_str(mag)
            else:
                head = "" if mag == 1 else _coeff_str(mag)
                if "/" in head:
                    head = f"({head})"
                body = f"{head}{base}" + (f"^{k}" if k != 1 else "")
            if idx == 0:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.terms!r})"

    def to_json(self) -> dict[str, str]:
        return {str(e): str(self.terms[e]) for e in sorted(self.terms, reverse=True)}

    @classmethod
    def from_json(cls, obj: Mapping[str, object]):
        acc = {}
        for e, c in obj.items():
            if isinstance(c, str):
                c = Fraction(c) if "/" in c else int(c)
            acc[int(e)] = c
        return cls(acc)


def _coeff_str(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


class HalfLaurent(_Laurent):
    """Laurent polynomial in v with arbitrary-precision integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _coeff(c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise TypeError(f"non-integer coefficient {c} in HalfLaurent")
            return c.numerator
        return int(c)


class RatHalfLaurent(_Laurent):
    """Laurent polynomial in v with rational coefficients.

    Embeds :class:`HalfLaurent` losslessly; :meth:`to_integral` goes back
    when every denominator is 1.
    """

    __slots__ = ()
    _coeff = staticmethod(Fraction)

    @classmethod
    def from_half(cls, h: HalfLaurent) -> "RatHalfLaurent":
        return cls(h.terms)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def to_integral(self) -> HalfLaurent:
        if not self.is_integral():
            raise ArithmeticError(f"value is not an integer Laurent polynomial: {self}")
        return HalfLaurent({e: c.numerator for e, c in self.terms.items()})


ZERO = HalfLaurent()
ONE = HalfLaurent({0: 1})


@lru_cache(maxsize=None)
def qpow(e: int) -> HalfLaurent:
    return HalfLaurent({2 * e: 1})


@lru_cache(maxsize=None)
def qint(n: int) -> HalfLaurent:
    """The quantum integer (q**n - q**-n)/(q - 1/q) = q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    if n < 0:
        raise ValueError("quantum integers are defined for n >= 0")
    return HalfLaurent({2 * (n - 1 - 2 * k): 1 for k in range(n)})


@lru_cache(maxsize=None)
def qfactorial(n: int) -> HalfLaurent:
    """[n]! = [n][n-1]...[1], with the empty product for n = 0."""
    if n < 0:
        raise ValueError("q-factorials are defined for n >= 0")
    if n == 0:
        return ONE
    return qfactorial(n - 1) * qint(n)


@lru_cache(maxsize=None)
def qbinomial(n: int, m: int) -> HalfLaurent:
    """Gaussian binomial [n]! / ([m]! [n-m]!), exact in Z[q, 1/q]."""
    if not 0 <= m <= n:
        raise ValueError("qbinomial requires 0 <= m <= n")
    num = ONE
    for k in range(m + 1, n + 1):
        num = num * qint(k)
    quo = exact_divide(num, qfactorial(n - m))
    if quo is None:
        raise ArithmeticError("Gaussian binomial failed to divide exactly")
    return quo


def exact_divide(f: _Laurent, g: _Laurent):
    """Return h with f = g*h when h exists in the same ring, else None.

    For :class:`HalfLaurent` the quotient must have integer coefficients.
    Long division from the top exponent; if an exact quotient exists its
    exponents lie in [min f - min g, max f - max g], which bounds the loop.
    """
    if not g:
        raise ValueError("division by zero")
    cls = type(f)
    if not f:
        return cls()
    low = f.min_exp() - g.min_exp()
    lead_e = g.max_exp()
    lead_c = g.terms[lead_e]
    rem = dict(f.terms)
    quo: dict[int, object] = {}
    integral = isinstance(f, HalfLaurent) and isinstance(g, HalfLaurent)
    while rem:
        e = max(rem)
        qe = e - lead_e
        if qe < low:
            return None
        c = rem[e]
        if integral:
            qc, r = divmod(c, lead_c)
            if r:
                return None
        else:
            qc = Fraction(c) / lead_c
        quo[qe] = qc
        for ge, gc in g.terms.items():
            key = qe + ge
            nc = rem.get(key, 0) - qc * gc
            if nc:
                rem[key] = nc
            else:
                rem.pop(key, None)
    return cls(quo)
