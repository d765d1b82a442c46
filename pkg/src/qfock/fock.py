"""Closed-form level-one actions on the Schur basis of the Fock space.

A :class:`FockVector` is a finite integer-Laurent combination of basis
vectors s_lambda e^{m alpha} (times e^{alpha/2} in sector 1).  The raising
and lowering current components act by a straighten-then-strip sum; their
divided powers act through a Littlewood-Richardson sum over an explicitly
bounded set of partitions.  No division ever happens here: divided powers
land in the integer lattice directly, which is itself one of the checked
invariants.
"""

from __future__ import annotations

from math import comb
from typing import Mapping

from .qring import ONE, HalfLaurent
from .schur import format_term, join_terms, lr_product
from .shapes import (
    Partition,
    conjugate,
    horizontal_strips,
    partition_sort_key,
    partitions_in_box,
    straighten,
)

TermKey = tuple[int, Partition]  # (charge, partition)

GENERATORS = ("e0", "e1", "f0", "f1")
SCALAR_TOKENS = ("K0", "K1", "K0inv", "K1inv", "qd", "qdinv")

Word = tuple[tuple[str, int], ...]


class FockVector:
    """Charge-graded combination of Schur basis vectors in one sector."""

    __slots__ = ("sector", "terms")

    def __init__(self, sector: int, terms: Mapping[TermKey, HalfLaurent] | None = None):
        if sector not in (0, 1):
            raise ValueError("sector must be 0 or 1")
        self.sector = sector
        self.terms = {k: c for k, c in terms.items() if c} if terms else {}

    @classmethod
    def basis(cls, sector: int, charge: int = 0, lam: Partition = (), coeff=None) -> "FockVector":
        return cls(sector, {(charge, tuple(lam)): ONE if coeff is None else coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.sector == other.sector and self.terms == other.terms

    def __add__(self, other: "FockVector") -> "FockVector":
        if self.sector != other.sector:
            raise ValueError("cannot combine vectors from different sectors")
        acc = dict(self.terms)
        for k, c in other.terms.items():
            cur = acc.get(k)
            acc[k] = c if cur is None else cur + c
        return FockVector(self.sector, acc)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, factor) -> "FockVector":
        if not factor:
            return FockVector(self.sector)
        return FockVector(self.sector, {k: c * factor for k, c in self.terms.items()})

    def items_sorted(self):
        return sorted(
            self.terms.items(), key=lambda kv: (kv[0][0],) + partition_sort_key(kv[0][1])
        )

    def __str__(self):
        if not self.terms:
            return "0"
        suffix = "+a/2" if self.sector == 1 else ""
        pieces = []
        for (m, lam), c in self.items_sorted():
            body = f"s[{','.join(map(str, lam))}] " if lam else ""
            pieces.append(format_term(c, f"{body}e^{{{m}a{suffix}}}"))
        return join_terms(pieces)

    def __repr__(self):
        return f"FockVector(sector={self.sector}, terms={self.terms!r})"

    def to_json(self) -> dict:
        return {
            "sector": self.sector,
            "terms": [
                {"charge": m, "partition": list(lam), "coeff": c.to_json()}
                for (m, lam), c in self.items_sorted()
            ],
        }

    @classmethod
    def from_json(cls, obj) -> "FockVector":
        return cls(
            obj["sector"],
            {
                (entry["charge"], tuple(entry["partition"])): HalfLaurent.from_json(
                    entry["coeff"]
                )
                for entry in obj["terms"]
            },
        )


# ---------------------------------------------------------------------------
# single current components


def x_plus(n: int, vec: FockVector) -> FockVector:
    """Raising current component: charge m -> m+1.

    Per basis term s_mu e^{m a}: for j = 0, 1, ... put a_j = -2m-n-1-i-j,
    straighten (a_j, mu) and add q^{a_0 - 2j} times the horizontal j-strip
    sum over the straightened shape.  The loop stops as soon as the shifted
    leading entry a_j + l(mu) goes negative, after which every term is
    structurally zero.
    """
    i = vec.sector
    out: dict[TermKey, HalfLaurent] = {}
    for (m, mu), coeff in vec.terms.items():
        base = -2 * m - n - 1 - i
        j = 0
        while base - j + len(mu) >= 0:
            st = straighten((base - j,) + mu)
            if st is not None:
                sign, rho = st
                factor = coeff.shifted(2 * (base - 2 * j))
                if sign < 0:
                    factor = -factor
                for lam in horizontal_strips(rho, j):
                    _add(out, (m + 1, lam), factor)
            j += 1
    return FockVector(i, out)


def x_minus(n: int, vec: FockVector) -> FockVector:
    """Lowering current component: charge m -> m-1, conjugate-side strips."""
    i = vec.sector
    out: dict[TermKey, HalfLaurent] = {}
    for (m, mu), coeff in vec.terms.items():
        muc = conjugate(mu)
        base = 2 * m - n - 1 + i
        j = 0
        negate = (n + 1 + i) % 2
        while base - j + len(muc) >= 0:
            st = straighten((base - j,) + muc)
            if st is not None:
                sign, rho = st
                factor = coeff.shifted(4 * j)
                if (sign < 0) != bool(negate):
                    factor = -factor
                for kappa in horizontal_strips(rho, j):
                    _add(out, (m - 1, conjugate(kappa)), factor)
            j += 1
    return FockVector(i, out)


def _add(acc: dict, key, coeff):
    cur = acc.get(key)
    acc[key] = coeff if cur is None else cur + coeff


# ---------------------------------------------------------------------------
# divided powers
#
# Both kernels sum over partitions lam with at most r rows and first part
# bounded so that the shifted leading entry of the straightening input stays
# nonnegative; everything else is structurally zero.


def _plus_divided(vec: FockVector, r: int, c_of, pref_of) -> FockVector:
    i = vec.sector
    out: dict[TermKey, HalfLaurent] = {}
    for (m, mu), coeff in vec.terms.items():
        c = c_of(m, i)
        bound = len(mu) + 1 - r - c
        pref = pref_of(m, i)
        for lam in partitions_in_box(r, bound):
            padded = lam + (0,) * (r - len(lam))
            t = tuple(-padded[k] - 2 * (r - 1 - k) - c for k in range(r)) + mu
            st = straighten(t)
            if st is None:
                continue
            sign, rho = st
            factor = coeff.shifted(pref - 4 * sum(lam))
            if sign < 0:
                factor = -factor
            for nu, lr_coeff in lr_product(lam, rho).terms.items():
                _add(out, (m + r, nu), factor * lr_coeff)
    return FockVector(i, out)


def _minus_divided(vec: FockVector, r: int, c_of, pref_of, negate_of) -> FockVector:
    i = vec.sector
    out: dict[TermKey, HalfLaurent] = {}
    for (m, kappa), coeff in vec.terms.items():
        mu = conjugate(kappa)
        c = c_of(m, i)
        bound = len(mu) + 1 - r - c
        pref = pref_of(m, i)
        negate = negate_of(i) % 2
        for lam in partitions_in_box(r, bound):
            padded = lam + (0,) * (r - len(lam))
            t = tuple(-padded[k] - 2 * (r - 1 - k) - c for k in range(r)) + mu
            st = straighten(t)
            if st is None:
                continue
            sign, rho = st
            factor = coeff.shifted(pref + 4 * sum(lam))
            if (sign < 0) != bool(negate):
                factor = -factor
            for nu, lr_coeff in lr_product(lam, rho).terms.items():
                _add(out, (m - r, conjugate(nu)), factor * lr_coeff)
    return FockVector(i, out)


def x_plus_divided(n: int, r: int, vec: FockVector) -> FockVector:
    """Divided power of the raising current; r = 1 reduces to x_plus."""
    if r < 1:
        raise ValueError("divided power requires r >= 1")
    return _plus_divided(
        vec,
        r,
        c_of=lambda m, i: n + 1 + 2 * m + i,
        pref_of=lambda m, i: -6 * comb(r, 2) - 2 * r * (n + 1 + 2 * m + i),
    )


def x_minus_divided(n: int, r: int, vec: FockVector) -> FockVector:
    """Divided power of the lowering current; r = 1 reduces to x_minus."""
    if r < 1:
        raise ValueError("divided power requires r >= 1")
    return _minus_divided(
        vec,
        r,
        c_of=lambda m, i: n + 1 - 2 * m - i,
        pref_of=lambda m, i: 2 * comb(r, 2),
        negate_of=lambda i: r * (n + 1 + i),
    )


def chevalley(gen: str, r: int, vec: FockVector) -> FockVector:
    """Divided power of a Chevalley generator e0, e1, f0, f1.

    e1 and f1 are the zeroth current components; f0 and e0 are the n = -+1
    components conjugated by the charge scalar, which shifts the q-power
    prefactor but leaves the straightening sum untouched.
    """
    if r < 1:
        raise ValueError("divided power requires r >= 1")
    if gen == "e1":
        return x_plus_divided(0, r, vec)
    if gen == "f1":
        return x_minus_divided(0, r, vec)
    if gen == "f0":
        return _plus_divided(
            vec,
            r,
            c_of=lambda m, i: 2 * m + i,
            pref_of=lambda m, i: r * (5 - r),
        )
    if gen == "e0":
        return _minus_divided(
            vec,
            r,
            c_of=lambda m, i: 2 - 2 * m - i,
            pref_of=lambda m, i: 6 * comb(r, 2) - 2 * r * (2 * m + i),
            negate_of=lambda i: r * i,
        )
    raise ValueError(f"unknown generator {gen!r}")


# ---------------------------------------------------------------------------
# Cartan scalars and the degree operator


def k_action(which: int, exponent: int, vec: FockVector) -> FockVector:
    """K_1 scales by q^{2m+i}; K_0 by q^{1-2m-i}; exponent is +-1."""
    if which not in (0, 1):
        raise ValueError("K index must be 0 or 1")
    if exponent not in (1, -1):
        raise ValueError("K exponent must be +1 or -1")
    i = vec.sector
    out = {}
    for (m, lam), c in vec.terms.items():
        eig = (2 * m + i) if which == 1 else (1 - 2 * m - i)
        out[(m, lam)] = c.shifted(2 * exponent * eig)
    return FockVector(i, out)


def qd_action(exponent: int, vec: FockVector) -> FockVector:
    """The degree scalar q^{+-d}: eigenvalue q^{-(|lam| + m^2 + m i)}.

    This grading makes q^d e_j q^-d = q^{delta_{j,0}} e_j and the f-analogue
    hold on every basis vector, which the relation suite asserts.
    """
    if exponent not in (1, -1):
        raise ValueError("q^d exponent must be +1 or -1")
    i = vec.sector
    out = {}
    for (m, lam), c in vec.terms.items():
        eig = sum(lam) + m * m + m * i
        out[(m, lam)] = c.shifted(-2 * exponent * eig)
    return FockVector(i, out)


# ---------------------------------------------------------------------------
# words


def apply_word(word: Word, vec: FockVector) -> FockVector:
    """Apply a generator word, rightmost token first."""
    out = vec
    for token, r in reversed(word):
        if token in GENERATORS:
            out = chevalley(token, r, out)
        elif token == "K0":
            out = k_action(0, 1, out)
        elif token == "K0inv":
            out = k_action(0, -1, out)
        elif token == "K1":
            out = k_action(1, 1, out)
        elif token == "K1inv":
            out = k_action(1, -1, out)
        elif token == "qd":
            out = qd_action(1, out)
        elif token == "qdinv":
            out = qd_action(-1, out)
        else:
            raise ValueError(f"unknown word token {token!r}")
    return out
