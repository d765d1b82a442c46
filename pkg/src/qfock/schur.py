"""Symmetric functions in the Schur and power-sum bases over the v-ring.

The Littlewood-Richardson product is implemented twice on purpose: once by
enumerating nonnegative integer matrices with prescribed row/column sums
(`lr_product`) and once through the Jacobi-Trudi determinant plus repeated
Pieri steps (`lr_product_oracle`).  The two must agree; the verification
suites also compare both against bialternant polynomial arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from .polyvars import VarPoly, divide_by_diff, signed_alternant
from .qring import ONE, HalfLaurent, RatHalfLaurent, _Laurent, qpow
from .shapes import (
    Partition,
    conjugate,
    horizontal_strips,
    partition_sort_key,
    partitions_of,
    straighten,
    vertical_strips,
    z_lambda,
)

# ---------------------------------------------------------------------------
# linear combinations over a partition-indexed basis


class BasisCombination:
    """A finite linear combination of basis vectors indexed by partitions."""

    __slots__ = ("terms",)
    label = "?"

    def __init__(self, terms: Mapping[Partition, object] | None = None):
        self.terms = {k: c for k, c in terms.items() if c} if terms else {}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def basis(cls, lam: Partition, coeff=None):
        return cls({tuple(lam): ONE if coeff is None else coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, BasisCombination):
            return self.label == other.label and self.terms == other.terms
        return NotImplemented

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) + c
        return type(self)(acc)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) - c
        return type(self)(acc)

    def __neg__(self):
        return type(self)({k: -c for k, c in self.terms.items()})

    def scale(self, factor):
        if not factor:
            return type(self)()
        return type(self)({k: c * factor for k, c in self.terms.items()})

    def map_coeff(self, fn: Callable):
        return type(self)({k: fn(c) for k, c in self.terms.items()})

    def items_sorted(self):
        return sorted(self.terms.items(), key=lambda kv: partition_sort_key(kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for lam, c in self.items_sorted():
            body = f"{self.label}[{','.join(map(str, lam))}]" if lam else ""
            pieces.append(format_term(c, body))
        return join_terms(pieces)

    def __repr__(self):
        return f"{type(self).__name__}({self.terms!r})"

    def to_json(self) -> list[dict]:
        return [
            {"partition": list(lam), "coeff": c.to_json()}
            for lam, c in self.items_sorted()
        ]

    @classmethod
    def from_json(cls, obj, coeff_cls=HalfLaurent):
        return cls(
            {
                tuple(entry["partition"]): coeff_cls.from_json(entry["coeff"])
                for entry in obj
            }
        )


class SchurPoly(BasisCombination):
    """Finite combination of Schur functions s_lambda."""

    __slots__ = ()
    label = "s"

    def to_integral(self) -> "SchurPoly":
        return self.map_coeff(
            lambda c: c.to_integral() if isinstance(c, RatHalfLaurent) else c
        )


class PowerPoly(BasisCombination):
    """Finite combination of power-sum monomials p_lambda."""

    __slots__ = ()
    label = "p"


def format_term(coeff, body: str) -> str:
    """Render one `coeff * basis` factor; multi-term coefficients get parens."""
    if isinstance(coeff, _Laurent):
        txt = str(coeff)
        if len(coeff.terms) > 1:
            txt = f"({txt})"
    else:
        txt = str(coeff)
    return f"{txt} * {body}" if body else txt


def join_terms(pieces: list[str]) -> str:
    out = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            out += " - " + piece[1:]
        else:
            out += " + " + piece
    return out


# ---------------------------------------------------------------------------
# Littlewood-Richardson by matrix enumeration


@lru_cache(maxsize=None)
def lr_product(lam: Partition, mu: Partition) -> SchurPoly:
    """s_lam * s_mu as a sum of straightened Schur terms over integer matrices.

    The sum runs over nonnegative integer matrices (k_ij) with row sums M and
    column sums N, each contributing the straightening of (lam + M, mu - N).
    Column sums are bounded by N_j <= mu_j + l(mu) - j: beyond that the
    shifted entry goes negative and the term is structurally zero.  The
    enumeration works on margin pairs (M, N) directly, restricted to the
    pairs whose shifted entries are pairwise distinct (every other matrix
    straightens to zero), and multiplies each surviving term by the number
    of matrices with those margins.
    """
    lam, mu = tuple(lam), tuple(mu)
    if not lam or not mu:
        base = lam or mu
        return SchurPoly({base: ONE})
    if len(mu) > len(lam):
        lam, mu = mu, lam  # the product is symmetric; keep the column side short
    m, n = len(lam), len(mu)
    total_len = m + n
    caps = [mu[j] + (n - 1 - j) for j in range(n)]  # shifted value of column j
    row_shift = [total_len - 1 - i for i in range(m)]

    acc: dict[Partition, int] = {}

    def enumerate_rows(col_sums: tuple[int, ...], w_used: frozenset[int]):
        target = sum(col_sums)
        cols_key = tuple(sorted((c for c in col_sums if c), reverse=True))

        def rows(i: int, left: int, row_acc: tuple[int, ...], seen: set[int]):
            if i == m:
                if left:
                    return
                count = _margin_count(
                    tuple(sorted((r for r in row_acc if r), reverse=True)), cols_key
                )
                if not count:
                    return
                t = tuple(lam[k] + row_acc[k] for k in range(m)) + tuple(
                    mu[j] - col_sums[j] for j in range(n)
                )
                st = straighten(t)
                sign, rho = st  # distinctness was enforced, so st is not None
                acc[rho] = acc.get(rho, 0) + sign * count
                return
            for add in range(left + 1):
                v = lam[i] + add + row_shift[i]
                if v in seen or v in w_used:
                    continue
                seen.add(v)
                rows(i + 1, left - add, row_acc + (add,), seen)
                seen.remove(v)

        rows(0, target, (), set())

    # choose the distinct shifted column values w_j = mu_j - N_j + (n-1-j),
    # starting from the most constrained column
    def choose_w(j: int, used: set[int], n_acc: list[int]):
        if j < 0:
            enumerate_rows(tuple(n_acc), frozenset(used))
            return
        for w in range(caps[j] + 1):
            if w in used:
                continue
            used.add(w)
            n_acc[j] = caps[j] - w
            choose_w(j - 1, used, n_acc)
            used.remove(w)

    choose_w(n - 1, set(), [0] * n)
    return SchurPoly({k: HalfLaurent.const(c) for k, c in acc.items() if c})


@lru_cache(maxsize=None)
def _margin_count(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    """Number of nonnegative integer matrices with the given margins.

    ``rows`` and ``cols`` are sorted positive vectors with equal sums; the
    count only depends on them as multisets, which keeps the memo small.
    """
    if not cols:
        return 1
    first, rest = cols[0], cols[1:]
    total = 0
    tail_capacity = [0] * (len(rows) + 1)
    for i in range(len(rows) - 1, -1, -1):
        tail_capacity[i] = tail_capacity[i + 1] + rows[i]

    def spread(i: int, left: int, new_rows: tuple[int, ...]):
        nonlocal total
        if left > tail_capacity[i]:
            return
        if i == len(rows):
            total += _margin_count(
                tuple(sorted((r for r in new_rows if r), reverse=True)), rest
            )
            return
        for d in range(min(left, rows[i]) + 1):
            spread(i + 1, left - d, new_rows + (rows[i] - d,))

    spread(0, first, ())
    return total


# ---------------------------------------------------------------------------
# Pieri rules and the Jacobi-Trudi route


def pieri_h(n: int, rho: Partition) -> SchurPoly:
    """Multiplication by the complete homogeneous h_n: horizontal n-strips."""
    if n < 0:
        raise ValueError("pieri index must be nonnegative")
    return SchurPoly({lam: ONE for lam in horizontal_strips(tuple(rho), n)})


def pieri_e(n: int, rho: Partition) -> SchurPoly:
    """Multiplication by the elementary e_n: vertical n-strips."""
    if n < 0:
        raise ValueError("pieri index must be nonnegative")
    return SchurPoly({lam: ONE for lam in vertical_strips(tuple(rho), n)})


@lru_cache(maxsize=None)
def jacobi_trudi(lam: Partition) -> tuple[tuple[int, Partition], ...]:
    """Expansion of det(h_{lam_i - i + j}) into signed h-monomials.

    Returns (coefficient, parts) pairs with like monomials combined, parts
    sorted decreasingly, h_0 factors dropped and h_{<0} entries pruning the
    permutation expansion.
    """
    lam = tuple(lam)
    l = len(lam)
    if l == 0:
        return ((1, ()),)
    acc: dict[Partition, int] = {}

    def rec(i: int, used: int, sign: int, parts: tuple[int, ...]):
        if i == l:
            key = tuple(sorted(parts, reverse=True))
            acc[key] = acc.get(key, 0) + sign
            return
        for j in range(l):
            bit = 1 << j
            if used & bit:
                continue
            k = lam[i] - i + j
            if k < 0:
                continue
            flips = bin(used >> (j + 1)).count("1")
            rec(
                i + 1,
                used | bit,
                -sign if flips % 2 else sign,
                parts + (k,) if k else parts,
            )

    rec(0, 0, 1, ())
    items = [(c, parts) for parts, c in acc.items() if c]
    items.sort(key=lambda pc: partition_sort_key(pc[1]))
    return tuple(items)


def lr_product_oracle(lam: Partition, mu: Partition) -> SchurPoly:
    """Independent LR route: expand s_mu by Jacobi-Trudi, then Pieri chains."""
    lam, mu = tuple(lam), tuple(mu)
    total: dict[Partition, int] = {}
    for coeff, parts in jacobi_trudi(mu):
        cur = {lam: 1}
        for k in parts:
            nxt: dict[Partition, int] = {}
            for rho, c in cur.items():
                for out in horizontal_strips(rho, k):
                    nxt[out] = nxt.get(out, 0) + c
            cur = nxt
        for rho, c in cur.items():
            total[rho] = total.get(rho, 0) + coeff * c
    return SchurPoly({k: HalfLaurent.const(c) for k, c in total.items() if c})


def schur_product(f: SchurPoly, g: SchurPoly) -> SchurPoly:
    """Bilinear extension of lr_product."""
    acc = SchurPoly()
    for lam, cf in f.terms.items():
        for mu, cg in g.terms.items():
            acc = acc + lr_product(lam, mu).scale(cf * cg)
    return acc


# ---------------------------------------------------------------------------
# Schur <-> power-sum conversion


@lru_cache(maxsize=None)
def _h_to_power(n: int) -> tuple[tuple[Partition, Fraction], ...]:
    """h_n = sum over lam |- n of p_lam / z_lam."""
    return tuple((lam, Fraction(1, z_lambda(lam))) for lam in partitions_of(n))


def _pmul(a: dict, b) -> dict:
    out: dict[Partition, Fraction] = {}
    for ka, ca in a.items():
        for kb, cb in b:
            key = tuple(sorted(ka + kb, reverse=True))
            nc = out.get(key, 0) + ca * cb
            if nc:
                out[key] = nc
            else:
                out.pop(key, None)
    return out


@lru_cache(maxsize=None)
def schur_basis_to_power(lam: Partition) -> tuple[tuple[Partition, Fraction], ...]:
    """The (rational, q-free) power-sum expansion of a single s_lam."""
    acc: dict[Partition, Fraction] = {}
    for coeff, parts in jacobi_trudi(tuple(lam)):
        term: dict[Partition, Fraction] = {(): Fraction(1)}
        for k in parts:
            term = _pmul(term, _h_to_power(k))
        for key, c in term.items():
            nc = acc.get(key, 0) + coeff * c
            if nc:
                acc[key] = nc
            else:
                acc.pop(key, None)
    return tuple(sorted(acc.items(), key=lambda kv: partition_sort_key(kv[0])))


@lru_cache(maxsize=None)
def _power_basis_to_schur(mu: Partition) -> tuple[tuple[Partition, int], ...]:
    """p_mu = sum_lam chi(lam, mu) s_lam with integer character values.

    Forced by orthonormality of the Schur basis together with
    <p_lam, p_mu> = delta * z_lam: the coefficient of s_lam in p_mu is
    z_mu times the coefficient of p_mu in s_lam.
    """
    w = sum(mu)
    zmu = z_lambda(mu)
    entries = []
    for lam in partitions_of(w):
        val = dict(schur_basis_to_power(lam)).get(mu)
        if val:
            x = val * zmu
            if x.denominator != 1:
                raise ArithmeticError("character table entry failed to be integral")
            entries.append((lam, x.numerator))
    return tuple(entries)


def schur_to_power(f: SchurPoly) -> PowerPoly:
    acc: dict[Partition, RatHalfLaurent] = {}
    for lam, c in f.terms.items():
        rc = RatHalfLaurent(c.terms) if isinstance(c, _Laurent) else RatHalfLaurent.const(c)
        for mu, frac in schur_basis_to_power(lam):
            cur = acc.get(mu)
            add = rc * frac
            acc[mu] = add if cur is None else cur + add
    return PowerPoly(acc)


def power_to_schur(g: PowerPoly) -> SchurPoly:
    acc: dict[Partition, RatHalfLaurent] = {}
    for mu, c in g.terms.items():
        for lam, k in _power_basis_to_schur(mu):
            cur = acc.get(lam)
            add = c * k
            acc[lam] = add if cur is None else cur + add
    return SchurPoly(acc)


# ---------------------------------------------------------------------------
# inner products


def hall_inner(f, g):
    """Bilinear extension of <p_lam, p_mu> = delta_{lam,mu} z_lam.

    Schur inputs are routed through the power-sum expansion and the result
    cleared back to an integer Laurent polynomial (the Gram matrix of the
    Schur basis is the identity, so this always succeeds).
    """
    schur_inputs = isinstance(f, SchurPoly)
    if schur_inputs != isinstance(g, SchurPoly):
        raise TypeError("hall_inner requires both arguments in the same basis")
    fp = schur_to_power(f) if schur_inputs else f
    gp = schur_to_power(g) if schur_inputs else g
    acc = RatHalfLaurent()
    for lam, c in fp.terms.items():
        d = gp.terms.get(lam)
        if d:
            acc = acc + c * d * z_lambda(lam)
    return acc.to_integral() if schur_inputs else acc


def deformed_inner(lam: Partition, mu: Partition) -> tuple[HalfLaurent, HalfLaurent]:
    """Numerator/denominator pair (z_lam, prod_j (1 + q^{2 lam_j})) for lam == mu."""
    lam, mu = tuple(lam), tuple(mu)
    if lam != mu:
        return (HalfLaurent(), ONE)
    den = ONE
    for p in lam:
        den = den * (ONE + qpow(2 * p))
    return (HalfLaurent.const(z_lambda(lam)), den)


# ---------------------------------------------------------------------------
# mixed products of the two families of half vertex operator components


def mixed_product(mu, nu):
    """Value of the mixed composition indexed by subscripts mu (plain) and
    nu (dual) on the vacuum: None for zero, else (sign, partition).

    The dual block is first normalized to a partition kappa by the same
    linkage rule, then the juxtaposition (mu, kappa') is straightened; the
    total sign also carries (-1)**|nu|.
    """
    mu = tuple(int(x) for x in mu)
    nu = tuple(int(x) for x in nu)
    if any(x < 0 for x in mu + nu):
        raise ValueError("mixed_product expects nonnegative subscripts")
    st_nu = straighten(nu)
    if st_nu is None:
        return None
    sgn_nu, kappa = st_nu
    st = straighten(mu + conjugate(kappa))
    if st is None:
        return None
    sgn, rho = st
    sign = sgn_nu * sgn * (-1) ** (sum(nu) % 2)
    return (sign, rho)


# ---------------------------------------------------------------------------
# Weyl bialternant


def weyl_bialternant(lam: Partition, nvars: int) -> VarPoly:
    """The Schur polynomial in nvars variables as an exact alternant quotient.

    Divides sum_sigma sgn(sigma) x^{sigma(lam + delta)} by every (x_i - x_j);
    a failed division signals a bug.
    """
    lam = tuple(lam)
    if nvars < len(lam):
        raise ValueError("need at least l(lam) variables")
    padded = lam + (0,) * (nvars - len(lam))
    entries = tuple(padded[k] + (nvars - 1 - k) for k in range(nvars))
    poly = signed_alternant(entries)
    for i in range(nvars):
        for j in range(i + 1, nvars):
            poly = divide_by_diff(poly, i, j)
            if poly is None:
                raise ArithmeticError("bialternant division was not exact")
    return poly
