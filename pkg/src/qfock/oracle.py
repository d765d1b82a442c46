"""Brute-force evaluator for vertex-operator components on the Fock space.

States live in the power-sum monomial basis b_{-lambda} e^{m alpha} (tensored
with the sector vector), with rational Laurent coefficients.  A vertex
operator is described by its creation/annihilation coefficient sequences and
lattice data (:class:`VertexSpec`); ``apply_vertex_component`` extracts one
z-component of the normal-ordered exponential product from first principles:

    exp(sum c+_n b_{-n} z^{e_c n} / n) exp(sum c-_n b_n z^{e_a n} / n)
        . e^{t alpha} z^{e_d * charge}

The annihilation exponential truncates because each b_n lowers the degree;
the creation side is pinned to the exact z-degree still needed.  Everything
the closed-form module computes is cross-checked against this evaluator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Mapping

from .qring import HalfLaurent, RatHalfLaurent, _Laurent
from .schur import PowerPoly, power_to_schur, schur_basis_to_power
from .shapes import Partition, partitions_of, z_lambda

StateKey = tuple[int, Partition]  # (charge, power-sum monomial)


class PowerState:
    """Finite combination of b_{-lambda} e^{m alpha} vectors in one sector."""

    __slots__ = ("sector", "terms")

    def __init__(self, sector: int, terms: Mapping[StateKey, object] | None = None):
        if sector not in (0, 1):
            raise ValueError("sector must be 0 or 1")
        self.sector = sector
        self.terms = {k: c for k, c in terms.items() if c} if terms else {}

    @classmethod
    def vacuum(cls, sector: int, charge: int = 0, lam: Partition = ()) -> "PowerState":
        return cls(sector, {(charge, tuple(lam)): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def scale(self, factor):
        if not factor:
            return PowerState(self.sector)
        return PowerState(self.sector, {k: c * factor for k, c in self.terms.items()})

    def __add__(self, other: "PowerState") -> "PowerState":
        if self.sector != other.sector:
            raise ValueError("cannot add states from different sectors")
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) + c
        return PowerState(self.sector, acc)

    def __sub__(self, other: "PowerState") -> "PowerState":
        return self + other.scale(-1)

    def normalized(self) -> dict[StateKey, RatHalfLaurent]:
        out = {}
        for k, c in self.terms.items():
            out[k] = (
                RatHalfLaurent(c.terms)
                if isinstance(c, _Laurent)
                else RatHalfLaurent.const(c)
            )
        return out

    def __eq__(self, other):
        if not isinstance(other, PowerState):
            return NotImplemented
        if self.sector != other.sector:
            return False
        if self.terms == other.terms:  # fast path for same-typed coefficients
            return True
        return self.normalized() == other.normalized()

    def __repr__(self):
        return f"PowerState(sector={self.sector}, terms={self.terms!r})"


def apply_b(n: int, state: PowerState) -> PowerState:
    """One Heisenberg mode: b_{-k} multiplies, b_k differentiates with factor k."""
    if n == 0:
        raise ValueError("b_0 is not a generator")
    out: dict[StateKey, object] = {}
    for (m, lam), c in state.terms.items():
        if n < 0:
            key = (m, tuple(sorted(lam + (-n,), reverse=True)))
            out[key] = out.get(key, 0) + c
        else:
            mult = lam.count(n)
            if not mult:
                continue
            rest = list(lam)
            rest.remove(n)
            key = (m, tuple(rest))
            out[key] = out.get(key, 0) + c * (n * mult)
    return PowerState(state.sector, out)


@dataclass
class VertexSpec:
    """Data of one vertex operator in b-coordinates.

    ``cplus(n)`` is the coefficient of b_{-n} z^{creation_zdir * n}/n in the
    creation exponential, ``cminus(n)`` the coefficient of
    b_n z^{annih_zdir * n}/n in the annihilation exponential; ``shift`` is the
    lattice translation and ``charge_zdir`` the epsilon in the z^{eps*charge}
    factor (evaluated before the shift).  ``charge_scalar`` multiplies the
    input by q^{sigma * charge} first (the scalar tail of the half currents).
    """

    name: str
    cplus: Callable[[int], object] | None
    cminus: Callable[[int], object] | None
    shift: int = 0
    charge_zdir: int = 0
    charge_scalar: int = 0
    creation_zdir: int = 1
    annih_zdir: int = -1
    _creation_cache: dict = field(default_factory=dict, repr=False)
    _annih_pow: dict = field(default_factory=dict, repr=False)
    _annih_options: dict = field(default_factory=dict, repr=False)

    def creation_table(self, d: int):
        """All (partition kappa of d, prod cplus(parts)/z_kappa) pairs."""
        if d == 0:
            return (((), 1),)
        cached = self._creation_cache.get(d)
        if cached is None:
            entries = []
            if self.cplus is not None:
                for kappa in partitions_of(d):
                    coeff = Fraction(1, z_lambda(kappa))
                    for part in kappa:
                        coeff = coeff * self.cplus(part)
                    if coeff:
                        entries.append((kappa, coeff))
            cached = tuple(entries)
            self._creation_cache[d] = cached
        return cached

    def annih_power(self, n: int, a: int):
        key = (n, a)
        got = self._annih_pow.get(key)
        if got is None:
            got = self.cminus(n) ** a
            self._annih_pow[key] = got
        return got


def _annihilation_options(spec: VertexSpec, lam: Partition):
    """All ways the annihilation exponential can hit b_{-lam}.

    Returns (boxes_removed, combinatorial factor, remaining monomial) triples;
    the factor for taking a copies of mode n out of multiplicity m is
    C(m, a) * cminus(n)**a, the binomial absorbing z_kappa against the
    falling factorial from differentiation.  Cached per monomial.
    """
    if spec.cminus is None:
        return ((0, 1, lam),)
    cached = spec._annih_options.get(lam)
    if cached is not None:
        return cached
    mults: list[tuple[int, int]] = []
    for p in lam:
        if mults and mults[-1][0] == p:
            mults[-1] = (p, mults[-1][1] + 1)
        else:
            mults.append((p, 1))
    options: list[tuple[int, object, Partition]] = []

    def rec(idx: int, removed: int, factor, kept: tuple[int, ...]):
        if idx == len(mults):
            options.append((removed, factor, kept))
            return
        n, m = mults[idx]
        for a in range(m + 1):
            f = factor if a == 0 else factor * (comb(m, a) * spec.annih_power(n, a))
            rec(idx + 1, removed + a * n, f, kept + (n,) * (m - a))

    rec(0, 0, 1, ())
    cached = tuple(options)
    spec._annih_options[lam] = cached
    return cached


def apply_vertex_component(spec: VertexSpec, z_target: int, state: PowerState) -> PowerState:
    """Coefficient of z**z_target in the spec's operator applied to state.

    Contributions that still need a degree-d creation dressing are merged by
    (charge, remaining monomial, d) before the dressing is expanded, so each
    distinct expansion happens once however many annihilation paths feed it.
    """
    out: dict[StateKey, object] = {}
    pending: dict[tuple[int, Partition, int], object] = {}
    sector = state.sector
    for (m, lam), coeff in state.terms.items():
        charge_eig = 2 * m + sector
        c0 = coeff
        if spec.charge_scalar:
            c0 = c0 * RatHalfLaurent.qpow(spec.charge_scalar * charge_eig)
        p0 = spec.charge_zdir * charge_eig
        m2 = m + spec.shift
        for removed, factor_a, rest in _annihilation_options(spec, lam):
            if not factor_a:
                continue
            need = z_target - p0 - spec.annih_zdir * removed
            d = need * spec.creation_zdir  # |kappa_c|, since zdir is +-1
            if d < 0:
                continue
            base = c0 * factor_a
            if d == 0:
                key = (m2, rest)
                cur = out.get(key)
                out[key] = base if cur is None else cur + base
            else:
                pkey = (m2, rest, d)
                cur = pending.get(pkey)
                pending[pkey] = base if cur is None else cur + base
    for (m2, rest, d), base in pending.items():
        if not base:
            continue
        for kappa, fc in spec.creation_table(d):
            key = (m2, tuple(sorted(rest + kappa, reverse=True)))
            cur = out.get(key)
            add = base * fc
            out[key] = add if cur is None else cur + add
    return PowerState(sector, out)


# ---------------------------------------------------------------------------
# concrete operators, in b-coordinates (b_{-n} = a_{-n}, b_n = (1 + q^{2n}) a_n)

S_SPEC = VertexSpec("half_plain", cplus=lambda n: 1, cminus=lambda n: -1)

S_DUAL_SPEC = VertexSpec("half_dual", cplus=lambda n: -1, cminus=lambda n: 1)

X_PLUS_SPEC = VertexSpec(
    "current_plus",
    cplus=lambda n: RatHalfLaurent({2 * n: 1, -2 * n: 1}),  # q^n + q^-n
    cminus=lambda n: RatHalfLaurent({-2 * n: -1}),  # -q^-n
    shift=1,
    charge_zdir=1,
)

X_MINUS_SPEC = VertexSpec(
    "current_minus",
    cplus=lambda n: RatHalfLaurent({0: -1, 4 * n: -1}),  # -(1 + q^{2n})
    cminus=lambda n: 1,
    shift=-1,
    charge_zdir=-1,
)

PSI_SPEC = VertexSpec(
    "cartan_plus",
    cplus=None,
    cminus=lambda n: RatHalfLaurent({n: 1, -3 * n: -1}),  # q^{n/2} - q^{-3n/2}
    charge_scalar=1,
)

PHI_SPEC = VertexSpec(
    "cartan_minus",
    cplus=lambda n: RatHalfLaurent({-3 * n: 1, 5 * n: -1}),  # (q^{-2n} - q^{2n}) q^{n/2}
    cminus=None,
    charge_scalar=-1,
    creation_zdir=-1,
)


def s_component(k: int, state: PowerState) -> PowerState:
    """S_k, the coefficient of z^-k of the plain half vertex operator."""
    return apply_vertex_component(S_SPEC, -k, state)


def s_dual_component(k: int, state: PowerState) -> PowerState:
    """S*_k, the coefficient of z^k of the dual half vertex operator."""
    return apply_vertex_component(S_DUAL_SPEC, k, state)


def x_plus_component(n: int, state: PowerState) -> PowerState:
    """X+_n, the coefficient of z^{-n-1} of the raising current."""
    return apply_vertex_component(X_PLUS_SPEC, -n - 1, state)


def x_minus_component(n: int, state: PowerState) -> PowerState:
    """X-_n, the coefficient of z^{-n-1} of the lowering current."""
    return apply_vertex_component(X_MINUS_SPEC, -n - 1, state)


def psi_component(k: int, state: PowerState) -> PowerState:
    """psi_k for k >= 0 (zero below)."""
    if k < 0:
        return PowerState(state.sector)
    return apply_vertex_component(PSI_SPEC, -k, state)


def phi_component(k: int, state: PowerState) -> PowerState:
    """phi_k for k <= 0 (zero above)."""
    if k > 0:
        return PowerState(state.sector)
    return apply_vertex_component(PHI_SPEC, k, state)


# ---------------------------------------------------------------------------
# basis conversion between the closed-form module's Schur states and oracle
# power-sum states


def schur_terms_to_power_state(sector: int, terms: Mapping[StateKey, object]) -> PowerState:
    """Expand each (charge, partition) Schur term into power-sum monomials."""
    acc: dict[StateKey, object] = {}
    for (m, lam), coeff in terms.items():
        rc = RatHalfLaurent(coeff.terms) if isinstance(coeff, _Laurent) else coeff
        for mu, frac in schur_basis_to_power(lam):
            key = (m, mu)
            cur = acc.get(key)
            add = rc * frac
            acc[key] = add if cur is None else cur + add
    return PowerState(sector, acc)


def power_state_to_schur_terms(state: PowerState) -> dict[StateKey, RatHalfLaurent]:
    """Collect the state per charge and convert back to the Schur basis."""
    per_charge: dict[int, dict[Partition, object]] = {}
    for (m, mu), c in state.terms.items():
        per_charge.setdefault(m, {})[mu] = c
    out: dict[StateKey, RatHalfLaurent] = {}
    for m, terms in per_charge.items():
        poly = power_to_schur(
            PowerPoly(
                {
                    mu: (c if isinstance(c, _Laurent) else RatHalfLaurent.const(c))
                    for mu, c in terms.items()
                }
            )
        )
        for lam, c in poly.terms.items():
            out[(m, lam)] = c
    return out
