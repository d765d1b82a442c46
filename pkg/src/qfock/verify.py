"""Relation and identity suites producing machine-readable reports.

Every suite walks a deterministic grid of basis vectors, re-derives both
sides of each relation (Chevalley presentation, Serre, Drinfeld, the
q-symmetrization residual, Littlewood-Richardson three-way agreement,
closed-form versus brute-force oracle) and collects exact mismatches.  A
report passes iff its violation list is empty.

The grids of independent checks may be evaluated by a small thread pool
capped by the QFOCK_THREADS environment variable (default 1); results are
merged in submission order so reports are identical either way.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import fock
from .fock import FockVector
from .oracle import (
    PowerState,
    phi_component,
    power_state_to_schur_terms,
    psi_component,
    schur_terms_to_power_state,
    x_minus_component,
    x_plus_component,
)
from .polyvars import signed_alternant, vp_mul, vp_sub
from .qring import ONE, HalfLaurent, RatHalfLaurent, exact_divide, qfactorial
from .schur import (
    lr_product,
    lr_product_oracle,
    weyl_bialternant,
)
from .shapes import conjugate, partitions_up_to
from .words import parse_word


@dataclass
class CheckReport:
    suite: str
    config: dict
    violations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, descriptor: str, expected, actual):
        self.violations.append(
            {"input": descriptor, "expected": str(expected), "actual": str(actual)}
        )

    def finalize(self) -> "CheckReport":
        self.violations.sort(key=lambda v: v["input"])
        return self

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "config": self.config,
            "pass": self.passed,
            "violations": self.violations,
        }


def thread_count() -> int:
    raw = os.environ.get("QFOCK_THREADS", "1")
    try:
        n = int(raw)
    except ValueError as exc:
        raise ValueError(f"QFOCK_THREADS must be a positive integer, got {raw!r}") from exc
    if n < 1:
        raise ValueError(f"QFOCK_THREADS must be a positive integer, got {raw!r}")
    return n


def _map(fn, items):
    items = list(items)
    workers = thread_count()
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def basis_grid(max_weight: int, max_charge: int):
    """Deterministic list of (sector, charge, partition) basis labels."""
    out = []
    for sector in (0, 1):
        for charge in range(-max_charge, max_charge + 1):
            for lam in partitions_up_to(max_weight):
                out.append((sector, charge, lam))
    return out


def _label(sector, charge, lam, extra=""):
    body = f"sector={sector} charge={charge} lam={list(lam)}"
    return f"{body} {extra}".strip()


Q_DENOM = HalfLaurent({2: 1, -2: -1})  # q - 1/q


# ---------------------------------------------------------------------------


def check_chevalley(max_weight: int = 4, max_charge: int = 2) -> CheckReport:
    """K/q^d scalars and the [e_i, f_j] relation on the basis grid."""
    report = CheckReport(
        "chevalley", {"max_weight": max_weight, "max_charge": max_charge}
    )
    cartan = ((2, -2), (-2, 2))

    def one_vector(entry):
        sector, charge, lam = entry
        found = []
        v = FockVector.basis(sector, charge, lam)
        for i in (0, 1):
            if fock.k_action(i, -1, fock.k_action(i, 1, v)) != v:
                found.append((_label(*entry, f"K{i} K{i}^-1"), v, "not identity"))
        if fock.qd_action(-1, fock.qd_action(1, v)) != v:
            found.append((_label(*entry, "qd qdinv"), v, "not identity"))
        for i in (0, 1):
            ki = fock.k_action(i, 1, v)
            if fock.qd_action(1, fock.k_action(i, 1, fock.qd_action(-1, v))) != ki:
                found.append((_label(*entry, f"qd K{i} commute"), ki, "mismatch"))
        for i in (0, 1):
            for j in (0, 1):
                for gen, sgn in (("e", 1), ("f", -1)):
                    act = fock.chevalley(f"{gen}{j}", 1, v)
                    lhs = fock.k_action(i, 1, fock.chevalley(f"{gen}{j}", 1, fock.k_action(i, -1, v)))
                    rhs = act.scale(HalfLaurent.qpow(sgn * cartan[i][j]))
                    if lhs != rhs:
                        found.append((_label(*entry, f"K{i} {gen}{j} K{i}^-1"), rhs, lhs))
                delta = 1 if j == 0 else 0
                for gen, sgn in (("e", 1), ("f", -1)):
                    lhs = fock.qd_action(1, fock.chevalley(f"{gen}{j}", 1, fock.qd_action(-1, v)))
                    rhs = fock.chevalley(f"{gen}{j}", 1, v).scale(
                        HalfLaurent.qpow(sgn * delta)
                    )
                    if lhs != rhs:
                        found.append((_label(*entry, f"qd {gen}{j} qd^-1"), rhs, lhs))
        for i in (0, 1):
            for j in (0, 1):
                lhs = fock.chevalley(f"e{i}", 1, fock.chevalley(f"f{j}", 1, v)) - fock.chevalley(
                    f"f{j}", 1, fock.chevalley(f"e{i}", 1, v)
                )
                if i != j:
                    if lhs:
                        found.append((_label(*entry, f"[e{i}, f{j}]"), "0", lhs))
                    continue
                kv = fock.k_action(i, 1, v) - fock.k_action(i, -1, v)
                rhs_terms = {}
                broken = False
                for key, c in kv.terms.items():
                    quo = exact_divide(c, Q_DENOM)
                    if quo is None:
                        broken = True
                        break
                    rhs_terms[key] = quo
                if broken:
                    found.append((_label(*entry, f"[e{i}, f{i}] divisibility"), kv, "inexact"))
                elif lhs != FockVector(sector, rhs_terms):
                    found.append(
                        (_label(*entry, f"[e{i}, f{i}]"), FockVector(sector, rhs_terms), lhs)
                    )
        return found

    for found in _map(one_vector, basis_grid(max_weight, max_charge)):
        for descriptor, expected, actual in found:
            report.add(descriptor, expected, actual)
    return report.finalize()


def check_serre(max_weight: int = 3, max_charge: int = 2) -> CheckReport:
    """The quantum Serre relations in divided-power form on the basis grid."""
    report = CheckReport("serre", {"max_weight": max_weight, "max_charge": max_charge})

    def divided(gen, r, v):
        return v if r == 0 else fock.chevalley(gen, r, v)

    def one_vector(entry):
        sector, charge, lam = entry
        v = FockVector.basis(sector, charge, lam)
        found = []
        for letter in ("e", "f"):
            for i, j in ((0, 1), (1, 0)):
                acc = FockVector(sector)
                for r in range(4):
                    term = divided(
                        f"{letter}{i}", r, fock.chevalley(f"{letter}{j}", 1, divided(f"{letter}{i}", 3 - r, v))
                    )
                    acc = acc + (term.scale(-1) if r % 2 else term)
                if acc:
                    found.append((_label(*entry, f"serre {letter} i={i} j={j}"), "0", acc))
        return found

    for found in _map(one_vector, basis_grid(max_weight, max_charge)):
        for descriptor, expected, actual in found:
            report.add(descriptor, expected, actual)
    return report.finalize()


def _rat_terms(v: FockVector) -> dict:
    return {k: RatHalfLaurent(c.terms) for k, c in v.terms.items()}


def check_drinfeld(
    max_weight: int = 4, index_window: int = 2, max_charge: int = 2
) -> CheckReport:
    """Both current relations, with the Cartan series evaluated by the oracle."""
    report = CheckReport(
        "drinfeld",
        {
            "max_weight": max_weight,
            "index_window": index_window,
            "max_charge": max_charge,
        },
    )
    window = range(-index_window, index_window + 1)

    def one_vector(entry):
        sector, charge, lam = entry
        v = FockVector.basis(sector, charge, lam)
        found = []
        for m in window:
            for n in window:
                # quadratic relation for both signs
                for name, op in (("plus", fock.x_plus), ("minus", fock.x_minus)):
                    sgn = 1 if name == "plus" else -1
                    q2 = HalfLaurent.qpow(2 * sgn)
                    lhs = (
                        op(m, op(n, v))
                        - op(n, op(m, v)).scale(q2)
                        - op(m - 1, op(n + 1, v)).scale(q2)
                        + op(n + 1, op(m - 1, v))
                    )
                    if lhs:
                        found.append(
                            (_label(*entry, f"quadratic {name} m={m} n={n}"), "0", lhs)
                        )
                # mixed commutator against the Cartan series
                lhs = fock.x_plus(m, fock.x_minus(n, v)) - fock.x_minus(
                    n, fock.x_plus(m, v)
                )
                state = schur_terms_to_power_state(sector, v.terms)
                k = m + n
                psi = psi_component(k, state)
                phi = phi_component(k, state)
                combined = {}
                for key, c in psi.terms.items():
                    combined[key] = c.shifted(m - n)
                for key, c in phi.terms.items():
                    cur = combined.get(key)
                    d = c.shifted(n - m)
                    combined[key] = -d if cur is None else cur - d
                back = power_state_to_schur_terms(PowerState(sector, combined))
                rhs = {}
                broken = False
                for key, c in back.items():
                    if not c:
                        continue
                    quo = exact_divide(c, RatHalfLaurent(Q_DENOM.terms))
                    if quo is None:
                        broken = True
                        break
                    rhs[key] = quo
                if broken:
                    found.append(
                        (_label(*entry, f"mixed m={m} n={n} divisibility"), "exact", "inexact")
                    )
                elif _rat_terms(lhs) != {k2: c for k2, c in rhs.items() if c}:
                    found.append((_label(*entry, f"mixed m={m} n={n}"), rhs, lhs))
        return found

    for found in _map(one_vector, basis_grid(max_weight, max_charge)):
        for descriptor, expected, actual in found:
            report.add(descriptor, expected, actual)
    return report.finalize()


def check_q_vandermonde(max_k: int = 5) -> CheckReport:
    """The staircase expansion of prod (z_i - q z_j): the leftover monomials
    must all have a repeated exponent and vanish at q = 1."""
    report = CheckReport("q_vandermonde", {"max_k": max_k})
    for k in range(1, max_k + 1):
        poly = {(0,) * k: ONE}
        for i in range(k):
            for j in range(i + 1, k):
                zi = tuple(1 if t == i else 0 for t in range(k))
                zj = tuple(1 if t == j else 0 for t in range(k))
                poly = vp_mul(poly, {zi: ONE, zj: HalfLaurent({2: -1})})
        staircase = signed_alternant(
            tuple(range(k - 1, -1, -1)),
            sign_of_inversions=lambda inv: HalfLaurent.qpow(inv, (-1) ** inv),
        )
        residual = vp_sub(poly, staircase)
        for key, coeff in residual.items():
            if len(set(key)) == len(key):
                report.add(f"k={k} monomial {key}", "repeated exponent", "all distinct")
            if coeff.at_one() != 0:
                report.add(f"k={k} monomial {key}", "vanishing at q=1", str(coeff))
    return report.finalize()


def check_lr(max_total_weight: int = 8) -> CheckReport:
    """Three-way LR agreement plus positivity and conjugation symmetry."""
    report = CheckReport("lr", {"max_total_weight": max_total_weight})
    pairs = []
    for lam in partitions_up_to(max_total_weight):
        for mu in partitions_up_to(max_total_weight - sum(lam)):
            if (sum(lam), lam) <= (sum(mu), mu):
                pairs.append((lam, mu))

    def one_pair(pair):
        lam, mu = pair
        found = []
        direct = lr_product(lam, mu)
        via_pieri = lr_product_oracle(lam, mu)
        if direct != via_pieri:
            found.append((f"lr {lam} x {mu} (pieri route)", via_pieri, direct))
        for nu, c in direct.terms.items():
            if set(c.terms) != {0} or c.terms[0] <= 0:
                found.append(
                    (f"lr {lam} x {mu} coefficient at {nu}", "positive integer", c)
                )
        conj = lr_product(conjugate(lam), conjugate(mu))
        if {conjugate(k): c for k, c in direct.terms.items()} != dict(conj.terms):
            found.append((f"lr {lam} x {mu} conjugation", conj, direct))
        if lam and mu:
            nvars = len(lam) + len(mu)
            long_nu = [nu for nu in direct.terms if len(nu) > nvars]
            if long_nu:
                found.append(
                    (f"lr {lam} x {mu} length bound", f"l(nu) <= {nvars}", long_nu)
                )
            else:
                lhs = vp_mul(weyl_bialternant(lam, nvars), weyl_bialternant(mu, nvars))
                rhs = {}
                for nu, c in direct.terms.items():
                    k = c.at_one()
                    for key, val in weyl_bialternant(nu, nvars).items():
                        nc = rhs.get(key, 0) + k * val
                        if nc:
                            rhs[key] = nc
                        else:
                            rhs.pop(key, None)
                if vp_sub(lhs, rhs):
                    found.append((f"lr {lam} x {mu} bialternant", "0 residual", "nonzero"))
        return found

    for found in _map(one_pair, pairs):
        for descriptor, expected, actual in found:
            report.add(descriptor, expected, actual)
    return report.finalize()


def check_oracle(
    max_weight: int = 5,
    max_charge: int = 2,
    index_window: int = 3,
    divided_max_weight: int = 3,
    divided_window: int = 2,
    divided_max_r: int = 3,
) -> CheckReport:
    """Closed-form actions against the brute-force evaluator, plus the
    divided-power/[r]! iteration identity."""
    report = CheckReport(
        "oracle",
        {
            "max_weight": max_weight,
            "max_charge": max_charge,
            "index_window": index_window,
            "divided_max_weight": divided_max_weight,
            "divided_window": divided_window,
            "divided_max_r": divided_max_r,
        },
    )

    def one_vector(entry):
        sector, charge, lam = entry
        v = FockVector.basis(sector, charge, lam)
        state = schur_terms_to_power_state(sector, v.terms)
        found = []
        for n in range(-index_window, index_window + 1):
            for name, closed, component in (
                ("plus", fock.x_plus, x_plus_component),
                ("minus", fock.x_minus, x_minus_component),
            ):
                got = power_state_to_schur_terms(component(n, state))
                got = {k: c for k, c in got.items() if c}
                want = _rat_terms(closed(n, v))
                if got != want:
                    found.append((_label(*entry, f"x_{name} n={n}"), want, got))
        if sum(lam) <= divided_max_weight:
            for n in range(-divided_window, divided_window + 1):
                for r in range(2, divided_max_r + 1):
                    for name, divided, single in (
                        ("plus", fock.x_plus_divided, fock.x_plus),
                        ("minus", fock.x_minus_divided, fock.x_minus),
                    ):
                        lhs = divided(n, r, v).scale(qfactorial(r))
                        rhs = v
                        for _ in range(r):
                            rhs = single(n, rhs)
                        if lhs != rhs:
                            found.append(
                                (_label(*entry, f"divided {name} n={n} r={r}"), rhs, lhs)
                            )
        return found

    for found in _map(one_vector, basis_grid(max_weight, max_charge)):
        for descriptor, expected, actual in found:
            report.add(descriptor, expected, actual)
    return report.finalize()


# ---------------------------------------------------------------------------
# golden corpus
#
# Words act on the highest weight vector of the stated sector.  Every row is
# reproduced independently by the brute-force evaluator, and the second-sector
# rows are additionally forced by linearity and f^r = [r]! f^(r) from the
# lattice rows; the acceptance tests carry the per-row derivations.


def _H(**kw):
    return HalfLaurent({2 * int(k[1:].replace("m", "-")): v for k, v in kw.items()})


GOLDEN_FIRST_SECTOR = (
    ("f0", {(1, ()): _H(q2=1)}),
    ("f1 f0", {(0, (1,)): _H(q4=-1, q2=-1)}),
    ("f1^(2) f0", {(-1, ()): _H(q3=-1)}),
    ("f0 f1 f0", {(1, (1,)): _H(q4=1, q2=1)}),
    ("f1 f0 f1 f0", {(0, (2,)): _H(q4=-1, q2=-1), (0, (1, 1)): _H(q8=1, q6=1)}),
    ("f0 f1^(2) f0", {(0, (1, 1)): _H(q3=-1), (0, (2,)): _H(q5=-1, q3=-1, q1=-1)}),
    (
        "f0 f1 f0 f1 f0",
        {(1, (2,)): _H(q6=1, q4=2, q2=1), (1, (1, 1)): _H(q6=1, q4=2, q2=1)},
    ),
    ("f0^(2) f1^(2) f0", {(1, (2,)): _H(q4=1), (1, (1, 1)): _H(q6=1, q4=1, q2=1)}),
    ("f0^(3) f1^(2) f0", {(2, ()): _H(q6=1)}),
    ("f1^(2) f0 f1 f0", {(-1, (1,)): _H(q7=1, q5=1)}),
)

GOLDEN_SECOND_SECTOR = (
    ("f1", {(-1, ()): ONE}),
    ("f0 f1", {(0, (1,)): _H(q2=1, q0=1)}),
    ("f0^(2) f1", {(1, ()): _H(q3=-1)}),
    ("f1 f0 f1", {(-1, (1,)): _H(q4=-1, q2=-1)}),
    ("f0 f1 f0 f1", {(0, (2,)): _H(q2=1, q0=1), (0, (1, 1)): _H(q6=-1, q4=-1)}),
    ("f1 f0^(2) f1", {(0, (1, 1)): _H(q7=-1, q5=-1, q3=-1), (0, (2,)): _H(q5=-1)}),
    (
        "f1 f0 f1 f0 f1",
        {(-1, (2,)): _H(q8=1, q6=2, q4=1), (-1, (1, 1)): _H(q8=1, q6=2, q4=1)},
    ),
    ("f1^(2) f0^(2) f1", {(-1, (2,)): _H(q8=1, q6=1, q4=1), (-1, (1, 1)): _H(q6=1)}),
    ("f1^(3) f0^(2) f1", {(-2, ()): _H(q6=1)}),
    ("f0^(2) f1 f0 f1", {(1, (1,)): _H(q5=-1, q3=-1)}),
)


def check_golden() -> CheckReport:
    """Replay the reference corpus of generator words in both sectors."""
    report = CheckReport("golden", {"entries": 20})
    for sector, rows in ((0, GOLDEN_FIRST_SECTOR), (1, GOLDEN_SECOND_SECTOR)):
        start = FockVector.basis(sector)
        for word, expect in rows:
            got = fock.apply_word(parse_word(word), start)
            want = FockVector(sector, expect)
            if got != want:
                report.add(f"sector={sector} word={word!r}", want, got)
    return report.finalize()


SUITES = {
    "chevalley": check_chevalley,
    "serre": check_serre,
    "drinfeld": check_drinfeld,
    "qvandermonde": check_q_vandermonde,
    "lr": check_lr,
    "oracle": check_oracle,
    "golden": check_golden,
}


def run_suites(names=None, overrides=None) -> list[CheckReport]:
    """Run the named suites (all by default) with optional config overrides."""
    chosen = list(SUITES) if not names else list(names)
    reports = []
    for name in chosen:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
        kwargs = dict(overrides.get(name, {})) if overrides else {}
        reports.append(SUITES[name](**kwargs))
    return reports
