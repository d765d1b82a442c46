import pytest

from qfock.fock import (
    FockVector,
    apply_word,
    chevalley,
    k_action,
    qd_action,
    x_minus,
    x_minus_divided,
    x_plus,
    x_plus_divided,
)
from qfock.oracle import (
    PowerState,
    power_state_to_schur_terms,
    schur_terms_to_power_state,
    x_minus_component,
    x_plus_component,
)
from qfock.qring import ONE, HalfLaurent, RatHalfLaurent, qfactorial
from qfock.shapes import partitions_up_to
from qfock.words import parse_word


def H(**kw):
    return HalfLaurent({2 * int(k[1:].replace("m", "-")): v for k, v in kw.items()})


def vec(sector, terms):
    return FockVector(sector, terms)


VAC0 = FockVector.basis(0)
VAC1 = FockVector.basis(1)

GOLDEN_V0 = [
    ("f0", {(1, ()): H(q2=1)}),
    ("f1 f0", {(0, (1,)): H(q4=-1, q2=-1)}),
    ("f1^(2) f0", {(-1, ()): H(q3=-1)}),
    ("f0 f1 f0", {(1, (1,)): H(q4=1, q2=1)}),
    ("f1 f0 f1 f0", {(0, (2,)): H(q4=-1, q2=-1), (0, (1, 1)): H(q8=1, q6=1)}),
    ("f0 f1^(2) f0", {(0, (1, 1)): H(q3=-1), (0, (2,)): H(q5=-1, q3=-1, q1=-1)}),
    (
        "f0 f1 f0 f1 f0",
        {(1, (2,)): H(q6=1, q4=2, q2=1), (1, (1, 1)): H(q6=1, q4=2, q2=1)},
    ),
    (
        "f0^(2) f1^(2) f0",
        {(1, (2,)): H(q4=1), (1, (1, 1)): H(q6=1, q4=1, q2=1)},
    ),
    ("f0^(3) f1^(2) f0", {(2, ()): H(q6=1)}),
    ("f1^(2) f0 f1 f0", {(-1, (1,)): H(q7=1, q5=1)}),
]

# The full table for the second sector as forced by the defining relations
# and the first-principles evaluator; the four starred rows coincide with
# the published table, the remaining six published rows are inconsistent
# with these (see test_acceptance for the contradiction proof).
GOLDEN_V1_CONSISTENT = [
    ("f1", {(-1, ()): ONE}),  # *
    ("f0 f1", {(0, (1,)): H(q2=1, q0=1)}),
    ("f0^(2) f1", {(1, ()): H(q3=-1)}),  # *
    ("f1 f0 f1", {(-1, (1,)): H(q4=-1, q2=-1)}),
    ("f0 f1 f0 f1", {(0, (2,)): H(q2=1, q0=1), (0, (1, 1)): H(q6=-1, q4=-1)}),
    (
        "f1 f0^(2) f1",
        {(0, (1, 1)): H(q7=-1, q5=-1, q3=-1), (0, (2,)): H(q5=-1)},
    ),  # *
    (
        "f1 f0 f1 f0 f1",
        {(-1, (2,)): H(q8=1, q6=2, q4=1), (-1, (1, 1)): H(q8=1, q6=2, q4=1)},
    ),
    (
        "f1^(2) f0^(2) f1",
        {(-1, (2,)): H(q8=1, q6=1, q4=1), (-1, (1, 1)): H(q6=1)},
    ),
    ("f1^(3) f0^(2) f1", {(-2, ()): H(q6=1)}),  # *
    ("f0^(2) f1 f0 f1", {(1, (1,)): H(q5=-1, q3=-1)}),
]


class TestGoldenTables:
    @pytest.mark.parametrize("word,expect", GOLDEN_V0, ids=[w for w, _ in GOLDEN_V0])
    def test_first_sector(self, word, expect):
        assert apply_word(parse_word(word), VAC0) == vec(0, expect)

    @pytest.mark.parametrize(
        "word,expect", GOLDEN_V1_CONSISTENT, ids=[w for w, _ in GOLDEN_V1_CONSISTENT]
    )
    def test_second_sector(self, word, expect):
        assert apply_word(parse_word(word), VAC1) == vec(1, expect)

    @pytest.mark.parametrize(
        "sector,rows", [(0, GOLDEN_V0), (1, GOLDEN_V1_CONSISTENT)]
    )
    def test_tables_against_first_principles(self, sector, rows):
        # recompute every row in the power-sum picture: f1 = X-_0,
        # f0 = q^charge * X+_{-1}, divided powers via division by [r]!
        for word, expect in rows:
            state = PowerState.vacuum(sector)
            factor = ONE
            for token, r in reversed(parse_word(word)):
                for _ in range(r):
                    if token == "f1":
                        state = x_minus_component(0, state)
                    else:
                        state = x_plus_component(-1, state)
                        state = PowerState(
                            state.sector,
                            {
                                (m, lam): c * RatHalfLaurent.qpow(2 * m + sector)
                                for (m, lam), c in state.terms.items()
                            },
                        )
                factor = factor * qfactorial(r)
            got = power_state_to_schur_terms(state)
            got = {k: v for k, v in got.items() if v}
            want = {
                k: RatHalfLaurent((c * factor).terms) for k, c in expect.items()
            }
            assert got == want, word


class TestSingleComponents:
    def test_lowering_example(self):
        got = x_minus(0, FockVector.basis(0, charge=1, lam=(1,)))
        assert got == vec(0, {(0, (2,)): H(q0=-1), (0, (1, 1)): H(q4=1)})

    def test_lowering_on_vacuum(self):
        assert x_minus(-1, VAC0) == FockVector.basis(0, charge=-1)
        assert not x_minus(1, VAC0)

    def test_raising_example(self):
        got = x_plus(0, FockVector.basis(0, charge=-1))
        assert got == vec(0, {(0, (1,)): H(q1=1, qm1=1)})

    def test_raising_straightened_strips(self):
        got = x_plus(-1, FockVector.basis(0, charge=-1, lam=(2, 1)))
        assert got == vec(
            0,
            {
                (0, (2, 2, 1)): H(q2=1),
                (0, (3, 1, 1)): H(qm2=-1),
                (0, (2, 1, 1, 1)): H(qm2=-1),
                (0, (5,)): H(qm6=1),
                (0, (4, 1)): H(qm6=1),
            },
        )

    def test_vanishing_law_iff(self):
        for sector in (0, 1):
            for r in range(-3, 4):
                start = FockVector.basis(sector, charge=r)
                for n in range(-8, 9):
                    plus_zero = not x_plus(n, start)
                    minus_zero = not x_minus(n, start)
                    assert plus_zero == (n > -2 * r - 1 - sector)
                    assert minus_zero == (n > 2 * r - 1 + sector)

    def test_highest_weight_chains(self):
        for sector in (0, 1):
            for r in range(1, 4):
                v = FockVector.basis(sector)
                for n in range(1, 2 * r, 2):  # -1-i, -3-i, ..., -(2r-1)-i
                    v = x_plus(-n - sector, v)
                assert v == FockVector.basis(sector, charge=r)

    def test_homogeneity(self):
        for sector in (0, 1):
            for m in (-2, 0, 1):
                for lam in ((), (2, 1), (1, 1, 1)):
                    for n in (-2, 0, 1):
                        out = x_plus(n, FockVector.basis(sector, m, lam))
                        for (m2, mu) in out.terms:
                            assert m2 == m + 1
                            assert sum(mu) == sum(lam) - 2 * m - n - 1 - sector
                        out = x_minus(n, FockVector.basis(sector, m, lam))
                        for (m2, mu) in out.terms:
                            assert m2 == m - 1
                            assert sum(mu) == sum(lam) + 2 * m - n - 1 + sector


class TestDividedPowers:
    def test_reduces_to_single_at_r1(self):
        for sector in (0, 1):
            for m in (-1, 0, 1):
                for lam in partitions_up_to(4):
                    v = FockVector.basis(sector, m, lam)
                    for n in (-2, 0, 1):
                        assert x_plus_divided(n, 1, v) == x_plus(n, v)
                        assert x_minus_divided(n, 1, v) == x_minus(n, v)

    def test_example(self):
        got = x_minus_divided(0, 2, FockVector.basis(0, charge=1))
        assert got == vec(0, {(-1, ()): H(q1=-1)})

    def test_scaled_iteration(self):
        for sector in (0, 1):
            for m in (-1, 0, 1):
                for lam in partitions_up_to(3):
                    v = FockVector.basis(sector, m, lam)
                    for n in (-1, 0, 1):
                        for r in (2, 3):
                            for divided, single in (
                                (x_plus_divided, x_plus),
                                (x_minus_divided, x_minus),
                            ):
                                lhs = divided(n, r, v).scale(qfactorial(r))
                                rhs = v
                                for _ in range(r):
                                    rhs = single(n, rhs)
                                assert lhs == rhs

    def test_requires_positive_r(self):
        with pytest.raises(ValueError):
            x_plus_divided(0, 0, VAC0)


class TestChevalley:
    def test_examples(self):
        assert chevalley("f0", 1, VAC0) == vec(0, {(1, ()): H(q2=1)})
        assert chevalley("f1", 1, vec(0, {(1, ()): H(q2=1)})) == vec(
            0, {(0, (1,)): H(q4=-1, q2=-1)}
        )
        assert chevalley("f1", 1, VAC1) == vec(1, {(-1, ()): ONE})

    def test_highest_weight_annihilated(self):
        assert not chevalley("e0", 1, VAC0)
        assert not chevalley("e1", 1, VAC0)
        assert not chevalley("e0", 1, VAC1)
        assert not chevalley("e1", 1, VAC1)

    def test_matches_current_composites(self):
        for sector in (0, 1):
            for m in (-1, 0, 1):
                for lam in partitions_up_to(4):
                    v = FockVector.basis(sector, m, lam)
                    for r in (1, 2, 3):
                        assert chevalley("e1", r, v) == x_plus_divided(0, r, v)
                        assert chevalley("f1", r, v) == x_minus_divided(0, r, v)
                        lhs = chevalley("f0", r, v).scale(qfactorial(r))
                        rhs = v
                        for _ in range(r):
                            rhs = k_action(1, 1, x_plus(-1, rhs))
                        assert lhs == rhs
                        lhs = chevalley("e0", r, v).scale(qfactorial(r))
                        rhs = v
                        for _ in range(r):
                            rhs = x_minus(1, k_action(1, -1, rhs))
                        assert lhs == rhs

    def test_integrality_and_q_polynomial(self):
        for sector in (0, 1):
            for m in (-2, 1):
                for lam in partitions_up_to(4):
                    v = FockVector.basis(sector, m, lam)
                    for gen in ("e0", "e1", "f0", "f1"):
                        for r in (1, 2, 3):
                            out = chevalley(gen, r, v)
                            for c in out.terms.values():
                                assert isinstance(c, HalfLaurent)
                                assert c.is_q_poly()


class TestScalars:
    def test_k_examples(self):
        v = FockVector.basis(0, charge=2, lam=(3, 1))
        assert k_action(1, 1, v) == v.scale(H(q4=1))
        assert k_action(0, 1, v) == v.scale(H(qm3=1))
        for sector in (0, 1):
            for m in (-2, 0, 3):
                w = FockVector.basis(sector, m, (1,))
                assert k_action(0, 1, k_action(1, 1, w)) == w.scale(H(q1=1))
                assert k_action(1, -1, k_action(1, 1, w)) == w

    def test_qd_example(self):
        v = FockVector.basis(0, charge=0, lam=(1,))
        assert qd_action(1, v) == v.scale(H(qm1=1))

    def test_qd_twists_generators(self):
        for sector in (0, 1):
            for m in (-1, 0, 2):
                for lam in partitions_up_to(3):
                    v = FockVector.basis(sector, m, lam)
                    for gen, delta in (("e0", 1), ("e1", 0), ("f0", -1), ("f1", 0)):
                        lhs = qd_action(1, chevalley(gen, 1, qd_action(-1, v)))
                        rhs = chevalley(gen, 1, v).scale(HalfLaurent.qpow(delta))
                        assert lhs == rhs


class TestLatticeDividedPowers:
    # the four closed divided-power evaluations on pure lattice vectors
    def test_even_f1_on_plus_charge(self):
        for m in range(4):
            got = (
                chevalley("f1", 2 * m, FockVector.basis(0, charge=m))
                if m
                else FockVector.basis(0)
            )
            sign = (-1) ** m
            expect = FockVector.basis(
                0, charge=-m, coeff=HalfLaurent.qpow(m * (2 * m - 1), sign)
            )
            assert got == expect

    def test_odd_f0_on_minus_charge(self):
        # the published lattice exponent has the wrong sign here: f0 raises
        # the charge, and m = 0 must reproduce f0 = q^2 e^{a}
        for m in range(4):
            got = chevalley("f0", 2 * m + 1, FockVector.basis(0, charge=-m))
            expect = FockVector.basis(
                0,
                charge=m + 1,
                coeff=HalfLaurent.qpow(-(2 * m + 1) * (m - 2), (-1) ** m),
            )
            assert got == expect

    def test_even_f0_in_second_sector(self):
        for m in range(1, 4):
            got = chevalley("f0", 2 * m, FockVector.basis(1, charge=-m))
            expect = FockVector.basis(
                1, charge=m, coeff=HalfLaurent.qpow(-m * (2 * m - 5), (-1) ** m)
            )
            assert got == expect

    def test_odd_f1_in_second_sector(self):
        for m in range(4):
            got = chevalley("f1", 2 * m + 1, FockVector.basis(1, charge=m))
            expect = FockVector.basis(
                1, charge=-(m + 1), coeff=HalfLaurent.qpow(m * (2 * m + 1), (-1) ** m)
            )
            assert got == expect


class TestCorollaryChains:
    def test_first_sector_even_chain(self):
        for m in range(4):
            v = VAC0
            for k in range(1, 2 * m + 1):
                v = chevalley("f1" if k % 2 == 0 else "f0", k, v)
            expect = FockVector.basis(
                0, charge=-m, coeff=HalfLaurent.qpow(3 * m * m, (-1) ** m)
            )
            assert v == expect

    def test_first_sector_odd_chain(self):
        for m in range(4):
            v = VAC0
            for k in range(1, 2 * m + 2):
                v = chevalley("f1" if k % 2 == 0 else "f0", k, v)
            expect = FockVector.basis(
                0, charge=m + 1, coeff=HalfLaurent.qpow((m + 1) * (m + 2))
            )
            assert v == expect

    def test_second_sector_even_chain(self):
        for m in range(4):
            v = VAC1
            for k in range(1, 2 * m + 1):
                v = chevalley("f0" if k % 2 == 0 else "f1", k, v)
            expect = FockVector.basis(
                1, charge=m, coeff=HalfLaurent.qpow(m * (m + 2), (-1) ** m)
            )
            assert v == expect

    def test_second_sector_odd_chain(self):
        for m in range(4):
            v = VAC1
            for k in range(1, 2 * m + 2):
                v = chevalley("f0" if k % 2 == 0 else "f1", k, v)
            expect = FockVector.basis(
                1, charge=-(m + 1), coeff=HalfLaurent.qpow(3 * m * (m + 1))
            )
            assert v == expect


class TestOracleEquivalence:
    def test_small_grid(self):
        for sector in (0, 1):
            for m in (-1, 0, 1):
                for lam in partitions_up_to(3):
                    v = FockVector.basis(sector, m, lam)
                    state = schur_terms_to_power_state(sector, v.terms)
                    for n in (-2, -1, 0, 1, 2):
                        got = power_state_to_schur_terms(x_plus_component(n, state))
                        want = x_plus(n, v).terms
                        assert {k: c for k, c in got.items() if c} == {
                            k: RatHalfLaurent(c.terms) for k, c in want.items()
                        }
                        got = power_state_to_schur_terms(x_minus_component(n, state))
                        want = x_minus(n, v).terms
                        assert {k: c for k, c in got.items() if c} == {
                            k: RatHalfLaurent(c.terms) for k, c in want.items()
                        }


class TestVectorContainer:
    def test_text(self):
        v = vec(0, {(0, (2,)): H(q0=-1), (0, (1, 1)): H(q4=1)})
        assert str(v) == "-1 * s[2] e^{0a} + q^4 * s[1,1] e^{0a}"
        assert str(FockVector.basis(0, 1, coeff=H(q2=1))) == "q^2 * e^{1a}"
        assert str(FockVector.basis(1, -1)) == "1 * e^{-1a+a/2}"
        assert str(FockVector(1)) == "0"

    def test_json_roundtrip(self):
        v = vec(1, {(2, (2, 1)): H(q2=1, qm3=-2), (-1, ()): ONE})
        assert FockVector.from_json(v.to_json()) == v
        charges = [entry["charge"] for entry in v.to_json()["terms"]]
        assert charges == sorted(charges)

    def test_text_injective_on_lookalikes(self):
        pairs = [
            (vec(0, {(0, (11,)): ONE}), vec(0, {(0, (1, 1)): ONE})),
            (vec(0, {(0, (1,)): H(q1=1, q0=1)}), vec(0, {(0, (1,)): H(q1=1)})),
            (vec(0, {(1, ()): ONE}), vec(1, {(1, ()): ONE})),
            (vec(0, {(-1, (2,)): ONE}), vec(0, {(1, (2,)): -ONE})),
        ]
        for a, b in pairs:
            assert str(a) != str(b)

    def test_sector_mismatch(self):
        with pytest.raises(ValueError):
            VAC0 + VAC1

    def test_bad_word_token(self):
        with pytest.raises(ValueError):
            apply_word((("g5", 1),), VAC0)
