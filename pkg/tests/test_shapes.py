import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qfock.shapes import (
    as_partition,
    conjugate,
    horizontal_strips,
    is_horizontal_strip,
    is_vertical_strip,
    partitions_in_box,
    partitions_of,
    partitions_up_to,
    straighten,
    vertical_strips,
    z_lambda,
)

tuples = st.lists(st.integers(min_value=-5, max_value=7), max_size=5).map(tuple)


class TestStraighten:
    def test_examples(self):
        assert straighten((1, 4, 1)) == (-1, (3, 2, 1))
        assert straighten((1, 2, 2)) is None
        assert straighten((-1, 1)) == (-1, ())

    def test_partition_fixed(self):
        for lam in partitions_up_to(6):
            for pad in range(3):
                assert straighten(lam + (0,) * pad) == (1, lam)

    @given(tuples)
    @settings(max_examples=300)
    def test_adjacent_exchange(self, t):
        # swapping (a, b) -> (b-1, a+1) at any adjacent slot flips the sign
        for i in range(len(t) - 1):
            a, b = t[i], t[i + 1]
            s = t[:i] + (b - 1, a + 1) + t[i + 2 :]
            r1, r2 = straighten(t), straighten(s)
            if r1 is None:
                assert r2 is None
            else:
                assert r2 == (-r1[0], r1[1])

    def test_symmetric_group_orbit(self):
        for l in range(1, 5):
            delta = tuple(range(l - 1, -1, -1))
            for lam in partitions_up_to(6):
                if len(lam) > l:
                    continue
                padded = lam + (0,) * (l - len(lam))
                shifted = tuple(padded[k] + delta[k] for k in range(l))
                for perm in itertools.permutations(range(l)):
                    inv = sum(
                        1
                        for i in range(l)
                        for j in range(i + 1, l)
                        if perm[i] > perm[j]
                    )
                    t = tuple(shifted[perm[k]] - delta[k] for k in range(l))
                    assert straighten(t) == ((-1) ** inv, lam)

    def test_negative_shifted_entry_is_zero(self):
        assert straighten((-2,)) is None
        assert straighten((0, -3)) is None


class TestConjugate:
    def test_examples(self):
        assert conjugate((3, 2, 1)) == (3, 2, 1)
        assert conjugate((4, 1)) == (2, 1, 1, 1)
        assert conjugate(()) == ()

    def test_involution(self):
        for lam in partitions_up_to(10):
            assert conjugate(conjugate(lam)) == lam
            assert sum(conjugate(lam)) == sum(lam)


class TestStrips:
    def test_horizontal_examples(self):
        assert set(horizontal_strips((1, 1, 1), 2)) == {(3, 1, 1), (2, 1, 1, 1)}
        assert set(horizontal_strips((1,), 4)) == {(5,), (4, 1)}
        for rho in partitions_up_to(5):
            assert horizontal_strips(rho, 0) == (rho,)

    def test_is_strip_examples(self):
        assert not is_horizontal_strip((2, 2, 1), (1, 1, 1))
        assert is_horizontal_strip((3, 1, 1), (1, 1, 1))
        for rho in partitions_up_to(4):
            assert is_horizontal_strip(rho, rho)
            assert is_vertical_strip(rho, rho)

    def test_enumeration_matches_predicate(self):
        for rho in partitions_up_to(4):
            for n in range(4):
                target = sum(rho) + n
                expect = {
                    lam
                    for lam in partitions_of(target)
                    if is_horizontal_strip(lam, rho)
                }
                assert set(horizontal_strips(rho, n)) == expect
                expect_v = {
                    lam for lam in partitions_of(target) if is_vertical_strip(lam, rho)
                }
                assert set(vertical_strips(rho, n)) == expect_v

    def test_vertical_is_conjugated_horizontal(self):
        for rho in partitions_up_to(4):
            for n in range(4):
                assert set(vertical_strips(rho, n)) == {
                    conjugate(k) for k in horizontal_strips(conjugate(rho), n)
                }


class TestZLambda:
    def test_examples(self):
        assert z_lambda((2, 2, 1)) == 8
        assert z_lambda((3, 1, 1)) == 6
        import math

        for n in range(1, 7):
            assert z_lambda((1,) * n) == math.factorial(n)
            assert z_lambda((n,)) == n

    def test_permutation_count(self):
        # sum over lam |- n of n!/z_lambda counts permutations by cycle type
        import math

        for n in range(1, 8):
            assert sum(math.factorial(n) // z_lambda(l) for l in partitions_of(n)) == math.factorial(n)


class TestEnumeration:
    def test_partition_counts(self):
        counts = [len(partitions_of(n)) for n in range(9)]
        assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22]

    def test_partitions_in_box(self):
        got = set(partitions_in_box(2, 2))
        assert got == {(), (1,), (2,), (1, 1), (2, 1), (2, 2)}
        assert list(partitions_in_box(0, 5)) == [()]
        assert list(partitions_in_box(3, 0)) == [()]

    def test_as_partition(self):
        assert as_partition([3, 2, 0, 0]) == (3, 2)
        with pytest.raises(ValueError):
            as_partition([1, 2])
        with pytest.raises(ValueError):
            as_partition([2, -1])
