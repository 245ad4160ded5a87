import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from extrsa import bigphi, totient
from extrsa.errors import CapacityError, DomainError


def member_by_definition(m, n):
    p = math.gcd(m, n)
    return math.gcd(p, n // p) == 1


class TestPhiMembership:
    def test_non_member_witness(self):
        w = bigphi.phi_membership(2, 20)
        assert (w.p_part, w.q_part, w.is_member) == (2, 10, False)

    def test_member_witness(self):
        w = bigphi.phi_membership(4, 20)
        assert (w.p_part, w.q_part, w.is_member) == (4, 5, True)

    def test_m_equals_n(self):
        for n in (1, 6, 20, 36):
            w = bigphi.phi_membership(n, n)
            assert (w.p_part, w.q_part, w.is_member) == (n, 1, True)

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            bigphi.phi_membership(0, 5)
        with pytest.raises(DomainError):
            bigphi.phi_membership(6, 5)

    def test_witness_invariants(self):
        for n in range(1, 200):
            for m in range(1, n + 1):
                w = bigphi.phi_membership(m, n)
                assert w.p_part * w.q_part == n
                assert m % w.p_part == 0
                assert w.p_part == math.gcd(m, n)
                assert w.is_member == (math.gcd(w.p_part, w.q_part) == 1)
                if w.is_member:
                    assert math.gcd(m, w.q_part) == 1


class TestBigPhiSet:
    def test_all_of_ten(self):
        assert bigphi.big_phi_set(10).members == tuple(range(1, 11))

    def test_twenty(self):
        assert bigphi.big_phi_set(20).members == (1, 3, 4, 5, 7, 8, 9, 11, 12, 13, 15, 16, 17, 19, 20)

    def test_one(self):
        assert bigphi.big_phi_set(1).members == (1,)

    def test_mask_agrees_with_scalar_witness(self):
        # vectorized sieve vs per-message gcd, element by element
        for n in range(1, 400):
            mask = bigphi.membership_mask(n)
            assert not mask[0]
            for m in range(1, n + 1):
                assert mask[m] == member_by_definition(m, n), (m, n)

    def test_superset_of_reduced_residues(self):
        for n in range(1, 500):
            members = set(bigphi.big_phi_set(n).members)
            assert members >= set(totient.phi_set(n).members)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            bigphi.big_phi_set(10**7)
        with pytest.raises(CapacityError):
            bigphi.membership_mask(100, limit=99)


class TestBigPhiCount:
    @pytest.mark.parametrize("n,want", [(10, 10), (20, 15), (1, 1), (12, 9)])
    def test_examples(self, n, want):
        assert bigphi.big_phi_count(n) == want

    def test_zero(self):
        with pytest.raises(DomainError):
            bigphi.big_phi_count(0)

    def test_formula_vs_enumeration_exhaustive(self):
        for n in range(1, 3001):
            assert bigphi.big_phi_count(n) == bigphi.big_phi_count_by_enumeration(n), n

    @settings(max_examples=80, deadline=None)
    @given(n=st.integers(min_value=1, max_value=200_000))
    def test_formula_vs_enumeration_random(self, n):
        assert bigphi.big_phi_count(n) == bigphi.big_phi_count_by_enumeration(n, limit=n)

    def test_squarefree_counts_everything(self):
        for n in range(1, 1001):
            fz_squarefree = all(n % (p * p) != 0 for p in range(2, math.isqrt(n) + 1))
            if fz_squarefree:
                assert bigphi.big_phi_count(n) == n
                assert bigphi.big_phi_set(n).members == tuple(range(1, n + 1))
            else:
                assert bigphi.big_phi_count(n) < n

    def test_at_least_phi(self):
        for n in range(1, 1001):
            assert bigphi.big_phi_count(n) >= totient.phi(n)

    def test_count_of_large_modulus_without_enumeration(self):
        # 2^4 * 3^2 * big prime p: (16-8+1) * (9-3+1) * p
        p = 2**61 - 1
        n = 16 * 9 * p
        assert bigphi.big_phi_count(n) == 9 * 7 * p

    def test_members_sorted_unique(self):
        for n in (24, 96, 97, 180):
            members = bigphi.big_phi_set(n).members
            assert list(members) == sorted(set(members))
            assert members[0] == 1 and members[-1] == n


class TestMaskDtypeAndShape:
    def test_mask_shape(self):
        mask = bigphi.membership_mask(36)
        assert mask.shape == (37,) and mask.dtype == np.bool_


class TestStatedRanges:
    # full verification ranges for this module's set-level invariants

    def test_superset_up_to_5000(self):
        from extrsa.harness import check_membership_superset

        check = check_membership_superset(5000)
        assert check.passed, check.failures

    def test_nonsquarefree_strict_up_to_5000(self):
        from extrsa.harness import check_nonsquarefree_strict

        check = check_nonsquarefree_strict(5000)
        assert check.passed, check.failures

    def test_member_coprime_quotient_up_to_2000(self):
        from extrsa.harness import check_member_coprime_quotient

        check = check_member_coprime_quotient(2000)
        assert check.passed, check.failures
