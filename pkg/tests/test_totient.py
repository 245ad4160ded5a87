import math

import pytest

from extrsa import totient
from extrsa.errors import CapacityError, DomainError


def phi_by_scan(n):
    return sum(1 for m in range(1, n + 1) if math.gcd(m, n) == 1)


class TestPhi:
    @pytest.mark.parametrize("n,want", [(10, 4), (20, 8), (1, 1), (7, 6), (97, 96)])
    def test_examples(self, n, want):
        assert totient.phi(n) == want

    def test_prime_is_p_minus_one(self):
        for p in (2, 3, 5, 7, 11, 101, 9973):
            assert totient.phi(p) == p - 1

    def test_zero(self):
        with pytest.raises(DomainError):
            totient.phi(0)

    def test_against_scan(self):
        for n in range(1, 1001):
            assert totient.phi(n) == phi_by_scan(n), n

    def test_large_semiprime(self):
        p, q = 2**61 - 1, 2**31 - 1
        assert totient.phi(p * q) == (p - 1) * (q - 1)


class TestPhiSet:
    def test_examples(self):
        assert totient.phi_set(10).members == (1, 3, 7, 9)
        assert totient.phi_set(20).members == (1, 3, 7, 9, 11, 13, 17, 19)
        assert totient.phi_set(1).members == (1,)

    def test_size_matches_phi(self):
        for n in range(1, 301):
            ps = totient.phi_set(n)
            assert len(ps.members) == totient.phi(n)
            assert all(math.gcd(m, n) == 1 for m in ps.members)
            assert list(ps.members) == sorted(set(ps.members))

    def test_capacity(self):
        with pytest.raises(CapacityError):
            totient.phi_set(10**7)
        assert totient.phi_set(50, limit=50).n == 50
        with pytest.raises(CapacityError):
            totient.phi_set(51, limit=50)


class TestMultiplicativeOrder:
    def test_identity(self):
        for n in (2, 5, 10, 97):
            assert totient.multiplicative_order(1, n) == 1

    def test_derived_by_brute_force(self):
        # powers of 3 mod 10: 3, 9, 7, 1 and powers of 9 mod 10: 9, 1
        assert totient.multiplicative_order(3, 10) == 4
        assert totient.multiplicative_order(9, 10) == 2

    def test_matches_naive_search(self):
        for n in range(2, 151):
            for m in totient.phi_set(n).members:
                t = 1
                x = m % n
                while x != 1:
                    x = x * m % n
                    t += 1
                assert totient.multiplicative_order(m, n) == t

    def test_divides_group_order(self):
        for n in range(2, 201):
            phi_n = totient.phi(n)
            for m in totient.phi_set(n).members:
                assert phi_n % totient.multiplicative_order(m, n) == 0

    def test_non_unit(self):
        with pytest.raises(DomainError):
            totient.multiplicative_order(4, 10)

    def test_tiny_modulus(self):
        with pytest.raises(DomainError):
            totient.multiplicative_order(1, 1)
