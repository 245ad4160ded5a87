import math

import pytest
from hypothesis import given, strategies as st

from extrsa import arith
from extrsa.errors import DomainError

naturals = st.integers(min_value=0, max_value=10**30)
positives = st.integers(min_value=1, max_value=10**30)


class TestDivRem:
    @pytest.mark.parametrize(
        "a,b,q,r",
        [
            (21, 4, 5, 1),
            (512, 20, 25, 12),
            (7, 1, 7, 0),
            (0, 5, 0, 0),
        ],
    )
    def test_examples(self, a, b, q, r):
        assert arith.div_rem(a, b) == (q, r)

    def test_division_by_zero(self):
        with pytest.raises(DomainError):
            arith.div_rem(5, 0)

    def test_rejects_negative(self):
        with pytest.raises(DomainError):
            arith.div_rem(-1, 3)

    @given(a=naturals, b=positives)
    def test_identity(self, a, b):
        q, r = arith.div_rem(a, b)
        assert a == b * q + r
        assert 0 <= r < b


def divisors_by_scan(n):
    return {d for d in range(1, n + 1) if n % d == 0}


class TestGcd:
    def test_key_exponent_pair(self):
        assert arith.gcd(3, 8) == 1

    def test_self(self):
        assert arith.gcd(7, 7) == 7

    def test_derived_by_divisor_scan(self):
        # independent oracle: largest common element of both divisor sets
        expected = max(divisors_by_scan(12) & divisors_by_scan(20))
        assert expected == 4
        assert arith.gcd(12, 20) == expected

    def test_zero_conventions(self):
        assert arith.gcd(0, 9) == 9
        assert arith.gcd(9, 0) == 9
        with pytest.raises(DomainError):
            arith.gcd(0, 0)

    @given(a=naturals, b=naturals)
    def test_commutes_and_divides(self, a, b):
        if a == 0 and b == 0:
            return
        g = arith.gcd(a, b)
        assert g == arith.gcd(b, a)
        assert (a % g == 0) and (b % g == 0)


class TestExtGcd:
    @pytest.mark.parametrize("a,b", [(3, 4), (3, 8), (4, 6), (0, 5), (240, 46)])
    def test_bezout_identity(self, a, b):
        g, x, y = arith.ext_gcd(a, b)
        assert g == math.gcd(a, b)
        assert a * x + b * y == g

    def test_both_zero(self):
        with pytest.raises(DomainError):
            arith.ext_gcd(0, 0)

    @given(a=naturals, b=naturals)
    def test_identity_random(self, a, b):
        if a == 0 and b == 0:
            return
        g, x, y = arith.ext_gcd(a, b)
        assert g == math.gcd(a, b) and a * x + b * y == g


class TestModInv:
    @pytest.mark.parametrize("a,n,d", [(3, 4, 3), (3, 8, 3), (1, 9, 1)])
    def test_examples(self, a, n, d):
        assert arith.mod_inv(a, n) == d

    def test_not_invertible(self):
        with pytest.raises(DomainError):
            arith.mod_inv(4, 6)

    def test_tiny_modulus(self):
        with pytest.raises(DomainError):
            arith.mod_inv(1, 1)

    def test_round_trip_exhaustive(self):
        # every unit modulo every n up to 1000
        for n in range(2, 1001):
            for a in range(1, n):
                if math.gcd(a, n) != 1:
                    continue
                d = arith.mod_inv(a, n)
                assert 1 <= d < n
                assert a * d % n == 1


class TestModPow:
    @pytest.mark.parametrize(
        "base,exp,mod,want",
        [(2, 9, 20, 12), (6, 9, 20, 16), (7, 1, 10, 7), (5, 0, 7, 1), (3, 0, 1, 0)],
    )
    def test_examples(self, base, exp, mod, want):
        assert arith.mod_pow(base, exp, mod) == want

    def test_zero_modulus(self):
        with pytest.raises(DomainError):
            arith.mod_pow(2, 3, 0)

    def test_against_repeated_multiplication(self):
        for mod in range(1, 51):
            for base in range(0, 51):
                acc = 1 % mod
                for exp in range(0, 51):
                    assert arith.mod_pow(base, exp, mod) == acc
                    acc = acc * base % mod

    def test_large_values_exact(self):
        base, exp, mod = 2**130 + 7, 2**64 + 11, 2**127 - 1
        assert arith.mod_pow(base, exp, mod) == pow(base, exp, mod)


class TestIsCongruent:
    def test_examples(self):
        assert arith.is_congruent(21, 1, 4)
        assert arith.is_congruent(17, 17, 5)
        assert not arith.is_congruent(12, 2, 20)

    def test_zero_modulus(self):
        with pytest.raises(DomainError):
            arith.is_congruent(1, 2, 0)

    @given(a=naturals, b=naturals, n=positives)
    def test_matches_residues(self, a, b, n):
        assert arith.is_congruent(a, b, n) == (a % n == b % n)
