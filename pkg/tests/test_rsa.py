import math
import random
import time

import pytest

from extrsa import arith, bigphi, rsa, totient
from extrsa.errors import CapacityError, DomainError, FactorizationTimeout


class TestMakeKeypair:
    def test_classic_example(self):
        key = rsa.make_keypair(10, 3)
        assert key.phi_n == 4
        assert arith.is_congruent(key.d, 7, 4)  # alias class of the textbook d = 7
        assert key.d == 3 and key.k == 2
        assert key.e * key.d == key.k * key.phi_n + 1

    def test_extended_example(self):
        key = rsa.make_keypair(20, 3)
        assert (key.phi_n, key.d, key.k) == (8, 3, 1)

    def test_identity_key(self):
        key = rsa.make_keypair(20, 1)
        assert (key.d, key.k) == (1, 0)
        assert key.is_identity

    def test_invalid_exponent(self):
        with pytest.raises(DomainError):
            rsa.make_keypair(20, 2)  # gcd(2, 8) = 2
        with pytest.raises(DomainError):
            rsa.make_keypair(20, 8)  # e must stay below phi
        with pytest.raises(DomainError):
            rsa.make_keypair(20, 0)

    def test_modulus_too_small(self):
        for n in (0, 1, 2):
            with pytest.raises(DomainError):
                rsa.make_keypair(n, 1)

    def test_exponent_identity_everywhere(self):
        for n in range(3, 200):
            phi_n = totient.phi(n)
            for e in range(1, phi_n):
                if math.gcd(e, phi_n) != 1:
                    continue
                key = rsa.make_keypair(n, e, phi_n=phi_n)
                assert key.e * key.d == key.k * key.phi_n + 1
                assert 1 <= key.d < phi_n or (phi_n == 1 and key.d == 1)

    def test_trusted_phi_shortcut(self):
        p, q = 10007, 10009
        key = rsa.make_keypair(p * q, 65537, phi_n=(p - 1) * (q - 1))
        assert key.phi_n == (p - 1) * (q - 1)

    def test_factorization_timeout(self):
        p, q = 2**127 - 1, 2**107 - 1
        with pytest.raises(FactorizationTimeout):
            rsa.make_keypair(p * q, 3, deadline=time.monotonic() + 0.05)


class TestEncryptDecrypt:
    def test_worked_values(self):
        key = rsa.make_keypair(20, 3)
        assert rsa.encrypt(key, 2) == 8
        assert rsa.decrypt(key, 8) == 12

    def test_derived_values(self):
        key = rsa.make_keypair(10, 3)
        assert rsa.encrypt(key, 7) == 7**3 % 10 == 3
        assert rsa.decrypt(key, 3) == 3**key.d % 10 == 7
        assert pow(3, 7, 10) == 7  # the alias exponent lands in the same class

    def test_unit_message(self):
        key = rsa.make_keypair(20, 3)
        assert rsa.encrypt(key, 1) == 1
        assert rsa.decrypt(key, 1) == 1

    def test_m_equals_n_encodes_to_zero(self):
        key = rsa.make_keypair(20, 3)
        assert rsa.encrypt(key, 20) == 0

    def test_ranges(self):
        key = rsa.make_keypair(20, 3)
        for m in (0, 21):
            with pytest.raises(DomainError):
                rsa.encrypt(key, m)
        for c in (-1, 20):
            with pytest.raises(DomainError):
                rsa.decrypt(key, c)


class TestRoundtrip:
    def test_member_roundtrips(self):
        key = rsa.make_keypair(20, 3)
        assert rsa.roundtrip_ok(key, 7)
        assert not rsa.roundtrip_ok(key, 10)
        assert rsa.roundtrip_ok(key, 20)

    def test_scalar_vs_vector_paths(self):
        for n, e in ((20, 3), (36, 5), (97, 5), (360, 7)):
            key = rsa.make_keypair(n, e)
            mask = rsa.roundtrip_mask(key)
            for m in range(1, n + 1):
                assert mask[m] == rsa.roundtrip_ok(key, m), (n, e, m)


class TestCorrectnessSet:
    def test_extended_example_failures(self):
        report = rsa.correctness_set(rsa.make_keypair(20, 3))
        assert report.correct_set == bigphi.big_phi_set(20).members
        assert report.phi_set_equal
        assert report.failures == ((2, 12), (6, 16), (10, 0), (14, 4), (18, 8))

    def test_squarefree_has_no_failures(self):
        report = rsa.correctness_set(rsa.make_keypair(10, 3))
        assert report.correct_set == tuple(range(1, 11))
        assert report.phi_set_equal
        assert report.failures == ()

    def test_identity_key_correct_everywhere(self):
        for n in (10, 20, 36):
            report = rsa.correctness_set(rsa.make_keypair(n, 1))
            assert report.correct_set == tuple(range(1, n + 1))
            assert report.phi_set_equal == (bigphi.big_phi_count(n) == n)

    def test_capacity(self):
        key = rsa.make_keypair(20, 3)
        with pytest.raises(CapacityError):
            rsa.correctness_set(key, limit=10)

    def test_encryption_injective_on_correct_set(self):
        for n, e in ((20, 3), (36, 5), (48, 5)):
            key = rsa.make_keypair(n, e)
            report = rsa.correctness_set(key)
            images = [rsa.encrypt(key, m) for m in report.correct_set]
            assert len(set(images)) == len(images)

    def test_per_factor_congruences(self):
        key = rsa.make_keypair(20, 3)
        for m in bigphi.big_phi_set(20).members:
            w = bigphi.phi_membership(m, 20)
            recovered = rsa.decrypt(key, rsa.encrypt(key, m))
            assert arith.is_congruent(recovered, m, w.p_part)
            assert arith.is_congruent(recovered, m, w.q_part)


class TestKeyfile:
    def test_save_load_roundtrip(self, tmp_path):
        key = rsa.make_keypair(20, 3)
        path = tmp_path / "key.txt"
        rsa.save_keyfile(key, path)
        assert path.read_text() == "20\n3\n3\n"
        assert rsa.load_keyfile(path) == key

    def test_alias_d_is_canonicalized(self, tmp_path):
        path = tmp_path / "key.txt"
        path.write_text("10\n3\n7\n")  # d = 7 is congruent to 3 mod phi(10) = 4
        key = rsa.load_keyfile(path)
        assert (key.n, key.e, key.d, key.k) == (10, 3, 3, 2)

    def test_invalid_d_rejected(self, tmp_path):
        path = tmp_path / "key.txt"
        path.write_text("20\n3\n5\n")  # 3 * 5 = 15, not 1 mod 8
        with pytest.raises(DomainError):
            rsa.load_keyfile(path)

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "key.txt"
        path.write_text("20\n3\n")
        with pytest.raises(DomainError):
            rsa.load_keyfile(path)
        path.write_text("20\nthree\n3\n")
        with pytest.raises(DomainError):
            rsa.load_keyfile(path)

    def test_import_revalidates_phi_and_k(self, tmp_path):
        p, q = 101, 103
        key = rsa.make_keypair(p * q, 7)
        path = tmp_path / "key.txt"
        rsa.save_keyfile(key, path)
        loaded = rsa.load_keyfile(path)
        assert loaded.phi_n == (p - 1) * (q - 1)
        assert loaded.e * loaded.d == loaded.k * loaded.phi_n + 1


class TestScaleSmoke:
    def test_two_large_primes_roundtrip(self):
        from extrsa.factoring import gen_prime

        rng = random.Random(2024)
        p = gen_prime(128, rng)
        q = gen_prime(128, rng)
        while q == p:
            q = gen_prime(128, rng)
        key = rsa.make_keypair(p * q, 65537, phi_n=(p - 1) * (q - 1))
        for _ in range(25):
            m = rng.randrange(1, key.n + 1)
            assert rsa.roundtrip_ok(key, m)
