import pytest

from cipherquest.crypto import (
    DhParams,
    dh_public,
    dh_shared,
    egcd,
    is_prime,
    modinv,
    modpow,
    rsa_apply,
    rsa_keygen_small,
)


def naive_modpow(base: int, exp: int, modulus: int) -> int:
    result = 1 % modulus
    for _ in range(exp):
        result = (result * base) % modulus
    return result


class TestModpow:
    def test_exponent_zero(self):
        assert modpow(7, 0, 13) == 1
        assert modpow(0, 0, 13) == 1

    def test_modulus_one(self):
        assert modpow(5, 3, 1) == 0

    def test_rejects_modulus_zero(self):
        with pytest.raises(ValueError):
            modpow(2, 3, 0)

    def test_rejects_negative_exponent(self):
        with pytest.raises(ValueError):
            modpow(2, -1, 5)

    def test_worked_values(self):
        # repeated-multiplication oracle: 5^6=15625=23*679+8, 5^15 mod 23=19
        assert modpow(5, 6, 23) == 8
        assert modpow(5, 15, 23) == 19

    def test_agrees_with_naive_oracle_for_all_small_inputs(self):
        for modulus in range(1, 101):
            for base in range(modulus):
                acc = 1 % modulus
                for exp in range(modulus):
                    assert modpow(base, exp, modulus) == acc
                    acc = (acc * base) % modulus


class TestEgcd:
    def test_bezout_identity(self):
        for a, b in [(7, 20), (12, 18), (240, 46), (0, 5), (1, 1)]:
            g, x, y = egcd(a, b)
            assert a * x + b * y == g

    def test_modinv(self):
        assert modinv(7, 20) == 3
        assert (modinv(3, 26) * 3) % 26 == 1

    def test_modinv_rejects_non_coprime(self):
        with pytest.raises(ValueError):
            modinv(6, 26)


class TestPrimality:
    def test_small_cases(self):
        assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


class TestDiffieHellman:
    def test_params_validate(self):
        DhParams(23, 5)
        with pytest.raises(ValueError):
            DhParams(24, 5)
        with pytest.raises(ValueError):
            DhParams(23, 22)  # g = p-1 excluded
        with pytest.raises(ValueError):
            DhParams(10007, 5)  # above desk scale

    def test_worked_exchange(self):
        params = DhParams(23, 5)
        alice_pub = dh_public(params, 6)
        bob_pub = dh_public(params, 15)
        assert alice_pub == 8
        assert bob_pub == 19
        # modpow oracle chain: shared = 8^15 mod 23 = 2
        assert dh_shared(params, 15, alice_pub) == 2
        assert dh_shared(params, 6, bob_pub) == 2

    def test_symmetry_over_full_square(self):
        params = DhParams(23, 5)
        for a in range(1, 22):
            pub_a = dh_public(params, a)
            for b in range(1, 22):
                assert dh_shared(params, b, pub_a) == dh_shared(params, a, dh_public(params, b))

    def test_rejects_out_of_range_secret(self):
        params = DhParams(23, 5)
        with pytest.raises(ValueError):
            dh_public(params, 22)  # p-1
        with pytest.raises(ValueError):
            dh_public(params, 0)
        with pytest.raises(ValueError):
            dh_shared(params, 3, 0)


class TestToyRsa:
    def test_worked_keygen(self):
        # extended-Euclid oracle on mod 20: 7*3 = 21 = 1 mod 20
        key = rsa_keygen_small(3, 11, 7)
        assert key.d == 3
        assert key.n == 33

    def test_worked_encryption(self):
        key = rsa_keygen_small(3, 11, 7)
        assert rsa_apply(2, key.e, key.n) == 29
        assert rsa_apply(29, key.d, key.n) == 2

    def test_round_trip_every_message(self):
        key = rsa_keygen_small(3, 11, 7)
        for m in range(33):
            assert rsa_apply(rsa_apply(m, key.e, key.n), key.d, key.n) == m

    def test_rejects_non_coprime_exponent(self):
        with pytest.raises(ValueError):
            rsa_keygen_small(3, 11, 5)  # gcd(5, 20) = 5

    def test_rejects_equal_primes(self):
        with pytest.raises(ValueError):
            rsa_keygen_small(11, 11, 7)

    def test_rejects_large_primes(self):
        with pytest.raises(ValueError):
            rsa_keygen_small(101, 11, 7)

    def test_rejects_oversized_message(self):
        key = rsa_keygen_small(3, 11, 7)
        with pytest.raises(ValueError):
            rsa_apply(33, key.e, key.n)
