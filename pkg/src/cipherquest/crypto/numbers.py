"""Modular arithmetic, Diffie-Hellman over small primes, and toy RSA.

Everything stays at desk scale (primes below 10^4, RSA primes below 100)
so brute-force verification is always feasible.
"""
from __future__ import annotations

from dataclasses import dataclass

MAX_DH_PRIME = 10_000
MAX_RSA_PRIME = 100


def is_prime(n: int) -> bool:
    """Trial-division primality, adequate for moduli below 10^4."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def modinv(a: int, m: int) -> int:
    g, x, _ = egcd(a % m, m)
    if g != 1:
        raise ValueError(f"{a} has no inverse modulo {m}")
    return x % m


def modpow(base: int, exp: int, modulus: int) -> int:
    """Square-and-multiply exponentiation; modulus must be >= 1."""
    if modulus < 1:
        raise ValueError("modulus must be at least 1")
    if exp < 0:
        raise ValueError("exponent must be nonnegative")
    result = 1 % modulus
    base %= modulus
    while exp:
        if exp & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        exp >>= 1
    return result


@dataclass(frozen=True)
class DhParams:
    p: int
    g: int

    def __post_init__(self) -> None:
        if not is_prime(self.p) or self.p > MAX_DH_PRIME:
            raise ValueError(f"p must be a prime <= {MAX_DH_PRIME}")
        if not 1 < self.g < self.p - 1:
            raise ValueError("generator must lie strictly between 1 and p-1")


def _check_secret(params: DhParams, secret: int) -> None:
    if not 1 <= secret <= params.p - 2:
        raise ValueError("secret must lie in [1, p-2]")


def dh_public(params: DhParams, secret: int) -> int:
    _check_secret(params, secret)
    return modpow(params.g, secret, params.p)


def dh_shared(params: DhParams, my_secret: int, their_public: int) -> int:
    _check_secret(params, my_secret)
    if not 0 < their_public < params.p:
        raise ValueError("public value must lie in [1, p-1]")
    return modpow(their_public, my_secret, params.p)


@dataclass(frozen=True)
class RsaToyKey:
    p: int
    q: int
    e: int
    d: int

    @property
    def n(self) -> int:
        return self.p * self.q

    @property
    def phi(self) -> int:
        return (self.p - 1) * (self.q - 1)


def rsa_keygen_small(p: int, q: int, e: int) -> RsaToyKey:
    for prime in (p, q):
        if not is_prime(prime) or prime >= MAX_RSA_PRIME:
            raise ValueError(f"p and q must be primes below {MAX_RSA_PRIME}")
    if p == q:
        raise ValueError("p and q must be distinct")
    phi = (p - 1) * (q - 1)
    g, _, _ = egcd(e, phi)
    if g != 1:
        raise ValueError("e must be coprime to (p-1)(q-1)")
    return RsaToyKey(p=p, q=q, e=e, d=modinv(e, phi))


def rsa_apply(m: int, exponent: int, n: int) -> int:
    if not 0 <= m < n:
        raise ValueError("message must lie in [0, n)")
    return modpow(m, exponent, n)
