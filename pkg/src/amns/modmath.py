"""Number theory over Z/pZ: primality, Bezout, modular nth roots.

Root finding distinguishes three situations for x^n = a (mod p):
  - gcd(n, p-1) == 1: the root is unique and a single exponentiation
    (Bezout coefficient of n against p-1) produces it.
  - a == 1 with gcd(n, p-1) > 1: non-trivial roots of unity exist and one
    is found by raising a random element to (p-1)/gcd.
  - general case: prime-by-prime root extraction (Adleman-Manders-Miller
    style Sylow-subgroup discrete logs); returns None when no root exists.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import AmnsError

# Miller-Rabin with 40 pseudo-random bases: error probability < 4^-40 = 2^-80.
_MR_ROUNDS = 40


def is_probable_prime(p: int, rounds: int = _MR_ROUNDS) -> bool:
    if p < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % small == 0:
            return p == small
    d = p - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    rng = random.Random(p)  # deterministic per modulus
    for _ in range(rounds):
        a = rng.randrange(2, p - 1)
        x = pow(a, d, p)
        if x == 1 or x == p - 1:
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """An odd prime modulus p > 3, checked probabilistically on construction."""

    p: int

    def __post_init__(self) -> None:
        if self.p <= 3:
            raise ValueError(f"modulus must exceed 3, got {self.p}")
        if self.p % 2 == 0:
            raise ValueError("modulus must be odd")
        if not is_probable_prime(self.p):
            raise ValueError(f"modulus {self.p:#x} failed the primality test")


def mod_pow(base: int, exp: int, field: PrimeField) -> int:
    if exp < 0:
        raise ValueError("negative exponent")
    return pow(base, exp, field.p)


def bezout(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, u, v) with a*u + b*v = g = gcd(a, b) > 0."""
    if a == 0 and b == 0:
        raise ValueError("bezout(0, 0) is undefined")
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def _check_root_request(n: int, lam: int, field: PrimeField) -> int:
    if n < 2:
        raise ValueError(f"degree must be >= 2, got {n}")
    if lam == 0:
        raise ValueError("lambda must be non-zero")
    if abs(lam) >= field.p:
        raise ValueError("|lambda| must be below p")
    return lam % field.p


def nth_root_gcd1(n: int, lam: int, field: PrimeField) -> int:
    """Unique nth root of lam mod p when gcd(n, p-1) = 1.

    lam^(u) with n*u + (p-1)*v = 1 is the root: raising it to the n gives
    lam^(1 - (p-1)v) = lam by Fermat.
    """
    a = _check_root_request(n, lam, field)
    p = field.p
    g, u, _ = bezout(n, p - 1)
    if g != 1:
        raise ValueError(f"gcd(n, p-1) = {g} != 1")
    return pow(a, u % (p - 1), p)


def nth_root_unity(n: int, field: PrimeField, seed: int = 0) -> int:
    """A non-trivial nth root of 1 mod p; requires d = gcd(n, p-1) > 1.

    x^((p-1)/d) for random x has order dividing d, hence is an nth root of 1
    (d divides n); it differs from 1 with probability >= 1 - 1/d per draw.
    """
    if n < 2:
        raise ValueError(f"degree must be >= 2, got {n}")
    p = field.p
    d = math.gcd(n, p - 1)
    if d == 1:
        raise ValueError("gcd(n, p-1) = 1: only the trivial root of unity exists")
    rng = random.Random(seed)
    for _ in range(64):
        x = rng.randrange(2, p)
        h = pow(x, (p - 1) // d, p)
        if h != 1:
            return h
    raise AmnsError("no non-trivial root of unity found after 64 samples")


def _sylow_dlog(h: int, g: int, q: int, t: int, p: int) -> int | None:
    """Discrete log of h base g inside the cyclic group of order q^t."""
    zeta = pow(g, q ** (t - 1), p)  # primitive qth root of unity
    g_inv = pow(g, -1, p)
    e = 0
    for i in range(t):
        w = pow(h * pow(g_inv, e, p) % p, q ** (t - 1 - i), p)
        x, digit = 1, 0
        while x != w:
            x = x * zeta % p
            digit += 1
            if digit == q:
                return None
        e += digit * q**i
    return e


def _prime_power_root(a: int, q: int, m: int, p: int, rng: random.Random) -> int | None:
    """x with x^(q^m) = a mod p for prime q, or None when no such x exists."""
    t, s = 0, p - 1
    while s % q == 0:
        s //= q
        t += 1
    qm = q**m
    if t == 0:
        return pow(a, pow(qm, -1, p - 1), p)
    qt = q**t
    # Split a across the direct factors of order s and q^t.
    _, mu, nu = bezout(qt, s)
    a_h = pow(a, (mu * qt) % (p - 1), p)
    a_s = pow(a, (nu * s) % (p - 1), p)
    y_h = pow(a_h, pow(qm % s, -1, s), p) if s > 1 else 1
    # Generator of the q-Sylow subgroup from a q-th non-residue.
    while True:
        b = rng.randrange(2, p)
        if pow(b, (p - 1) // q, p) != 1:
            break
    g = pow(b, s, p)
    e = _sylow_dlog(a_s, g, q, t, p)
    if e is None:
        return None
    if m >= t:
        if e != 0:
            return None
        y_s = 1
    else:
        if e % qm:
            return None
        y_s = pow(g, e // qm, p)
    return y_h * y_s % p


def nth_root_any(n: int, lam: int, field: PrimeField, seed: int = 0) -> int | None:
    """Some nth root of lam mod p, or None when none exists.

    Factors n and extracts prime-power roots in sequence; each extraction
    either succeeds or proves non-existence, so a None here is definitive.
    """
    a = _check_root_request(n, lam, field)
    p = field.p
    rng = random.Random(seed)
    x = a
    rem = n
    q = 2
    while rem > 1:
        if q * q > rem:
            q = rem
        if rem % q == 0:
            m = 0
            while rem % q == 0:
                rem //= q
                m += 1
            x = _prime_power_root(x, q, m, p, rng)
            if x is None:
                return None
        else:
            q += 1
    if pow(x, n, p) != a:  # pragma: no cover - sanity net
        raise AmnsError("root extraction produced an invalid value")
    return x


def nth_root_exists(n: int, lam: int, field: PrimeField) -> bool:
    """Existence test for x^n = lam (mod p): lam^((p-1)/gcd(n,p-1)) == 1."""
    a = _check_root_request(n, lam, field)
    d = math.gcd(n, field.p - 1)
    return pow(a, (field.p - 1) // d, field.p) == 1


_COUNT_ROOTS_LIMIT = 1 << 24


def count_roots(n: int, lam: int, field: PrimeField) -> int:
    """Number of x in [1, p) with x^n = lam (mod p), by exhaustion (small p)."""
    a = _check_root_request(n, lam, field)
    p = field.p
    if p >= _COUNT_ROOTS_LIMIT:
        raise AmnsError(f"p >= 2^24: exhaustive root counting unsupported")
    return sum(1 for x in range(1, p) if pow(x, n, p) == a)


def int_nth_root_ceil(value: int, n: int) -> int:
    """Smallest r with r^n >= value, by exact integer binary search."""
    if value <= 0 or n < 1:
        raise ValueError("value must be positive and n >= 1")
    lo, hi = 1, 1
    while hi**n < value:
        hi <<= 1
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**n >= value:
            hi = mid
        else:
            lo = mid + 1
    return lo
