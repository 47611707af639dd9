"""Integer factorization with an effort budget, plus square-free tests."""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

TRIAL_LIMIT = 10**6
DEFAULT_BUDGET = 10**7
# First 13 primes as Miller-Rabin bases are deterministic below this bound.
MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_EXTRA_ROUNDS = 24


def two_adic_valuation(z: int) -> int:
    if z == 0:
        raise ValueError("2-adic valuation of 0 is infinite")
    return (z & -z).bit_length() - 1


@lru_cache(maxsize=1)
def _small_primes(limit: int = TRIAL_LIMIT) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return tuple(i for i in range(limit + 1) if sieve[i])


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; exact below MR_DETERMINISTIC_BOUND, probabilistic above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = list(_MR_BASES)
    if n >= MR_DETERMINISTIC_BOUND:
        rng = random.Random(n)
        bases += [rng.randrange(2, n - 1) for _ in range(_MR_EXTRA_ROUNDS)]
    for a in bases:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int, c: int, budget: int) -> tuple[int | None, int]:
    """One Pollard-rho (Brent variant) run; returns (factor or None, iterations used)."""
    y, r, q, g = 2, 1, 1, 1
    m = 128
    used = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            used += min(m, r - k)
            g = math.gcd(q, n)
            k += m
        r *= 2
        if used > budget:
            return None, used
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return (g if g != n else None), used


def _split(n: int, budget: int) -> tuple[int | None, int]:
    r = math.isqrt(n)
    if r * r == n:
        return r, 0
    spent = 0
    c = 1
    while spent < budget:
        d, used = _brent(n, c, budget - spent)
        spent += used
        if d is not None:
            return d, spent
        c += 1
    return None, spent


@dataclass(frozen=True)
class Factorization:
    factors: tuple[tuple[int, int], ...]
    sign: int = 1
    complete: bool = True
    cofactor: int = 1  # product of parts left unfactored when incomplete

    def value(self) -> int:
        v = self.sign * self.cofactor
        for p, e in self.factors:
            v *= p**e
        return v

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def to_json(self) -> dict:
        return {
            "sign": self.sign,
            "complete": self.complete,
            "cofactor": str(self.cofactor),
            "factors": [{"p": str(p), "e": e} for p, e in self.factors],
        }


def factor_integer(z: int, budget: int = DEFAULT_BUDGET) -> Factorization:
    """Trial division to 10^6, then Pollard-rho with at most ``budget`` iterations per composite."""
    if z == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if z < 0 else 1
    n = abs(z)
    found: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    stack = [n] if n > 1 else []
    leftover = 1
    while stack:
        m = stack.pop()
        if m <= TRIAL_LIMIT * TRIAL_LIMIT or is_probable_prime(m):
            # below 10^12 every survivor of trial division is prime
            found[m] = found.get(m, 0) + 1
            continue
        d, _ = _split(m, budget)
        if d is None:
            leftover *= m
            continue
        stack += [d, m // d]
    return Factorization(
        factors=tuple(sorted(found.items())),
        sign=sign,
        complete=leftover == 1,
        cofactor=leftover,
    )


class Tri(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


def is_odd_square_free(z: int, budget: int = DEFAULT_BUDGET) -> Tri:
    return odd_square_free_with_factors(z, budget)[0]


def odd_square_free_with_factors(z: int, budget: int = DEFAULT_BUDGET) -> tuple[Tri, Factorization | None]:
    if z == 0:
        raise ValueError("square-free test of 0")
    if z % 2 == 0:
        return Tri.NO, None
    f = factor_integer(z, budget)
    if any(e > 1 for _, e in f.factors):
        return Tri.NO, f
    if f.complete:
        return Tri.YES, f
    c = f.cofactor
    r = math.isqrt(c)
    if r * r == c or any(c % p == 0 for p in f.primes()):
        return Tri.NO, f
    return Tri.UNKNOWN, f
