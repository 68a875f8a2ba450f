"""Exact integer arithmetic: primality, factorization, and factored integers."""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

__all__ = [
    "Factorization",
    "is_prime",
    "factor",
    "valuation",
    "largest_prime",
    "primes_up_to",
    "cyclotomic_value",
]

TRIAL_LIMIT = 1 << 20
SIEVE_LIMIT = 10**6
_U64 = 1 << 64
# Bases making Miller-Rabin deterministic below 2^64 (Sorenson and Webster).
_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_BASES_BIG = _MR_BASES_64 + (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89)


@lru_cache(maxsize=None)
def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return tuple(i for i, f in enumerate(flags) if f)


def primes_up_to(limit: int) -> tuple[int, ...]:
    """All primes p <= limit, ascending."""
    if limit < 2:
        return ()
    if limit <= SIEVE_LIMIT:
        base = _sieve(SIEVE_LIMIT)
        return base[: bisect.bisect_right(base, limit)]
    return _sieve(limit)


@lru_cache(maxsize=1)
def _primorial() -> int:
    return math.prod(_sieve(SIEVE_LIMIT))


def _strong_probable_prime(n: int, a: int) -> bool:
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Exact below 2^64; above that, trial division to 10^6 plus 24 fixed Miller-Rabin rounds."""
    if n < 2:
        return False
    if n < TRIAL_LIMIT:
        if n < 4:
            return True
        if n % 2 == 0:
            return False
        for p in _sieve(SIEVE_LIMIT):
            if p * p > n:
                return True
            if n % p == 0:
                return False
        return True
    if n < _U64:
        for p in _MR_BASES_64:
            if n % p == 0:
                return False
        return all(_strong_probable_prime(n, a) for a in _MR_BASES_64)
    # n is larger than every sieved prime, so any common factor is a proper divisor.
    if math.gcd(_primorial() % n, n) != 1:
        return False
    return all(_strong_probable_prime(n, a) for a in _MR_BASES_BIG)


def _brent(n: int, c: int) -> int:
    """One Pollard-rho run with Brent's cycle detection; returns n on failure."""
    y, r, q, g = 2, 1, 1, 1
    m = 128
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
            g = math.gcd(q, n)
            k += m
        r <<= 1
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g


def _split(n: int) -> int:
    c = 1
    while True:
        d = _brent(n, c)
        if d != n:
            return d
        c += 1


def _factor_into(n: int, out: dict[int, int]) -> None:
    for p in _sieve(SIEVE_LIMIT)[:168]:  # primes below 1000; rho handles the rest
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = out.get(p, 0) + e
    if n == 1:
        return
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _split(m)
        stack += [d, m // d]


@dataclass(frozen=True)
class Factorization:
    """A positive integer stored as ascending (prime, exponent) pairs."""

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        last = 1
        for p, e in self.entries:
            if p <= last:
                raise ValueError("primes must be strictly ascending")
            if e < 1:
                raise ValueError(f"exponent of {p} must be positive")
            last = p

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "Factorization":
        for p in mapping:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        return cls(tuple(sorted((p, e) for p, e in mapping.items() if e)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def value(self) -> int:
        return math.prod(p**e for p, e in self.entries)

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    def valuation(self, p: int) -> int:
        return valuation(self, p)

    def largest_prime(self) -> int:
        return largest_prime(self)

    def __mul__(self, other: "Factorization") -> "Factorization":
        merged = self.as_dict()
        for p, e in other.entries:
            merged[p] = merged.get(p, 0) + e
        return Factorization(tuple(sorted(merged.items())))

    def __pow__(self, k: int) -> "Factorization":
        if k < 0:
            raise ValueError("negative power")
        if k == 0:
            return Factorization()
        return Factorization(tuple((p, e * k) for p, e in self.entries))

    def divide(self, other: "Factorization") -> "Factorization":
        """Exact quotient; raises ValueError if other does not divide self."""
        rest = self.as_dict()
        for p, e in other.entries:
            left = rest.get(p, 0) - e
            if left < 0:
                raise ValueError(f"{p}^{e} does not divide the dividend")
            if left:
                rest[p] = left
            else:
                rest.pop(p, None)
        return Factorization(tuple(sorted(rest.items())))

    def divides(self, other: "Factorization") -> bool:
        theirs = other.as_dict()
        return all(theirs.get(p, 0) >= e for p, e in self.entries)

    def __str__(self) -> str:
        if not self.entries:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.entries)


@lru_cache(maxsize=65536)
def factor(n: int) -> Factorization:
    """Prime factorization of n >= 1."""
    if n < 1:
        raise ValueError(f"cannot factor {n}: need n >= 1")
    out: dict[int, int] = {}
    _factor_into(n, out)
    return Factorization(tuple(sorted(out.items())))


def product(parts: Iterable[Factorization]) -> Factorization:
    acc: dict[int, int] = {}
    for f in parts:
        for p, e in f.entries:
            acc[p] = acc.get(p, 0) + e
    return Factorization(tuple(sorted(acc.items())))


def valuation(f: Factorization, p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    for q, e in f.entries:
        if q == p:
            return e
    return 0


def largest_prime(f: Factorization) -> int:
    if not f.entries:
        raise ValueError("the empty factorization (value 1) has no prime divisors")
    return f.entries[-1][0]


def _mobius(n: int) -> int:
    result = 1
    for _, e in factor(n):
        if e > 1:
            return 0
        result = -result
    return result


@lru_cache(maxsize=None)
def cyclotomic_value(d: int, q: int) -> int:
    """Phi_d(q), the d-th cyclotomic polynomial evaluated at the integer q >= 2."""
    num = den = 1
    for e in range(1, d + 1):
        if d % e:
            continue
        mu = _mobius(d // e)
        if mu == 1:
            num *= q**e - 1
        elif mu == -1:
            den *= q**e - 1
    return num // den


def smooth_part(n: int, primes: Iterable[int]) -> tuple[dict[int, int], int]:
    """Split n into its part supported on `primes` and the remaining cofactor."""
    part: dict[int, int] = {}
    for p in primes:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            part[p] = e
            if n == 1:
                break
    return part, n
