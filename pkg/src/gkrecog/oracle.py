"""Brute-force element-order spectra of Alt(n) and L(2,p), and graphs read off a spectrum."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .arith import factor, is_prime
from .catalog import GroupId, order_value
from .gkgraph import GKGraph

__all__ = [
    "Spectrum",
    "spectrum_alt",
    "spectrum_l2",
    "sl2_elements",
    "graph_from_spectrum",
    "divisor_closure",
    "spectrum_of",
]

ALT_MAX = 30
L2_MAX = 101


@dataclass(frozen=True)
class Spectrum:
    orders: tuple[int, ...]
    group: GroupId

    def __post_init__(self) -> None:
        if 1 not in self.orders:
            raise ValueError("a spectrum always contains 1")
        closed = divisor_closure(self.orders)
        if closed != self.orders:
            raise ValueError("spectrum is not closed under divisors")
        if self.orders[-1] > order_value(self.group):
            raise ValueError("element order exceeds the group order")

    def __contains__(self, k: object) -> bool:
        return k in self.orders


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factor(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return divs


def divisor_closure(orders: Iterable[int]) -> tuple[int, ...]:
    out: set[int] = set()
    for k in set(orders):
        out.update(_divisors(k))
    return tuple(sorted(out))


def _partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n with parts in non-increasing order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def spectrum_alt(n: int) -> Spectrum:
    """Element orders of Alt(n) from the cycle types of even permutations."""
    if not 5 <= n <= ALT_MAX:
        raise ValueError(f"spectrum_alt needs 5 <= n <= {ALT_MAX}, got {n}")
    orders = set()
    for parts in _partitions(n):
        # sign of a permutation with this cycle type is (-1)^(n - #cycles)
        if (n - len(parts)) % 2 == 0:
            orders.add(math.lcm(*parts))
    return Spectrum(divisor_closure(orders), GroupId("Alt", n))


def sl2_elements(p: int) -> np.ndarray:
    """All matrices of SL(2,p) as rows (a, b, c, d)."""
    a, b, c = (x.ravel() for x in np.meshgrid(np.arange(p), np.arange(p), np.arange(p), indexing="ij"))
    inv = np.array([0] + [pow(int(x), -1, p) for x in range(1, p)], dtype=np.int64)
    # a != 0: d is forced by ad - bc = 1
    nz = a != 0
    d_nz = (1 + b[nz] * c[nz]) % p * inv[a[nz]] % p
    first = np.stack([a[nz], b[nz], c[nz], d_nz], axis=1)
    # a == 0: bc = -1 fixes c from b, d is free
    bb, dd = np.meshgrid(np.arange(1, p), np.arange(p), indexing="ij")
    bb, dd = bb.ravel(), dd.ravel()
    cc = (p - inv[bb]) % p
    second = np.stack([np.zeros_like(bb), bb, cc, dd], axis=1)
    return np.concatenate([first, second]).astype(np.int64)


def _projective_orders(mats: np.ndarray, p: int) -> np.ndarray:
    """Least k with M^k = +-I for every row M."""
    a0, b0, c0, d0 = mats.T
    a, b, c, d = a0.copy(), b0.copy(), c0.copy(), d0.copy()
    result = np.zeros(len(mats), dtype=np.int64)
    k = 1
    while True:
        scalar = (b == 0) & (c == 0) & (a == d) & ((a == 1) | (a == p - 1))
        newly = scalar & (result == 0)
        result[newly] = k
        if (result > 0).all():
            return result
        a, b, c, d = (
            (a * a0 + b * c0) % p,
            (a * b0 + b * d0) % p,
            (c * a0 + d * c0) % p,
            (c * b0 + d * d0) % p,
        )
        k += 1
        if k > 2 * p + 2:  # pragma: no cover - every element has order <= p + 1
            raise AssertionError("order search did not terminate")


def spectrum_l2(q: int) -> Spectrum:
    """Element orders of L(2,q), q prime, by enumerating SL(2,q) modulo +-I."""
    if not (is_prime(q) and 5 <= q <= L2_MAX):
        raise ValueError(f"spectrum_l2 needs a prime 5 <= q <= {L2_MAX}, got {q}")
    mats = sl2_elements(q)
    if len(mats) != q**3 - q:  # pragma: no cover - enumeration completeness
        raise AssertionError(f"enumerated {len(mats)} matrices, expected {q**3 - q}")
    orders = np.unique(_projective_orders(mats, q))
    return Spectrum(divisor_closure(int(k) for k in orders), GroupId("L", 2, q))


def spectrum_of(g: GroupId) -> Spectrum:
    if g.family == "Alt":
        return spectrum_alt(g.n)
    if g.family == "L" and g.n == 2:
        return spectrum_l2(g.q)
    raise ValueError(f"no spectrum oracle for {g}; supported: Alt(n), L(2,p) with p prime")


def graph_from_spectrum(s: Spectrum) -> GKGraph:
    """Primes dividing some element order; r--s iff r*s is an element order."""
    orders = set(s.orders)
    vertices = sorted(k for k in orders if k > 1 and is_prime(k))
    edges = [(r, t) for i, r in enumerate(vertices) for t in vertices[i + 1 :] if r * t in orders]
    return GKGraph.build(vertices, edges)
