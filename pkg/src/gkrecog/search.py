"""Bounded enumeration of finite simple groups and filtering by order constraints."""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field, replace
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator

from .arith import Factorization, cyclotomic_value, factor, is_prime, primes_up_to, smooth_part
from .catalog import EXCEPTIONAL, GroupId, GroupSpecError, order, order_profile
from .sporadic import SPORADIC_ORDERS

__all__ = ["SearchBounds", "Constraint", "enumerate_groups", "find", "satisfies", "load_bounds"]

# Cap keys: "L2" is L(2,q); "L" and "U" cover degrees n >= 3; S/O/O+/O- ranks are m in 2m or 2m+1.
Q_KEYS = ("L2", "L", "U", "S", "O", "O+", "O-") + EXCEPTIONAL
RANK_KEYS = ("L", "U", "S", "O", "O+", "O-")


def _default_q_caps() -> dict[str, int]:
    caps = {"L2": 600_000, "L": 3**6, "U": 3**6, "S": 757, "O": 757, "O+": 757, "O-": 757}
    caps.update({fam: 27 for fam in EXCEPTIONAL})
    return caps


def _default_rank_caps() -> dict[str, int]:
    return {fam: 8 for fam in RANK_KEYS}


@dataclass(frozen=True)
class SearchBounds:
    """Finite search box. A missing cap is treated as 0, which switches the family off."""

    alt_max_n: int = 800
    q_caps: dict[str, int] = field(default_factory=_default_q_caps)
    rank_caps: dict[str, int] = field(default_factory=_default_rank_caps)
    include_sporadics: bool = True

    def __post_init__(self) -> None:
        for key in self.q_caps:
            if key not in Q_KEYS:
                raise ValueError(f"unknown q cap {key!r}")
        for key in self.rank_caps:
            if key not in RANK_KEYS:
                raise ValueError(f"unknown rank cap {key!r}")
        if min([self.alt_max_n, *self.q_caps.values(), *self.rank_caps.values()], default=0) < 0:
            raise ValueError("caps must be non-negative")

    @classmethod
    def empty(cls) -> "SearchBounds":
        return cls(alt_max_n=0, q_caps={}, rank_caps={}, include_sporadics=False)

    def with_q_cap(self, key: str, value: int) -> "SearchBounds":
        return replace(self, q_caps={**self.q_caps, key: value})

    def with_rank_cap(self, key: str, value: int) -> "SearchBounds":
        return replace(self, rank_caps={**self.rank_caps, key: value})

    def q(self, key: str) -> int:
        return self.q_caps.get(key, 0)

    def rank(self, key: str) -> int:
        return self.rank_caps.get(key, 0)

    def to_text(self) -> str:
        lines = [f"alt_max_n = {self.alt_max_n}", f"include_sporadics = {str(self.include_sporadics).lower()}"]
        lines += [f"q.{k} = {v}" for k, v in sorted(self.q_caps.items())]
        lines += [f"rank.{k} = {v}" for k, v in sorted(self.rank_caps.items())]
        return "\n".join(lines) + "\n"


def parse_bounds(text: str, base: SearchBounds | None = None) -> SearchBounds:
    """Read `key = value` lines (`alt_max_n`, `include_sporadics`, `q.<family>`, `rank.<family>`)."""
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",), interpolation=None)
    parser.optionxform = str  # keep family names case-sensitive
    parser.read_string("[bounds]\n" + text)
    b = base if base is not None else SearchBounds()
    q_caps, rank_caps = dict(b.q_caps), dict(b.rank_caps)
    alt_max_n, sporadics = b.alt_max_n, b.include_sporadics
    section = parser["bounds"]
    for key, raw in section.items():
        if key == "alt_max_n":
            alt_max_n = int(raw)
        elif key == "include_sporadics":
            sporadics = section.getboolean(key)
        elif key.startswith("q."):
            q_caps[key[2:]] = int(raw)
        elif key.startswith("rank."):
            rank_caps[key[5:]] = int(raw)
        else:
            raise ValueError(f"unknown bounds key {key!r}")
    return SearchBounds(alt_max_n, q_caps, rank_caps, sporadics)


def load_bounds(path: str | Path) -> SearchBounds:
    return parse_bounds(Path(path).read_text())


@dataclass(frozen=True)
class Constraint:
    largest_prime: int | None = None
    required_divisor: int | None = None
    pi_subset_of: frozenset[int] | None = None

    def __post_init__(self) -> None:
        if self.largest_prime is None and self.required_divisor is None and self.pi_subset_of is None:
            raise ValueError("a constraint needs at least one field set")
        if self.largest_prime is not None and not is_prime(self.largest_prime):
            raise ValueError(f"{self.largest_prime} is not prime")
        if self.required_divisor is not None and self.required_divisor < 1:
            raise ValueError("required_divisor must be positive")
        if self.pi_subset_of is not None:
            object.__setattr__(self, "pi_subset_of", frozenset(self.pi_subset_of))


def prime_powers_up_to(cap: int) -> list[int]:
    out = []
    for p in primes_up_to(cap):
        pk = p
        while pk <= cap:
            out.append(pk)
            pk *= p
    return sorted(out)


def _raw_candidates(b: SearchBounds) -> Iterator[GroupId]:
    for n in range(5, b.alt_max_n + 1):
        yield GroupId("Alt", n)
    for q in prime_powers_up_to(b.q("L2")):
        if q >= 4:
            yield GroupId("L", 2, q)
    qs_l = prime_powers_up_to(b.q("L"))
    for n in range(3, b.rank("L") + 1):
        for q in qs_l:
            yield GroupId("L", n, q)
    qs_u = prime_powers_up_to(b.q("U"))
    for n in range(3, b.rank("U") + 1):
        for q in qs_u:
            if (n, q) != (3, 2):
                yield GroupId("U", n, q)
    for q in prime_powers_up_to(b.q("S")):
        for m in range(2, b.rank("S") + 1):
            if (m, q) != (2, 2):
                yield GroupId("S", 2 * m, q)
    for q in prime_powers_up_to(b.q("O")):
        if q % 2:
            for m in range(3, b.rank("O") + 1):
                yield GroupId("O", 2 * m + 1, q)
    for fam in ("O+", "O-"):
        for q in prime_powers_up_to(b.q(fam)):
            for m in range(4, b.rank(fam) + 1):
                yield GroupId(fam, 2 * m, q)
    for fam in EXCEPTIONAL:
        for q in prime_powers_up_to(b.q(fam)):
            try:
                yield GroupId(fam, q=q)
            except GroupSpecError:
                continue  # G2(2), 2B2(2), 2G2(3), ... are not simple
    if b.include_sporadics:
        for name in SPORADIC_ORDERS:
            yield GroupId("Spor", name=name)


def enumerate_groups(bounds: SearchBounds) -> list[GroupId]:
    """Every simple group inside the bounds, one canonical name per isomorphism class, sorted."""
    return sorted({g.canonical() for g in _raw_candidates(bounds)})


@lru_cache(maxsize=None)
def _phi_split(d: int, q: int, allowed: tuple[int, ...]) -> tuple[tuple[tuple[int, int], ...], int]:
    part, cof = smooth_part(cyclotomic_value(d, q), allowed)
    return tuple(sorted(part.items())), cof


def _order_within(g: GroupId, allowed: tuple[int, ...]) -> Factorization | None:
    """Factored |g| if every prime divisor lies in `allowed`, else None. No full factoring needed."""
    if g.family in ("Alt", "Spor"):
        f = order(g)
        return f if set(f.primes()) <= set(allowed) else None
    prof = order_profile(g)
    if prof.char not in allowed:
        return None
    center = factor(prof.center)
    # Primes of the center may cancel completely, so they are split off too and checked afterwards.
    split_over = tuple(sorted(set(allowed).union(center.primes())))
    acc = {prof.char: prof.char_exponent}
    for d, a in prof.phi:
        part, cof = _phi_split(d, prof.q, split_over)
        if cof != 1:
            return None
        for p, e in part:
            acc[p] = acc.get(p, 0) + e * a
    f = Factorization(tuple(sorted(acc.items()))).divide(center)
    return f if set(f.primes()) <= set(allowed) else None


def _valuation(g: GroupId, p: int) -> int:
    if g.family in ("Alt", "Spor"):
        return order(g).valuation(p)
    prof = order_profile(g)
    v = prof.char_exponent if p == prof.char else 0
    for d, a in prof.phi:
        x, e = cyclotomic_value(d, prof.q), 0
        while x % p == 0:
            x //= p
            e += 1
        v += a * e
    c, e = prof.center, 0
    while c % p == 0:
        c //= p
        e += 1
    return v - e


def _may_contain(g: GroupId, p: int) -> bool:
    """Cheap necessary condition for p | |g|."""
    if g.family == "Alt":
        return p <= g.n
    if g.family == "Spor":
        return p in order(g).primes()
    prof = order_profile(g)
    return p == prof.char or any(cyclotomic_value(d, prof.q) % p == 0 for d, _ in prof.phi)


def satisfies(g: GroupId, c: Constraint) -> bool:
    # Cheapest test first: the largest prime has to divide the order at all.
    if c.largest_prime is not None and not _may_contain(g, c.largest_prime):
        return False
    allowed: set[int] | None = None
    if c.largest_prime is not None:
        allowed = set(primes_up_to(c.largest_prime))
    if c.pi_subset_of is not None:
        allowed = set(c.pi_subset_of) if allowed is None else allowed & c.pi_subset_of
    f: Factorization | None = None
    if allowed is not None:
        f = _order_within(g, tuple(sorted(allowed)))
        if f is None:
            return False
        if c.largest_prime is not None and (not f or f.largest_prime() != c.largest_prime):
            return False
    if c.required_divisor is not None:
        need = factor(c.required_divisor)
        if f is not None:
            return need.divides(f)
        return all(_valuation(g, p) >= e for p, e in need)
    return True


def find(bounds: SearchBounds, c: Constraint, groups: Iterable[GroupId] | None = None) -> list[GroupId]:
    """Groups inside the bounds whose order meets every field of the constraint."""
    pool = enumerate_groups(bounds) if groups is None else groups
    return [g for g in pool if satisfies(g, c)]
