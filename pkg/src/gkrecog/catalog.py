"""Finite simple group identifiers and their orders in factored form.

Orders of groups of Lie type are kept as cyclotomic profiles,

    |G| = p^(f*N) * prod_d Phi_d(q)^a_d / center,

so each Phi_d(q) is factored on its own and cached across groups.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .arith import Factorization, cyclotomic_value, factor, primes_up_to, product
from .sporadic import ALIASES as SPORADIC_ALIASES
from .sporadic import SPORADIC_ORDERS, TITS

__all__ = [
    "FAMILIES",
    "GroupId",
    "GroupSpecError",
    "OrderProfile",
    "parse_group",
    "order",
    "order_value",
    "order_profile",
    "pi",
    "out_order",
]

FAMILIES = (
    "Alt", "L", "U", "S", "O", "O+", "O-",
    "G2", "F4", "E6", "2E6", "E7", "E8", "3D4", "2B2", "2G2", "2F4",
    "Spor",
)
_FAMILY_RANK = {f: i for i, f in enumerate(FAMILIES)}
CLASSICAL = ("L", "U", "S", "O", "O+", "O-")
EXCEPTIONAL = ("G2", "F4", "E6", "2E6", "E7", "E8", "3D4", "2B2", "2G2", "2F4")


class GroupSpecError(ValueError):
    """Raised for malformed group names and non-simple parameter choices."""


def prime_power(q: int) -> tuple[int, int] | None:
    """(p, f) with q = p^f, or None if q is not a prime power."""
    if q < 2:
        return None
    f = factor(q)
    if len(f) != 1:
        return None
    return f.entries[0]


@dataclass(frozen=True)
class GroupId:
    """A finite simple group: family plus degree/dimension `n` and field size `q`.

    Classical groups carry the dimension of the natural module, so S(4,q) is PSp_4(q)
    and O+(8,q) is POmega+_8(q). Sporadic groups carry only `name`.
    """

    family: str
    n: int = 0
    q: int = 0
    name: str = ""

    def __post_init__(self) -> None:
        _validate(self)

    def __str__(self) -> str:
        if self.family == "Alt":
            return f"Alt({self.n})"
        if self.family == "Spor":
            return self.name
        if self.family in CLASSICAL:
            return f"{self.family}({self.n},{self.q})"
        return f"{self.family}({self.q})"

    def __repr__(self) -> str:
        return f"GroupId({self})"

    @property
    def char(self) -> int:
        """Defining characteristic of a group of Lie type."""
        pp = prime_power(self.q)
        if pp is None:
            raise GroupSpecError(f"{self} has no defining characteristic")
        return pp[0]

    def sort_key(self) -> tuple:
        return (_FAMILY_RANK[self.family], self.n, self.q, self.name)

    def __lt__(self, other: "GroupId") -> bool:
        return self.sort_key() < other.sort_key()

    def canonical(self) -> "GroupId":
        """Representative of the isomorphism class used for de-duplication."""
        g = self
        while True:
            h = _canonical_step(g)
            if h == g:
                return g
            g = h

    @property
    def isomorphs(self) -> tuple["GroupId", ...]:
        """Other catalogued names of the same group (empty when none are known)."""
        rep = self.canonical()
        names = {rep, *_EXCEPTIONAL_CLASSES.get(rep, ())}
        names.discard(self)
        return tuple(sorted(names))


def _fail(g: GroupId, why: str) -> None:
    raise GroupSpecError(f"{g}: {why}")


def _validate(g: GroupId) -> None:
    fam = g.family
    if fam not in _FAMILY_RANK:
        raise GroupSpecError(f"unknown family {fam!r}")
    if fam == "Alt":
        if g.n < 5:
            _fail(g, "alternating groups are simple only for n >= 5")
        return
    if fam == "Spor":
        if g.name not in SPORADIC_ORDERS:
            raise GroupSpecError(f"unknown sporadic group {g.name!r}")
        return
    pp = prime_power(g.q)
    if pp is None:
        _fail(g, f"q = {g.q} is not a prime power")
    p, f = pp
    n, q = g.n, g.q
    if fam == "L":
        if n < 2:
            _fail(g, "need n >= 2")
        if n == 2 and q < 4:
            _fail(g, "L(2,q) is solvable for q <= 3")
    elif fam == "U":
        if n < 2:
            _fail(g, "need n >= 2")
        if n == 2 and q < 4:
            _fail(g, "U(2,q) = L(2,q) is solvable for q <= 3")
        if (n, q) == (3, 2):
            _fail(g, "U(3,2) is solvable")
    elif fam == "S":
        if n < 2 or n % 2:
            _fail(g, "symplectic dimension must be even and >= 2")
        if n == 2 and q < 4:
            _fail(g, "S(2,q) = L(2,q) is solvable for q <= 3")
        if (n, q) == (4, 2):
            _fail(g, "S(4,2) is not simple; its derived subgroup is S(4,2)' = Alt(6)")
    elif fam == "O":
        if n < 3 or n % 2 == 0:
            _fail(g, "odd-dimensional orthogonal groups need odd dimension >= 3")
        if n == 3 and q < 4:
            _fail(g, "O(3,q) = L(2,q) is solvable for q <= 3")
        if (n, q) == (5, 2):
            _fail(g, "O(5,2) = S(4,2) is not simple")
    elif fam == "O+":
        if n % 2 or n < 6:
            _fail(g, "O+(2m,q) is simple only for even dimension 2m >= 6")
    elif fam == "O-":
        if n % 2 or n < 4:
            _fail(g, "O-(2m,q) is simple only for even dimension 2m >= 4")
    else:
        if n:
            _fail(g, "exceptional groups take only q")
        odd_power = f % 2 == 1
        if fam == "2B2" and not (p == 2 and odd_power and f >= 3):
            _fail(g, "2B2(q) needs q = 2^(2k+1) with k >= 1")
        if fam == "2G2" and not (p == 3 and odd_power and f >= 3):
            _fail(g, "2G2(q) needs q = 3^(2k+1) with k >= 1 (2G2(3)' = L(2,8))")
        if fam == "2F4" and not (p == 2 and odd_power and f >= 3):
            _fail(g, "2F4(q) needs q = 2^(2k+1) with k >= 1 (the Tits group is 2F4(2)')")
        if fam == "G2" and q == 2:
            _fail(g, "G2(2) is not simple; its derived subgroup is G2(2)' = U(3,3)")


def _canonical_step(g: GroupId) -> GroupId:
    fam, n, q = g.family, g.n, g.q
    if fam == "L":
        if n == 2 and q in (4, 5):
            return GroupId("Alt", 5)
        if n == 2 and q == 9:
            return GroupId("Alt", 6)
        if (n, q) == (4, 2):
            return GroupId("Alt", 8)
        if (n, q) == (3, 2):
            return GroupId("L", 2, 7)
    elif fam == "U":
        if n == 2:
            return GroupId("L", 2, q)
        if (n, q) == (4, 2):
            return GroupId("S", 4, 3)
    elif fam == "S":
        if n == 2:
            return GroupId("L", 2, q)
    elif fam == "O":
        if n == 3:
            return GroupId("L", 2, q)
        if n == 5 or q % 2 == 0:
            return GroupId("S", n - 1, q)
    elif fam == "O+":
        if n == 6:
            return GroupId("L", 4, q)
    elif fam == "O-":
        if n == 4:
            return GroupId("L", 2, q * q)
        if n == 6:
            return GroupId("U", 4, q)
    return g


# Canonical representative -> other names tabulated for it (exceptional isomorphisms).
_EXCEPTIONAL_CLASSES: dict[GroupId, tuple[GroupId, ...]] = {}


def _register_exceptional() -> None:
    pairs = [
        (GroupId("Alt", 5), (GroupId("L", 2, 4), GroupId("L", 2, 5))),
        (GroupId("Alt", 6), (GroupId("L", 2, 9),)),
        (GroupId("Alt", 8), (GroupId("L", 4, 2),)),
        (GroupId("L", 2, 7), (GroupId("L", 3, 2),)),
        (GroupId("S", 4, 3), (GroupId("U", 4, 2),)),
    ]
    for rep, others in pairs:
        _EXCEPTIONAL_CLASSES[rep] = others


_register_exceptional()

# Non-simple groups whose derived subgroup is simple and catalogued.
_DERIVED = {
    ("S", 4, 2): GroupId("Alt", 6),
    ("G2", 0, 2): GroupId("U", 3, 3),
    ("2G2", 0, 3): GroupId("L", 2, 8),
    ("2F4", 0, 2): GroupId("Spor", name=TITS),
}

_QEXPR = r"(\d+)(?:\^(\d+))?"
_CLASSICAL_RE = re.compile(r"^(L|U|S|O\+|O-|O)\((\d+)," + _QEXPR + r"\)('?)$", re.I)
_EXCEPTIONAL_RE = re.compile(r"^(G2|F4|E6|2E6|E7|E8|3D4|2B2|2G2|2F4)\(" + _QEXPR + r"\)('?)$", re.I)
_ALT_RE = re.compile(r"^(?:Alt|A)\((\d+)\)$", re.I)


def _q(base: str, exp: str | None) -> int:
    return int(base) ** (int(exp) if exp else 1)


def parse_group(spec: str) -> GroupId:
    """Parse a group name such as "2E6(3)", "L(2,3^9)", "Alt(757)", "M11" or "G2(2)'"."""
    text = re.sub(r"\s+", "", spec)
    if not text:
        raise GroupSpecError("empty group name")
    m = _ALT_RE.match(text)
    if m:
        return GroupId("Alt", int(m.group(1)))
    m = _CLASSICAL_RE.match(text)
    if m:
        fam = m.group(1).upper()
        n, q, derived = int(m.group(2)), _q(m.group(3), m.group(4)), m.group(5)
        return _maybe_derived(fam, n, q, derived, text)
    m = _EXCEPTIONAL_RE.match(text)
    if m:
        fam = m.group(1).upper()
        q, derived = _q(m.group(2), m.group(3)), m.group(4)
        return _maybe_derived(fam, 0, q, derived, text)
    name = SPORADIC_ALIASES.get(text.lower())
    if name is not None:
        return GroupId("Spor", name=name)
    raise GroupSpecError(f"cannot parse group name {spec!r}")


def _maybe_derived(fam: str, n: int, q: int, derived: str, text: str) -> GroupId:
    if derived:
        target = _DERIVED.get((fam, n, q))
        if target is None:
            raise GroupSpecError(f"{text}: derived-subgroup notation is only used for S(4,2)', G2(2)', 2G2(3)', 2F4(2)'")
        return target
    return GroupId(fam, n, q)


@dataclass(frozen=True)
class OrderProfile:
    """|G| = char^char_exponent * prod(Phi_d(q)^a for d, a in phi) / center."""

    q: int
    char: int
    char_exponent: int
    phi: tuple[tuple[int, int], ...]
    center: int

    def value(self) -> int:
        num = self.char**self.char_exponent
        for d, a in self.phi:
            num *= cyclotomic_value(d, self.q) ** a
        return num // self.center


def _cyclotomic_indices(k: int) -> list[int]:
    """Signed term k: k > 0 stands for q^k - 1, k < 0 for q^|k| + 1."""
    if k > 0:
        return [d for d in range(1, k + 1) if k % d == 0]
    k = -k
    return [d for d in range(1, 2 * k + 1) if (2 * k) % d == 0 and k % d]


# Exceptional families: (q-exponent N, numerator terms, denominator terms, center).
_EXCEPTIONAL_FORMULAS = {
    "G2": (6, (6, 2), (), lambda q: 1),
    "F4": (24, (12, 8, 6, 2), (), lambda q: 1),
    "E6": (36, (12, 9, 8, 6, 5, 2), (), lambda q: math.gcd(3, q - 1)),
    "2E6": (36, (12, -9, 8, 6, -5, 2), (), lambda q: math.gcd(3, q + 1)),
    "E7": (63, (18, 14, 12, 10, 8, 6, 2), (), lambda q: math.gcd(2, q - 1)),
    "E8": (120, (30, 24, 20, 18, 14, 12, 8, 2), (), lambda q: 1),
    # q^8 + q^4 + 1 = (q^12 - 1) / (q^4 - 1)
    "3D4": (12, (12, 6, 2), (4,), lambda q: 1),
    "2B2": (2, (-2, 1), (), lambda q: 1),
    "2G2": (3, (-3, 1), (), lambda q: 1),
    "2F4": (12, (-6, 4, -3, 1), (), lambda q: 1),
}


def _classical_formula(fam: str, n: int, q: int) -> tuple[int, list[int], int]:
    if fam == "L":
        return n * (n - 1) // 2, list(range(2, n + 1)), math.gcd(n, q - 1)
    if fam == "U":
        terms = [i if i % 2 == 0 else -i for i in range(2, n + 1)]
        return n * (n - 1) // 2, terms, math.gcd(n, q + 1)
    if fam in ("S", "O"):
        m = n // 2
        return m * m, [2 * i for i in range(1, m + 1)], math.gcd(2, q - 1)
    m = n // 2
    terms = [2 * i for i in range(1, m)]
    if fam == "O+":
        return m * (m - 1), terms + [m], math.gcd(4, q**m - 1)
    return m * (m - 1), terms + [-m], math.gcd(4, q**m + 1)


@lru_cache(maxsize=None)
def order_profile(g: GroupId) -> OrderProfile:
    """Cyclotomic profile of a group of Lie type."""
    if g.family in ("Alt", "Spor"):
        raise GroupSpecError(f"{g} is not a group of Lie type")
    p, f = prime_power(g.q)  # type: ignore[misc]
    if g.family in CLASSICAL:
        big_n, num, center = _classical_formula(g.family, g.n, g.q)
        den: tuple[int, ...] = ()
    else:
        big_n, num, den, center_of = _EXCEPTIONAL_FORMULAS[g.family]
        center = center_of(g.q)
    counts: Counter[int] = Counter()
    for k in num:
        counts.update(_cyclotomic_indices(k))
    for k in den:
        counts.subtract(_cyclotomic_indices(k))
    if any(a < 0 for a in counts.values()):
        raise AssertionError(f"order formula of {g} is not a polynomial")
    phi = tuple(sorted((d, a) for d, a in counts.items() if a))
    return OrderProfile(g.q, p, f * big_n, phi, center)


@lru_cache(maxsize=None)
def _phi_factor(d: int, q: int) -> Factorization:
    return factor(cyclotomic_value(d, q))


def _alt_order(n: int) -> Factorization:
    entries = []
    for p in primes_up_to(n):
        e, pk = 0, p
        while pk <= n:
            e += n // pk
            pk *= p
        if p == 2:
            e -= 1
        entries.append((p, e))
    return Factorization(tuple(entries))


@lru_cache(maxsize=4096)
def order(g: GroupId) -> Factorization:
    """Factored order of the simple group g."""
    if g.family == "Alt":
        return _alt_order(g.n)
    if g.family == "Spor":
        return Factorization(SPORADIC_ORDERS[g.name])
    prof = order_profile(g)
    parts = [Factorization(((prof.char, prof.char_exponent),))]
    parts += [_phi_factor(d, prof.q) ** a for d, a in prof.phi]
    return product(parts).divide(factor(prof.center))


def order_value(g: GroupId) -> int:
    if g.family == "Alt":
        return math.factorial(g.n) // 2
    if g.family == "Spor":
        return Factorization(SPORADIC_ORDERS[g.name]).value()
    return order_profile(g).value()


def pi(g: GroupId) -> tuple[int, ...]:
    """Ascending prime divisors of |g|."""
    return order(g).primes()


_OUT_ORDERS = {GroupId("E6", q=3): 2, GroupId("2E6", q=3): 2}


def out_order(g: GroupId) -> int:
    """|Out(g)|, tabulated only for E6(3) and 2E6(3)."""
    try:
        return _OUT_ORDERS[g]
    except KeyError:
        raise GroupSpecError(f"unsupported group {g}: |Out| is tabulated only for E6(3) and 2E6(3)") from None
