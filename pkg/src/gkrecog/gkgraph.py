"""Gruenberg-Kegel graphs: the two tabulated E6 graphs, rule-based graphs, and serialization."""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from typing import Iterable

from .arith import factor, primes_up_to
from .catalog import GroupId, GroupSpecError, pi, prime_power

__all__ = [
    "GKGraph",
    "encoded_graph",
    "rule_graph",
    "graph_for",
    "nonneighbors_of",
    "export",
    "parse_graph",
    "E6_3",
    "E6_3_TWISTED",
]

E6_3 = GroupId("E6", q=3)
E6_3_TWISTED = GroupId("2E6", q=3)


@dataclass(frozen=True)
class GKGraph:
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if list(self.vertices) != sorted(set(self.vertices)):
            raise ValueError("vertices must be strictly ascending")
        vs = set(self.vertices)
        for a, b in self.edges:
            if a >= b:
                raise ValueError(f"edge ({a}, {b}) is not stored as (min, max) or is a loop")
            if a not in vs or b not in vs:
                raise ValueError(f"edge ({a}, {b}) has an endpoint outside the vertex set")

    @classmethod
    def build(cls, vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> "GKGraph":
        """Normalize arbitrary input: sort vertices, orient edges, reject loops."""
        es = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at {a}")
            es.add((min(a, b), max(a, b)))
        return cls(tuple(sorted(set(vertices))), frozenset(es))

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._require(v)
        return tuple(u for u in self.vertices if u != v and self.has_edge(u, v))

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def components(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.neighbors(u):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return comps

    def _require(self, v: int) -> None:
        if v not in self.vertices:
            raise ValueError(f"{v} is not a vertex of the graph")


# Transcribed edge lists of the two published figures.
_ENCODED = {
    E6_3_TWISTED: (
        (2, 3, 5, 7, 13, 19, 37, 41, 61, 73),
        (
            (19, 37), (2, 41), (2, 5), (2, 13), (2, 61), (2, 3),
            (2, 7), (5, 13), (13, 7), (7, 3), (61, 3), (73, 7),
        ),
    ),
    E6_3: (
        (2, 3, 5, 7, 11, 13, 41, 73, 757),
        (
            (2, 7), (2, 5), (2, 13), (2, 11), (2, 3), (2, 41),
            (13, 73), (13, 7), (3, 13), (7, 5), (3, 7), (3, 11),
        ),
    ),
}


def encoded_graph(target: GroupId) -> GKGraph:
    """The published graph of E6(3) or 2E6(3)."""
    try:
        vertices, edges = _ENCODED[target]
    except KeyError:
        raise GroupSpecError(f"no tabulated graph for {target}; only E6(3) and 2E6(3) are encoded") from None
    return GKGraph.build(vertices, edges)


def _alt_graph(n: int) -> GKGraph:
    ps = primes_up_to(n)
    edges = []
    for i, r in enumerate(ps):
        for s in ps[i + 1 :]:
            if r == 2:
                if s + 4 <= n:
                    edges.append((2, s))
            elif r + s <= n:
                edges.append((r, s))
    return GKGraph.build(ps, edges)


def _clique(vs: Iterable[int]) -> list[tuple[int, int]]:
    vs = sorted(vs)
    return [(a, b) for i, a in enumerate(vs) for b in vs[i + 1 :]]


def _l2_graph(q: int) -> GKGraph:
    p, _ = prime_power(q)  # type: ignore[misc]
    d = math.gcd(2, q - 1)
    minus = factor((q - 1) // d).primes()
    plus = factor((q + 1) // d).primes()
    vertices = {p, *minus, *plus}
    return GKGraph.build(vertices, _clique(minus) + _clique(plus))


def rule_graph(g: GroupId) -> GKGraph:
    """Graph from the classical spectrum of Alt(n) or L(2,q)."""
    if g.family == "Alt":
        return _alt_graph(g.n)
    if g.family == "L" and g.n == 2:
        return _l2_graph(g.q)
    raise GroupSpecError(f"no rule-based graph for {g}; supported: Alt(n), L(2,q)")


def graph_for(g: GroupId) -> GKGraph:
    """Tabulated graph if available, else the rule-based one (trying isomorphic names)."""
    if g in _ENCODED:
        return encoded_graph(g)
    for h in (g, g.canonical(), *g.isomorphs):
        try:
            graph = rule_graph(h)
        except GroupSpecError:
            continue
        assert graph.vertices == pi(g)
        return graph
    raise GroupSpecError(f"no graph available for {g}: only E6(3), 2E6(3), Alt(n) and L(2,q) are supported")


def nonneighbors_of(graph: GKGraph, v: int) -> tuple[int, ...]:
    nbrs = set(graph.neighbors(v))
    return tuple(u for u in graph.vertices if u != v and u not in nbrs)


def export(graph: GKGraph, fmt: str = "dot") -> str:
    edges = graph.sorted_edges()
    if fmt == "dot":
        lines = ["graph G {"]
        lines += [f"  {v};" for v in graph.vertices]
        lines += [f"  {a} -- {b};" for a, b in edges]
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = {"vertices": list(graph.vertices), "edges": [list(e) for e in edges]}
        return json.dumps(payload, separators=(",", ":")) + "\n"
    if fmt in ("edges", "edge-list"):
        return "".join(f"{a} {b}\n" for a, b in edges)
    raise ValueError(f"unknown graph format {fmt!r}")


_DOT_EDGE = re.compile(r"^(\d+)\s*--\s*(\d+)\s*;?$")
_DOT_VERTEX = re.compile(r"^(\d+)\s*;?$")


def parse_graph(text: str, fmt: str | None = None, vertices: Iterable[int] | None = None) -> GKGraph:
    """Inverse of `export`. Edge lists cannot carry isolated vertices; pass them in `vertices`."""
    if fmt is None:
        head = text.lstrip()
        fmt = "json" if head.startswith("{") else "dot" if head.startswith("graph") else "edges"
    if fmt == "json":
        data = json.loads(text)
        return GKGraph.build(data["vertices"], (tuple(e) for e in data["edges"]))
    if fmt == "dot":
        vs: set[int] = set()
        es = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("graph") or line == "}":
                continue
            m = _DOT_EDGE.match(line)
            if m:
                a, b = int(m.group(1)), int(m.group(2))
                es.append((a, b))
                vs.update((a, b))
                continue
            m = _DOT_VERTEX.match(line)
            if not m:
                raise ValueError(f"unrecognized dot line: {raw!r}")
            vs.add(int(m.group(1)))
        return GKGraph.build(vs, es)
    if fmt in ("edges", "edge-list"):
        vs = set(vertices or ())
        es = []
        for raw in text.splitlines():
            parts = raw.split()
            if not parts or parts[0].startswith("#"):
                continue
            if len(parts) == 1:
                vs.add(int(parts[0]))
                continue
            if len(parts) != 2:
                raise ValueError(f"bad edge-list line: {raw!r}")
            a, b = int(parts[0]), int(parts[1])
            es.append((a, b))
            vs.update((a, b))
        return GKGraph.build(vs, es)
    raise ValueError(f"unknown graph format {fmt!r}")
