"""Exact maximum cocliques (independent sets) of small graphs over vertex bitmasks."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gkgraph import GKGraph

__all__ = ["CocliqueResult", "max_coclique", "max_coclique_containing", "independence_number"]

MAX_VERTICES = 64


@dataclass(frozen=True)
class CocliqueResult:
    size: int
    witness: tuple[int, ...]
    anchored_at: int | None = None

    def __post_init__(self) -> None:
        if len(self.witness) != self.size:
            raise ValueError("witness length differs from size")
        if self.anchored_at is not None and self.anchored_at not in self.witness:
            raise ValueError("anchor is not in the witness")


def _adjacency(graph: GKGraph) -> tuple[int, ...]:
    index = {v: i for i, v in enumerate(graph.vertices)}
    adj = [0] * len(graph.vertices)
    for a, b in graph.edges:
        i, j = index[a], index[b]
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return tuple(adj)


def _alpha_solver(adj: tuple[int, ...]):
    @lru_cache(maxsize=None)
    def alpha(mask: int) -> int:
        if not mask:
            return 0
        # Branch on the vertex of maximum degree inside mask; degree-0/1 vertices are always taken.
        best_v, best_deg = -1, -1
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            deg = (adj[v] & mask).bit_count()
            if deg <= 1:
                return 1 + alpha(mask & ~low & ~adj[v])
            if deg > best_deg:
                best_v, best_deg = v, deg
            m ^= low
        bit = 1 << best_v
        without = alpha(mask & ~bit)
        if without >= (mask & ~bit & ~adj[best_v]).bit_count() + 1:
            return without
        return max(without, 1 + alpha(mask & ~bit & ~adj[best_v]))

    return alpha


def _lex_smallest(adj: tuple[int, ...], mask: int, alpha) -> list[int]:
    """Lexicographically smallest maximum independent set inside mask (as bit indices)."""
    target = alpha(mask)
    chosen: list[int] = []
    rest = mask
    while len(chosen) < target:
        need = target - len(chosen)
        m = rest
        while m:
            low = m & -m
            v = low.bit_length() - 1
            after = rest & ~((low << 1) - 1) & ~adj[v]
            if 1 + alpha(after) == need:
                chosen.append(v)
                rest = after
                break
            m ^= low
        else:  # pragma: no cover - alpha guarantees a continuation exists
            raise AssertionError("no extension found")
    return chosen


def _check_size(graph: GKGraph) -> None:
    if not graph.vertices:
        raise ValueError("graph has no vertices")
    if len(graph.vertices) > MAX_VERTICES:
        raise ValueError(f"graph has {len(graph.vertices)} vertices; at most {MAX_VERTICES} supported")


def max_coclique(graph: GKGraph) -> CocliqueResult:
    """Independence number and the lexicographically smallest maximum coclique."""
    _check_size(graph)
    adj = _adjacency(graph)
    alpha = _alpha_solver(adj)
    full = (1 << len(adj)) - 1
    picked = _lex_smallest(adj, full, alpha)
    witness = tuple(graph.vertices[i] for i in picked)
    return CocliqueResult(len(witness), witness)


def max_coclique_containing(graph: GKGraph, v: int) -> CocliqueResult:
    _check_size(graph)
    if v not in graph.vertices:
        raise ValueError(f"{v} is not a vertex of the graph")
    adj = _adjacency(graph)
    alpha = _alpha_solver(adj)
    i = graph.vertices.index(v)
    full = (1 << len(adj)) - 1
    rest = full & ~(1 << i) & ~adj[i]
    picked = _lex_smallest(adj, rest, alpha) + [i]
    witness = tuple(sorted(graph.vertices[j] for j in picked))
    return CocliqueResult(len(witness), witness, anchored_at=v)


def independence_number(graph: GKGraph) -> int:
    return max_coclique(graph).size


def exhaustive_alpha(graph: GKGraph) -> tuple[int, tuple[int, ...]]:
    """Independence number by scanning all 2^|V| subsets; returns (size, lex-smallest witness)."""
    vs = graph.vertices
    best: tuple[int, tuple[int, ...]] = (0, ())
    for mask in range(1 << len(vs)):
        chosen = tuple(vs[i] for i in range(len(vs)) if mask >> i & 1)
        if len(chosen) < best[0]:
            continue
        if any(graph.has_edge(a, b) for i, a in enumerate(chosen) for b in chosen[i + 1 :]):
            continue
        if len(chosen) > best[0] or chosen < best[1]:
            best = (len(chosen), chosen)
    return best
