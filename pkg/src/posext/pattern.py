"""Finite symmetric patterns and their chordal structure.

A pattern is an undirected graph on vertices 0..n-1 whose loops are
implicit: every diagonal pair is considered present and is never stored.
This module recognises chordality (maximum cardinality search plus a
perfect-elimination check), enumerates maximal cliques, builds clique
trees with the running intersection property, and provides a brute-force
chordless-cycle oracle for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, NotChordal, TooLarge

_BRUTE_FORCE_CLIQUE_CAP = 20
_CYCLE_ORACLE_CAP = 12


@dataclass(frozen=True)
class Pattern:
    """Symmetric edge set on 0..n-1 with an implicit diagonal.

    Edges are stored once as pairs (i, j) with i < j.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return tuple(frozenset(s) for s in nbrs)

    def has_edge(self, i: int, j: int) -> bool:
        """True for every diagonal pair and for stored edges."""
        if i == j:
            return 0 <= i < self.n
        a, b = (i, j) if i < j else (j, i)
        return (a, b) in self.edges


@dataclass(frozen=True)
class EliminationOrder:
    """A vertex order in which each vertex's later neighbours form a clique."""

    order: tuple[int, ...]


@dataclass(frozen=True)
class CliqueTree:
    """Maximal cliques arranged in a tree with the running intersection property."""

    cliques: tuple[tuple[int, ...], ...]
    tree_edges: tuple[tuple[int, int], ...]
    separators: tuple[tuple[int, ...], ...]


def validate_pattern(n: int, edge_list: Iterable[Sequence[int]]) -> Pattern:
    """Build a normalized pattern from a raw edge list.

    Duplicate and reversed pairs are merged; loops are dropped (the
    diagonal is implicit). Raises IndexOutOfRange for endpoints outside
    [0, n).
    """
    if n < 0:
        raise IndexOutOfRange(f"vertex count must be nonnegative, got {n}")
    edges = set()
    for pair in edge_list:
        i, j = int(pair[0]), int(pair[1])
        if not (0 <= i < n) or not (0 <= j < n):
            raise IndexOutOfRange(f"edge ({i},{j}) outside [0,{n})")
        if i == j:
            continue
        edges.add((min(i, j), max(i, j)))
    return Pattern(n, frozenset(edges))


def _mcs_visit_order(p: Pattern) -> list[int]:
    """Maximum cardinality search visit order.

    Repeatedly visits the unvisited vertex with the most visited
    neighbours, breaking ties towards the highest index so that the
    reversed order starts from low indices.
    """
    adj = p.adjacency
    weight = [0] * p.n
    visited = [False] * p.n
    out = []
    for _ in range(p.n):
        best = max(
            (v for v in range(p.n) if not visited[v]),
            key=lambda v: (weight[v], v),
        )
        visited[best] = True
        out.append(best)
        for w in adj[best]:
            if not visited[w]:
                weight[w] += 1
    return out


def _is_elimination_order(p: Pattern, order: Sequence[int]) -> bool:
    adj = p.adjacency
    pos = {v: k for k, v in enumerate(order)}
    for v in order:
        later = [w for w in adj[v] if pos[w] > pos[v]]
        for a in range(len(later)):
            for b in range(a + 1, len(later)):
                if not p.has_edge(later[a], later[b]):
                    return False
    return True


def is_chordal(p: Pattern) -> bool:
    """True iff every cycle of length at least four has a chord."""
    return _is_elimination_order(p, list(reversed(_mcs_visit_order(p))))


def perfect_elimination_order(p: Pattern) -> EliminationOrder:
    """Return a perfect elimination order, or raise NotChordal."""
    order = list(reversed(_mcs_visit_order(p)))
    if not _is_elimination_order(p, order):
        raise NotChordal("pattern admits no perfect elimination order")
    return EliminationOrder(tuple(order))


def _bron_kerbosch(p: Pattern) -> list[frozenset[int]]:
    adj = p.adjacency
    out: list[frozenset[int]] = []

    def walk(r: set[int], cand: set[int], excl: set[int]) -> None:
        if not cand and not excl:
            out.append(frozenset(r))
            return
        pivot = min(cand | excl, key=lambda u: (-len(cand & adj[u]), u))
        for v in sorted(cand - adj[pivot]):
            walk(r | {v}, cand & adj[v], excl & adj[v])
            cand.discard(v)
            excl.add(v)

    walk(set(), set(range(p.n)), set())
    return out


def maximal_cliques(p: Pattern) -> list[tuple[int, ...]]:
    """All inclusion-maximal cliques, each sorted, list sorted lexicographically.

    Chordal patterns are handled through the elimination order; other
    patterns fall back to Bron-Kerbosch up to 20 vertices.
    """
    if is_chordal(p):
        order = perfect_elimination_order(p).order
        adj = p.adjacency
        pos = {v: k for k, v in enumerate(order)}
        cand = {
            frozenset({v} | {w for w in adj[v] if pos[w] > pos[v]}) for v in order
        }
        cliques = [c for c in cand if not any(c < d for d in cand)]
    elif p.n <= _BRUTE_FORCE_CLIQUE_CAP:
        cliques = _bron_kerbosch(p)
    else:
        raise TooLarge(
            f"clique enumeration on a non-chordal pattern is capped at "
            f"n <= {_BRUTE_FORCE_CLIQUE_CAP}, got n = {p.n}"
        )
    return sorted(tuple(sorted(c)) for c in cliques)


def clique_tree(p: Pattern) -> CliqueTree:
    """Clique tree built by a maximum-weight spanning tree on separator sizes.

    Disconnected patterns are joined through zero-weight edges with empty
    separators. Raises NotChordal for non-chordal input.
    """
    if not is_chordal(p):
        raise NotChordal("clique trees exist only for chordal patterns")
    cliques = maximal_cliques(p)
    m = len(cliques)
    if m <= 1:
        return CliqueTree(tuple(cliques), (), ())

    candidates = sorted(
        (-len(set(cliques[i]) & set(cliques[j])), i, j)
        for i in range(m)
        for j in range(i + 1, m)
    )
    root = list(range(m))

    def find(x: int) -> int:
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    edges: list[tuple[int, int]] = []
    seps: list[tuple[int, ...]] = []
    for _, i, j in candidates:
        ri, rj = find(i), find(j)
        if ri == rj:
            continue
        root[ri] = rj
        edges.append((i, j))
        seps.append(tuple(sorted(set(cliques[i]) & set(cliques[j]))))
        if len(edges) == m - 1:
            break
    return CliqueTree(tuple(cliques), tuple(edges), tuple(seps))


def chordless_cycles(p: Pattern, max_len: int) -> list[list[int]]:
    """Enumerate chordless cycles of length 4..max_len by induced-path search.

    Each cycle is reported once, as the rotation starting at its smallest
    vertex and moving towards its smaller neighbour. Capped at 12 vertices.
    """
    if p.n > _CYCLE_ORACLE_CAP:
        raise TooLarge(
            f"chordless-cycle enumeration is capped at n <= {_CYCLE_ORACLE_CAP}"
        )
    adj = p.adjacency
    found: list[list[int]] = []

    def extend(path: list[int]) -> None:
        last = path[-1]
        for u in sorted(adj[last]):
            if u <= path[0] or u in path:
                continue
            hits = [k for k in range(len(path) - 1) if u in adj[path[k]]]
            if not hits:
                if len(path) < max_len:
                    extend(path + [u])
            elif hits == [0] and 4 <= len(path) + 1 <= max_len and path[1] < u:
                found.append(path + [u])

    if max_len >= 4:
        for s in range(p.n):
            for t in sorted(adj[s]):
                if t > s:
                    extend([s, t])
    return sorted(found, key=lambda c: (len(c), c))


def square_partition(p: Pattern) -> list[tuple[int, ...]]:
    """Partition the vertices into cliques, greedily.

    Repeatedly extracts the lexicographically least maximal clique of the
    pattern induced on the remaining vertices; singletons always work
    because the diagonal is implicit.
    """
    remaining = list(range(p.n))
    blocks: list[tuple[int, ...]] = []
    while remaining:
        block = [remaining[0]]
        for w in remaining[1:]:
            if all(p.has_edge(w, b) for b in block):
                block.append(w)
        blocks.append(tuple(block))
        taken = set(block)
        remaining = [v for v in remaining if v not in taken]
    return blocks
