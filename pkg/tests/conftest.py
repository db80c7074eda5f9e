"""Shared generators and oracles for the test suite."""

from __future__ import annotations

import itertools

import numpy as np
from hypothesis import HealthCheck, settings

from posext import (
    FiniteGroup,
    Pattern,
    SymmetricSubset,
    cyclic_group,
    dihedral_group,
    group_function,
    klein_four_group,
    validate_pattern,
    validate_subset,
)

settings.register_profile(
    "suite",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def band_pattern(n: int, width: int) -> Pattern:
    return validate_pattern(
        n, [(i, j) for i in range(n) for j in range(i + 1, min(i + width + 1, n))]
    )


def cycle_pattern(n: int) -> Pattern:
    return validate_pattern(n, [(i, (i + 1) % n) for i in range(n)])


def complete_pattern(n: int) -> Pattern:
    return validate_pattern(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def random_pattern(rng: np.random.Generator, n: int, max_edges: int) -> Pattern:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    k = int(rng.integers(0, min(max_edges, len(pairs)) + 1))
    chosen = rng.choice(len(pairs), size=k, replace=False) if k else []
    return validate_pattern(n, [pairs[int(c)] for c in chosen])


def random_chordal_pattern(rng: np.random.Generator, n: int) -> Pattern:
    """Random chordal pattern: random graph plus its elimination fill-in."""
    adj = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.45:
                adj[i].add(j)
                adj[j].add(i)
    order = list(rng.permutation(n))
    eliminated = set()
    for v in order:
        live = [w for w in adj[v] if w not in eliminated]
        for a, b in itertools.combinations(live, 2):
            adj[a].add(b)
            adj[b].add(a)
        eliminated.add(v)
    return validate_pattern(n, [(i, j) for i in range(n) for j in adj[i] if j > i])


def random_hermitian(rng: np.random.Generator, n: int) -> np.ndarray:
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (a + a.conj().T) / 2


def random_psd(rng: np.random.Generator, n: int, rank: int | None = None) -> np.ndarray:
    b = rng.normal(size=(n, rank or n)) + 1j * rng.normal(size=(n, rank or n))
    a = b @ b.conj().T
    return (a + a.conj().T) / 2


def psd_supported_on(rng: np.random.Generator, p: Pattern) -> np.ndarray:
    """Random PSD matrix supported on a pattern: clique-local Gram pieces."""
    from posext import maximal_cliques

    out = np.zeros((p.n, p.n), dtype=complex)
    for clique in maximal_cliques(p):
        idx = list(clique)
        out[np.ix_(idx, idx)] += random_psd(rng, len(idx))
    return (out + out.conj().T) / 2


def is_valid_elimination_order(p: Pattern, order) -> bool:
    pos = {v: k for k, v in enumerate(order)}
    for v in order:
        later = [w for w in p.adjacency[v] if pos[w] > pos[v]]
        for a in range(len(later)):
            for b in range(a + 1, len(later)):
                if not p.has_edge(later[a], later[b]):
                    return False
    return True


def brute_force_maximal_cliques(p: Pattern) -> list[tuple[int, ...]]:
    """Oracle: scan all vertex subsets (n small)."""
    cliques = []
    verts = list(range(p.n))
    for r in range(1, p.n + 1):
        for sub in itertools.combinations(verts, r):
            if all(p.has_edge(a, b) for a, b in itertools.combinations(sub, 2)):
                cliques.append(set(sub))
    maximal = [c for c in cliques if not any(c < d for d in cliques)]
    return sorted(tuple(sorted(c)) for c in maximal)


def all_small_groups() -> list[tuple[str, FiniteGroup]]:
    """One table per isomorphism class of order at most 6."""
    return [
        ("Z1", cyclic_group(1)),
        ("Z2", cyclic_group(2)),
        ("Z3", cyclic_group(3)),
        ("Z4", cyclic_group(4)),
        ("K4", klein_four_group()),
        ("Z5", cyclic_group(5)),
        ("Z6", cyclic_group(6)),
        ("S3", dihedral_group(3)),
    ]


def symmetric_subsets(g: FiniteGroup) -> list[SymmetricSubset]:
    """Every inverse-closed subset containing the identity."""
    orbits = []
    seen = set()
    for x in range(g.order):
        if x == g.identity or x in seen:
            continue
        orbit = frozenset({x, g.inverse[x]})
        seen |= orbit
        orbits.append(orbit)
    subsets = []
    for mask in range(1 << len(orbits)):
        members = {g.identity}
        for k, orbit in enumerate(orbits):
            if mask >> k & 1:
                members |= orbit
        subsets.append(validate_subset(g, members))
    return subsets


def random_pd_function(rng: np.random.Generator, g: FiniteGroup, e: SymmetricSubset):
    """Restriction to E of an autocorrelation function, exactly symmetrized."""
    f = rng.normal(size=g.order) + 1j * rng.normal(size=g.order)
    full = {}
    for x in range(g.order):
        acc = 0.0 + 0.0j
        for r in range(g.order):
            acc += f[r].conjugate() * f[g.mul(x, r)]
        full[x] = acc / g.order
    vals = {}
    for x in sorted(e.members):
        xi = g.inverse[x]
        if xi in vals:
            vals[x] = vals[xi].conjugate()
        elif x == xi:
            vals[x] = complex(full[x].real, 0.0)
        else:
            vals[x] = full[x]
    return group_function(g, vals)
