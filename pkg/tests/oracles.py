"""Independent brute-force oracles for cross-checking the search code.

Everything here enumerates by raw itertools subsets/permutations and checks
properties directly from edge lists, sharing no traversal logic with the
package's backtracking detectors. Intended for tiny instances only.
"""
from __future__ import annotations

from itertools import combinations, permutations


def _color_map(G):
    return {(u, v): c for u, v, c in G.edges}


def _col(cmap, a, b):
    return cmap.get((a, b) if a < b else (b, a))


def _complete_bipartite(cmap, S, T):
    return all(_col(cmap, u, w) is not None for u in S for w in T)


def _pc_kst_ok(cmap, S, T):
    for u in S:
        cols = [_col(cmap, u, w) for w in T]
        if len(set(cols)) != len(T):
            return False
    for w in T:
        cols = [_col(cmap, u, w) for u in S]
        if len(set(cols)) != len(S):
            return False
    return True


def _rainbow_kst_ok(cmap, S, T):
    cols = [_col(cmap, u, w) for u in S for w in T]
    return len(set(cols)) == len(cols)


def brute_pc_kst_exists(G, s, t) -> bool:
    cmap = _color_map(G)
    verts = range(G.n)
    for S in combinations(verts, s):
        rest = [v for v in verts if v not in S]
        for T in combinations(rest, t):
            if _complete_bipartite(cmap, S, T) and _pc_kst_ok(cmap, S, T):
                return True
    return False


def brute_rainbow_kst_exists(G, s, t) -> bool:
    cmap = _color_map(G)
    verts = range(G.n)
    for S in combinations(verts, s):
        rest = [v for v in verts if v not in S]
        for T in combinations(rest, t):
            if _complete_bipartite(cmap, S, T) and _rainbow_kst_ok(cmap, S, T):
                return True
    return False


def all_cycles_by_permutation(n, pairs) -> set[tuple[int, ...]]:
    """Every simple cycle, canonical: starts at its minimum vertex and runs
    toward the smaller of the two neighbors. Enumerated by trying all vertex
    subsets and all cyclic orders."""
    edge_set = {(min(u, v), max(u, v)) for u, v in pairs}
    found = set()
    for size in range(3, n + 1):
        for subset in combinations(range(n), size):
            first = subset[0]
            for rest in permutations(subset[1:]):
                if rest[0] > rest[-1]:
                    continue
                cyc = (first,) + rest
                if all(
                    (min(cyc[i], cyc[(i + 1) % size]), max(cyc[i], cyc[(i + 1) % size]))
                    in edge_set
                    for i in range(size)
                ):
                    found.add(cyc)
    return found


def is_directed_cycle(arcs, cyc) -> bool:
    arcset = set(arcs)
    k = len(cyc)
    fwd = all((cyc[i], cyc[(i + 1) % k]) in arcset for i in range(k))
    bwd = all((cyc[(i + 1) % k], cyc[i]) in arcset for i in range(k))
    return fwd or bwd


def brute_directed_girth(D):
    """Exact directed girth via permutation enumeration, None when acyclic."""
    pairs = [(t, h) for t, h in D.arcs]
    best = None
    for cyc in all_cycles_by_permutation(D.n, pairs):
        if is_directed_cycle(D.arcs, cyc):
            if best is None or len(cyc) < best:
                best = len(cyc)
    return best


def is_pc_cycle(G, cyc) -> bool:
    cmap = _color_map(G)
    k = len(cyc)
    cols = []
    for i in range(k):
        c = _col(cmap, cyc[i], cyc[(i + 1) % k])
        if c is None:
            return False
        cols.append(c)
    return all(cols[i] != cols[(i + 1) % k] for i in range(k))


def brute_pc_cycle_lengths(G) -> set[int]:
    """Lengths for which at least one properly colored cycle exists."""
    pairs = [(u, v) for u, v, _ in G.edges]
    return {
        len(cyc)
        for cyc in all_cycles_by_permutation(G.n, pairs)
        if is_pc_cycle(G, cyc)
    }
