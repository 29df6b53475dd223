"""Edge-colored graphs, oriented graphs, and color-degree machinery.

Vertex ids are 0-indexed. Colors are opaque nonnegative integers; there is
no global color registry, so fresh colors can always be allocated above the
current maximum. All values are immutable once constructed and safe to share
across threads; every operation in this module is a pure function.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional


def _require_vertex(n: int, v: object) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
        raise ValueError(f"invalid vertex id {v!r} for a graph on {n} vertices")
    return v


def _normalize_bipartition(n, bipartition):
    if bipartition is None:
        return None
    side1, side2 = bipartition
    s1 = frozenset(_require_vertex(n, v) for v in side1)
    s2 = frozenset(_require_vertex(n, v) for v in side2)
    if s1 & s2:
        raise ValueError("bipartition sides overlap")
    if len(s1) + len(s2) != n:
        raise ValueError("bipartition does not cover the vertex set")
    return (s1, s2)


@dataclass(frozen=True)
class EdgeColoredGraph:
    """Simple undirected graph with one integer color per edge.

    Edges are stored canonically as (u, v, c) with u < v, sorted ascending.
    The optional bipartition is a pair of disjoint vertex sets covering all
    vertices; when present, every edge must cross it.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...] = ()
    bipartition: Optional[tuple[frozenset[int], frozenset[int]]] = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"vertex count must be a nonnegative integer, got {self.n!r}")
        seen: set[tuple[int, int]] = set()
        norm = []
        for e in self.edges:
            u, v, c = e
            _require_vertex(self.n, u)
            _require_vertex(self.n, v)
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise ValueError(f"color must be a nonnegative integer, got {c!r}")
            a, b = (u, v) if u < v else (v, u)
            if (a, b) in seen:
                raise ValueError(f"duplicate edge {{{a},{b}}}")
            seen.add((a, b))
            norm.append((a, b, c))
        norm.sort()
        object.__setattr__(self, "edges", tuple(norm))
        bip = _normalize_bipartition(self.n, self.bipartition)
        if bip is not None:
            s1, _ = bip
            for a, b, _c in norm:
                if (a in s1) == (b in s1):
                    raise ValueError(f"edge {{{a},{b}}} does not cross the bipartition")
        object.__setattr__(self, "bipartition", bip)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex tuple of (neighbor, color) pairs, neighbors ascending."""
        lists: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for u, v, c in self.edges:
            lists[u].append((v, c))
            lists[v].append((u, c))
        return tuple(tuple(sorted(l)) for l in lists)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(w for w, _ in nbrs) for nbrs in self.adj)

    @cached_property
    def pair_colors(self) -> dict[tuple[int, int], int]:
        return {(u, v): c for u, v, c in self.edges}

    def degree(self, v: int) -> int:
        _require_vertex(self.n, v)
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        a, b = (u, v) if u < v else (v, u)
        return (a, b) in self.pair_colors

    def color_of(self, u: int, v: int) -> int:
        a, b = (u, v) if u < v else (v, u)
        try:
            return self.pair_colors[(a, b)]
        except KeyError:
            raise ValueError(f"edge {{{u},{v}}} not in graph") from None


@dataclass(frozen=True)
class OrientedGraph:
    """Loop-free digraph with no anti-parallel arc pairs."""

    n: int
    arcs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"vertex count must be a nonnegative integer, got {self.n!r}")
        seen: set[tuple[int, int]] = set()
        norm = []
        for a in self.arcs:
            t, h = a
            _require_vertex(self.n, t)
            _require_vertex(self.n, h)
            if t == h:
                raise ValueError(f"loop at vertex {t} is not allowed")
            if (t, h) in seen:
                raise ValueError(f"duplicate arc ({t},{h})")
            if (h, t) in seen:
                raise ValueError(f"anti-parallel arc pair between {t} and {h}")
            seen.add((t, h))
            norm.append((t, h))
        norm.sort()
        object.__setattr__(self, "arcs", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def out_adj(self) -> tuple[tuple[int, ...], ...]:
        lists: list[list[int]] = [[] for _ in range(self.n)]
        for t, h in self.arcs:
            lists[t].append(h)
        return tuple(tuple(sorted(l)) for l in lists)

    @cached_property
    def in_adj(self) -> tuple[tuple[int, ...], ...]:
        lists: list[list[int]] = [[] for _ in range(self.n)]
        for t, h in self.arcs:
            lists[h].append(t)
        return tuple(tuple(sorted(l)) for l in lists)

    def out_degree(self, v: int) -> int:
        _require_vertex(self.n, v)
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        _require_vertex(self.n, v)
        return len(self.in_adj[v])

    def has_arc(self, t: int, h: int) -> bool:
        return h in self.out_adj[t] if 0 <= t < self.n else False


@dataclass(frozen=True)
class ColoredOrientation:
    """Arcs paired with colors inherited from a host edge-colored graph.

    Every arc's underlying pair must be a host edge carrying the same color,
    and the arc set must satisfy the OrientedGraph invariants.
    """

    host: EdgeColoredGraph
    arcs: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        seen: set[tuple[int, int]] = set()
        norm = []
        for a in self.arcs:
            t, h, c = a
            _require_vertex(self.host.n, t)
            _require_vertex(self.host.n, h)
            if t == h:
                raise ValueError(f"loop at vertex {t} is not allowed")
            if (t, h) in seen:
                raise ValueError(f"duplicate arc ({t},{h})")
            if (h, t) in seen:
                raise ValueError(f"anti-parallel arc pair between {t} and {h}")
            if not self.host.has_edge(t, h) or self.host.color_of(t, h) != c:
                raise ValueError(f"arc ({t},{h},{c}) does not match a host edge")
            seen.add((t, h))
            norm.append((t, h, c))
        norm.sort()
        object.__setattr__(self, "arcs", tuple(norm))

    @property
    def n(self) -> int:
        return self.host.n

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def out_adj(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        lists: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for t, h, c in self.arcs:
            lists[t].append((h, c))
        return tuple(tuple(sorted(l)) for l in lists)

    @cached_property
    def in_adj(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        lists: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for t, h, c in self.arcs:
            lists[h].append((t, c))
        return tuple(tuple(sorted(l)) for l in lists)

    def out_degree(self, v: int) -> int:
        _require_vertex(self.n, v)
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        _require_vertex(self.n, v)
        return len(self.in_adj[v])

    def as_oriented(self) -> OrientedGraph:
        return OrientedGraph(self.n, tuple((t, h) for t, h, _ in self.arcs))


@dataclass(frozen=True)
class Witness:
    """A found structure together with the data needed to re-verify it.

    kind is one of: pc-kst, rainbow-kst, pc-cycle, rainbow-cycle,
    directed-cycle, disjoint-cycles. vertices holds one or more ordered
    vertex groups (the two sides of a K_{s,t}, a cycle in traversal order,
    or several disjoint cycles). edges are (u, v, c) triples for colored
    hosts and (tail, head) pairs for plain digraphs.
    """

    kind: str
    vertices: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, ...], ...]

    WITNESS_KINDS = (
        "pc-kst",
        "rainbow-kst",
        "pc-cycle",
        "rainbow-cycle",
        "directed-cycle",
        "disjoint-cycles",
    )

    def __post_init__(self):
        if self.kind not in self.WITNESS_KINDS:
            raise ValueError(f"unknown witness kind {self.kind!r}")
        object.__setattr__(self, "vertices", tuple(tuple(g) for g in self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": [list(g) for g in self.vertices],
            "edges": [list(e) for e in self.edges],
        }


# ---------------------------------------------------------------------------
# Color-degree metrics
# ---------------------------------------------------------------------------

def color_degree(G: EdgeColoredGraph, v: int) -> int:
    """Number of distinct colors on the edges at v (0 for isolated vertices)."""
    _require_vertex(G.n, v)
    return len({c for _, c in G.adj[v]})


def min_color_degree(G: EdgeColoredGraph) -> int:
    if G.n == 0:
        raise ValueError("minimum color degree of the empty graph is undefined")
    return min(color_degree(G, v) for v in range(G.n))


def total_color_degree(G: EdgeColoredGraph) -> int:
    return sum(color_degree(G, v) for v in range(G.n))


def mono_degree(G: EdgeColoredGraph, v: int) -> int:
    """Largest number of edges at v sharing one color (0 for isolated vertices)."""
    _require_vertex(G.n, v)
    counts: dict[int, int] = {}
    for _, c in G.adj[v]:
        counts[c] = counts.get(c, 0) + 1
    return max(counts.values(), default=0)


def mono_degree_max(G: EdgeColoredGraph) -> int:
    return max((mono_degree(G, v) for v in range(G.n)), default=0)


def color_set(G: EdgeColoredGraph, v: int) -> frozenset[int]:
    """Set of colors appearing on the edges at v."""
    _require_vertex(G.n, v)
    return frozenset(c for _, c in G.adj[v])


def color_set_between(G: EdgeColoredGraph, U: Iterable[int], W: Iterable[int]) -> frozenset[int]:
    """Set of colors on edges with one endpoint in U and the other in W."""
    su = frozenset(_require_vertex(G.n, v) for v in U)
    sw = frozenset(_require_vertex(G.n, v) for v in W)
    if su & sw:
        raise ValueError("vertex sets overlap")
    if len(su) > len(sw):
        su, sw = sw, su
    return frozenset(c for v in su for w, c in G.adj[v] if w in sw)


# ---------------------------------------------------------------------------
# Subgraph predicates
# ---------------------------------------------------------------------------

def _resolve_edges(G: EdgeColoredGraph, edge_subset) -> list[tuple[int, int, int]]:
    """Normalize an edge collection to unique (u, v, c) triples of G.

    Entries may be (u, v) pairs or (u, v, c) triples; a pair not present in
    G, or a triple whose color disagrees with G, is rejected.
    """
    out: dict[tuple[int, int], int] = {}
    for e in edge_subset:
        e = tuple(e)
        if len(e) == 2:
            u, v = e
            c = None
        elif len(e) == 3:
            u, v, c = e
        else:
            raise ValueError(f"edge entry {e!r} is neither a pair nor a triple")
        a, b = (u, v) if u < v else (v, u)
        actual = G.pair_colors.get((a, b))
        if actual is None:
            raise ValueError(f"edge {{{u},{v}}} not in graph")
        if c is not None and c != actual:
            raise ValueError(f"edge {{{u},{v}}} has color {actual}, not {c}")
        out[(a, b)] = actual
    return [(a, b, c) for (a, b), c in out.items()]


def is_properly_colored(G: EdgeColoredGraph, edge_subset) -> bool:
    """True when no two edges of the subset share both a vertex and a color."""
    at_vertex: dict[int, set[int]] = {}
    for u, v, c in _resolve_edges(G, edge_subset):
        for x in (u, v):
            colors = at_vertex.setdefault(x, set())
            if c in colors:
                return False
            colors.add(c)
    return True


def is_rainbow(G: EdgeColoredGraph, edge_subset) -> bool:
    """True when all edges of the subset carry pairwise distinct colors."""
    resolved = _resolve_edges(G, edge_subset)
    return len({c for _, _, c in resolved}) == len(resolved)


# ---------------------------------------------------------------------------
# Structure-preserving reductions
# ---------------------------------------------------------------------------

def side_proper_subgraph(G: EdgeColoredGraph, side: int) -> EdgeColoredGraph:
    """Keep one edge per incident color at each vertex of the selected side.

    The selected side is 1 or 2 (indexing G.bipartition). Within each color
    class at a selected vertex the edge to the smallest neighbor id is kept,
    so afterwards the vertex's degree equals its color degree in G.
    """
    if G.bipartition is None:
        raise ValueError("side_proper_subgraph requires a bipartition")
    if side not in (1, 2):
        raise ValueError(f"side selector must be 1 or 2, got {side!r}")
    selected = G.bipartition[side - 1]
    kept = []
    for u in sorted(selected):
        first_by_color: dict[int, int] = {}
        for w, c in G.adj[u]:  # neighbors ascending, so the first hit is minimal
            if c not in first_by_color:
                first_by_color[c] = w
        kept.extend((min(u, w), max(u, w), c) for c, w in first_by_color.items())
    return EdgeColoredGraph(G.n, kept, G.bipartition)


def edge_critical_core(G: EdgeColoredGraph) -> EdgeColoredGraph:
    """Delete edges whose removal changes no color degree, until none remains.

    Edges are scanned in ascending (u, v, c) order and the scan restarts
    after each deletion. Color degrees of the output equal those of the
    input at every vertex, and in the output every monochromatic color
    class is a union of vertex-disjoint stars.
    """
    edges = list(G.edges)
    mult: list[dict[int, int]] = [{} for _ in range(G.n)]
    for u, v, c in edges:
        mult[u][c] = mult[u].get(c, 0) + 1
        mult[v][c] = mult[v].get(c, 0) + 1
    while True:
        for i, (u, v, c) in enumerate(edges):
            if mult[u][c] >= 2 and mult[v][c] >= 2:
                del edges[i]
                mult[u][c] -= 1
                mult[v][c] -= 1
                break
        else:
            break
    return EdgeColoredGraph(G.n, edges, G.bipartition)
