"""Saturation-greedy subgraph extraction and the orientation construction.

Given a bipartite edge-colored graph, `saturation_extract` produces a
spanning subgraph whose side-2 color degrees are capped at s-1 while side-1
color degrees drop by at most a controlled amount whenever the input has no
properly colored K_{s,t}. `construct_orientation` runs the extraction on the
dual graph and reads off an orientation whose directed paths, and hence
directed cycles, are properly colored in the host.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .core import EdgeColoredGraph, ColoredOrientation, color_degree
from .transforms import dual_graph

# Slack used when rounding the real-valued growth threshold to an integer
# count; counts are integers, so "at least x" means "at least ceil(x)" up to
# floating-point noise on integral x.
_EPS = 1e-9


def _check_st(s: int, t: int) -> None:
    if not isinstance(s, int) or not isinstance(t, int) or not 2 <= s <= t:
        raise ValueError(f"parameters must satisfy 2 <= s <= t, got s={s!r}, t={t!r}")


def sigma(s: int, t: int) -> float:
    """Coefficient of the side-1 color-degree loss bound."""
    _check_st(s, t)
    return s * ((t - 1) / math.factorial(s - 1)) ** (1.0 / s)


def default_x(s: int, t: int, n2: int) -> float:
    """Growth threshold minimizing the loss bound for a side-2 part of size n2."""
    _check_st(s, t)
    if n2 < 0:
        raise ValueError("n2 must be nonnegative")
    return (s - 1) * ((t - 1) / math.factorial(s - 1)) ** (1.0 / s) * n2 ** (1.0 - 1.0 / s)


@dataclass(frozen=True)
class ExtractionParams:
    """Parameters of the saturation-greedy extraction.

    x overrides the growth threshold; when None the optimizing default for
    the instance's side-2 size is used. An override is for studying the
    threshold's sensitivity; the stated side-1 loss bound is tuned to the
    default.
    """

    s: int
    t: int
    x: float | None = None

    def __post_init__(self):
        _check_st(self.s, self.t)
        if self.x is not None:
            x = float(self.x)
            if not math.isfinite(x) or x <= 0:
                raise ValueError(f"x must be a finite positive real, got {self.x!r}")
            object.__setattr__(self, "x", x)

    @property
    def sigma(self) -> float:
        return sigma(self.s, self.t)


@dataclass(frozen=True)
class SaturationState:
    """Greedy growth record.

    selected lists the chosen side-1 vertices in order. sat_index maps each
    side-2 vertex to the 1-based growth step at which it saturated (reached
    s-1 distinct colors toward the selected set), or to l = len(selected) if
    it never did. kept_colors maps each side-2 vertex to its color set at
    that moment; saturated vertices keep exactly s-1 colors, unsaturated
    ones at most s-2.
    """

    selected: tuple[int, ...]
    sat_index: dict[int, int]
    kept_colors: dict[int, frozenset[int]]
    x: float

    @property
    def l(self) -> int:
        return len(self.selected)


@dataclass(frozen=True)
class ExtractionResult:
    """Extracted spanning subgraph plus the saturation state that produced it."""

    H: EdgeColoredGraph
    state: SaturationState
    deltas: dict[int, int]


def _side_proper_adjacency(G, side1, side2):
    """side-1-proper adjacency restricted to edges between the two parts.

    For each side-1 vertex, one edge per incident color is kept (smallest
    neighbor id within the color class), mirroring side_proper_subgraph but
    confined to the given parts.
    """
    side2_set = set(side2)
    g0: dict[int, list[tuple[int, int]]] = {}
    for u in side1:
        first_by_color: dict[int, int] = {}
        for w, c in G.adj[u]:
            if w in side2_set and c not in first_by_color:
                first_by_color[c] = w
        g0[u] = sorted((w, c) for c, w in first_by_color.items())
    return g0


def _saturation_extract_on_parts(G, side1, side2, s, t, x_override):
    """Run the extraction between two explicit parts of G.

    Returns (kept_edges, state). Only edges between side1 and side2 are
    considered; kept_edges are (u, v, c) triples with u < v.
    """
    side1 = sorted(side1)
    side2 = sorted(side2)
    n2 = len(side2)
    x = float(x_override) if x_override is not None else default_x(s, t, n2)
    if not math.isfinite(x):
        raise ValueError(f"growth threshold x is not finite: {x!r}")
    need = max(1, math.ceil(x - _EPS))

    g0 = _side_proper_adjacency(G, side1, side2)

    colors_seen: dict[int, set[int]] = {v: set() for v in side2}
    saturated: dict[int, bool] = {v: False for v in side2}
    sat_index: dict[int, int] = {}
    kept_colors: dict[int, frozenset[int]] = {}
    selected: list[int] = []
    in_selected: set[int] = set()

    while True:
        pick = None
        for u in side1:
            if u in in_selected:
                continue
            cnt = 0
            for v, c in g0[u]:
                if not saturated[v] and c not in colors_seen[v]:
                    cnt += 1
                    if cnt >= need:
                        break
            if cnt >= need:
                pick = u
                break
        if pick is None:
            break
        selected.append(pick)
        in_selected.add(pick)
        step = len(selected)
        for v, c in g0[pick]:
            if c not in colors_seen[v]:
                colors_seen[v].add(c)
                if not saturated[v] and len(colors_seen[v]) >= s - 1:
                    saturated[v] = True
                    sat_index[v] = step
                    kept_colors[v] = frozenset(colors_seen[v])

    l = len(selected)
    for v in side2:
        if not saturated[v]:
            sat_index[v] = l
            kept_colors[v] = frozenset(colors_seen[v])

    kept_edges = [
        (min(u, v), max(u, v), c)
        for u in side1
        for v, c in g0[u]
        if c in kept_colors[v]
    ]
    state = SaturationState(tuple(selected), sat_index, kept_colors, x)
    return kept_edges, state


def saturation_extract(G: EdgeColoredGraph, params: ExtractionParams) -> ExtractionResult:
    """Extract a spanning subgraph with side-2 color degrees capped at s-1.

    The algorithm first keeps one edge per color at each side-1 vertex, then
    greedily grows a side-1 set: scanning side 1 in ascending id order, a
    vertex qualifies while it has at least x neighbors that are unsaturated
    and reachable through a color the neighbor has not yet seen toward the
    grown set; the first qualifier is appended and the scan restarts, until
    no vertex qualifies. Each side-2 vertex then keeps exactly the colors it
    had seen when it saturated (all of its colors, if it never did), and an
    edge survives exactly when its color is kept at its side-2 endpoint.

    Unconditionally every side-2 color degree of H is at most s-1 (exactly
    s-1 at saturated vertices; at most 1 for s=2, making H pseudo side-2
    canonical). When G has no properly colored K_{s,t}, every side-1 vertex
    loses at most sigma(s, t) * n2^(1-1/s) from its color degree. In the
    degenerate regime where s-1 reaches the side-2 color degrees the cap
    never binds and H keeps everything the side-proper step kept.
    """
    if G.bipartition is None:
        raise ValueError("saturation_extract requires a bipartition")
    side1, side2 = G.bipartition
    kept_edges, state = _saturation_extract_on_parts(
        G, side1, side2, params.s, params.t, params.x
    )
    H = EdgeColoredGraph(G.n, kept_edges, G.bipartition)
    deltas = {u: color_degree(G, u) - color_degree(H, u) for u in sorted(side1)}
    return ExtractionResult(H, state, deltas)


def _orientation_from_h0(G, h0_edges, n):
    """Shared tail of the orientation construction.

    h0_edges live on the dual vertex set (left u, right n+v). Every left
    edge whose color appears at the same vertex's right copy in the frozen
    H0 is removed; the survivors are read back as arcs u -> v.
    """
    right_colors: dict[int, set[int]] = {v: set() for v in range(n)}
    for a, b, c in h0_edges:
        right_colors[b - n].add(c)

    # Per-left-vertex deletion in ascending id order; conditions reference
    # the frozen right_colors, so the processing order cannot matter.
    by_left: dict[int, list[tuple[int, int, int]]] = {u: [] for u in range(n)}
    for a, b, c in h0_edges:
        by_left[a].append((a, b, c))
    hprime = []
    for u in range(n):
        for a, b, c in by_left[u]:
            if c not in right_colors[u]:
                hprime.append((a, b, c))

    arcs = [(a, b - n, c) for a, b, c in hprime]
    return arcs


def _orientation_report(G, D, per_vertex_bound, extra):
    report = {
        "n": G.n,
        "per_vertex": {
            v: {
                "dplus": D.out_degree(v),
                "dc": color_degree(G, v),
                "bound": per_vertex_bound(v),
                "margin": D.out_degree(v) - per_vertex_bound(v),
            }
            for v in range(G.n)
        },
    }
    report.update(extra)
    return report


def construct_orientation(
    G: EdgeColoredGraph, s: int, t: int, x: float | None = None
) -> tuple[EdgeColoredGraph, ColoredOrientation, dict]:
    """Orient a spanning subgraph of G so directed paths are properly colored.

    Runs the saturation extraction on the dual graph of G, deletes every
    surviving left-copy edge whose color appears at the matching right copy,
    and orients u -> v exactly when the left edge u -> right copy of v
    survives. Unconditionally the result has no anti-parallel arcs, at every
    vertex the in-arc colors and out-arc colors are disjoint (so directed
    paths and cycles are properly colored), and the in-arc color set has
    size at most s-1. When G has no properly colored K_{s,t} (and t < n, so
    the loss bound is meaningful), every vertex keeps out-degree greater
    than its color degree minus (sigma(s, t) * n^(1-1/s) + s).

    Returns (H, D, report) where H is the unoriented arc support and the
    report carries per-vertex out-degree, color degree, bound and margin
    plus the extraction diagnostics l, x and sigma.
    """
    _check_st(s, t)
    n = G.n
    dual = dual_graph(G)
    result = saturation_extract(dual, ExtractionParams(s, t, x))
    arcs = _orientation_from_h0(G, result.H.edges, n)
    D = ColoredOrientation(G, arcs)
    H = EdgeColoredGraph(n, [(min(a, b), max(a, b), c) for a, b, c in arcs], G.bipartition)

    sig = sigma(s, t)
    loss = sig * n ** (1.0 - 1.0 / s) + s
    report = _orientation_report(
        G,
        D,
        lambda v: color_degree(G, v) - loss,
        {"s": s, "t": t, "l": result.state.l, "x": result.state.x, "sigma": sig},
    )
    return H, D, report


def construct_orientation_bipartite(
    G: EdgeColoredGraph, s: int, t: int, x: float | None = None
) -> tuple[EdgeColoredGraph, ColoredOrientation, dict]:
    """Bipartite variant with per-side degree bounds.

    The extraction is applied separately to the two bipartite halves of the
    dual graph (left copies of side 1 against right copies of side 2, and
    vice versa) before the shared deletion step, so the conditional bound
    for a vertex of side i uses the opposite side's size.
    """
    _check_st(s, t)
    if G.bipartition is None:
        raise ValueError("construct_orientation_bipartite requires a bipartition")
    n = G.n
    side1, side2 = G.bipartition
    n1, n2 = len(side1), len(side2)
    dual = dual_graph(G)

    left1 = sorted(side1)
    left2 = sorted(side2)
    right1 = [n + v for v in left1]
    right2 = [n + v for v in left2]

    edges_a, state_a = _saturation_extract_on_parts(dual, left1, right2, s, t, x)
    edges_b, state_b = _saturation_extract_on_parts(dual, left2, right1, s, t, x)
    arcs = _orientation_from_h0(G, edges_a + edges_b, n)
    D = ColoredOrientation(G, arcs)
    H = EdgeColoredGraph(n, [(min(a, b), max(a, b), c) for a, b, c in arcs], G.bipartition)

    sig = sigma(s, t)
    loss1 = sig * n2 ** (1.0 - 1.0 / s) + s  # side-1 vertices face side 2
    loss2 = sig * n1 ** (1.0 - 1.0 / s) + s

    def bound(v):
        return color_degree(G, v) - (loss1 if v in side1 else loss2)

    report = _orientation_report(
        G,
        D,
        bound,
        {
            "s": s,
            "t": t,
            "l": [state_a.l, state_b.l],
            "x": [state_a.x, state_b.x],
            "sigma": sig,
        },
    )
    return H, D, report
