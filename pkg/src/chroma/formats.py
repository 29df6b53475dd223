"""Text formats for graphs, orientations, and colored orientations.

`.ecg`: line 1 `ecg <n> <m> [bipartite <k>]` (the first k vertices form
side 1), then m lines `u v c`, all 0-indexed.
`.org`: line 1 `org <n> <m>`, then m lines `u v` meaning the arc u -> v.
`.corg`: line 1 `corg <n> <m>`, then m lines `u v c` (colored arcs).

Rendering is canonical (edges sorted ascending), so parse(render(x)) == x.
Parsers reject invariant violations with line-numbered errors.
"""
from __future__ import annotations

from .core import ColoredOrientation, EdgeColoredGraph, OrientedGraph


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _int_fields(line_no: int, parts, count: int, what: str) -> list[int]:
    if len(parts) != count:
        raise ParseError(line_no, f"expected {count} fields for {what}, got {len(parts)}")
    out = []
    for p in parts:
        try:
            out.append(int(p))
        except ValueError:
            raise ParseError(line_no, f"not an integer: {p!r}") from None
    return out


def _content_lines(text: str):
    """(line_no, tokens) for nonblank lines, 1-indexed."""
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if parts:
            out.append((i, parts))
    return out


def _parse_header(lines, magic: str):
    if not lines:
        raise ParseError(1, f"empty input, expected a `{magic}` header")
    line_no, parts = lines[0]
    if parts[0] != magic:
        raise ParseError(line_no, f"expected `{magic}` header, got {parts[0]!r}")
    return line_no, parts


def _check_count(lines, m: int, what: str):
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (lines[-1][0] if lines else 1)
        raise ParseError(where, f"expected {m} {what} lines, found {len(body)}")
    return body


def _prefix_bipartition(G: EdgeColoredGraph):
    """Return k when bipartition is ({0..k-1}, {k..n-1}), else None."""
    if G.bipartition is None:
        return None
    k = len(G.bipartition[0])
    if G.bipartition[0] == frozenset(range(k)):
        return k
    return None


def strip_bipartition(G: EdgeColoredGraph) -> EdgeColoredGraph:
    return EdgeColoredGraph(G.n, G.edges)


def render_ecg(G: EdgeColoredGraph) -> str:
    """Canonical `.ecg` text. Only prefix bipartitions ({0..k-1} as side 1)
    are representable; strip_bipartition first for anything else."""
    k = _prefix_bipartition(G)
    if G.bipartition is not None and k is None:
        raise ValueError(
            "bipartition side 1 is not a vertex prefix and cannot be rendered; "
            "use strip_bipartition first"
        )
    header = f"ecg {G.n} {G.m}"
    if k is not None:
        header += f" bipartite {k}"
    lines = [header]
    lines.extend(f"{u} {v} {c}" for u, v, c in G.edges)
    return "\n".join(lines) + "\n"


def parse_ecg(text: str) -> EdgeColoredGraph:
    lines = _content_lines(text)
    line_no, parts = _parse_header(lines, "ecg")
    bip_k = None
    if len(parts) == 5 and parts[3] == "bipartite":
        n, m = _int_fields(line_no, parts[1:3], 2, "header")
        (bip_k,) = _int_fields(line_no, parts[4:5], 1, "bipartite size")
    elif len(parts) == 3:
        n, m = _int_fields(line_no, parts[1:3], 2, "header")
    else:
        raise ParseError(line_no, "header must be `ecg <n> <m> [bipartite <k>]`")
    if n < 0 or m < 0:
        raise ParseError(line_no, "n and m must be nonnegative")
    if bip_k is not None and not 0 <= bip_k <= n:
        raise ParseError(line_no, f"bipartite size {bip_k} out of range")

    body = _check_count(lines, m, "edge")
    edges = []
    seen = {}
    for ln, parts in body:
        u, v, c = _int_fields(ln, parts, 3, "an edge")
        for x in (u, v):
            if not 0 <= x < n:
                raise ParseError(ln, f"vertex id {x} out of range")
        if u == v:
            raise ParseError(ln, f"loop at vertex {u}")
        if c < 0:
            raise ParseError(ln, f"negative color {c}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(ln, f"duplicate edge {{{u},{v}}} (first at line {seen[key]})")
        seen[key] = ln
        if bip_k is not None and (u < bip_k) == (v < bip_k):
            raise ParseError(ln, f"edge {{{u},{v}}} does not cross the bipartition")
        edges.append((u, v, c))
    bip = (range(bip_k), range(bip_k, n)) if bip_k is not None else None
    return EdgeColoredGraph(n, edges, bipartition=bip)


def render_org(D: OrientedGraph) -> str:
    lines = [f"org {D.n} {D.m}"]
    lines.extend(f"{t} {h}" for t, h in D.arcs)
    return "\n".join(lines) + "\n"


def parse_org(text: str) -> OrientedGraph:
    lines = _content_lines(text)
    line_no, parts = _parse_header(lines, "org")
    n, m = _int_fields(line_no, parts[1:], 2, "header")
    if n < 0 or m < 0:
        raise ParseError(line_no, "n and m must be nonnegative")
    body = _check_count(lines, m, "arc")
    arcs = []
    seen = {}
    for ln, parts in body:
        t, h = _int_fields(ln, parts, 2, "an arc")
        for x in (t, h):
            if not 0 <= x < n:
                raise ParseError(ln, f"vertex id {x} out of range")
        if t == h:
            raise ParseError(ln, f"loop at vertex {t}")
        if (t, h) in seen:
            raise ParseError(ln, f"duplicate arc ({t},{h}) (first at line {seen[(t, h)]})")
        if (h, t) in seen:
            raise ParseError(
                ln, f"anti-parallel arc ({t},{h}) (reverse at line {seen[(h, t)]})"
            )
        seen[(t, h)] = ln
        arcs.append((t, h))
    return OrientedGraph(n, arcs)


def render_corg(D: ColoredOrientation) -> str:
    """Arcs with colors; the host is reconstructed on parse as the arcs'
    underlying edge-colored graph."""
    lines = [f"corg {D.n} {D.m}"]
    lines.extend(f"{t} {h} {c}" for t, h, c in D.arcs)
    return "\n".join(lines) + "\n"


def parse_corg(text: str) -> ColoredOrientation:
    lines = _content_lines(text)
    line_no, parts = _parse_header(lines, "corg")
    n, m = _int_fields(line_no, parts[1:], 2, "header")
    if n < 0 or m < 0:
        raise ParseError(line_no, "n and m must be nonnegative")
    body = _check_count(lines, m, "arc")
    arcs = []
    seen = {}
    for ln, parts in body:
        t, h, c = _int_fields(ln, parts, 3, "a colored arc")
        for x in (t, h):
            if not 0 <= x < n:
                raise ParseError(ln, f"vertex id {x} out of range")
        if t == h:
            raise ParseError(ln, f"loop at vertex {t}")
        if c < 0:
            raise ParseError(ln, f"negative color {c}")
        if (t, h) in seen:
            raise ParseError(ln, f"duplicate arc ({t},{h}) (first at line {seen[(t, h)]})")
        if (h, t) in seen:
            raise ParseError(
                ln, f"anti-parallel arc ({t},{h}) (reverse at line {seen[(h, t)]})"
            )
        seen[(t, h)] = ln
        arcs.append((t, h, c))
    host = EdgeColoredGraph(n, [(min(t, h), max(t, h), c) for t, h, c in arcs])
    return ColoredOrientation(host, arcs)


def parse_auto(text: str):
    """Dispatch on the header token."""
    for raw in text.splitlines():
        parts = raw.split()
        if parts:
            magic = parts[0]
            break
    else:
        raise ParseError(1, "empty input")
    if magic == "ecg":
        return parse_ecg(text)
    if magic == "org":
        return parse_org(text)
    if magic == "corg":
        return parse_corg(text)
    raise ParseError(1, f"unknown header {magic!r}")


def load(path):
    with open(path, "r", encoding="utf-8") as f:
        return parse_auto(f.read())


def save(obj, path) -> None:
    if isinstance(obj, EdgeColoredGraph):
        text = render_ecg(obj)
    elif isinstance(obj, ColoredOrientation):
        text = render_corg(obj)
    elif isinstance(obj, OrientedGraph):
        text = render_org(obj)
    else:
        raise TypeError(f"cannot save object of type {type(obj).__name__}")
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
