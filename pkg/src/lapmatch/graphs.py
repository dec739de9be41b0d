"""Simple undirected graphs over dense integer labels, with graph6 I/O.

Vertices are always 0..n-1.  Graph values are immutable after construction;
every edit operation returns a new value, so graphs are safe to share across
threads.  The graph6 byte layout follows the standard format: byte offset 63,
one length byte for n <= 62 (three- and six-sextet long forms for larger n),
and adjacency bits in upper-triangle column order x(0,1), x(0,2), x(1,2),
x(0,3), ..., zero-padded to a multiple of 6 bits.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import DomainError, Graph6ParseError, SizeCapError

GRAPH6_HEADER = ">>graph6<<"

# Bitmask-keyed memoization elsewhere assumes subdivision targets stay small.
SUBDIVISION_VERTEX_CAP = 128


class Graph:
    """An immutable simple graph: no loops, no multi-edges, symmetric adjacency."""

    __slots__ = ("n", "edges", "adj", "_degrees")

    def __init__(self, n: int, edges=()):
        if n < 1:
            raise DomainError(f"graph must have at least one vertex, got n={n}")
        seen: set[tuple[int, int]] = set()
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u},{v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DomainError(f"duplicate edge {e}")
            seen.add(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_degrees", tuple(mask.bit_count() for mask in adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self._degrees[v]

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    @property
    def max_degree(self) -> int:
        return max(self._degrees)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def add_edge(self, u: int, v: int) -> Graph:
        """Return the graph with the extra edge {u, v}."""
        if u == v:
            raise DomainError(f"cannot add loop at vertex {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise DomainError(f"edge ({u},{v}) out of range for n={self.n}")
        if self.has_edge(u, v):
            raise DomainError(f"edge ({u},{v}) already present")
        return Graph(self.n, self.edges + ((min(u, v), max(u, v)),))

    def delete_vertex(self, v: int) -> Graph:
        """Delete v and its incident edges; indices above v shift down by one."""
        if not 0 <= v < self.n:
            raise DomainError(f"vertex {v} out of range for n={self.n}")
        if self.n == 1:
            raise DomainError("cannot delete the last vertex")

        def shift(w: int) -> int:
            return w - 1 if w > v else w

        kept = [(shift(a), shift(b)) for a, b in self.edges if v not in (a, b)]
        return Graph(self.n - 1, kept)

    def subdivision(self) -> Graph:
        """Replace every edge {a, b} by a path a - w - b through a new vertex w.

        Original vertices keep their indices; the new vertex for the k-th edge
        (in stored edge order) gets index n + k.
        """
        if self.n + self.m > SUBDIVISION_VERTEX_CAP:
            raise SizeCapError(
                f"subdivision would have {self.n + self.m} vertices "
                f"(cap {SUBDIVISION_VERTEX_CAP})"
            )
        new_edges = []
        for k, (a, b) in enumerate(self.edges):
            w = self.n + k
            new_edges.append((a, w))
            new_edges.append((b, w))
        return Graph(self.n + self.m, new_edges)

    def induced(self, vertices) -> Graph:
        """Induced subgraph on the given vertices, relabeled 0..k-1 in sorted order."""
        vs = sorted(set(vertices))
        if not vs:
            raise DomainError("induced subgraph needs at least one vertex")
        if vs[0] < 0 or vs[-1] >= self.n:
            raise DomainError(f"vertices {vs} out of range for n={self.n}")
        index = {v: i for i, v in enumerate(vs)}
        inside = set(vs)
        edges = [(index[a], index[b]) for a, b in self.edges if a in inside and b in inside]
        return Graph(len(vs), edges)

    def non_edges(self) -> list[tuple[int, int]]:
        """All missing unordered pairs, in lexicographic order."""
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.has_edge(u, v)
        ]

    def component_masks(self) -> list[int]:
        """Vertex bitmasks of the connected components, by smallest member."""
        seen = 0
        out = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp = 1 << start
            frontier = 1 << start
            while frontier:
                v = frontier.bit_length() - 1
                frontier &= ~(1 << v)
                fresh = self.adj[v] & ~comp
                comp |= fresh
                frontier |= fresh
            seen |= comp
            out.append(comp)
        return out

    @property
    def is_connected(self) -> bool:
        return len(self.component_masks()) == 1


@dataclass(frozen=True)
class StructuralMetrics:
    """Cycle structure summary; ``girth`` is None exactly when the graph is acyclic."""

    girth: int | None
    cycle_space_dim: int
    is_tree: bool
    is_connected: bool
    component_count: int


def structural_metrics(g: Graph) -> StructuralMetrics:
    components = len(g.component_masks())
    c = g.m - g.n + components
    return StructuralMetrics(
        girth=_girth(g),
        cycle_space_dim=c,
        is_tree=(components == 1 and c == 0),
        is_connected=(components == 1),
        component_count=components,
    )


def _girth(g: Graph) -> int | None:
    """Length of a shortest cycle via BFS from every vertex; None if acyclic."""
    best: int | None = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in _bits(g.adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u] and dist[w] >= dist[u]:
                    cycle = dist[u] + dist[w] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


def is_star(g: Graph) -> bool:
    """True for K_{1,n-1} with n >= 2 (a single center joined to all leaves)."""
    return g.n >= 2 and g.m == g.n - 1 and g.max_degree == g.n - 1


def is_cycle(g: Graph) -> bool:
    return g.is_connected and g.n >= 3 and all(d == 2 for d in g.degrees)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# --- graph6 ---------------------------------------------------------------


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 record (an optional '>>graph6<<' prefix is stripped)."""
    text = line.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    if not text:
        raise Graph6ParseError("empty graph6 record")
    try:
        data = text.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6ParseError(f"non-ASCII character in graph6 record: {exc}") from None
    for off, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6ParseError(f"byte 0x{byte:02x} outside graph6 range 63..126", offset=off)

    n, pos = _read_graph6_order(data)
    if n == 0:
        raise Graph6ParseError("graph of order 0 is not supported")
    bits_needed = n * (n - 1) // 2
    bytes_needed = (bits_needed + 5) // 6
    if len(data) - pos < bytes_needed:
        raise Graph6ParseError(
            f"truncated record: need {bytes_needed} adjacency bytes, got {len(data) - pos}",
            offset=len(data),
        )
    if len(data) - pos > bytes_needed:
        raise Graph6ParseError("trailing garbage after graph6 record", offset=pos + bytes_needed)

    edges = []
    bit_index = 0
    u, v = 0, 1
    for k in range(bytes_needed):
        sextet = data[pos + k] - 63
        for shift in range(5, -1, -1):
            if bit_index >= bits_needed:
                if sextet >> shift & 1:
                    raise Graph6ParseError("nonzero padding bit", offset=pos + k)
                continue
            if sextet >> shift & 1:
                edges.append((u, v))
            bit_index += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return Graph(n, edges)


def _read_graph6_order(data: bytes) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise Graph6ParseError("truncated long-form order field", offset=len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        return n, 4
    if len(data) < 8:
        raise Graph6ParseError("truncated very-long-form order field", offset=len(data))
    n = 0
    for byte in data[2:8]:
        n = n << 6 | (byte - 63)
    return n, 8


def write_graph6(g: Graph) -> str:
    """Encode the labeled graph as a canonical graph6 record."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        head = [126, 126] + [((n >> (6 * k)) & 63) + 63 for k in range(5, -1, -1)]
    body = []
    sextet = 0
    filled = 0
    for v in range(1, n):
        for u in range(v):
            sextet = sextet << 1 | (1 if g.has_edge(u, v) else 0)
            filled += 1
            if filled == 6:
                body.append(sextet + 63)
                sextet, filled = 0, 0
    if filled:
        body.append((sextet << (6 - filled)) + 63)
    return bytes(head + body).decode("ascii")


def read_graph6_lines(text: str):
    """Yield (line_number, record) pairs from corpus text, skipping blanks and headers."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == GRAPH6_HEADER:
            continue
        yield lineno, line
