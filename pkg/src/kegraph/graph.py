"""Immutable simple undirected graphs with dense 0..n-1 vertex ids.

Adjacency is kept both as sorted neighbor tuples and as one Python-int bitmask
per vertex, so independence tests and set neighborhoods are word operations at
any size.  All mutating operations (vertex/edge deletion, induced subgraphs)
return new graphs; deletions re-index vertices and hand back the relabeling.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import InputError

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable loopless simple graph on vertex ids 0..n-1."""

    __slots__ = ("n", "edges", "adj_mask", "neighbors", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        masks = [0] * n
        edge_set: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range for n={n}")
            e = _norm_edge(u, v)
            if e in edge_set:
                raise InputError(f"duplicate edge {e}")
            edge_set.add(e)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(edge_set))
        object.__setattr__(self, "adj_mask", tuple(masks))
        object.__setattr__(
            self,
            "neighbors",
            tuple(tuple(_bits(m)) for m in masks),
        )
        object.__setattr__(self, "_hash", hash((n, self.edges)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.adj_mask[u] >> v & 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InputError(f"vertex id {v} out of range for n={self.n}")

    def check_vertex_set(self, vs: Iterable[int]) -> frozenset[int]:
        out = frozenset(vs)
        for v in out:
            self.check_vertex(v)
        return out

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    # -- constructors -----------------------------------------------------

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, ())

    @staticmethod
    def cycle(n: int) -> "Graph":
        if n < 3:
            raise InputError("a cycle needs at least 3 vertices")
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])

    @staticmethod
    def path(n: int) -> "Graph":
        return Graph(n, [(i, i + 1) for i in range(n - 1)])

    @staticmethod
    def complete(n: int) -> "Graph":
        return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    @staticmethod
    def from_edge_mask(n: int, mask: int, pairs: list[Edge]) -> "Graph":
        """Graph from a bitmask over a fixed ordered list of vertex pairs."""
        return Graph(n, [pairs[i] for i in _bits(mask)])


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of a mask, ascending."""
    return _bits(mask)


def mask_of(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def set_of(mask: int) -> frozenset[int]:
    return frozenset(_bits(mask))


def all_pairs(n: int) -> list[Edge]:
    """Vertex pairs in the fixed order used by exhaustive enumeration."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


# -- neighborhood algebra --------------------------------------------------


def neighborhood_mask(g: Graph, mask: int) -> int:
    out = 0
    for v in _bits(mask):
        out |= g.adj_mask[v]
    return out


def neighborhood(g: Graph, a: Iterable[int]) -> frozenset[int]:
    """N(A): vertices having at least one neighbor in A."""
    vs = g.check_vertex_set(a)
    return set_of(neighborhood_mask(g, mask_of(vs)))


def closed_neighborhood(g: Graph, a: Iterable[int]) -> frozenset[int]:
    """N[A] = A union N(A)."""
    vs = g.check_vertex_set(a)
    m = mask_of(vs)
    return set_of(m | neighborhood_mask(g, m))


def set_difference_value(g: Graph, x: Iterable[int]) -> int:
    """d(X) = |X| - |N(X)|; X need not be independent."""
    vs = g.check_vertex_set(x)
    m = mask_of(vs)
    return len(vs) - neighborhood_mask(g, m).bit_count()


def is_independent(g: Graph, a: Iterable[int]) -> bool:
    vs = g.check_vertex_set(a)
    m = mask_of(vs)
    for v in vs:
        if g.adj_mask[v] & m:
            return False
    return True


def is_independent_mask(g: Graph, m: int) -> bool:
    return not (neighborhood_mask(g, m) & m)


def edges_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> frozenset[Edge]:
    """(A,B) = edges with one endpoint in A and the other in B; A, B disjoint."""
    sa = g.check_vertex_set(a)
    sb = g.check_vertex_set(b)
    if sa & sb:
        raise InputError("edges_between requires disjoint vertex sets")
    mb = mask_of(sb)
    out = set()
    for u in sa:
        for v in _bits(g.adj_mask[u] & mb):
            out.add(_norm_edge(u, v))
    return frozenset(out)


# -- deletion / induced subgraphs ------------------------------------------


def induced(g: Graph, a: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph G[A].

    Returns (subgraph, relabel) where relabel[new_id] = old_id; new ids are
    assigned in ascending order of old ids.
    """
    keep = sorted(g.check_vertex_set(a))
    index = {old: new for new, old in enumerate(keep)}
    sub_edges = [
        (index[u], index[v]) for (u, v) in g.edges if u in index and v in index
    ]
    return Graph(len(keep), sub_edges), tuple(keep)


def delete_vertex(g: Graph, v: int) -> tuple[Graph, tuple[int, ...]]:
    g.check_vertex(v)
    return induced(g, [u for u in g.vertices() if u != v])


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = e
    ne = _norm_edge(u, v)
    if ne not in g.edges:
        raise InputError(f"edge {ne} not present")
    return Graph(g.n, g.edges - {ne})


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj_mask[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == g.full_mask


# -- edge-list text format ---------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the `n m` + `u v` lines format; '#' comments and blanks ignored."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        rows.append((lineno, body.split()))
    if not rows:
        raise InputError("empty edge-list input")
    header_line, header = rows[0]
    if len(header) != 2:
        raise InputError(f"line {header_line}: expected header 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise InputError(f"line {header_line}: non-integer header") from exc
    edges = []
    for lineno, fields in rows[1:]:
        if len(fields) != 2:
            raise InputError(f"line {lineno}: expected 'u v'")
        try:
            edges.append((int(fields[0]), int(fields[1])))
        except ValueError as exc:
            raise InputError(f"line {lineno}: non-integer vertex id") from exc
    if len(edges) != m:
        raise InputError(f"header claims m={m} but {len(edges)} edge lines found")
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


# -- graph6 ------------------------------------------------------------------


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (undirected simple graphs only)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise InputError("empty graph6 input")
    if s[0] in ":;&":
        raise InputError("sparse6/digraph6 headers are not supported")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise InputError("invalid graph6 byte")
    if data[0] < 63:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        if len(data) < 8:
            raise InputError("truncated graph6 size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | b
        body = data[8:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise InputError("graph6 body length does not match vertex count")
    bitstream = []
    for b in body:
        for k in range(5, -1, -1):
            bitstream.append((b >> k) & 1)
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bitstream[idx]:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


def format_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        raise InputError("graph too large for this graph6 writer")
    bitvals = []
    for v in range(1, n):
        for u in range(v):
            bitvals.append(1 if g.has_edge(u, v) else 0)
    while len(bitvals) % 6:
        bitvals.append(0)
    body = []
    for i in range(0, len(bitvals), 6):
        b = 0
        for bit in bitvals[i : i + 6]:
            b = (b << 1) | bit
        body.append(b + 63)
    return "".join(chr(c) for c in head + body)
