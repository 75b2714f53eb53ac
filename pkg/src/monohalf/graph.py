"""Immutable simple undirected graphs with bitmask vertex sets.

Vertices are dense identifiers ``0..n-1``.  A vertex set is a plain ``int``
used as a bitmask (bit ``i`` set iff vertex ``i`` is a member); this is the
``VertexSet`` carrier used throughout the package.  Bitmasks give canonical
equality and hashing for free and make the set algebra in the enumeration
hot path cheap.
"""

from __future__ import annotations

import json
from collections import deque
from functools import cached_property
from typing import Iterable, Sequence

VertexSet = int


class GraphError(ValueError):
    """Raised for malformed graph input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class EmptyGraphError(GraphError):
    pass


def bit(v: int) -> VertexSet:
    return 1 << v


def members(x: VertexSet) -> list[int]:
    """Sorted member list of a bitmask."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def iter_members(x: VertexSet):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def to_mask(vertices: Iterable[int]) -> VertexSet:
    x = 0
    for v in vertices:
        x |= 1 << v
    return x


def popcount(x: VertexSet) -> int:
    return bin(x).count("1")


def lowest(x: VertexSet) -> int:
    """Lowest member of a nonempty set."""
    return (x & -x).bit_length() - 1


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask.  Construction
    validates simplicity; connectivity is only enforced by the loaders
    (derived objects such as complements may be disconnected).
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], names: Sequence[str] | None = None):
        if n < 0:
            raise GraphError("negative vertex count")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        if names is None:
            names = [str(i) for i in range(n)]
        if len(names) != n:
            raise GraphError("name list length differs from vertex count")
        self.names = tuple(str(s) for s in names)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: int | None = None,
                   names: Sequence[str] | None = None, connected: bool = True) -> "Graph":
        edges = list(edges)
        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)
        g = cls(n, edges, names)
        if n == 0:
            raise EmptyGraphError("graph has no vertices")
        if connected and not g.is_connected():
            raise DisconnectedGraphError("graph is disconnected")
        return g

    # -- basic structure -------------------------------------------------

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return tuple((u, v) for u in range(self.n) for v in iter_members(self.adj[u] >> (u + 1) << (u + 1)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def neighborhood(self, x: VertexSet) -> VertexSet:
        """Union of neighbourhoods of the members of ``x``."""
        out = 0
        adj = self.adj
        while x:
            low = x & -x
            out |= adj[low.bit_length() - 1]
            x ^= low
        return out

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"{v!r} is not a vertex")

    def check_set(self, x: VertexSet) -> None:
        if x < 0 or x >> self.n:
            raise GraphError("vertex set contains non-vertices")

    def is_connected(self) -> bool:
        return self.n > 0 and reach(self, 0, self.vertices) == self.vertices

    # -- names -----------------------------------------------------------

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def vertex(self, name: str) -> int:
        try:
            return self.index[str(name)]
        except KeyError:
            raise GraphError(f"unknown vertex {name!r}") from None

    def mask_of(self, names: Iterable[str]) -> VertexSet:
        return to_mask(self.vertex(s) for s in names)

    def names_of(self, x: VertexSet) -> list[str]:
        return [self.names[v] for v in members(x)]

    def name_map_json(self) -> str:
        return json.dumps({name: i for i, name in enumerate(self.names)}, indent=2)

    # -- distances ---------------------------------------------------------

    @cached_property
    def distance_matrix(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs BFS distances; ``-1`` marks unreachable pairs."""
        return tuple(tuple(bfs_distances(self, s)) for s in range(self.n))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj and self.names == other.names

    def __hash__(self) -> int:
        return hash((self.adj, self.names))


def load_graph(text: str) -> Graph:
    """Parse an edge list (one ``u v`` pair per line).

    Vertex names are arbitrary tokens, numbered by first appearance.  Blank
    lines and ``#`` comments are skipped.
    """
    index: dict[str, int] = {}
    names: list[str] = []
    edges: list[tuple[int, int]] = []
    seen: dict[frozenset, int] = {}
    edge_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphError(f"expected two vertex names, got {len(tokens)}", lineno)
        a, b = tokens
        if a == b:
            raise SelfLoopError(f"self-loop at vertex {a!r}", lineno)
        ids = []
        for tok in tokens:
            if tok not in index:
                index[tok] = len(names)
                names.append(tok)
            ids.append(index[tok])
        key = frozenset(ids)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {a} {b} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append((ids[0], ids[1]))
        edge_lines.append(lineno)
    if not names:
        raise EmptyGraphError("empty edge list")
    g = Graph(len(names), edges, names)
    if not g.is_connected():
        comp = reach(g, 0, g.vertices)
        # report the first edge lying outside the component of the first vertex
        bad = next(i for i, (u, _) in enumerate(edges) if not comp >> u & 1)
        raise DisconnectedGraphError(
            f"graph is disconnected: edge {names[edges[bad][0]]} {names[edges[bad][1]]} "
            f"is not reachable from {names[0]}", edge_lines[bad])
    return g


def read_graph(path) -> Graph:
    with open(path) as fh:
        return load_graph(fh.read())


def format_edge_list(g: Graph) -> str:
    return "".join(f"{g.names[u]} {g.names[v]}\n" for u, v in g.edges)


# -- primitive queries -----------------------------------------------------


def reach(g: Graph, source: int, within: VertexSet) -> VertexSet:
    """Vertices reachable from ``source`` inside ``G[within]``."""
    if not within >> source & 1:
        return 0
    adj = g.adj
    seen = 1 << source
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def components(g: Graph, x: VertexSet) -> list[VertexSet]:
    """Connected components of ``G[x]``, ordered by smallest member."""
    out = []
    rest = x
    while rest:
        comp = reach(g, lowest(rest), x)
        out.append(comp)
        rest &= ~comp
    return out


def is_separator(g: Graph, s: VertexSet, a: int, b: int) -> bool:
    """True iff every ``a``-``b`` path (endpoints included) meets ``s``."""
    g.check_vertex(a)
    g.check_vertex(b)
    if a == b:
        raise GraphError("separator query needs distinct endpoints")
    if (s >> a | s >> b) & 1:
        return True
    return not reach(g, a, g.vertices & ~s) >> b & 1


def is_clique(g: Graph, x: VertexSet) -> bool:
    adj = g.adj
    rest = x
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        if rest & ~adj[v]:
            return False
    return True


def complement_adjacency(g: Graph, x: VertexSet) -> dict[int, VertexSet]:
    """Neighbourhoods of the complement of ``G[x]``, keyed by original id."""
    return {v: x & ~g.adj[v] & ~(1 << v) for v in iter_members(x)}


def complement_induced(g: Graph, x: VertexSet) -> Graph:
    """Complement of ``G[x]`` as a standalone graph.

    Vertex ``i`` of the result is the ``i``-th smallest member of ``x``; names
    carry over.  The result may be disconnected.
    """
    verts = members(x)
    pos = {v: i for i, v in enumerate(verts)}
    edges = [(pos[a], pos[b]) for i, a in enumerate(verts) for b in verts[i + 1:] if not g.has_edge(a, b)]
    return Graph(len(verts), edges, [g.names[v] for v in verts])


def complement_components(g: Graph, x: VertexSet) -> list[VertexSet]:
    """Components of the complement of ``G[x]`` (as masks of original ids)."""
    cadj = complement_adjacency(g, x)
    out = []
    rest = x
    while rest:
        start = rest & -rest
        comp = frontier = start
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= cadj[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def two_colouring(g: Graph, x: VertexSet) -> dict[int, int] | None:
    """Proper 2-colouring of the complement of ``G[x]``, or ``None``.

    Each complement component is coloured by BFS from its smallest member,
    which receives colour 0.
    """
    cadj = complement_adjacency(g, x)
    colour: dict[int, int] = {}
    for v in iter_members(x):
        if v in colour:
            continue
        colour[v] = 0
        queue = deque([v])
        while queue:
            a = queue.popleft()
            for b in iter_members(cadj[a]):
                if b not in colour:
                    colour[b] = 1 - colour[a]
                    queue.append(b)
                elif colour[b] == colour[a]:
                    return None
    return colour


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adj
    while queue:
        a = queue.popleft()
        for b in iter_members(adj[a]):
            if dist[b] < 0:
                dist[b] = dist[a] + 1
                queue.append(b)
    return dist


def distance(g: Graph, u: int, v: int) -> int:
    g.check_vertex(u)
    g.check_vertex(v)
    return g.distance_matrix[u][v]


def shortest_path(g: Graph, u: int, v: int, within: VertexSet | None = None) -> list[int]:
    """Lexicographically smallest shortest ``u``-``v`` path.

    With ``within`` the path is restricted to ``G[within]`` (both endpoints
    must belong to it).  Raises ``GraphError`` when no path exists.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if within is None:
        dist = g.distance_matrix[v]
    else:
        dist = [-1] * g.n
        dist[v] = 0
        queue = deque([v])
        while queue:
            a = queue.popleft()
            for b in iter_members(g.adj[a] & within):
                if dist[b] < 0:
                    dist[b] = dist[a] + 1
                    queue.append(b)
    if dist[u] < 0:
        raise GraphError(f"no path between {u} and {v}")
    path = [u]
    a = u
    while a != v:
        a = next(b for b in iter_members(g.adj[a]) if dist[b] == dist[a] - 1
                 and (within is None or within >> b & 1))
        path.append(a)
    return path


def diameter(g: Graph) -> int:
    return max(max(row) for row in g.distance_matrix)


def clique_number(g: Graph) -> int:
    """Exact clique number by branch and bound over Bron-Kerbosch with pivoting.

    Exponential in the worst case; intended for desk-scale graphs.
    """
    if g.n == 0:
        return 0
    adj = g.adj
    best = 1

    def expand(size: int, cand: VertexSet, excl: VertexSet) -> None:
        nonlocal best
        if not cand:
            if not excl and size > best:
                best = size
            return
        if size + popcount(cand) <= best:
            return
        # pivot maximising |cand ∩ N(p)| over cand ∪ excl
        pivot_nbrs = max((adj[p] for p in iter_members(cand | excl)), key=lambda nb: popcount(cand & nb))
        for w in iter_members(cand & ~pivot_nbrs):
            expand(size + 1, cand & adj[w], excl & adj[w])
            cand &= ~(1 << w)
            excl |= 1 << w
            if size + popcount(cand) <= best:
                return

    expand(0, g.vertices, 0)
    return best


def omega_tilde(g: Graph) -> int:
    return max(clique_number(g), 3)


# -- named fixtures ----------------------------------------------------------


def path_graph(n: int, one_based: bool = True) -> Graph:
    names = [str(i + 1 if one_based else i) for i in range(n)]
    return Graph.from_edges([(i, i + 1) for i in range(n - 1)], n=n, names=names)


def cycle_graph(n: int, one_based: bool = True) -> Graph:
    names = [str(i + 1 if one_based else i) for i in range(n)]
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)], n=n, names=names)


def complete_graph(n: int, names: Sequence[str] | None = None) -> Graph:
    return Graph.from_edges([(i, j) for i in range(n) for j in range(i + 1, n)], n=n, names=names)


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the centre at vertex 0."""
    return Graph.from_edges([(0, i) for i in range(1, leaves + 1)], n=leaves + 1)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(outer + spokes + inner, n=10)
