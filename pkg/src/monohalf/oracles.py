"""Brute-force reference implementations.

Each function is a literal transcription of a definition, with no shortcuts
shared with the fast paths: intervals come from exhaustive induced-path
enumeration, convexity from interval closure, halfspaces from filtering all
``2^n`` subsets.  Only usable on small graphs; size guards raise
``OracleSizeError``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from .graph import Graph, VertexSet, iter_members, members, popcount

HALFSPACE_LIMIT = 20
VC_LIMIT = 12


class OracleSizeError(ValueError):
    pass


def _guard(g: Graph, limit: int, what: str) -> None:
    if g.n > limit:
        raise OracleSizeError(f"{what} refuses graphs with more than {limit} vertices (n={g.n})")


def _extend_induced(g: Graph, path: list[int], pathmask: int):
    """Yield every induced path extending ``path`` (including itself)."""
    yield path
    last = path[-1]
    # earlier vertices other than the last one must not touch the new vertex
    earlier = pathmask & ~(1 << last)
    for w in iter_members(g.adj[last] & ~pathmask):
        if g.adj[w] & earlier:
            continue
        path.append(w)
        yield from _extend_induced(g, path, pathmask | 1 << w)
        path.pop()


def induced_paths(g: Graph, u: int, v: int) -> list[list[int]]:
    """All induced ``u``-``v`` paths by backtracking (empty for ``u == v``)."""
    if u == v:
        return []
    out = []
    for p in _extend_induced(g, [u], 1 << u):
        if p[-1] == v:
            out.append(list(p))
    return out


@lru_cache(maxsize=64)
def all_intervals_bf(g: Graph) -> tuple[tuple[VertexSet, ...], ...]:
    """``I(u, v)`` for all pairs, via one induced-path sweep per source."""
    table = [[0] * g.n for _ in range(g.n)]
    for u in range(g.n):
        row = table[u]
        for p in _extend_induced(g, [u], 1 << u):
            if len(p) > 1:
                mask = 0
                for w in p:
                    mask |= 1 << w
                row[p[-1]] |= mask
    return tuple(tuple(r) for r in table)


def interval_bf(g: Graph, u: int, v: int) -> VertexSet:
    """Vertices on some induced ``u``-``v`` path; empty when ``u == v``."""
    return all_intervals_bf(g)[u][v]


def shadow_bf(g: Graph, u: int, v: int) -> VertexSet:
    """``u/v = {z : u ∈ I(z, v)}``."""
    iv = all_intervals_bf(g)
    out = 0
    for z in range(g.n):
        if iv[z][v] >> u & 1:
            out |= 1 << z
    return out


def mconvex_bf(g: Graph, x: VertexSet) -> bool:
    iv = all_intervals_bf(g)
    for a, b in combinations(members(x), 2):
        if iv[a][b] & ~x:
            return False
    return True


def hull_bf(g: Graph, x: VertexSet) -> VertexSet:
    """Interval-closure fixpoint."""
    iv = all_intervals_bf(g)
    hull = x
    while True:
        grown = hull
        for a, b in combinations(members(hull), 2):
            grown |= iv[a][b]
        if grown == hull:
            return hull
        hull = grown


def halfspaces_bf(g: Graph) -> list[VertexSet]:
    """All subsets ``H`` with ``H`` and ``V - H`` m-convex, in mask order."""
    _guard(g, HALFSPACE_LIMIT, "halfspaces_bf")
    full = g.vertices
    return [h for h in range(full + 1) if mconvex_bf(g, h) and mconvex_bf(g, full & ~h)]


def min_hullset_bf(g: Graph) -> VertexSet:
    """Smallest (then lexicographically first) set whose hull is ``V``."""
    _guard(g, HALFSPACE_LIMIT, "min_hullset_bf")
    full = g.vertices
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            s = sum(1 << v for v in combo)
            if hull_bf(g, s) == full:
                return s
    raise AssertionError("V is always a hull set")


def vc_dim_bf(g: Graph) -> int:
    """VC dimension of the halfspace class by shattering checks."""
    _guard(g, VC_LIMIT, "vc_dim_bf")
    hs = halfspaces_bf(g)
    best = 0
    for k in range(1, g.n + 1):
        found = False
        for combo in combinations(range(g.n), k):
            s = sum(1 << v for v in combo)
            if len({h & s for h in hs}) == 1 << k:
                found = True
                break
        if not found:
            break
        best = k
    return best


def monophonic_diameter_bf(g: Graph) -> int:
    """Maximum number of edges on an induced path."""
    best = 0
    for u in range(g.n):
        for p in _extend_induced(g, [u], 1 << u):
            best = max(best, len(p) - 1)
    return best


def four_cycles_bf(g: Graph, u: int, v: int) -> VertexSet:
    """Vertices on a (not necessarily induced) 4-cycle through edge ``uv``."""
    out = 1 << u | 1 << v
    others = [w for w in range(g.n) if w not in (u, v)]
    for a, b in permutations(others, 2):
        if g.has_edge(u, a) and g.has_edge(a, b) and g.has_edge(b, v):
            out |= 1 << a | 1 << b
    return out


def constraint_semantics_bf(g: Graph, u: int, v: int) -> list[VertexSet]:
    """Halfspaces having ``(u, v)`` as an oriented cut edge (``u`` inside)."""
    return [h for h in halfspaces_bf(g) if h >> u & 1 and not h >> v & 1]


def consistent_bf(g: Graph, pos: VertexSet, neg: VertexSet) -> list[VertexSet]:
    """Brute-force version space of a labelled sample."""
    return [h for h in halfspaces_bf(g) if pos & ~h == 0 and neg & h == 0]


def clique_number_bf(g: Graph) -> int:
    best = 0
    adjm = g.adj
    for s in range(1, 1 << g.n):
        k = popcount(s)
        if k <= best:
            continue
        if all(s & ~(1 << v) & ~adjm[v] == 0 for v in iter_members(s)):
            best = k
    return best
