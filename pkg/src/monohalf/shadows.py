"""Edge shadows, halfspace recognition, borders and shadow decompositions.

A halfspace is represented by its positive side ``H`` (a vertex bitmask);
``H`` and its complement are distinct halfspaces.
"""

from __future__ import annotations

from .graph import (Graph, GraphError, VertexSet, complement_components, is_clique, iter_members,
                    reach)


class InternalConsistencyError(AssertionError):
    """A structural identity that must hold for every halfspace failed."""


def _check_edge(g: Graph, z: int, v: int) -> None:
    g.check_vertex(z)
    g.check_vertex(v)
    if not g.has_edge(z, v):
        raise GraphError(f"({z}, {v}) is not an edge")


def edge_shadow(g: Graph, z: int, v: int) -> VertexSet:
    """The m-shadow ``z/v`` of an edge ``{z, v}``.

    ``x`` is in the shadow iff ``N(v) - {z}`` does not separate ``z`` from
    ``x``.  The anchor ``v`` itself is excluded (the interval of a vertex
    with itself is empty); removing it does not change reachability since
    its only remaining neighbour is ``z``.
    """
    _check_edge(g, z, v)
    blocked = (g.adj[v] & ~(1 << z)) | 1 << v
    return reach(g, z, g.vertices & ~blocked)


class ShadowTable:
    """Per-graph memo of edge shadows keyed by oriented edge ``(z, v)``."""

    def __init__(self, g: Graph):
        self.g = g
        self._cache: dict[tuple[int, int], VertexSet] = {}

    def __call__(self, z: int, v: int) -> VertexSet:
        key = (z, v)
        s = self._cache.get(key)
        if s is None:
            s = self._cache[key] = edge_shadow(self.g, z, v)
        return s

    def sequence(self) -> list[tuple[tuple[int, int], VertexSet]]:
        """All ``2m`` shadows: ``u_i/v_i`` for every edge, then ``v_i/u_i``."""
        edges = self.g.edges
        oriented = [(u, v) for u, v in edges] + [(v, u) for u, v in edges]
        return [(e, self(*e)) for e in oriented]

    def union(self, anchors: VertexSet, v: int) -> VertexSet:
        out = 0
        for z in iter_members(anchors):
            out |= self(z, v)
        return out


def border(g: Graph, h: VertexSet) -> VertexSet:
    """Members of ``h`` with a neighbour outside ``h``."""
    out = 0
    outside = g.vertices & ~h
    adj = g.adj
    for v in iter_members(h):
        if adj[v] & outside:
            out |= 1 << v
    return out


def cutset(g: Graph, h: VertexSet) -> list[tuple[int, int]]:
    """Cut edges oriented inside-endpoint first, sorted."""
    outside = g.vertices & ~h
    return [(a, b) for a in iter_members(h) for b in iter_members(g.adj[a] & outside)]


def is_halfspace(g: Graph, h: VertexSet) -> bool:
    g.check_set(h)
    return is_clique(g, border(g, h)) and is_clique(g, border(g, g.vertices & ~h))


def triangle_set(g: Graph, u: int, v: int) -> VertexSet:
    """``(N(u) ∩ N(v)) ∪ {u, v}`` for an edge ``{u, v}``."""
    _check_edge(g, u, v)
    return (g.adj[u] & g.adj[v]) | 1 << u | 1 << v


def shadow_reconstruct(g: Graph, h: VertexSet, edge: tuple[int, int],
                       shadows: ShadowTable | None = None) -> VertexSet:
    """Rebuild ``h`` as the union of ``z/v`` over ``z ∈ h ∩ △_uv``.

    ``edge = (u, v)`` must be a cut edge with ``u ∈ h``.  Raises
    ``InternalConsistencyError`` when the union differs from ``h`` (which
    happens only if ``h`` is not a halfspace).
    """
    u, v = edge
    _check_edge(g, u, v)
    if not (h >> u & 1) or h >> v & 1:
        raise GraphError(f"({u}, {v}) is not an oriented cut edge of the set")
    shadows = shadows or ShadowTable(g)
    rebuilt = shadows.union(h & triangle_set(g, u, v), v)
    if rebuilt != h:
        raise InternalConsistencyError(f"shadow union over cut edge ({u}, {v}) does not reproduce the set")
    return rebuilt


def sparse_shadow_cover(g: Graph, h: VertexSet,
                        shadows: ShadowTable | None = None) -> list[tuple[int, int]]:
    """At most ``ω(G)`` cut edges whose shadows union to ``h``.

    All edges share the outside anchor ``v`` of the first cut edge; they are
    ``(z, v)`` for every border vertex ``z`` adjacent to ``v``, which is
    exactly ``h ∩ △_uv`` and a clique.
    """
    if h == 0 or h == g.vertices:
        raise GraphError("trivial halfspaces have no cut edges")
    cut = cutset(g, h)
    if not cut:
        raise GraphError("set has an empty cut")
    v = min(b for _, b in cut)
    cover = [(z, v) for z in iter_members(border(g, h) & g.adj[v])]
    shadows = shadows or ShadowTable(g)
    union = 0
    for z, _ in cover:
        union |= shadows(z, v)
    if union != h:
        raise InternalConsistencyError("sparse shadow cover does not reproduce the set")
    return cover


def complement_component_count(g: Graph, u: int, v: int) -> int:
    """Number of connected components of the complement of ``G[△_uv]``."""
    return len(complement_components(g, triangle_set(g, u, v)))

