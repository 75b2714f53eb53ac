"""Monophonic convexity: convexity test, hull, and a greedy hull set."""

from __future__ import annotations

from .graph import (Graph, VertexSet, components, is_clique, iter_members, popcount,
                    shortest_path)


def _violation(g: Graph, x: VertexSet):
    """Yield ``(component, a, b)`` for every component of ``G - x`` whose
    attachment set in ``x`` contains the nonadjacent pair ``a, b``.

    At most one pair is reported per component.
    """
    adj = g.adj
    for comp in components(g, g.vertices & ~x):
        attach = g.neighborhood(comp) & x
        rest = attach
        while rest:
            low = rest & -rest
            a = low.bit_length() - 1
            rest ^= low
            far = rest & ~adj[a]
            if far:
                yield comp, a, (far & -far).bit_length() - 1
                break


def is_mconvex(g: Graph, x: VertexSet) -> bool:
    """True iff ``x`` is monophonically convex.

    Uses the attachment criterion: for every component ``C`` of ``G - x``,
    ``N(C) ∩ x`` must be a clique.  A nonadjacent attachment pair ``a, b``
    together with a shortest ``a``-``b`` path through ``C`` is an induced
    path leaving ``x``, and conversely.
    """
    g.check_set(x)
    return next(_violation(g, x), None) is None


def mhull(g: Graph, x: VertexSet) -> VertexSet:
    """Smallest m-convex superset of ``x``.

    Repeatedly closes violations: the interior of a shortest path between two
    nonadjacent attachment vertices through an outside component lies on an
    induced path between hull members, hence inside the hull.
    """
    g.check_set(x)
    hull = x
    while True:
        added = 0
        for comp, a, b in list(_violation(g, hull)):
            path = shortest_path(g, a, b, within=comp | 1 << a | 1 << b)
            for w in path[1:-1]:
                added |= 1 << w
        if not added:
            return hull
        hull |= added


def simplicial_vertices(g: Graph) -> VertexSet:
    """Vertices whose neighbourhood is a clique."""
    out = 0
    for v in range(g.n):
        if is_clique(g, g.adj[v]):
            out |= 1 << v
    return out


def hull_set_greedy(g: Graph) -> VertexSet:
    """A hull set: all simplicial vertices, then greedy hull growth.

    Simplicial vertices are extreme (no induced path passes through them), so
    they belong to every hull set.  Remaining picks take the lowest vertex
    that maximises the size of the resulting hull.
    """
    full = g.vertices
    chosen = simplicial_vertices(g)
    hull = mhull(g, chosen)
    while hull != full:
        best_v, best_size = -1, -1
        for v in iter_members(full & ~hull):
            size = popcount(mhull(g, hull | 1 << v))
            if size > best_size:
                best_v, best_size = v, size
        chosen |= 1 << best_v
        hull = mhull(g, hull | 1 << best_v)
    return chosen
