"""Listing monophonic halfspaces.

``list_version_space`` walks a binary search tree over vertex labels and
prunes with the consistency checker (polynomial delay).  ``list_all_fpt``
enumerates the whole class by guessing a cut edge and labelling the
complement components of ``G[△_uv]`` (time ``2^ω poly(n)``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .consistency import ConsistencyChecker, Sample, sample_masks
from .convexity import is_mconvex
from .graph import Graph, VertexSet, clique_number, complement_components, iter_members, members, two_colouring
from .shadows import ShadowTable, cutset, triangle_set


@dataclass
class ListingStats:
    emitted: int = 0
    checks: int = 0
    max_delay_checks: int = 0
    _since_last: int = 0

    def tick(self, n: int = 1) -> None:
        self.checks += n
        self._since_last += n

    def emit(self) -> None:
        self.emitted += 1
        self.max_delay_checks = max(self.max_delay_checks, self._since_last)
        self._since_last = 0


def canonical_key(h: VertexSet) -> list[int]:
    """Sort key for halfspaces: the sorted member list, compared lexicographically."""
    return members(h)


def list_version_space(g: Graph, sample: Sample = (), visitor: Callable[[VertexSet], object] | None = None,
                       stats: ListingStats | None = None,
                       checker: ConsistencyChecker | None = None) -> Iterator[VertexSet]:
    """Yield every halfspace consistent with ``sample`` exactly once.

    Branches on the lowest unlabelled vertex, positive branch first.  Each
    checker call returns a witness halfspace, which certifies the branch it
    agrees with, so every tree node costs one check.  If ``visitor`` returns
    ``False`` the listing stops.
    """
    pos, neg = sample_masks(g, sample)
    checker = checker or ConsistencyChecker(g)
    stats = stats if stats is not None else ListingStats()
    full = g.vertices

    stats.tick()
    root = checker.check(pos, neg)
    if root is None:
        return

    # explicit stack of (pos, neg, witness)
    stack = [(pos, neg, root)]
    while stack:
        p, q, w = stack.pop()
        labelled = p | q
        if labelled == full:
            stats.emit()
            yield p
            if visitor is not None and visitor(p) is False:
                return
            continue
        x = (~labelled & full & -(~labelled & full)).bit_length() - 1
        bx = 1 << x
        if w & bx:
            plus = w
            stats.tick()
            minus = checker.check(p, q | bx)
        else:
            minus = w
            stats.tick()
            plus = checker.check(p | bx, q)
        # push negative first so the positive branch is explored first
        if minus is not None:
            stack.append((p, q | bx, minus))
        if plus is not None:
            stack.append((p | bx, q, plus))


def list_all_fpt(g: Graph, shadows: ShadowTable | None = None) -> Iterator[VertexSet]:
    """Yield every halfspace of ``g`` exactly once.

    ``∅`` and ``V`` first; then, per edge in order and for both orientations
    ``(u, v)``, when the complement of ``G[△_uv]`` is bipartite each of its
    components contributes one colour class to the anchor set ``S``, and
    ``X = ⋃_{z∈S} z/v`` is emitted if it is a halfspace whose cut avoids
    already-processed edges.  A hash set guards against repeats regardless.
    """
    shadows = shadows or ShadowTable(g)
    full = g.vertices
    emitted: set[VertexSet] = set()
    for h in (0, full):
        if h not in emitted:
            emitted.add(h)
            yield h
    processed: set[tuple[int, int]] = set()
    for a, b in g.edges:
        tri = triangle_set(g, a, b)
        colour = two_colouring(g, tri)
        if colour is None:
            continue
        comps = complement_components(g, tri)
        sides = []
        for comp in comps:
            rep_side = 0
            for x in iter_members(comp):
                if colour[x] == 0:
                    rep_side |= 1 << x
            sides.append((rep_side, comp & ~rep_side))
        for u, v in ((a, b), (b, a)):
            for choice in range(1 << len(sides)):
                s = 0
                for i, (rep_side, other) in enumerate(sides):
                    s |= rep_side if choice >> i & 1 else other
                if s >> v & 1:
                    continue
                x = shadows.union(s, v)
                if x in emitted:
                    continue
                if not (is_mconvex(g, x) and is_mconvex(g, full & ~x)):
                    continue
                if any(tuple(sorted(e)) in processed for e in cutset(g, x)):
                    continue
                emitted.add(x)
                yield x
        processed.add((a, b))


def count_bound(g: Graph) -> Fraction:
    """``4 m 2^ω / ω + 2``."""
    w = clique_number(g)
    return Fraction(4 * g.m * 2 ** w, w) + 2


def all_halfspaces(g: Graph) -> list[VertexSet]:
    """Every halfspace, sorted canonically."""
    return sorted(list_all_fpt(g), key=canonical_key)
