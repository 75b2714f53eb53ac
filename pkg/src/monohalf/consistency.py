"""Consistency checking for monophonic halfspaces via 2-SAT.

For an oriented edge ``(u, v)`` the constraint formula is satisfied exactly
by the halfspaces ``H`` with ``u ∈ H``, ``v ∉ H``.  Conjoining the sample
labels as unit clauses and trying every orientation of every edge decides
whether a consistent halfspace exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .convexity import mhull
from .graph import Graph, GraphError, VertexSet, iter_members, members
from .twosat import Clause, Formula2, implication_graph, solve_graph

FAMILIES = ("tri", "conv", "T", "u3", "v3", "u4", "v4", "Au", "Av")

Sample = Iterable[tuple[int, int]]


class InconsistentLabelsError(ValueError):
    pass


@dataclass(frozen=True)
class CandidateSets:
    tri_minus: VertexSet
    square: VertexSet
    a_set: VertexSet
    a_u: VertexSet
    a_v: VertexSet
    t_components: tuple[VertexSet, ...]


def candidate_sets(g: Graph, u: int, v: int) -> CandidateSets:
    g.check_vertex(u)
    g.check_vertex(v)
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    adj = g.adj
    tri_minus = adj[u] & adj[v]
    square = 1 << u | 1 << v
    for a in iter_members(adj[u] & ~(1 << v)):
        bs = adj[a] & adj[v] & ~(1 << u) & ~(1 << a)
        if bs:
            square |= 1 << a | bs
    a_set = square & ~tri_minus
    du, dv = g.distance_matrix[u], g.distance_matrix[v]
    a_u = 0
    for x in iter_members(a_set):
        if du[x] < dv[x]:
            a_u |= 1 << x
    a_v = a_set & ~a_u

    # T: G with the edges inside G[square ∪ tri_minus] removed
    w = square | tri_minus
    t_adj = [adj[x] & ~w if w >> x & 1 else adj[x] for x in range(g.n)]
    t_comps = []
    rest = g.vertices
    while rest:
        start = rest & -rest
        comp = frontier = start
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= t_adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~comp
            comp |= frontier
        t_comps.append(comp)
        rest &= ~comp
    return CandidateSets(tri_minus, square, a_set, a_u, a_v, tuple(t_comps))


def _induced_paths_from(g: Graph, sources: VertexSet, targets: VertexSet, k: int):
    """Induced paths on ``k`` vertices from ``sources`` to ``targets``.

    Plain nested adjacency scans; yields vertex tuples ``(x, ..., z)``.
    """
    adj = g.adj
    for x in iter_members(sources):
        for y in iter_members(adj[x]):
            if k == 3:
                for z in iter_members(adj[y] & targets & ~adj[x] & ~(1 << x)):
                    yield (x, y, z)
                continue
            for y2 in iter_members(adj[y] & ~adj[x] & ~(1 << x)):
                for z in iter_members(adj[y2] & targets & ~adj[x] & ~adj[y] & ~(1 << x) & ~(1 << y)):
                    yield (x, y, y2, z)


def constraint_families(g: Graph, u: int, v: int,
                        sets: CandidateSets | None = None) -> dict[str, list[Clause]]:
    """The nine clause families for orientation ``(u, v)``, keyed by name.

    ``T`` equivalences are tied to one representative per component, so the
    family is linear in ``n``.  ``Au``/``Av`` skip ``z = x``: a border vertex
    is never a chord of itself.
    """
    cs = sets or candidate_sets(g, u, v)
    adj = g.adj
    tm = cs.tri_minus
    fam: dict[str, list[Clause]] = {name: [] for name in FAMILIES}

    for x in iter_members(tm):
        for y in iter_members(tm & ~adj[x] & ~((1 << (x + 1)) - 1)):
            fam["tri"].append(((x, True), (y, True)))
            fam["tri"].append(((x, False), (y, False)))

    hull_u = mhull(g, cs.a_u)
    hull_v = mhull(g, cs.a_v)
    fam["conv"].extend(((x, True),) for x in iter_members(hull_u))
    fam["conv"].extend(((x, False),) for x in iter_members(hull_v))

    for comp in cs.t_components:
        rep, *others = members(comp)
        for x in others:
            fam["T"].append(((x, True), (rep, False)))
            fam["T"].append(((x, False), (rep, True)))

    for x, y, z in _induced_paths_from(g, cs.a_u, tm, 3):
        fam["u3"].append(((y, True), (z, False)))
    for x, y, z in _induced_paths_from(g, cs.a_v, tm, 3):
        fam["v3"].append(((y, False), (z, True)))
    for x, w, y, z in _induced_paths_from(g, cs.a_u, tm, 4):
        fam["u4"].append(((y, True), (z, False)))
    for x, w, y, z in _induced_paths_from(g, cs.a_v, tm, 4):
        fam["v4"].append(((y, False), (z, True)))

    for x in iter_members(hull_u):
        far = tm & ~adj[x] & ~(1 << x)
        for y in iter_members(adj[x]):
            for z in iter_members(far):
                fam["Au"].append(((y, True), (z, False)))
    for x in iter_members(hull_v):
        far = tm & ~adj[x] & ~(1 << x)
        for y in iter_members(adj[x]):
            for z in iter_members(far):
                fam["Av"].append(((y, False), (z, True)))

    for name in fam:
        fam[name] = list(dict.fromkeys(fam[name]))
    return fam


def sample_masks(g: Graph, sample: Sample) -> tuple[VertexSet, VertexSet]:
    """Positive and negative vertex masks of a labelled sample."""
    pos = neg = 0
    for v, label in sample:
        g.check_vertex(v)
        if label not in (0, 1):
            raise ValueError(f"label must be 0 or 1, got {label!r}")
        if label:
            pos |= 1 << v
        else:
            neg |= 1 << v
    return pos, neg


def sample_clauses(pos: VertexSet, neg: VertexSet) -> list[Clause]:
    return ([((x, False),) for x in iter_members(neg)]
            + [((x, True),) for x in iter_members(pos)])


def build_formula(g: Graph, u: int, v: int, sample: Sample = ()) -> Formula2:
    pos, neg = sample_masks(g, sample)
    f = Formula2(g.n)
    for clauses in constraint_families(g, u, v).values():
        f.extend(clauses)
    f.extend(sample_clauses(pos, neg))
    return f


class ConsistencyChecker:
    """``mh-check`` with per-orientation formulas cached across calls.

    ``calls`` counts :meth:`check` invocations and ``solves`` the 2-SAT
    instances actually solved; both are instrumentation for listing delay.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.calls = 0
        self.solves = 0
        self._orientations: list[tuple[int, int]] = []
        for a, b in g.edges:
            self._orientations += [(a, b), (b, a)]
        self._base: dict[tuple[int, int], tuple[list[Clause], VertexSet, VertexSet]] = {}

    @property
    def orientations(self) -> list[tuple[int, int]]:
        return list(self._orientations)

    def _base_for(self, u: int, v: int):
        key = (u, v)
        base = self._base.get(key)
        if base is None:
            fam = constraint_families(self.g, u, v)
            clauses = [c for name in FAMILIES for c in fam[name]]
            forced_pos = forced_neg = 0
            for (x, pol), in (c for c in fam["conv"]):
                if pol:
                    forced_pos |= 1 << x
                else:
                    forced_neg |= 1 << x
            base = self._base[key] = (clauses, forced_pos, forced_neg)
        return base

    def solve_orientation(self, u: int, v: int, pos: VertexSet = 0, neg: VertexSet = 0) -> VertexSet | None:
        clauses, forced_pos, forced_neg = self._base_for(u, v)
        if pos & forced_neg or neg & forced_pos:
            return None
        self.solves += 1
        succ = implication_graph(self.g.n, clauses + sample_clauses(pos, neg))
        return solve_graph(self.g.n, succ)

    def check(self, pos: VertexSet, neg: VertexSet) -> VertexSet | None:
        """A halfspace containing ``pos`` and avoiding ``neg``, or ``None``."""
        self.calls += 1
        if pos & neg:
            return None
        if not neg:
            return self.g.vertices
        if not pos:
            return 0
        for u, v in self._orientations:
            if neg >> u & 1 or pos >> v & 1:
                continue
            h = self.solve_orientation(u, v, pos, neg)
            if h is not None:
                return h
        return None


def mh_check(g: Graph, sample: Sample, checker: ConsistencyChecker | None = None) -> VertexSet | None:
    """A halfspace consistent with ``sample`` (pairs ``(vertex, label)``), or ``None``.

    Trivial halfspaces are tried first (an all-positive sample gets ``V``,
    an all-negative one ``∅``); otherwise both orientations of every edge are
    tried in edge order and the first solution is returned.  A vertex with
    both labels makes the sample inconsistent.
    """
    pos, neg = sample_masks(g, sample)
    checker = checker or ConsistencyChecker(g)
    return checker.check(pos, neg)


def has_nontrivial_halfspace(g: Graph) -> tuple[bool, VertexSet | None]:
    """Decide whether ``V`` splits into two nonempty m-convex parts.

    Any such split has a cut edge, so sampling ``{u: 1, v: 0}`` over the
    edges ``{u, v}`` is exhaustive.
    """
    checker = ConsistencyChecker(g)
    for u, v in g.edges:
        h = checker.check(1 << u, 1 << v)
        if h is not None:
            return True, h
    return False, None
