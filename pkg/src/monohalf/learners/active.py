"""Active learning of a halfspace from membership queries."""

from __future__ import annotations

from ..convexity import hull_set_greedy
from ..graph import Graph, VertexSet, complement_components, iter_members, lowest, shortest_path, two_colouring
from ..shadows import ShadowTable, is_halfspace, triangle_set
from .transcript import LearnerTranscript


class OracleNotRealizableError(ValueError):
    def __init__(self, message: str, vertex: int | None = None):
        self.vertex = vertex
        super().__init__(message)


class QueryOracle:
    """Answers ``1`` for members of the hidden target, ``0`` otherwise; counts calls."""

    def __init__(self, target: VertexSet):
        self.target = target
        self.calls = 0

    def answer(self, v: int) -> int:
        self.calls += 1
        return self.target >> v & 1


class _Session:
    def __init__(self, oracle, transcript: LearnerTranscript):
        self.oracle = oracle
        self.transcript = transcript
        self.known: dict[int, int] = {}

    def label(self, v: int) -> int:
        if v not in self.known:
            a = int(self.oracle.answer(v))
            self.known[v] = a
            self.transcript.record_query(v, a)
        return self.known[v]


def active_learn(g: Graph, oracle, transcript: LearnerTranscript | None = None,
                 hull_set: VertexSet | None = None, shadows: ShadowTable | None = None) -> VertexSet:
    """Recover the oracle's halfspace.

    Queries a hull set; if it is monochromatic the answer is ``V`` or ``∅``.
    Otherwise binary search on a shortest path between two differently
    labelled hull vertices finds a cut edge ``(u, v)``, one label per
    complement component of ``G[△_uv]`` fixes ``H ∩ △_uv`` through the
    bipartition, and ``H`` is the union of the shadows ``z/v`` over it.
    No vertex is queried twice.
    """
    transcript = transcript if transcript is not None else LearnerTranscript()
    session = _Session(oracle, transcript)
    shadows = shadows or ShadowTable(g)
    if hull_set is None:
        hull_set = hull_set_greedy(g)

    for s in iter_members(hull_set):
        session.label(s)
    labels = {session.known[s] for s in iter_members(hull_set)}
    if labels == {1}:
        return _verified(g, session, g.vertices)
    if labels == {0}:
        return _verified(g, session, 0)

    p = min(s for s in iter_members(hull_set) if session.known[s] == 1)
    q = min(s for s in iter_members(hull_set) if session.known[s] == 0)
    path = shortest_path(g, p, q)
    lo, hi = 0, len(path) - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if session.label(path[mid]):
            lo = mid
        else:
            hi = mid
    u, v = path[lo], path[hi]

    tri = triangle_set(g, u, v)
    colour = two_colouring(g, tri)
    if colour is None:
        raise OracleNotRealizableError("complement of the triangle set is not bipartite", u)
    inside = 0
    for comp in complement_components(g, tri):
        known = [x for x in iter_members(comp) if x in session.known]
        rep = known[0] if known else lowest(comp)
        rep_label = session.label(rep)
        for x in iter_members(comp):
            lab = rep_label if colour[x] == colour[rep] else 1 - rep_label
            if x in session.known and session.known[x] != lab:
                raise OracleNotRealizableError("answers contradict the bipartition", x)
            if lab:
                inside |= 1 << x
    return _verified(g, session, shadows.union(inside, v))


def _verified(g: Graph, session: _Session, h: VertexSet) -> VertexSet:
    if not is_halfspace(g, h):
        raise OracleNotRealizableError("assembled set is not a halfspace")
    for x, a in session.known.items():
        if (h >> x & 1) != a:
            raise OracleNotRealizableError(f"answer for vertex {x} contradicts the assembled halfspace", x)
    return h
