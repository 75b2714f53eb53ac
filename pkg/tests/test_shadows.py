import pytest

from conftest import S
from monohalf.enumeration import list_all_fpt
from monohalf.graph import GraphError, clique_number, complete_graph, path_graph, star_graph
from monohalf.oracles import halfspaces_bf, mconvex_bf, shadow_bf
from monohalf.shadows import (InternalConsistencyError, ShadowTable, border, complement_component_count, cutset,
                              edge_shadow, is_halfspace, shadow_reconstruct, sparse_shadow_cover,
                              triangle_set)


def test_shadow_examples(fx):
    p5 = fx["P5"]
    assert edge_shadow(p5, p5.vertex("2"), p5.vertex("3")) == S(p5, 1, 2)
    k3 = fx["K3"]
    assert edge_shadow(k3, k3.vertex("a"), k3.vertex("b")) == S(k3, "a")
    star = star_graph(3)
    assert edge_shadow(star, 1, 0) == 0b0010


def test_shadow_needs_edge(fx):
    with pytest.raises(GraphError):
        edge_shadow(fx["P4"], 0, 2)


def test_shadow_matches_oracle(small_corpus):
    for g in small_corpus:
        for a, b in g.edges:
            assert edge_shadow(g, a, b) == shadow_bf(g, a, b)
            assert edge_shadow(g, b, a) == shadow_bf(g, b, a)


def test_shadow_table_sequence(fx):
    g = fx["P4"]
    seq = ShadowTable(g).sequence()
    assert len(seq) == 2 * g.m
    assert [e for e, _ in seq[:g.m]] == list(g.edges)
    assert [e for e, _ in seq[g.m:]] == [(b, a) for a, b in g.edges]


def test_halfspace_examples(fx):
    p4, c5 = fx["P4"], fx["C5"]
    assert is_halfspace(p4, S(p4, 1, 2))
    assert not is_halfspace(c5, S(c5, 1, 2))
    assert is_halfspace(c5, 0) and is_halfspace(c5, c5.vertices)


def test_border_and_cut(fx):
    p4, k3 = fx["P4"], fx["K3"]
    assert border(p4, S(p4, 1, 2)) == S(p4, 2)
    assert cutset(p4, S(p4, 1, 2)) == [(1, 2)]
    assert border(p4, p4.vertices) == 0 and cutset(p4, p4.vertices) == []
    a = k3.vertex("a")
    assert border(k3, S(k3, "a")) == S(k3, "a")
    assert cutset(k3, S(k3, "a")) == [(a, k3.vertex("b")), (a, k3.vertex("c"))]


def test_triangle_set(fx):
    k4, p4, c5 = fx["K4"], fx["P4"], fx["C5"]
    assert triangle_set(k4, 0, 1) == k4.vertices
    assert triangle_set(p4, 1, 2) == S(p4, 2, 3)
    assert triangle_set(c5, 0, 1) == S(c5, 1, 2)


def test_halfspace_iff_both_sides_convex(small_corpus):
    for g in small_corpus:
        if g.n > 8:
            continue
        for h in range(1 << g.n):
            both = mconvex_bf(g, h) and mconvex_bf(g, g.vertices & ~h)
            assert is_halfspace(g, h) == both


def test_reconstruct_examples(fx):
    p4, k3 = fx["P4"], fx["K3"]
    assert shadow_reconstruct(p4, S(p4, 1, 2), (1, 2)) == S(p4, 1, 2)
    a, b = k3.vertex("a"), k3.vertex("b")
    assert shadow_reconstruct(k3, S(k3, "a"), (a, b)) == S(k3, "a")


def test_reconstruct_rejects_non_halfspace(fx):
    c5 = fx["C5"]
    with pytest.raises(InternalConsistencyError):
        shadow_reconstruct(c5, S(c5, 1, 2), (1, 2))
    with pytest.raises(GraphError):
        shadow_reconstruct(c5, S(c5, 1, 2), (0, 1))


def test_sparse_cover_examples(fx):
    p4 = fx["P4"]
    assert sparse_shadow_cover(p4, S(p4, 1, 2)) == [(1, 2)]
    k3 = fx["K3"]
    cover = sparse_shadow_cover(k3, S(k3, "a", "b"))
    assert 1 <= len(cover) <= 3
    with pytest.raises(GraphError):
        sparse_shadow_cover(p4, 0)


def test_shadow_decompositions(small_corpus):
    for g in small_corpus:
        w = clique_number(g)
        table = ShadowTable(g)
        for h in list_all_fpt(g, table):
            if h in (0, g.vertices):
                continue
            for u, v in cutset(g, h):
                assert shadow_reconstruct(g, h, (u, v), table) == h
            cover = sparse_shadow_cover(g, h, table)
            assert len(cover) <= w
        for a, b in g.edges:
            assert complement_component_count(g, a, b) <= w


def test_clique_every_subset_is_halfspace():
    k4 = complete_graph(4)
    assert len(halfspaces_bf(k4)) == 16
    assert all(is_halfspace(k4, h) for h in range(16))


def test_path_halfspaces_are_prefixes_and_suffixes():
    p = path_graph(6)
    hs = set(halfspaces_bf(p))
    assert hs == {(1 << k) - 1 for k in range(7)} | {p.vertices & ~((1 << k) - 1) for k in range(7)}
