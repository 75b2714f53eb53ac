import random
from itertools import combinations

import pytest

from conftest import S
from monohalf.convexity import hull_set_greedy, is_mconvex, mhull, simplicial_vertices
from monohalf.graph import Graph, iter_members, popcount
from monohalf.oracles import hull_bf, mconvex_bf, min_hullset_bf


def test_convex_examples(fx):
    p4, c5 = fx["P4"], fx["C5"]
    assert is_mconvex(p4, S(p4, 1, 2))
    assert not is_mconvex(c5, S(c5, 3, 4, 5))
    for g in fx.values():
        assert is_mconvex(g, g.vertices) and is_mconvex(g, 0)
        assert all(is_mconvex(g, 1 << v) for v in range(g.n))


def test_hull_examples(fx):
    c5, k4 = fx["C5"], fx["K4"]
    assert mhull(c5, S(c5, 1, 3)) == c5.vertices
    assert mhull(c5, 0) == 0
    assert mhull(k4, 0b0011) == 0b0011


def test_hull_set_examples(fx):
    p4 = fx["P4"]
    assert hull_set_greedy(p4) == S(p4, 1, 4)
    for k in (3, 4):
        g = fx["K4"] if k == 4 else fx["K3"]
        assert hull_set_greedy(g) == g.vertices
    c5 = fx["C5"]
    assert popcount(hull_set_greedy(c5)) == 2


def test_simplicial(fx):
    assert simplicial_vertices(fx["P4"]) == S(fx["P4"], 1, 4)
    assert simplicial_vertices(fx["C5"]) == 0


def test_oracle_equivalence(small_corpus):
    for g in small_corpus:
        for k in range(5):
            for combo in combinations(range(g.n), k):
                x = sum(1 << v for v in combo)
                assert is_mconvex(g, x) == mconvex_bf(g, x)
                assert mhull(g, x) == hull_bf(g, x)


def test_hull_laws(small_corpus):
    rng = random.Random(3)
    for g in small_corpus:
        for _ in range(15):
            x = rng.getrandbits(g.n)
            y = x | rng.getrandbits(g.n)
            hx = mhull(g, x)
            assert x & ~hx == 0
            assert mhull(g, hx) == hx
            assert hx & ~mhull(g, y) == 0
            assert is_mconvex(g, hx)


def test_hull_set_spans_and_gap(small_corpus):
    for g in small_corpus:
        s = hull_set_greedy(g)
        assert mhull(g, s) == g.vertices
        if g.n <= 10:
            assert popcount(s) >= popcount(min_hullset_bf(g))


@pytest.mark.parametrize("seed", range(8))
def test_hull_set_exact_on_trees(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 10)
    g = Graph(n, [(rng.randrange(i), i) for i in range(1, n)])
    s = hull_set_greedy(g)
    assert s == simplicial_vertices(g)
    assert popcount(s) == popcount(min_hullset_bf(g))
    assert all(g.degree(v) == 1 for v in iter_members(s))
