"""Acceptance suite: twelve corpus-wide criteria, one PASS/FAIL line each.

Run alone with ``pytest tests/test_acceptance.py -s`` or
``python tests/test_acceptance.py``.
"""

import math
import random
import sys
from fractions import Fraction

import pytest

from monohalf.consistency import FAMILIES, ConsistencyChecker, constraint_families, has_nontrivial_halfspace, mh_check
from monohalf.convexity import hull_set_greedy, is_mconvex, mhull
from monohalf.corpus import acceptance_corpus
from monohalf.enumeration import canonical_key, count_bound, list_all_fpt
from monohalf.graph import clique_number, diameter, omega_tilde, popcount
from monohalf.learners import (HalvingLearner, LearnerTranscript, QueryOracle, WinnowLearner, active_learn,
                               halving_mistake_bound, pac_experiment, random_stream, shadow_features,
                               winnow_mistake_bound)
from monohalf.oracles import halfspaces_bf, hull_bf, shadow_bf, vc_dim_bf
from monohalf.shadows import (ShadowTable, complement_component_count, cutset, edge_shadow, is_halfspace,
                              shadow_reconstruct, sparse_shadow_cover)
from monohalf.twosat import Formula2, clause_holds, solve

pytestmark = pytest.mark.acceptance

SEED = 20240617


class Case:
    def __init__(self, entry):
        self.id = entry.graph_id
        self.g = entry.graph
        self.hs = sorted(halfspaces_bf(self.g), key=canonical_key)
        self.hset = set(self.hs)


@pytest.fixture(scope="module")
def corpus():
    return [Case(e) for e in acceptance_corpus(300, SEED)]


def report(capsys, number, title, ok, detail=""):
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}" + (f" ({detail})" if detail else ""))
    assert ok, detail


def all_solutions(n, clauses):
    """Every model of a 2-CNF, by branching on variables with the solver as pruning."""
    out = []
    stack = [[]]
    while stack:
        units = stack.pop()
        f = Formula2(n)
        f.extend(clauses)
        f.extend(units)
        if solve(f) is None:
            continue
        fixed = {c[0][0] for c in units}
        free = [x for x in range(n) if x not in fixed]
        if not free:
            out.append(sum(1 << x for (x, pol), in units if pol))
            continue
        x = free[0]
        stack.append(units + [((x, False),)])
        stack.append(units + [((x, True),)])
    return out


def test_01_enumeration_exactness(corpus, capsys):
    bad = [c.id for c in corpus if set(list_all_fpt(c.g)) != c.hset]
    report(capsys, 1, "list_all_fpt == brute-force halfspaces", not bad,
           f"{len(corpus)} graphs, mismatches={bad[:5]}")


def test_02_consistency_checker(corpus, capsys):
    rng = random.Random(SEED + 2)
    runs = errors = 0
    for c in corpus:
        g = c.g
        checker = ConsistencyChecker(g)
        for _ in range(10):
            k = rng.randint(1, g.n)
            sample = [(rng.randrange(g.n), rng.randint(0, 1)) for _ in range(k)]
            pos = neg = 0
            for v, y in sample:
                if y:
                    pos |= 1 << v
                else:
                    neg |= 1 << v
            exists = not pos & neg and any(pos & ~h == 0 and neg & h == 0 for h in c.hs)
            h = mh_check(g, sample, checker)
            runs += 1
            if (h is not None) != exists:
                errors += 1
            elif h is not None and not (is_halfspace(g, h) and pos & ~h == 0 and neg & h == 0):
                errors += 1
    report(capsys, 2, "mh_check agrees with brute force", errors == 0, f"{runs} samples, errors={errors}")


def test_03_constraint_families(corpus, capsys):
    forward = {name: 0 for name in FAMILIES}
    backward = pairs = orientations = 0
    for c in corpus:
        g = c.g
        by_edge = {}
        for h in c.hs:
            for u, v in cutset(g, h):
                by_edge.setdefault((u, v), []).append(h)
        for a, b in g.edges:
            for u, v in ((a, b), (b, a)):
                fam = constraint_families(g, u, v)
                for h in by_edge.get((u, v), []):
                    pairs += 1
                    for name in FAMILIES:
                        if not all(clause_holds(cl, h) for cl in fam[name]):
                            forward[name] += 1
                clauses = [cl for name in FAMILIES for cl in fam[name]]
                orientations += 1
                got = sorted(all_solutions(g.n, clauses))
                if got != sorted(by_edge.get((u, v), [])):
                    backward += 1
    ok = not any(forward.values()) and backward == 0
    report(capsys, 3, "nine families forward, solutions backward", ok,
           f"{pairs} (H, cut edge) pairs, {orientations} orientations, forward={forward}, backward={backward}")


def test_04_shadow_formula(corpus, capsys):
    checked = bad = 0
    for c in corpus:
        for a, b in c.g.edges:
            for z, v in ((a, b), (b, a)):
                checked += 1
                bad += edge_shadow(c.g, z, v) != shadow_bf(c.g, z, v)
    report(capsys, 4, "edge_shadow == brute-force shadow", bad == 0, f"{checked} oriented edges, bad={bad}")


def test_05_hull(corpus, capsys):
    rng = random.Random(SEED + 5)
    pairs = bad = laws = 0
    while pairs < 1200:
        g = corpus[rng.randrange(len(corpus))].g
        x = 0
        for _ in range(rng.randint(1, 4)):
            x |= 1 << rng.randrange(g.n)
        y = x | 1 << rng.randrange(g.n)
        hx = mhull(g, x)
        pairs += 1
        bad += hx != hull_bf(g, x)
        if x & ~hx or mhull(g, hx) != hx or hx & ~mhull(g, y) or not is_mconvex(g, hx):
            laws += 1
    report(capsys, 5, "mhull == brute-force hull, hull laws", bad == 0 and laws == 0,
           f"{pairs} pairs, mismatches={bad}, law violations={laws}")


def test_06_counting_bound(corpus, capsys):
    worst = Fraction(0)
    worst_id = None
    violations = 0
    for c in corpus:
        bound = count_bound(c.g)
        ratio = Fraction(len(c.hs)) / bound
        violations += ratio > 1
        if ratio > worst:
            worst, worst_id = ratio, c.id
    report(capsys, 6, "|Hm| <= 4m 2^w / w + 2", violations == 0,
           f"violations={violations}, max ratio={float(worst):.3f} on {worst_id}")


def test_07_decomposition(corpus, capsys):
    recon = cover = comps = checked = 0
    for c in corpus:
        g = c.g
        w = clique_number(g)
        table = ShadowTable(g)
        for h in c.hs:
            if h in (0, g.vertices):
                continue
            for edge in cutset(g, h):
                checked += 1
                try:
                    shadow_reconstruct(g, h, edge, table)
                except AssertionError:
                    recon += 1
            try:
                cov = sparse_shadow_cover(g, h, table)
                cover += len(cov) > w
            except AssertionError:
                cover += 1
        for a, b in g.edges:
            comps += complement_component_count(g, a, b) > w
    ok = recon == cover == comps == 0
    report(capsys, 7, "shadow decompositions", ok,
           f"{checked} (H, cut edge) pairs, reconstruct={recon}, cover={cover}, components={comps}")


def test_08_active_learning(corpus, capsys):
    runs = wrong = over = 0
    for c in corpus:
        g = c.g
        hull_set = hull_set_greedy(g)
        table = ShadowTable(g)
        bound = popcount(hull_set) + math.ceil(math.log2(max(diameter(g), 1))) + clique_number(g)
        for h in c.hs:
            t = LearnerTranscript()
            out = active_learn(g, QueryOracle(h), t, hull_set=hull_set, shadows=table)
            runs += 1
            wrong += out != h
            over += t.queries > bound
    report(capsys, 8, "active learning exact within query bound", wrong == 0 and over == 0,
           f"{runs} runs, wrong={wrong}, over bound={over}")


def test_09_online_realizable(corpus, capsys):
    rng = random.Random(SEED + 9)
    runs = winnow_bad = halving_bad = 0
    for c in corpus:
        g = c.g
        wb = winnow_mistake_bound(g, clique_number(g))
        hb = halving_mistake_bound(len(c.hs))
        features = shadow_features(g)
        for h in c.hs:
            for _ in range(5):
                stream = random_stream(g, h, rng, passes=2)
                runs += 1
                winnow_bad += WinnowLearner(g, features=features).run(stream).mistakes > wb
                halving_bad += HalvingLearner(g, c.hs).run(stream).mistakes > hb
    report(capsys, 9, "Winnow1 and Halving mistake bounds", winnow_bad == halving_bad == 0,
           f"{runs} streams, winnow violations={winnow_bad}, halving violations={halving_bad}")


def test_10_pac(corpus, capsys):
    graphs = [c.g for c in corpus]
    hyps = {c.g: c.hs for c in corpus}
    res = pac_experiment(graphs, 0.2, 0.2, 500, random.Random(SEED + 10), hypotheses=hyps)
    report(capsys, 10, "PAC failure rate <= delta", res["failure_rate"] <= 0.2,
           f"{res['trials']} trials, failure rate={res['failure_rate']:.3f}, mean error={res['mean_error']:.4f}")


def test_11_vc_sanity(corpus, capsys):
    checked = bad = 0
    for c in corpus:
        if c.g.n > 9:
            continue
        checked += 1
        bad += vc_dim_bf(c.g) > omega_tilde(c.g)
    report(capsys, 11, "VC dimension <= max(w, 3)", bad == 0, f"{checked} graphs, violations={bad}")


def test_12_two_partition(corpus, capsys):
    bad = []
    named = {}
    for c in corpus:
        ok, witness = has_nontrivial_halfspace(c.g)
        truth = len(c.hs) > 2
        if ok != truth or (ok and (witness in (0, c.g.vertices) or witness not in c.hset)):
            bad.append(c.id)
        named[c.id] = ok
    fixed = named["P4"] and named["K3"] and not named["C5"]
    report(capsys, 12, "has_nontrivial_halfspace agrees with brute force", not bad and fixed,
           f"{len(corpus)} graphs, mismatches={bad[:5]}, P4/K3/C5={named['P4']}/{named['K3']}/{named['C5']}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
