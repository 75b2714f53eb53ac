from itertools import product

from hypothesis import given, settings, strategies as st

from monohalf.twosat import Formula2, clause_holds, solve, solve_assignment


def test_contradictory_units():
    f = Formula2(1)
    f.add((0, True))
    f.add((0, False))
    assert solve(f) is None


def test_empty_formula_all_false():
    assert solve_assignment(Formula2(3)) == [False, False, False]


def test_unit_propagation():
    f = Formula2(2)
    f.add((0, True), (1, True))
    f.add((0, False))
    assert solve_assignment(f) == [False, True]


def test_dimacs():
    f = Formula2(2)
    f.add((0, True), (1, False))
    out = f.to_dimacs(["x", "y"])
    assert "p cnf 2 1" in out
    assert "1 -2 0" in out


literal = st.tuples(st.integers(0, 14), st.booleans())


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 15), st.lists(st.tuples(literal, literal), max_size=30))
def test_solve_matches_truth_table(n, raw):
    clauses = [((a % n, sa), (b % n, sb)) for (a, sa), (b, sb) in raw]
    f = Formula2(n)
    f.extend(clauses)
    h = solve(f)
    sat = any(all(clause_holds(c, x) for c in clauses) for x in range(1 << n)) if n <= 12 else None
    if h is not None:
        assert all(clause_holds(c, h) for c in clauses)
    if sat is not None:
        assert (h is not None) == sat


def test_truth_table_exhaustive_small():
    lits = [(v, s) for v in range(3) for s in (True, False)]
    pairs = [(a, b) for a in lits for b in lits]
    for k, (c1, c2) in enumerate(product(pairs, pairs)):
        if k % 7:
            continue
        f = Formula2(3)
        f.extend([c1, c2])
        brute = any(f.satisfied_by(x) for x in range(8))
        assert (solve(f) is not None) == brute
