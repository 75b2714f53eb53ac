"""A small 2-SAT solver over "vertex ∈ H" variables.

Literals are ``(vertex, polarity)`` pairs where ``polarity`` is ``True`` for
``vertex ∈ H`` and ``False`` for ``vertex ∉ H``.  Satisfiability is decided on
the implication graph with Tarjan's strongly connected components.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

Literal = tuple[int, bool]
Clause = tuple[Literal, ...]


@dataclass
class Formula2:
    """Conjunction of 1- and 2-literal clauses over ``n`` vertex variables."""

    n: int
    clauses: list[Clause] = field(default_factory=list)

    def add(self, *lits: Literal) -> None:
        if not 1 <= len(lits) <= 2:
            raise ValueError("2-SAT clauses have one or two literals")
        for v, _ in lits:
            if not 0 <= v < self.n:
                raise ValueError(f"variable {v} out of range")
        self.clauses.append(tuple(lits))

    def extend(self, clauses: Iterable[Clause]) -> None:
        for c in clauses:
            self.add(*c)

    def satisfied_by(self, h: int) -> bool:
        return all(clause_holds(c, h) for c in self.clauses)

    def to_dimacs(self, names: Sequence[str] | None = None) -> str:
        """DIMACS CNF text; variable ``i + 1`` stands for vertex ``i``."""
        lines = [f"p cnf {self.n} {len(self.clauses)}"]
        if names is not None:
            lines[:0] = [f"c {i + 1} {name}" for i, name in enumerate(names)]
        for c in self.clauses:
            lits = [str(v + 1) if pol else str(-(v + 1)) for v, pol in c]
            lines.append(" ".join(lits) + " 0")
        return "\n".join(lines) + "\n"


def clause_holds(clause: Clause, h: int) -> bool:
    """Evaluate a clause under the assignment given by the bitmask ``h``."""
    for v, pol in clause:
        if bool(h >> v & 1) == pol:
            return True
    return False


def _node(lit: Literal) -> int:
    v, pol = lit
    return 2 * v + pol


def implication_graph(n: int, clauses: Iterable[Clause]) -> list[list[int]]:
    """Successor lists on ``2n`` literal nodes; node ``2v+1`` is ``v ∈ H``.

    A unit clause ``(l)`` is read as ``(l ∨ l)``, i.e. the edge ``¬l → l``.
    """
    succ: list[list[int]] = [[] for _ in range(2 * n)]
    for c in clauses:
        a = _node(c[0])
        b = _node(c[-1])
        succ[a ^ 1].append(b)
        if a != b:
            succ[b ^ 1].append(a)
    return succ


def _tarjan(succ: list[list[int]]) -> list[int]:
    """SCC ids in reverse topological order (sinks first), iterative."""
    n = len(succ)
    index = [-1] * n
    low = [0] * n
    comp = [-1] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            node, i = work[-1]
            if i < len(succ[node]):
                work[-1] = (node, i + 1)
                nxt = succ[node][i]
                if index[nxt] < 0:
                    index[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack[nxt] = True
                    work.append((nxt, 0))
                elif on_stack[nxt] and index[nxt] < low[node]:
                    low[node] = index[nxt]
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[node] < low[parent]:
                    low[parent] = low[node]
            if low[node] == index[node]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == node:
                        break
                ncomp += 1
    return comp


def solve_graph(n: int, succ: list[list[int]]) -> int | None:
    """Solve from a prebuilt implication graph; returns the true set or ``None``."""
    comp = _tarjan(succ)
    h = 0
    for v in range(n):
        neg, pos = comp[2 * v], comp[2 * v + 1]
        if neg == pos:
            return None
        # Tarjan numbers sinks first; the literal nearer the sinks wins.
        if pos < neg:
            h |= 1 << v
    return h


def solve(f: Formula2) -> int | None:
    """Satisfying assignment as the bitmask of true variables, or ``None``.

    Deterministic for a fixed clause order.  Unconstrained variables come out
    false: the ``∉`` literal of each variable is visited first and so lands
    later in the topological order.
    """
    h = solve_graph(f.n, implication_graph(f.n, f.clauses))
    if h is not None:
        assert f.satisfied_by(h), "2-SAT assignment fails a clause"
    return h


def solve_assignment(f: Formula2) -> list[bool] | None:
    """Same as :func:`solve` but as a per-variable list of booleans."""
    h = solve(f)
    if h is None:
        return None
    return [bool(h >> v & 1) for v in range(f.n)]
