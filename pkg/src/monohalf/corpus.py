"""Random connected graphs and the named fixture graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import (Graph, complete_graph, cycle_graph, path_graph, petersen_graph, star_graph)

DEFAULT_SEED = 20240617
DEFAULT_PROBS = (0.2, 0.4, 0.6)


@dataclass(frozen=True)
class CorpusEntry:
    graph_id: str
    graph: Graph
    n: int
    p: float | None
    seed: int | None


def random_connected_graph(n: int, p: float, rng: random.Random, max_tries: int = 100_000) -> Graph:
    """Erdős–Rényi ``G(n, p)`` conditioned on connectivity (rejection sampling)."""
    if n < 1:
        raise ValueError("need at least one vertex")
    for _ in range(max_tries):
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        g = Graph(n, edges)
        if g.is_connected():
            return g
    raise RuntimeError(f"no connected G({n}, {p}) draw in {max_tries} tries")


def fixtures() -> dict[str, Graph]:
    return {
        "P4": path_graph(4),
        "P5": path_graph(5),
        "C5": cycle_graph(5),
        "K3": complete_graph(3, names="abc"),
        "K4": complete_graph(4),
        "K13": star_graph(3),
        "Petersen": petersen_graph(),
    }


def random_corpus(count: int = 300, seed: int = DEFAULT_SEED, n_min: int = 4, n_max: int = 10,
                  probs: tuple[float, ...] = DEFAULT_PROBS) -> list[CorpusEntry]:
    """``count`` graphs cycling through sizes and edge probabilities.

    Graph ``i`` is drawn from its own ``Random((seed, i))`` stream, so the
    corpus is reproducible and prefix-stable.
    """
    sizes = list(range(n_min, n_max + 1))
    out = []
    for i in range(count):
        n = sizes[i % len(sizes)]
        p = probs[(i // len(sizes)) % len(probs)]
        graph_seed = seed * 100_003 + i
        g = random_connected_graph(n, p, random.Random(graph_seed))
        out.append(CorpusEntry(f"er{i:03d}", g, n, p, graph_seed))
    return out


def acceptance_corpus(count: int = 300, seed: int = DEFAULT_SEED) -> list[CorpusEntry]:
    """Random corpus plus the named fixtures."""
    fixed = [CorpusEntry(name, g, g.n, None, None) for name, g in fixtures().items()]
    return random_corpus(count, seed) + fixed
