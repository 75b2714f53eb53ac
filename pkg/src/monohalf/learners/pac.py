"""Passive learners: realizable consistency learning and ERM."""

from __future__ import annotations

import math
from fractions import Fraction

from ..consistency import ConsistencyChecker, Sample, mh_check
from ..enumeration import canonical_key, list_all_fpt
from ..graph import Graph, VertexSet, omega_tilde


class NotRealizableError(ValueError):
    pass


def pac_sample_size(epsilon: float, delta: float, d: int, agnostic: bool = False) -> int:
    """Sample size for ``(epsilon, delta)``-PAC learning a class of VC dimension ``d``.

    Realizable: ``⌈(4/ε)(d ln(13/ε) + ln(2/δ))⌉``.
    Agnostic:   ``⌈(2/ε²)(d ln 4 + ln(2/δ))⌉``.
    """
    if not (0 < epsilon < 1 and 0 < delta < 1):
        raise ValueError("epsilon and delta must lie in (0, 1)")
    if d < 0:
        raise ValueError("VC dimension must be nonnegative")
    if agnostic:
        size = (2 / epsilon ** 2) * (d * math.log(4) + math.log(2 / delta))
    else:
        size = (4 / epsilon) * (d * math.log(13 / epsilon) + math.log(2 / delta))
    return math.ceil(size)


def pac_learn_realizable(g: Graph, sample: Sample, checker: ConsistencyChecker | None = None) -> VertexSet:
    h = mh_check(g, sample, checker)
    if h is None:
        raise NotRealizableError("no monophonic halfspace is consistent with the sample")
    return h


def empirical_risk(h: VertexSet, sample: list[tuple[int, int]]) -> Fraction:
    if not sample:
        return Fraction(0)
    wrong = sum((h >> v & 1) != label for v, label in sample)
    return Fraction(wrong, len(sample))


def erm(g: Graph, sample: Sample, hypotheses: list[VertexSet] | None = None) -> tuple[VertexSet, Fraction]:
    """Empirical risk minimiser over all halfspaces.

    Ties go to the canonically smallest halfspace (sorted member list).
    """
    sample = list(sample)
    if hypotheses is None:
        hypotheses = list(list_all_fpt(g))
    best = min(hypotheses, key=lambda h: (empirical_risk(h, sample), canonical_key(h)))
    return best, empirical_risk(best, sample)


def pac_trial(g: Graph, target: VertexSet, size: int, rng) -> float:
    """One realizable PAC run under the uniform distribution on ``V``.

    Returns the exact true error ``|H Δ H*| / n`` of the learned halfspace.
    """
    sample = [(v, target >> v & 1) for v in (rng.randrange(g.n) for _ in range(size))]
    h = pac_learn_realizable(g, sample)
    return bin(h ^ target).count("1") / g.n


def pac_experiment(graphs, epsilon: float, delta: float, trials: int, rng,
                   hypotheses: dict | None = None) -> dict:
    """Repeat :func:`pac_trial` on random (graph, target) pairs.

    Each trial picks a graph uniformly from ``graphs``, a target uniformly
    from its halfspaces, and a sample of the realizable size for
    ``d = ω̃(G)``.  Reports the failure rate (true error above ``epsilon``).
    """
    graphs = list(graphs)
    hypotheses = hypotheses if hypotheses is not None else {}
    errors = []
    sizes = []
    for _ in range(trials):
        g = graphs[rng.randrange(len(graphs))]
        if g not in hypotheses:
            hypotheses[g] = sorted(list_all_fpt(g), key=canonical_key)
        target = hypotheses[g][rng.randrange(len(hypotheses[g]))]
        size = pac_sample_size(epsilon, delta, omega_tilde(g))
        sizes.append(size)
        errors.append(pac_trial(g, target, size, rng))
    failures = sum(e > epsilon for e in errors)
    return {"trials": trials, "epsilon": epsilon, "delta": delta, "failures": failures,
            "failure_rate": failures / trials if trials else 0.0,
            "mean_error": sum(errors) / trials if trials else 0.0,
            "max_error": max(errors, default=0.0), "max_sample_size": max(sizes, default=0)}
