"""Online learners over the halfspace class.

Winnow runs on shadow features: vertex ``x`` has feature ``i`` on iff ``x``
lies in the ``i``-th of the ``2m`` edge shadows ``u_1/v_1, ..., u_m/v_m,
v_1/u_1, ..., v_m/u_m``.  Every nontrivial halfspace is a disjunction of at
most ``ω(G)`` of these features.
"""

from __future__ import annotations

import math
import random
from typing import Iterable, Sequence

import numpy as np

from ..enumeration import list_all_fpt
from ..graph import Graph, VertexSet
from ..shadows import ShadowTable
from .pac import NotRealizableError
from .transcript import LearnerTranscript


class OnlineLearner:
    def predict(self, v: int) -> int:
        raise NotImplementedError

    def update(self, v: int, label: int) -> None:
        raise NotImplementedError

    def run(self, stream: Iterable[tuple[int, int]],
            transcript: LearnerTranscript | None = None) -> LearnerTranscript:
        transcript = transcript if transcript is not None else LearnerTranscript()
        for v, label in stream:
            transcript.record_round(v, self.predict(v), label)
            self.update(v, label)
        return transcript


def shadow_features(g: Graph, shadows: ShadowTable | None = None) -> np.ndarray:
    """Boolean ``n × 2m`` table of shadow memberships."""
    shadows = shadows or ShadowTable(g)
    seq = shadows.sequence()
    table = np.zeros((g.n, len(seq)), dtype=bool)
    for i, (_, s) in enumerate(seq):
        for x in range(g.n):
            if s >> x & 1:
                table[x, i] = True
    table.setflags(write=False)
    return table


class WinnowLearner(OnlineLearner):
    """Winnow over shadow features.

    Predict 1 iff the active weight sum reaches ``theta`` (default ``d``).
    A missed positive multiplies the active weights by ``alpha``; a false
    positive zeroes them (``demotion="zero"``, Winnow1) or divides them by
    ``alpha`` (``demotion="divide"``, tolerant to label noise).
    """

    def __init__(self, g: Graph, alpha: float = 2.0, theta: float | None = None,
                 demotion: str = "zero", features: np.ndarray | None = None):
        if demotion not in ("zero", "divide"):
            raise ValueError(f"unknown demotion rule {demotion!r}")
        self.features = shadow_features(g) if features is None else features
        self.d = self.features.shape[1]
        self.alpha = alpha
        self.theta = float(self.d if theta is None else theta)
        self.demotion = demotion
        self.weights = np.ones(self.d)

    def score(self, v: int) -> float:
        return float(self.weights[self.features[v]].sum())

    def predict(self, v: int) -> int:
        return int(self.score(v) >= self.theta)

    def update(self, v: int, label: int) -> None:
        pred = self.predict(v)
        if pred == label:
            return
        active = self.features[v]
        if label:
            self.weights[active] *= self.alpha
        elif self.demotion == "zero":
            self.weights[active] = 0.0
        else:
            self.weights[active] /= self.alpha


def winnow_online(g: Graph) -> WinnowLearner:
    return WinnowLearner(g)


def agnostic_winnow_online(g: Graph) -> WinnowLearner:
    return WinnowLearner(g, demotion="divide")


class HalvingLearner(OnlineLearner):
    """Majority vote over the surviving halfspaces; ties predict 0."""

    def __init__(self, g: Graph, hypotheses: Sequence[VertexSet] | None = None):
        self.version_space = list(list_all_fpt(g) if hypotheses is None else hypotheses)

    def predict(self, v: int) -> int:
        ones = sum(h >> v & 1 for h in self.version_space)
        return int(2 * ones > len(self.version_space))

    def update(self, v: int, label: int) -> None:
        self.version_space = [h for h in self.version_space if (h >> v & 1) == label]
        if not self.version_space:
            raise NotRealizableError("stream not realizable: version space is empty")


def halving_online(g: Graph) -> HalvingLearner:
    return HalvingLearner(g)


class WeightedMajorityLearner(OnlineLearner):
    """Deterministic weighted majority over all halfspaces (experts)."""

    def __init__(self, g: Graph, beta: float = 0.5, hypotheses: Sequence[VertexSet] | None = None):
        self.experts = list(list_all_fpt(g) if hypotheses is None else hypotheses)
        self.beta = beta
        self.weights = [1.0] * len(self.experts)

    def predict(self, v: int) -> int:
        w1 = sum(w for h, w in zip(self.experts, self.weights) if h >> v & 1)
        w0 = sum(self.weights) - w1
        return int(w1 > w0)

    def update(self, v: int, label: int) -> None:
        for i, h in enumerate(self.experts):
            if (h >> v & 1) != label:
                self.weights[i] *= self.beta


def weighted_majority_online(g: Graph) -> WeightedMajorityLearner:
    return WeightedMajorityLearner(g)


def winnow_mistake_bound(g: Graph, omega: int) -> float:
    """``2 ω (log2(2m) + 1) + 1``: Winnow1 with ``alpha = 2``, ``theta = 2m``."""
    return 2 * omega * (math.log2(2 * g.m) + 1) + 1


def halving_mistake_bound(class_size: int) -> int:
    return math.ceil(math.log2(class_size))


def random_stream(g: Graph, target: VertexSet, rng: random.Random, passes: int = 3,
                  flip: float = 0.0) -> list[tuple[int, int]]:
    """``passes`` independent shuffles of ``V`` labelled by ``target``.

    Each label is flipped independently with probability ``flip``.
    """
    stream = []
    for _ in range(passes):
        order = list(range(g.n))
        rng.shuffle(order)
        for v in order:
            label = target >> v & 1
            if flip and rng.random() < flip:
                label ^= 1
            stream.append((v, label))
    return stream


def best_fixed_mistakes(stream: Sequence[tuple[int, int]], hypotheses: Iterable[VertexSet]) -> int:
    """``M*``: fewest mistakes any single halfspace makes on the stream."""
    return min(sum((h >> v & 1) != label for v, label in stream) for h in hypotheses)
