"""Event log shared by the active and online learners."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class LearnerTranscript:
    events: list[dict] = field(default_factory=list)
    mistakes: int = 0
    queries: int = 0
    rounds: int = 0

    def record_query(self, vertex: int, answer: int) -> None:
        self.queries += 1
        self.events.append({"kind": "query", "vertex": vertex, "answer": answer})

    def record_round(self, vertex: int, prediction: int, truth: int) -> bool:
        mistake = prediction != truth
        self.mistakes += mistake
        self.rounds += 1
        self.events.append({"kind": "round", "round": self.rounds, "vertex": vertex,
                            "prediction": prediction, "truth": truth, "mistake": mistake})
        return mistake

    def check_totals(self) -> None:
        assert self.queries == sum(e["kind"] == "query" for e in self.events)
        assert self.mistakes == sum(e.get("mistake", False) for e in self.events)

    def to_jsonl(self, names=None) -> str:
        lines = []
        for e in self.events:
            if names is not None:
                e = dict(e, vertex=names[e["vertex"]])
            lines.append(json.dumps(e))
        lines.append(json.dumps({"kind": "summary", "rounds": self.rounds, "mistakes": self.mistakes,
                                 "queries": self.queries}))
        return "\n".join(lines) + "\n"
