from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from typing import Sequence


class Measure(str, enum.Enum):
    FREEMAN = "freeman"
    BRANDES = "brandes"
    GEISBERGER = "geisberger"
    PAGERANK = "pagerank"
    MARKOV = "markov"
    RELIANCE = "reliance"
    GROUP_RELIANCE = "group_reliance"


@dataclass(frozen=True)
class ScoreMap:
    """Per-node scores for one measure, indexed like ``labels``.

    ``name`` is the column name used when ranking; it defaults to the measure
    name. ``meta`` holds free-form run details (e.g. the aggregation mode).
    """

    measure: Measure
    labels: tuple[str, ...]
    values: tuple[float, ...]
    normalized: str = "raw"
    name: str = ""
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not self.name:
            object.__setattr__(self, "name", Measure(self.measure).value)
        if len(self.values) != len(self.labels):
            raise ValueError("values and labels differ in length")
        for x in self.values:
            if not (x >= 0.0 and math.isfinite(x)):
                raise ValueError(f"score {x!r} is negative or not finite")

    def __getitem__(self, label: str) -> float:
        return self.values[self.labels.index(label)]

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.labels, self.values))

    def renamed(self, name: str) -> "ScoreMap":
        return replace(self, name=name)


def score_map(measure: Measure, labels: Sequence[str], values, **kw) -> ScoreMap:
    # -0.0 would print as "-0"
    vals = tuple(float(x) + 0.0 for x in values)
    return ScoreMap(Measure(measure), tuple(labels), vals, **kw)
