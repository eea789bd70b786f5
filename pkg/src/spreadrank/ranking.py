"""Score containers and ranking order shared by every ranking method."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["ScoreMap", "ranking_csv"]


@dataclass(frozen=True, eq=False)
class ScoreMap:
    """Per-node scores of one method, with a canonical ranking order.

    ``scores[i]`` is the score of internal node id ``i``. The ranking sorts
    by descending score and breaks ties by ascending node id, so equal
    inputs always produce the same order.
    """

    method: str
    scores: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.scores, dtype=np.float64)
        if arr.ndim != 1:
            raise ValueError("scores must be a 1-d array")
        if not np.all(np.isfinite(arr)):
            raise ValueError(f"{self.method}: scores must be finite")
        object.__setattr__(self, "scores", arr)

    @property
    def n_nodes(self) -> int:
        return self.scores.size

    def ranking(self) -> np.ndarray:
        """Node ids ordered best-first (descending score, ascending id on ties)."""
        ids = np.arange(self.scores.size)
        return np.lexsort((ids, -self.scores))

    def top(self, k: int) -> np.ndarray:
        """First ``k`` node ids of the ranking."""
        if not 1 <= k <= self.scores.size:
            raise ValueError(f"k={k} out of range [1, {self.scores.size}]")
        return self.ranking()[:k]


def ranking_csv(g, sm: ScoreMap) -> str:
    """CSV export ``node_label,score,rank`` in ranking order (rank is 1-based)."""
    lines = ["node_label,score,rank"]
    for rank, i in enumerate(sm.ranking(), start=1):
        lines.append(f"{g.label_of(int(i))},{float(sm.scores[i])!r},{rank}")
    return "\n".join(lines) + "\n"
