"""Agreement metrics between a method ranking and simulated ground truth.

* ``kendall_tau``: the tau-a variant, 2 (concordant - discordant) / (N(N-1));
  pairs tied in either vector count as neither concordant nor discordant.
* ``jaccard_top_k``: overlap of the top-k node sets of two rankings.
* ``monotonicity``: (1 - sum_r N_r (N_r - 1) / (N (N - 1)))^2 where N_r are
  the sizes of groups of exactly-equal scores; 1 means no ties at all.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .ranking import ScoreMap

__all__ = [
    "EvalReport",
    "kendall_tau",
    "jaccard_top_k",
    "monotonicity",
    "evaluate_method",
]


def _as_vector(x) -> np.ndarray:
    if isinstance(x, ScoreMap):
        x = x.scores
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError("expected a 1-d score vector")
    return arr


def kendall_tau(a, b) -> float:
    """Rank correlation tau-a of two score vectors aligned by position."""
    va, vb = _as_vector(a), _as_vector(b)
    if va.size != vb.size:
        raise ValueError("vectors must have equal length")
    n = va.size
    if n < 2:
        raise ValueError("need at least two elements")
    signed = 0
    cols = np.arange(n)
    chunk = max(1, 2 ** 21 // n)
    for lo in range(0, n, chunk):
        hi = min(lo + chunk, n)
        sa = np.sign(va[lo:hi, None] - va[None, :])
        sb = np.sign(vb[lo:hi, None] - vb[None, :])
        upper = cols[None, :] > np.arange(lo, hi)[:, None]
        signed += int((sa * sb)[upper].sum())
    return 2.0 * signed / (n * (n - 1))


def jaccard_top_k(ranking_a, ranking_b, k: int) -> float:
    """Jaccard similarity of the first k entries of two rankings."""
    ra = np.asarray(ranking_a)
    rb = np.asarray(ranking_b)
    if not (1 <= k <= ra.size and k <= rb.size):
        raise ValueError(f"k={k} out of range for rankings of size "
                         f"{ra.size} and {rb.size}")
    sa = set(map(int, ra[:k]))
    sb = set(map(int, rb[:k]))
    return len(sa & sb) / len(sa | sb)


def monotonicity(scores) -> float:
    """Tie-sensitivity of a score vector; groups scores by exact equality."""
    v = _as_vector(scores)
    n = v.size
    if n < 2:
        raise ValueError("need at least two elements")
    _, counts = np.unique(v, return_counts=True)
    tied = float((counts * (counts - 1)).sum())
    return (1.0 - tied / (n * (n - 1))) ** 2


@dataclass(frozen=True)
class EvalReport:
    """How one method's ranking compares to the ground-truth influence."""

    method: str
    kendall: float
    jaccard: dict[int, float]
    monotonicity: float

    def to_json(self) -> str:
        payload = {
            "method": self.method,
            "kendall": self.kendall,
            "jaccard": {str(k): v for k, v in sorted(self.jaccard.items())},
            "monotonicity": self.monotonicity,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def evaluate_method(scores: ScoreMap, influence, k_list) -> EvalReport:
    """Score a method against ground truth at every k in ``k_list``.

    ``influence`` is the ground-truth score vector (or a ScoreMap); it must
    cover exactly the same nodes as ``scores``.
    """
    gt = influence if isinstance(influence, ScoreMap) else ScoreMap("SIR", influence)
    if gt.n_nodes != scores.n_nodes:
        raise ValueError(
            f"node count mismatch: {scores.n_nodes} scores vs "
            f"{gt.n_nodes} influence values"
        )
    rank_m = scores.ranking()
    rank_gt = gt.ranking()
    jaccard = {}
    for k in k_list:
        if not 1 <= k <= scores.n_nodes:
            raise ValueError(f"k={k} out of range [1, {scores.n_nodes}]")
        jaccard[int(k)] = jaccard_top_k(rank_m, rank_gt, int(k))
    return EvalReport(
        method=scores.method,
        kendall=kendall_tau(scores.scores, gt.scores),
        jaccard=jaccard,
        monotonicity=monotonicity(scores.scores),
    )
