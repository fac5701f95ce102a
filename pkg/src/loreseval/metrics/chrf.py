"""Character n-gram F-score (ChrF).

Precision and recall are averaged over n-gram orders 1..char_order and
combined with recall weight beta: (1 + b^2) P R / (b^2 P + R).  Orders
where either side has no n-grams (strings shorter than n) are skipped
so that identical short strings still score 1.  Scores are on the
fraction scale.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyInput, LengthMismatch


@dataclass(frozen=True)
class ChrfConfig:
    char_order: int = 6
    beta: float = 3.0
    strip_whitespace: bool = True

    def __post_init__(self):
        if self.char_order < 1:
            raise ValueError(f"char_order must be >= 1, got {self.char_order}")
        if self.beta <= 0:
            raise ValueError(f"beta must be positive, got {self.beta}")

    def to_dict(self) -> dict:
        return {
            "char_order": self.char_order,
            "beta": self.beta,
            "strip_whitespace": self.strip_whitespace,
        }


def _char_ngrams(text: str, n: int) -> Counter:
    return Counter(text[i : i + n] for i in range(len(text) - n + 1))


def pair_stats(hypothesis: str, reference: str, config: ChrfConfig) -> list[list[int]]:
    """Per order: [matched, hypothesis total, reference total]."""
    if config.strip_whitespace:
        hypothesis = "".join(hypothesis.split())
        reference = "".join(reference.split())
    stats = []
    for n in range(1, config.char_order + 1):
        hyp_counts = _char_ngrams(hypothesis, n)
        ref_counts = _char_ngrams(reference, n)
        matched = sum((hyp_counts & ref_counts).values())
        stats.append([matched, sum(hyp_counts.values()), sum(ref_counts.values())])
    return stats


def score_from_stats(stats: Sequence[Sequence[int]], beta: float) -> float:
    """ChrF from (matched, hyp total, ref total) rows, one per order."""
    precision_sum = 0.0
    recall_sum = 0.0
    counted = 0
    for matched, hyp_total, ref_total in stats:
        if hyp_total == 0 or ref_total == 0:
            continue
        precision_sum += matched / hyp_total
        recall_sum += matched / ref_total
        counted += 1
    if counted == 0:
        return 0.0
    precision = precision_sum / counted
    recall = recall_sum / counted
    if precision + recall == 0.0:
        return 0.0
    beta_sq = beta * beta
    return (1 + beta_sq) * precision * recall / (beta_sq * precision + recall)


def chrf(hypothesis: str, reference: str, config: ChrfConfig = ChrfConfig()) -> float:
    """Sentence-level ChrF in [0, 1]."""
    if not hypothesis.strip() or not reference.strip():
        raise EmptyInput("hypothesis and reference must be non-empty")
    return score_from_stats(pair_stats(hypothesis, reference, config), config.beta)


def chrf_corpus(
    hypotheses: Sequence[str],
    references: Sequence[str],
    config: ChrfConfig = ChrfConfig(),
) -> float:
    """Corpus-level ChrF from n-gram statistics pooled over all pairs."""
    if len(hypotheses) != len(references):
        raise LengthMismatch(len(hypotheses), len(references))
    if not hypotheses:
        raise EmptyInput("need at least one hypothesis/reference pair")
    pooled = [[0, 0, 0] for _ in range(config.char_order)]
    for hyp, ref in zip(hypotheses, references):
        for i, row in enumerate(pair_stats(hyp, ref, config)):
            pooled[i][0] += row[0]
            pooled[i][1] += row[1]
            pooled[i][2] += row[2]
    return score_from_stats(pooled, config.beta)
