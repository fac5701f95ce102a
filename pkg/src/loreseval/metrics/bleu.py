"""Corpus and sentence BLEU.

Corpus BLEU pools clipped n-gram counts over all pairs, takes the
geometric mean of the order-wise precisions and applies the brevity
penalty; it is never smoothed, so a zero pooled precision zeroes the
score.  Sentence BLEU reuses the same statistics on a single pair with
optional add-one smoothing for zero-match orders.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyInput, LengthMismatch
from .tokenizer import TokenizerConfig, tokenize

SMOOTHINGS = ("none", "add-one-on-zero")


@dataclass(frozen=True)
class BleuConfig:
    max_order: int = 4
    smoothing: str = "add-one-on-zero"  # applied at sentence level only
    lowercase: bool = False

    def __post_init__(self):
        if not 1 <= self.max_order <= 9:
            raise ValueError(f"max_order must be in 1..9, got {self.max_order}")
        if self.smoothing not in SMOOTHINGS:
            raise ValueError(f"smoothing must be one of {SMOOTHINGS}")

    def to_dict(self) -> dict:
        return {
            "max_order": self.max_order,
            "smoothing": self.smoothing,
            "lowercase": self.lowercase,
        }

    def tokenizer(self) -> TokenizerConfig:
        return TokenizerConfig(scheme="split-punctuation", lowercase=self.lowercase)


def _ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def pair_stats(
    hyp_tokens: Sequence[str], ref_tokens: Sequence[str], max_order: int
) -> tuple[list[int], list[int]]:
    """Clipped match and total counts per n-gram order for one pair."""
    correct = [0] * max_order
    total = [0] * max_order
    for n in range(1, max_order + 1):
        hyp_counts = _ngrams(hyp_tokens, n)
        if not hyp_counts:
            break  # higher orders are empty too
        ref_counts = _ngrams(ref_tokens, n)
        total[n - 1] = sum(hyp_counts.values())
        correct[n - 1] = sum(
            min(count, ref_counts[gram]) for gram, count in hyp_counts.items()
        )
    return correct, total


def score_from_stats(
    correct: Sequence[int],
    total: Sequence[int],
    hyp_len: int,
    ref_len: int,
    smoothing: str = "none",
) -> float:
    """BLEU (0-100) from pooled sufficient statistics.

    Orders with no hypothesis n-grams at all are excluded from the
    geometric mean so that short-but-perfect output still scores 100.
    """
    log_sum = 0.0
    counted = 0
    for c, t in zip(correct, total):
        if t == 0:
            continue
        if c == 0:
            if smoothing != "add-one-on-zero":
                return 0.0
            log_sum += math.log(1.0 / (t + 1))
        else:
            log_sum += math.log(c / t)
        counted += 1
    if counted == 0:
        return 0.0
    if hyp_len == 0:
        return 0.0
    brevity = 1.0 if hyp_len >= ref_len else math.exp(1.0 - ref_len / hyp_len)
    return 100.0 * brevity * math.exp(log_sum / counted)


def bleu_corpus(
    hypotheses: Sequence[str],
    references: Sequence[str],
    config: BleuConfig = BleuConfig(),
) -> float:
    """Corpus-level BLEU in [0, 100]; unsmoothed."""
    if len(hypotheses) != len(references):
        raise LengthMismatch(len(hypotheses), len(references))
    if not hypotheses:
        raise EmptyInput("need at least one hypothesis/reference pair")
    tok = config.tokenizer()
    correct = [0] * config.max_order
    total = [0] * config.max_order
    hyp_len = 0
    ref_len = 0
    for hyp, ref in zip(hypotheses, references):
        hyp_tokens = tokenize(hyp, tok)
        ref_tokens = tokenize(ref, tok)
        hyp_len += len(hyp_tokens)
        ref_len += len(ref_tokens)
        pair_correct, pair_total = pair_stats(hyp_tokens, ref_tokens, config.max_order)
        for i in range(config.max_order):
            correct[i] += pair_correct[i]
            total[i] += pair_total[i]
    return score_from_stats(correct, total, hyp_len, ref_len, smoothing="none")


def bleu_sentence(
    hypothesis: str, reference: str, config: BleuConfig = BleuConfig()
) -> float:
    """Sentence-level BLEU with the configured smoothing."""
    if not hypothesis.strip() or not reference.strip():
        raise EmptyInput("hypothesis and reference must be non-empty")
    tok = config.tokenizer()
    hyp_tokens = tokenize(hypothesis, tok)
    ref_tokens = tokenize(reference, tok)
    correct, total = pair_stats(hyp_tokens, ref_tokens, config.max_order)
    return score_from_stats(
        correct, total, len(hyp_tokens), len(ref_tokens), smoothing=config.smoothing
    )
