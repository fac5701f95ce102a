"""Unigram F1 over token multisets."""

from __future__ import annotations

from collections import Counter

from .errors import EmptyInput
from .tokenizer import TokenizerConfig, tokenize


def unigram_f1(
    hypothesis: str,
    reference: str,
    tokenizer: TokenizerConfig = TokenizerConfig(),
) -> float:
    """Harmonic mean of clipped unigram precision and recall, in [0, 1]."""
    if not hypothesis.strip() or not reference.strip():
        raise EmptyInput("hypothesis and reference must be non-empty")
    hyp_counts = Counter(tokenize(hypothesis, tokenizer))
    ref_counts = Counter(tokenize(reference, tokenizer))
    matched = sum((hyp_counts & ref_counts).values())
    precision = matched / sum(hyp_counts.values())
    recall = matched / sum(ref_counts.values())
    if precision + recall == 0.0:
        return 0.0
    return 2 * precision * recall / (precision + recall)
