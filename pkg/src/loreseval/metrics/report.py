"""Whole-suite evaluation and score comparison arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bleu import BleuConfig, bleu_corpus
from .chrf import ChrfConfig, chrf_corpus
from .errors import EmptyInput, LengthMismatch, ZeroBaseline
from .f1 import unigram_f1
from .ter import ter_statistics
from .tokenizer import TokenizerConfig

# display polarity: whether higher values are better, per metric
METRIC_DIRECTIONS = {"bleu": "up", "ter": "down", "chrf": "up", "f1": "up"}


@dataclass
class MetricReport:
    """All four scores plus the configurations that produced them.

    bleu is on the 0-100 scale; ter, chrf and f1 are fractions.
    """

    bleu: float
    ter: float
    chrf: float
    f1: float
    n_segments: int
    configs: dict

    def to_dict(self) -> dict:
        return {
            "bleu": self.bleu,
            "ter": self.ter,
            "chrf": self.chrf,
            "f1": self.f1,
            "n_segments": self.n_segments,
            "configs": self.configs,
        }


def evaluate_all(
    hypotheses: Sequence[str],
    references: Sequence[str],
    bleu_config: BleuConfig | None = None,
    chrf_config: ChrfConfig | None = None,
    tokenizer: TokenizerConfig | None = None,
) -> MetricReport:
    """Score a hypothesis corpus against an aligned reference corpus.

    BLEU, TER and ChrF pool integer counts over the corpus before any
    division, so they are invariant to pair order; F1 is the mean of
    the per-sentence scores.
    """
    if len(hypotheses) != len(references):
        raise LengthMismatch(len(hypotheses), len(references))
    if not hypotheses:
        raise EmptyInput("need at least one hypothesis/reference pair")
    bleu_config = bleu_config or BleuConfig()
    chrf_config = chrf_config or ChrfConfig()
    tokenizer = tokenizer or TokenizerConfig(lowercase=bleu_config.lowercase)

    bleu_score = bleu_corpus(hypotheses, references, bleu_config)
    chrf_score = chrf_corpus(hypotheses, references, chrf_config)

    total_edits = 0
    total_ref_tokens = 0
    f1_sum = 0.0
    for hyp, ref in zip(hypotheses, references):
        stats = ter_statistics(hyp, ref, tokenizer)
        total_edits += stats.edits
        total_ref_tokens += stats.ref_len
        f1_sum += unigram_f1(hyp, ref, tokenizer)

    return MetricReport(
        bleu=bleu_score,
        ter=total_edits / total_ref_tokens,
        chrf=chrf_score,
        f1=f1_sum / len(hypotheses),
        n_segments=len(hypotheses),
        configs={
            "bleu": bleu_config.to_dict(),
            "ter": tokenizer.to_dict(),
            "chrf": chrf_config.to_dict(),
            "f1": tokenizer.to_dict(),
        },
    )


def relative_improvement(new_score: float, baseline: float) -> float:
    """Percentage change of new_score over baseline; sign preserved."""
    if baseline <= 0:
        raise ZeroBaseline(f"baseline must be positive, got {baseline}")
    return 100.0 * (new_score - baseline) / baseline
