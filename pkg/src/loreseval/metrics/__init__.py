"""Automatic translation metrics: BLEU, TER, ChrF and unigram F1."""

from .bleu import BleuConfig, bleu_corpus, bleu_sentence
from .chrf import ChrfConfig, chrf, chrf_corpus
from .errors import EmptyInput, EmptyReference, LengthMismatch, MetricError, ZeroBaseline
from .f1 import unigram_f1
from .report import METRIC_DIRECTIONS, MetricReport, evaluate_all, relative_improvement
from .ter import MAX_SHIFT_SPAN, MAX_SHIFTS, TerStats, ter, ter_statistics
from .tokenizer import TokenizerConfig, tokenize

__all__ = [
    "BleuConfig",
    "ChrfConfig",
    "EmptyInput",
    "EmptyReference",
    "LengthMismatch",
    "MAX_SHIFTS",
    "MAX_SHIFT_SPAN",
    "METRIC_DIRECTIONS",
    "MetricError",
    "MetricReport",
    "TerStats",
    "TokenizerConfig",
    "ZeroBaseline",
    "bleu_corpus",
    "bleu_sentence",
    "chrf",
    "chrf_corpus",
    "evaluate_all",
    "relative_improvement",
    "ter",
    "ter_statistics",
    "tokenize",
    "unigram_f1",
]
