"""loreseval: evaluation toolkit for low-resource machine translation.

Provides automatic translation metrics (BLEU, TER, ChrF, unigram F1),
parallel-corpus preparation (load / deduplicate / split / case
normalisation), human-evaluation scoring (SQM means, weighted error
scores over the core error taxonomy, Cohen's kappa agreement),
hyperparameter-grid enumeration and energy/emissions reporting, plus a
command-line interface tying these together.
"""

from .corpus import (
    ParallelCorpus,
    Segment,
    SplitCorpus,
    SplitRatio,
    deduplicate,
    load_parallel,
    normalize_case,
    split,
)
from .greenreport import EnergyReport, GpuProfile, RunRecord, emissions_kg, energy_kwh
from .hpo import HyperparameterGrid, TrialConfig, emit_configs, enumerate_grid
from .humaneval import (
    AnnotationRecord,
    KappaResult,
    MqmError,
    agreement_report,
    cohen_kappa,
    kappa_band,
    load_annotations,
    mqm_error_counts,
    mqm_weighted_score,
    sqm_mean,
)
from .metrics import (
    BleuConfig,
    ChrfConfig,
    MetricReport,
    TokenizerConfig,
    bleu_corpus,
    bleu_sentence,
    chrf,
    evaluate_all,
    relative_improvement,
    ter,
    tokenize,
    unigram_f1,
)

__version__ = "0.1.0"

__all__ = [
    "AnnotationRecord",
    "BleuConfig",
    "ChrfConfig",
    "EnergyReport",
    "GpuProfile",
    "HyperparameterGrid",
    "KappaResult",
    "MetricReport",
    "MqmError",
    "ParallelCorpus",
    "RunRecord",
    "Segment",
    "SplitCorpus",
    "SplitRatio",
    "TokenizerConfig",
    "TrialConfig",
    "agreement_report",
    "bleu_corpus",
    "bleu_sentence",
    "chrf",
    "cohen_kappa",
    "deduplicate",
    "emissions_kg",
    "emit_configs",
    "energy_kwh",
    "enumerate_grid",
    "evaluate_all",
    "kappa_band",
    "load_annotations",
    "load_parallel",
    "mqm_error_counts",
    "mqm_weighted_score",
    "normalize_case",
    "relative_improvement",
    "split",
    "sqm_mean",
    "ter",
    "tokenize",
    "unigram_f1",
]
