"""Shared fixtures: corpus files, random toy corpora and an annotation
bundle shaped like the published two-annotator study."""

from __future__ import annotations

import random

import pytest


def pytest_runtest_logreport(report):
    # one visible verdict line per release criterion
    if report.when == "call" and "test_acceptance" in report.nodeid:
        verdict = "PASS" if report.passed else "FAIL"
        name = report.nodeid.split("::")[-1]
        print(f"\n[acceptance] {verdict}: {name}")

from loreseval.humaneval import LEAF_CATEGORIES, AnnotationRecord, MqmError

WORD_ALPHABET = "abcde"


def random_sentence(rng: random.Random, max_tokens: int = 8) -> str:
    n_tokens = rng.randint(1, max_tokens)
    words = []
    for _ in range(n_tokens):
        length = rng.randint(1, 3)
        words.append("".join(rng.choice(WORD_ALPHABET) for _ in range(length)))
    return " ".join(words)


def random_pair(rng: random.Random, max_tokens: int = 8) -> tuple[str, str]:
    ref = random_sentence(rng, max_tokens)
    if rng.random() < 0.25:
        return ref, ref  # occasional perfect output
    hyp = random_sentence(rng, max_tokens)
    if rng.random() < 0.5:
        # partially overlapping output: shuffle the reference words
        words = ref.split()
        rng.shuffle(words)
        hyp = " ".join(words)
    return hyp, ref


def random_toy_corpus(rng: random.Random, max_pairs: int = 10, max_tokens: int = 8):
    n_pairs = rng.randint(1, max_pairs)
    pairs = [random_pair(rng, max_tokens) for _ in range(n_pairs)]
    hyps = [h for h, _ in pairs]
    refs = [r for _, r in pairs]
    return hyps, refs


def write_lines(path, lines):
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    return path


@pytest.fixture
def corpus_files(tmp_path):
    """Two aligned 3-line files."""
    src = write_lines(tmp_path / "toy.en", ["hello there", "general greeting", "good bye"])
    tgt = write_lines(tmp_path / "toy.ga", ["dia duit", "beannacht ghinearalta", "slan leat"])
    return src, tgt


def _direction_records(
    system_id: str,
    direction: str,
    error_counts: dict[str, int],
    n_segments: int = 25,
    sqm_base: int = 4,
) -> list[AnnotationRecord]:
    """Deterministic bundle for one direction with the requested number
    of errors per annotator, spread over the non-Non-translation leaves."""
    cycle = [c for c in LEAF_CATEGORIES if c != "Non-translation"]
    records = []
    for offset, (annotator, n_errors) in enumerate(sorted(error_counts.items())):
        per_segment: dict[int, list[MqmError]] = {seg: [] for seg in range(n_segments)}
        for i in range(n_errors):
            seg = i % n_segments
            category = cycle[(i * 3 + offset) % len(cycle)]
            severity = "major" if i % 3 == 0 else "minor"
            per_segment[seg].append(MqmError(category=category, severity=severity))
        for seg in range(n_segments):
            records.append(
                AnnotationRecord(
                    # each direction has its own test set, so ids carry it
                    segment_id=f"{direction}:{seg}",
                    annotator_id=annotator,
                    system_id=system_id,
                    direction=direction,
                    sqm=min(6, sqm_base + (seg + offset) % 3),
                    errors=tuple(per_segment[seg]),
                )
            )
    return records


@pytest.fixture
def paper_shaped_records() -> list[AnnotationRecord]:
    """Bundle matching the published per-annotator tallies: 53/82 errors
    in the en2ga direction and 7/11 in ga2en, 25 segments each."""
    records = _direction_records("mllm-tuned", "en2ga", {"a1": 53, "a2": 82})
    records += _direction_records("mllm-tuned", "ga2en", {"a1": 7, "a2": 11}, sqm_base=5)
    return records
