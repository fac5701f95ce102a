"""Parallel-corpus loading, validation, deduplication and splitting.

Corpora are line-aligned: line i of the source file translates line i of
the target file.  All operations are pure value transformations; nothing
here mutates its inputs.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from pathlib import Path


class CorpusError(Exception):
    """Base class for corpus-handling failures."""


class LineCountMismatch(CorpusError):
    """Source and target files disagree on line count."""

    def __init__(self, n_src: int, n_tgt: int):
        super().__init__(f"source has {n_src} lines but target has {n_tgt}")
        self.n_src = n_src
        self.n_tgt = n_tgt


class EncodingError(CorpusError):
    """A line could not be decoded as UTF-8."""

    def __init__(self, path, line: int):
        super().__init__(f"{path}: line {line} is not valid UTF-8")
        self.path = str(path)
        self.line = line


class EmptyFile(CorpusError):
    """The file holds no segments."""


class BlankLine(CorpusError):
    """A line is empty or whitespace-only; alignment would be ambiguous."""

    def __init__(self, path, line: int):
        super().__init__(f"{path}: line {line} is blank")
        self.path = str(path)
        self.line = line


class RatioInvalid(CorpusError):
    """Split fractions are out of range or do not sum to one."""


class CorpusTooSmall(CorpusError):
    """Too few segments to honour the requested split."""


@dataclass(frozen=True)
class Segment:
    """One line of a corpus side: 0-based position and its text."""

    index: int
    text: str

    def __post_init__(self):
        if "\n" in self.text or "\r" in self.text:
            raise CorpusError(f"segment {self.index} contains a newline")


@dataclass(frozen=True)
class ParallelCorpus:
    """Line-aligned source/target segment lists."""

    source: list[Segment]
    target: list[Segment]
    source_lang: str
    target_lang: str

    def __post_init__(self):
        if len(self.source) != len(self.target):
            raise LineCountMismatch(len(self.source), len(self.target))
        if not self.source_lang or not self.target_lang:
            raise CorpusError("language codes must be non-empty")

    def __len__(self) -> int:
        return len(self.source)

    def pairs(self) -> list[tuple[str, str]]:
        """(source text, target text) tuples in corpus order."""
        return [(s.text, t.text) for s, t in zip(self.source, self.target)]


@dataclass(frozen=True)
class SplitRatio:
    """Train/validation/test fractions; must sum to 1."""

    train: float
    validation: float = 0.0
    test: float = 0.0

    def __post_init__(self):
        if not 0.0 < self.train < 1.0:
            raise RatioInvalid(f"train fraction {self.train} not in (0, 1)")
        for name, value in (("validation", self.validation), ("test", self.test)):
            if not 0.0 <= value < 1.0:
                raise RatioInvalid(f"{name} fraction {value} not in [0, 1)")
        total = self.train + self.validation + self.test
        if abs(total - 1.0) > 1e-9:
            raise RatioInvalid(f"fractions sum to {total}, expected 1")


@dataclass(frozen=True)
class SplitCorpus:
    """The three parts of a split, plus bookkeeping counts.

    dedup_removed counts pairs dropped by the pair-level deduplication
    that precedes slicing; train_dropped counts train pairs removed
    because they collided with validation/test (zero unless the corpus
    held near-duplicate pairs differing only in trailing whitespace).
    """

    train: ParallelCorpus
    validation: ParallelCorpus
    test: ParallelCorpus
    dedup_removed: int = 0
    train_dropped: int = 0


def read_segment_lines(path) -> list[str]:
    """Read UTF-8 lines, accepting LF or CRLF, reporting bad lines."""
    raw = Path(path).read_bytes()
    if raw.endswith(b"\n"):
        raw = raw[:-1]
    if not raw:
        raise EmptyFile(f"{path}: no segments")
    lines = []
    for i, chunk in enumerate(raw.split(b"\n"), start=1):
        if chunk.endswith(b"\r"):
            chunk = chunk[:-1]
        try:
            text = chunk.decode("utf-8")
        except UnicodeDecodeError:
            raise EncodingError(path, i) from None
        if not text.strip():
            raise BlankLine(path, i)
        lines.append(text)
    return lines


def load_parallel(source_path, target_path, source_lang: str, target_lang: str) -> ParallelCorpus:
    """Load two line-aligned text files into a ParallelCorpus.

    Raises LineCountMismatch / EncodingError / EmptyFile / BlankLine on
    malformed input.
    """
    src_lines = read_segment_lines(source_path)
    tgt_lines = read_segment_lines(target_path)
    if len(src_lines) != len(tgt_lines):
        raise LineCountMismatch(len(src_lines), len(tgt_lines))
    return ParallelCorpus(
        source=[Segment(i, text) for i, text in enumerate(src_lines)],
        target=[Segment(i, text) for i, text in enumerate(tgt_lines)],
        source_lang=source_lang,
        target_lang=target_lang,
    )


def _dedup_key(src_text: str, tgt_text: str) -> tuple[str, str]:
    # pair-level key; trailing whitespace is presentation noise
    return (src_text.rstrip(), tgt_text.rstrip())


def _rebuild(corpus: ParallelCorpus, pairs: list[tuple[str, str]]) -> ParallelCorpus:
    return ParallelCorpus(
        source=[Segment(i, s) for i, (s, _) in enumerate(pairs)],
        target=[Segment(i, t) for i, (_, t) in enumerate(pairs)],
        source_lang=corpus.source_lang,
        target_lang=corpus.target_lang,
    )


def deduplicate(corpus: ParallelCorpus) -> tuple[ParallelCorpus, int]:
    """Drop repeated (source, target) pairs, keeping first occurrences.

    The key is the pair with trailing whitespace trimmed; order is
    otherwise preserved.  Returns the deduplicated corpus and the number
    of pairs removed.
    """
    seen = set()
    kept = []
    for src_text, tgt_text in corpus.pairs():
        key = _dedup_key(src_text, tgt_text)
        if key in seen:
            continue
        seen.add(key)
        kept.append((src_text, tgt_text))
    removed = len(corpus) - len(kept)
    if removed == 0:
        return corpus, 0
    return _rebuild(corpus, kept), removed


def normalize_case(corpus: ParallelCorpus, side: str = "both") -> ParallelCorpus:
    """Unicode-aware lowercasing of the selected side(s)."""
    if side not in ("source", "target", "both"):
        raise ValueError(f"side must be source|target|both, got {side!r}")
    lower_src = side in ("source", "both")
    lower_tgt = side in ("target", "both")
    return ParallelCorpus(
        source=[
            Segment(seg.index, seg.text.lower() if lower_src else seg.text)
            for seg in corpus.source
        ],
        target=[
            Segment(seg.index, seg.text.lower() if lower_tgt else seg.text)
            for seg in corpus.target
        ],
        source_lang=corpus.source_lang,
        target_lang=corpus.target_lang,
    )


def split(corpus: ParallelCorpus, ratio: SplitRatio, seed: int | None = None) -> SplitCorpus:
    """Partition a corpus into train/validation/test parts.

    Pair-level deduplication runs first, then slicing: validation and
    test sizes are floor(N * fraction) of the deduplicated size N and
    train takes the remainder.  Parts are taken in file order as
    [train | validation | test]; a seed shuffles segment order with a
    deterministic PRNG permutation (random.Random) before slicing.  Any
    train pair exactly equal to a validation/test pair is dropped and
    counted in train_dropped.
    """
    deduped, removed = deduplicate(corpus)
    n = len(deduped)
    if n == 0:
        raise CorpusTooSmall("corpus is empty after deduplication")
    if ratio.validation > 0 and ratio.test > 0 and n < 3:
        raise CorpusTooSmall(f"{n} segments cannot fill three splits")

    pairs = deduped.pairs()
    if seed is not None:
        random.Random(seed).shuffle(pairs)

    n_val = math.floor(n * ratio.validation)
    n_test = math.floor(n * ratio.test)
    n_train = n - n_val - n_test

    train_pairs = pairs[:n_train]
    val_pairs = pairs[n_train : n_train + n_val]
    test_pairs = pairs[n_train + n_val :]

    held_out = set(val_pairs) | set(test_pairs)
    cleaned_train = [p for p in train_pairs if p not in held_out]
    dropped = len(train_pairs) - len(cleaned_train)

    return SplitCorpus(
        train=_rebuild(corpus, cleaned_train),
        validation=_rebuild(corpus, val_pairs),
        test=_rebuild(corpus, test_pairs),
        dedup_removed=removed,
        train_dropped=dropped,
    )


def write_pair(corpus: ParallelCorpus, out_dir, stem: str) -> list[Path]:
    """Write one corpus as <stem>.<source_lang> / <stem>.<target_lang>
    with LF line endings."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for lang, segments in (
        (corpus.source_lang, corpus.source),
        (corpus.target_lang, corpus.target),
    ):
        path = out_dir / f"{stem}.{lang}"
        body = "".join(seg.text + "\n" for seg in segments)
        path.write_text(body, encoding="utf-8", newline="\n")
        written.append(path)
    return written


def write_splits(split_corpus: SplitCorpus, out_dir) -> list[Path]:
    """Write the six split files: {train,valid,test}.{src_lang,tgt_lang}."""
    written = []
    for stem, part in (
        ("train", split_corpus.train),
        ("valid", split_corpus.validation),
        ("test", split_corpus.test),
    ):
        written.extend(write_pair(part, out_dir, stem))
    return written
