"""Human-evaluation scoring: SQM means, weighted error totals over the
core error taxonomy, per-annotator tallies and Cohen's kappa agreement.

Annotation bundles are line-delimited JSON, one record per line:

    {"segment_id": ..., "annotator_id": ..., "system_id": ...,
     "direction": ..., "sqm": 0-6,
     "errors": [{"category": ..., "severity": "minor"|"major",
                 "span": [start, end]}, ...]}

Category names are case-sensitive and must match the core taxonomy
below; "Non-translation" takes no severity (its weight is fixed).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

# Core error taxonomy: top-level groups and their leaf categories, in
# report order.  Weights: minor 1, major 10, whole-segment
# non-translation 25.
TAXONOMY: dict[str, tuple[str, ...]] = {
    "Non-translation": (),
    "Accuracy": ("Addition", "Omission", "Mistranslation", "Untranslated text"),
    "Fluency": (
        "Punctuation",
        "Spelling",
        "Grammar",
        "Register",
        "Inconsistency",
        "Character encoding",
    ),
}

LEAF_CATEGORIES: tuple[str, ...] = ("Non-translation",) + TAXONOMY["Accuracy"] + TAXONOMY["Fluency"]

NON_TRANSLATION = "Non-translation"
SEVERITY_WEIGHTS = {"minor": 1.0, "major": 10.0}
NON_TRANSLATION_WEIGHT = 25.0

SQM_MIN = 0
SQM_MAX = 6

# Anchored quality levels; odd ratings are the in-between choices.
SQM_LEVEL_LABELS = {
    6: "Perfect meaning and grammar",
    4: "Most meaning preserved, minor issues",
    2: "Some meaning preserved",
    0: "No meaning preserved",
}

KAPPA_BANDS = (
    (0.00, "none"),
    (0.20, "slight"),
    (0.40, "fair"),
    (0.60, "moderate"),
    (0.80, "substantial"),
    (1.00, "almost-perfect"),
)
DEGENERATE_BAND = "degenerate-perfect"


class AnnotationError(Exception):
    """Base class for annotation-handling failures."""


class SchemaError(AnnotationError):
    """A record does not match the bundle schema."""

    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")
        self.line = line


class UnknownCategory(AnnotationError):
    def __init__(self, category, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}unknown error category {category!r}")
        self.category = category
        self.line = line


class SqmOutOfRange(AnnotationError):
    def __init__(self, value, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}sqm must be an integer in 0..6, got {value!r}")
        self.value = value
        self.line = line


class DuplicateKey(AnnotationError):
    def __init__(self, key, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}duplicate record for {key}")
        self.key = key
        self.line = line


class NoMatchingRecords(AnnotationError):
    """No records match the requested system/direction."""


class AnnotatorCountNotTwo(AnnotationError):
    def __init__(self, count: int):
        super().__init__(f"agreement needs exactly two annotators, found {count}")
        self.count = count


class LengthMismatch(AnnotationError):
    def __init__(self, n_a: int, n_b: int):
        super().__init__(f"label lists differ in length: {n_a} vs {n_b}")


class EmptyInput(AnnotationError):
    """Label lists must be non-empty."""


@dataclass(frozen=True)
class MqmError:
    """One tagged error: leaf category, severity (absent for
    Non-translation) and an optional character span."""

    category: str
    severity: str | None = None
    span: tuple[int, int] | None = None

    def __post_init__(self):
        if self.category not in LEAF_CATEGORIES:
            raise UnknownCategory(self.category)
        if self.category == NON_TRANSLATION:
            if self.severity is not None:
                raise SchemaError("Non-translation takes no severity")
        else:
            if self.severity not in SEVERITY_WEIGHTS:
                raise SchemaError(
                    f"severity must be one of {sorted(SEVERITY_WEIGHTS)} "
                    f"for {self.category!r}, got {self.severity!r}"
                )
        if self.span is not None:
            start, end = self.span
            if start < 0 or end < start:
                raise SchemaError(f"invalid span {self.span}")

    @property
    def weight(self) -> float:
        if self.category == NON_TRANSLATION:
            return NON_TRANSLATION_WEIGHT
        return SEVERITY_WEIGHTS[self.severity]

    def to_dict(self) -> dict:
        out: dict = {"category": self.category}
        if self.severity is not None:
            out["severity"] = self.severity
        if self.span is not None:
            out["span"] = list(self.span)
        return out


@dataclass(frozen=True)
class AnnotationRecord:
    """One annotator's judgement of one segment: an SQM rating and any
    number of tagged errors."""

    segment_id: object
    annotator_id: str
    system_id: str
    direction: str
    sqm: int
    errors: tuple[MqmError, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if isinstance(self.sqm, bool) or not isinstance(self.sqm, int):
            raise SqmOutOfRange(self.sqm)
        if not SQM_MIN <= self.sqm <= SQM_MAX:
            raise SqmOutOfRange(self.sqm)

    @property
    def key(self) -> tuple:
        return (self.segment_id, self.annotator_id, self.system_id)

    def to_dict(self) -> dict:
        return {
            "segment_id": self.segment_id,
            "annotator_id": self.annotator_id,
            "system_id": self.system_id,
            "direction": self.direction,
            "sqm": self.sqm,
            "errors": [e.to_dict() for e in self.errors],
        }


_RECORD_FIELDS = {"segment_id", "annotator_id", "system_id", "direction", "sqm", "errors"}
_ERROR_FIELDS = {"category", "severity", "span"}


def parse_record(obj: dict, line: int | None = None) -> AnnotationRecord:
    """Validate one decoded JSON object against the bundle schema."""
    if not isinstance(obj, dict):
        raise SchemaError("record is not a JSON object", line)
    missing = _RECORD_FIELDS - obj.keys()
    if missing:
        raise SchemaError(f"missing fields {sorted(missing)}", line)
    unknown = obj.keys() - _RECORD_FIELDS
    if unknown:
        raise SchemaError(f"unknown fields {sorted(unknown)}", line)
    if not isinstance(obj["errors"], list):
        raise SchemaError("errors must be a list", line)

    errors = []
    for item in obj["errors"]:
        if not isinstance(item, dict):
            raise SchemaError("error entry is not a JSON object", line)
        unknown = item.keys() - _ERROR_FIELDS
        if unknown:
            raise SchemaError(f"unknown error fields {sorted(unknown)}", line)
        if "category" not in item:
            raise SchemaError("error entry is missing its category", line)
        category = item["category"]
        if category not in LEAF_CATEGORIES:
            raise UnknownCategory(category, line)
        span = item.get("span")
        if span is not None:
            if (
                not isinstance(span, list)
                or len(span) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in span)
            ):
                raise SchemaError(f"span must be [start, end] integers, got {span!r}", line)
            span = (span[0], span[1])
        try:
            errors.append(MqmError(category=category, severity=item.get("severity"), span=span))
        except SchemaError as exc:
            raise SchemaError(str(exc), line) from None

    sqm = obj["sqm"]
    if isinstance(sqm, bool) or not isinstance(sqm, int):
        raise SqmOutOfRange(sqm, line)
    if not SQM_MIN <= sqm <= SQM_MAX:
        raise SqmOutOfRange(sqm, line)

    if isinstance(obj["segment_id"], bool) or not isinstance(obj["segment_id"], (str, int)):
        raise SchemaError("segment_id must be a string or number", line)
    for name in ("annotator_id", "system_id", "direction"):
        if not isinstance(obj[name], str) or not obj[name]:
            raise SchemaError(f"{name} must be a non-empty string", line)

    return AnnotationRecord(
        segment_id=obj["segment_id"],
        annotator_id=obj["annotator_id"],
        system_id=obj["system_id"],
        direction=obj["direction"],
        sqm=sqm,
        errors=tuple(errors),
    )


def load_annotations(path) -> list[AnnotationRecord]:
    """Read and validate a JSONL annotation bundle."""
    records: list[AnnotationRecord] = []
    seen: set[tuple] = set()
    text = Path(path).read_text(encoding="utf-8")
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON ({exc.msg})", line_no) from None
        record = parse_record(obj, line_no)
        if record.key in seen:
            raise DuplicateKey(record.key, line_no)
        seen.add(record.key)
        records.append(record)
    return records


def write_annotations(records: Iterable[AnnotationRecord], path) -> None:
    """Write records as JSONL, the same format load_annotations reads."""
    body = "".join(json.dumps(r.to_dict(), ensure_ascii=False) + "\n" for r in records)
    Path(path).write_text(body, encoding="utf-8")


def _matching(records, system_id: str, direction: str) -> list[AnnotationRecord]:
    out = [r for r in records if r.system_id == system_id and r.direction == direction]
    if not out:
        raise NoMatchingRecords(f"no records for system {system_id!r} direction {direction!r}")
    return out


def sqm_mean(records: Sequence[AnnotationRecord], system_id: str, direction: str) -> float:
    """Mean SQM rating over all annotators for one system/direction."""
    matched = _matching(records, system_id, direction)
    return sum(r.sqm for r in matched) / len(matched)


def mqm_error_counts(
    records: Sequence[AnnotationRecord],
    system_id: str,
    direction: str,
    group_by: str = "annotator",
) -> dict:
    """Error tallies, grouped per annotator or per leaf category.

    Category grouping concatenates both annotators' errors and lists
    every leaf (zeros included) in taxonomy order.
    """
    matched = _matching(records, system_id, direction)
    if group_by == "annotator":
        counts: dict = {}
        for record in matched:
            counts[record.annotator_id] = counts.get(record.annotator_id, 0) + len(record.errors)
        return dict(sorted(counts.items()))
    if group_by == "category":
        counts = {leaf: 0 for leaf in LEAF_CATEGORIES}
        for record in matched:
            for error in record.errors:
                counts[error.category] += 1
        return counts
    raise ValueError(f"group_by must be annotator|category, got {group_by!r}")


def mqm_weighted_score(
    records: Sequence[AnnotationRecord], system_id: str, direction: str
) -> dict:
    """Severity-weighted error total and its per-segment average.

    The denominator is the number of distinct segments, so several
    annotators covering the same segments do not inflate it.
    """
    matched = _matching(records, system_id, direction)
    total = sum(error.weight for record in matched for error in record.errors)
    n_segments = len({record.segment_id for record in matched})
    return {"total": total, "per_segment": total / n_segments}


@dataclass(frozen=True)
class KappaResult:
    """Cohen's kappa with its ingredients.

    When both raters use a single identical class, chance agreement is
    1 and kappa is undefined; the result is then marked degenerate and
    observed agreement (p_o = 1) is what should be reported.
    """

    kappa: float | None
    p_o: float
    p_e: float
    band: str
    degenerate: bool = False

    def to_dict(self) -> dict:
        return {
            "kappa": self.kappa,
            "p_o": self.p_o,
            "p_e": self.p_e,
            "band": self.band,
            "degenerate": self.degenerate,
        }


def _classify(kappa: float) -> str:
    if kappa <= 0:
        return "none"
    for upper, label in KAPPA_BANDS[1:]:
        if kappa <= upper:
            return label
    return "almost-perfect"


def kappa_band(result: "KappaResult | float") -> str:
    """Agreement band for a kappa value or result."""
    if isinstance(result, KappaResult):
        if result.degenerate:
            return DEGENERATE_BAND
        return _classify(result.kappa)
    return _classify(result)


def cohen_kappa(labels_a: Sequence[bool], labels_b: Sequence[bool]) -> KappaResult:
    """Chance-corrected agreement between two boolean labelings."""
    if len(labels_a) != len(labels_b):
        raise LengthMismatch(len(labels_a), len(labels_b))
    n = len(labels_a)
    if n == 0:
        raise EmptyInput("label lists must be non-empty")
    observed = sum(1 for a, b in zip(labels_a, labels_b) if bool(a) == bool(b))
    p_o = observed / n
    a_yes = sum(map(bool, labels_a)) / n
    b_yes = sum(map(bool, labels_b)) / n
    p_e = a_yes * b_yes + (1 - a_yes) * (1 - b_yes)
    if p_e == 1.0:
        return KappaResult(kappa=None, p_o=p_o, p_e=p_e, band=DEGENERATE_BAND, degenerate=True)
    kappa = (p_o - p_e) / (1 - p_e)
    return KappaResult(kappa=kappa, p_o=p_o, p_e=p_e, band=_classify(kappa))


def agreement_report(
    records: Sequence[AnnotationRecord], system_id: str, direction: str
) -> dict[str, KappaResult]:
    """Per-category kappa between the two annotators of a bundle.

    Each annotator's per-segment labels are binarised per category
    (error of that type present at least once vs absent); rows follow
    taxonomy order.
    """
    matched = _matching(records, system_id, direction)
    annotators = sorted({r.annotator_id for r in matched})
    if len(annotators) != 2:
        raise AnnotatorCountNotTwo(len(annotators))
    segments = sorted({r.segment_id for r in matched}, key=repr)

    flagged: dict[tuple, set[str]] = {}
    for record in matched:
        key = (record.annotator_id, record.segment_id)
        flagged.setdefault(key, set()).update(e.category for e in record.errors)

    report: dict[str, KappaResult] = {}
    for category in LEAF_CATEGORIES:
        labels = [
            [category in flagged.get((annotator, seg), ()) for seg in segments]
            for annotator in annotators
        ]
        report[category] = cohen_kappa(labels[0], labels[1])
    return report


def fair_or_better(report: dict[str, KappaResult]) -> int:
    """How many categories reach fair agreement or better (perfect
    observed agreement included)."""
    good = {"fair", "moderate", "substantial", "almost-perfect", DEGENERATE_BAND}
    return sum(1 for result in report.values() if result.band in good)
