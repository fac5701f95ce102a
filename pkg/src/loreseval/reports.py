"""Comparison tables, plain-text renderers and run logging for the CLI.

Tables display rounded values (BLEU to one decimal, fraction-scale
metrics to three); JSON payloads carry the same numbers at full
precision.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .greenreport import EnergyReport
from .humaneval import LEAF_CATEGORIES, KappaResult
from .metrics import METRIC_DIRECTIONS, MetricReport, relative_improvement

LOG_DIR_ENV = "LORES_EVAL_LOG_DIR"
DEFAULT_LOG_DIR = "logs"

ARROWS = {"up": "↑", "down": "↓"}

FRACTION_METRICS = ("ter", "chrf", "f1")


class ComparisonError(Exception):
    """Bad comparison input: too few entries or no usable baseline."""


@dataclass(frozen=True)
class SystemEntry:
    """One system's scores in a comparison table."""

    team: str
    system: str
    bleu: float | None = None
    ter: float | None = None
    chrf: float | None = None

    def __post_init__(self):
        if self.bleu is None and self.ter is None and self.chrf is None:
            raise ComparisonError(f"entry {self.system!r} carries no metrics")

    def to_dict(self) -> dict:
        return {
            "team": self.team,
            "system": self.system,
            "bleu": self.bleu,
            "ter": self.ter,
            "chrf": self.chrf,
        }


@dataclass
class ComparisonTable:
    """Entries sorted by one metric plus the top-vs-baseline change."""

    entries: list[SystemEntry]
    sort_key: str
    baseline_system: str
    improvement_percent: float
    top_system: str

    def to_dict(self) -> dict:
        return {
            "sort": self.sort_key,
            "baseline": self.baseline_system,
            "entries": [e.to_dict() for e in self.entries],
            "improvement": {
                "metric": self.sort_key,
                "percent": self.improvement_percent,
                "top_system": self.top_system,
            },
        }


def load_entries(path) -> list[SystemEntry]:
    """Read a JSON array of {team, system, bleu?, ter?, chrf?}."""
    obj = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(obj, list):
        raise ComparisonError("entries file must hold a JSON array")
    entries = []
    for item in obj:
        entries.append(
            SystemEntry(
                team=str(item.get("team", "")),
                system=str(item.get("system", "")),
                bleu=item.get("bleu"),
                ter=item.get("ter"),
                chrf=item.get("chrf"),
            )
        )
    return entries


def build_comparison(
    entries: list[SystemEntry], baseline_system: str | None, sort_key: str = "bleu"
) -> ComparisonTable:
    """Sort entries by metric polarity and compute the relative change
    of the top entry against the flagged baseline."""
    if sort_key not in ("bleu", "ter", "chrf"):
        raise ComparisonError(f"cannot sort by {sort_key!r}")
    if baseline_system is None:
        raise ComparisonError("a baseline system must be flagged (--baseline)")
    if len(entries) < 2:
        raise ComparisonError(f"need at least two entries, got {len(entries)}")
    baseline = next((e for e in entries if e.system == baseline_system), None)
    if baseline is None:
        raise ComparisonError(f"baseline system {baseline_system!r} not among entries")

    ascending = sort_key == "ter"  # lower is better

    def order(entry: SystemEntry):
        value = getattr(entry, sort_key)
        if value is None:
            return (1, 0.0)  # entries without the metric sort last
        return (0, value if ascending else -value)

    ranked = sorted(entries, key=order)
    top = ranked[0]
    top_value = getattr(top, sort_key)
    base_value = getattr(baseline, sort_key)
    if top_value is None or base_value is None:
        raise ComparisonError(f"{sort_key} missing on top or baseline entry")
    percent = relative_improvement(top_value, base_value)
    return ComparisonTable(
        entries=ranked,
        sort_key=sort_key,
        baseline_system=baseline_system,
        improvement_percent=percent,
        top_system=top.system,
    )


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    out = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(header)).rstrip()]
    out.append("  ".join("-" * w for w in widths))
    for row in rows:
        out.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(out)


def _fmt(value: float | None, decimals: int) -> str:
    if value is None:
        return "-"
    return f"{value:.{decimals}f}"


def scale_value(value: float, scale: str) -> float:
    return value * 100.0 if scale == "percent" else value


def metric_payload(report: MetricReport, scale: str = "fraction") -> dict:
    """JSON payload for an evaluation; fraction metrics obey the scale."""
    payload = report.to_dict()
    for name in FRACTION_METRICS:
        payload[name] = scale_value(payload[name], scale)
    payload["configs"] = {**payload["configs"], "metric_scale": scale}
    return payload


def render_metric_report(report: MetricReport, scale: str = "fraction") -> str:
    payload = metric_payload(report, scale)
    rows = []
    for name in ("bleu", "ter", "chrf", "f1"):
        decimals = 1 if name == "bleu" or scale == "percent" else 3
        rows.append(
            [name, _fmt(payload[name], decimals), ARROWS[METRIC_DIRECTIONS[name]]]
        )
    lines = [_table(["metric", "score", "better"], rows)]
    lines.append(f"segments: {report.n_segments}")
    return "\n".join(lines)


def render_comparison(table: ComparisonTable, scale: str = "fraction") -> str:
    header = [
        "Team",
        "System",
        f"BLEU {ARROWS['up']}",
        f"TER {ARROWS['down']}",
        f"ChrF {ARROWS['up']}",
    ]
    rows = []
    for entry in table.entries:
        marker = " (baseline)" if entry.system == table.baseline_system else ""
        ter_val = None if entry.ter is None else scale_value(entry.ter, scale)
        chrf_val = None if entry.chrf is None else scale_value(entry.chrf, scale)
        decimals = 1 if scale == "percent" else 3
        rows.append(
            [
                entry.team,
                entry.system + marker,
                _fmt(entry.bleu, 1),
                _fmt(ter_val, decimals),
                _fmt(chrf_val, decimals),
            ]
        )
    lines = [_table(header, rows)]
    lines.append(
        f"relative improvement ({table.sort_key}): "
        f"{table.improvement_percent:.1f}% ({table.improvement_percent:.0f}%) "
        f"for {table.top_system} vs {table.baseline_system}"
    )
    return "\n".join(lines)


def agreement_payload(
    sqm: float,
    by_annotator: dict,
    by_category: dict,
    weighted: dict,
    agreement: dict[str, KappaResult],
) -> dict:
    return {
        "sqm_mean": sqm,
        "errors_by_annotator": by_annotator,
        "errors_by_category": by_category,
        "total_errors": sum(by_category.values()),
        "mqm_weighted": weighted,
        "agreement": {name: result.to_dict() for name, result in agreement.items()},
    }


def render_agreement(payload: dict) -> str:
    sections = [f"SQM mean: {payload['sqm_mean']:.2f}"]

    rows = [[name, str(count)] for name, count in payload["errors_by_annotator"].items()]
    sections.append("errors per annotator\n" + _table(["annotator", "errors"], rows))

    rows = [[name, str(payload["errors_by_category"][name])] for name in LEAF_CATEGORIES]
    rows.append(["Total", str(payload["total_errors"])])
    sections.append("errors per category\n" + _table(["category", "errors"], rows))

    weighted = payload["mqm_weighted"]
    sections.append(
        "MQM weighted score: total {total:.1f}, per segment {per_segment:.2f}".format(**weighted)
    )

    rows = []
    for name in LEAF_CATEGORIES:
        result = payload["agreement"][name]
        kappa = result["kappa"]
        rows.append(
            [
                name,
                "-" if kappa is None else f"{kappa:.2f}",
                f"{result['p_o']:.2f}",
                f"{result['p_e']:.2f}",
                result["band"],
            ]
        )
    sections.append("agreement per category\n" + _table(["category", "kappa", "p_o", "p_e", "band"], rows))
    return "\n\n".join(sections)


def render_energy(report: EnergyReport) -> str:
    payload = report.to_dict()
    rows = [
        [
            payload["system_id"],
            _fmt(payload["max_power_watts"], 0),
            _fmt(payload["utilization"], 2),
            _fmt(payload["runtime_hours"], 2),
            _fmt(payload["kwh"], 1),
            _fmt(payload["kg_co2"], 3),
        ]
    ]
    header = ["System", "Power (W)", "Util", "Hours", "kWh", "kgCO2"]
    return _table(header, rows) + f"\nnote: {payload['note']}"


def log_run(command: str, payload: dict, log_dir=None) -> Path:
    """Append one timestamped JSON line to the per-command log.

    The line is written with a single O_APPEND write so concurrent
    invocations cannot interleave partial lines.
    """
    base = Path(log_dir or os.environ.get(LOG_DIR_ENV) or DEFAULT_LOG_DIR)
    base.mkdir(parents=True, exist_ok=True)
    path = base / f"{command}.jsonl"
    line = json.dumps(
        {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "command": command,
            "report": payload,
        },
        ensure_ascii=False,
    )
    fd = os.open(path, os.O_WRONLY | os.O_CREAT | os.O_APPEND, 0o644)
    try:
        os.write(fd, (line + "\n").encode("utf-8"))
    finally:
        os.close(fd)
    return path
