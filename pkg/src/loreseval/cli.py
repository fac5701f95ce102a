"""Command-line surface: one verb per toolkit capability.

Commands: evaluate, compare, agree, green, split, dedup, hpo.

Exit codes (stable, 0 only on full success):
  0  success
  1  usage errors or invalid parameter values
  2  file errors: missing, unreadable, empty, bad encoding, blank line,
     malformed JSON input
  3  alignment mismatch between the two sides of a file pair
  4  comparison input invalid: --baseline absent or unknown, fewer than
     two entries, sort metric missing
  5  annotation bundle invalid: schema violations, unknown categories,
     SQM out of range, duplicate records, annotator count not two

Every command honours --json (machine-readable stdout) and appends a
timestamped JSONL line to <log dir>/<command>.jsonl; the log directory
defaults to ./logs and can be overridden with LORES_EVAL_LOG_DIR.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus as corpus_mod
from . import greenreport, hpo, humaneval, reports
from .metrics import (
    BleuConfig,
    ChrfConfig,
    EmptyInput,
    LengthMismatch,
    MetricError,
    TokenizerConfig,
    evaluate_all,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep exit codes ours, not argparse's
        raise UsageError(message)


def _add_json_flag(parser):
    parser.add_argument("--json", action="store_true", help="print JSON instead of a table")


def build_parser() -> _Parser:
    parser = _Parser(prog="loreseval", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evaluate", help="score a hypothesis file against a reference file")
    p.add_argument("hypothesis", help="hypothesis file, one segment per line")
    p.add_argument("reference", help="reference file, aligned by line number")
    p.add_argument("--lowercase", action="store_true", help="case-insensitive scoring")
    p.add_argument("--chrf-beta", type=int, choices=(1, 3), default=3)
    p.add_argument("--metric-scale", choices=("fraction", "percent"), default="fraction")
    _add_json_flag(p)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("compare", help="render a sorted system comparison table")
    p.add_argument("entries", help="JSON array of {team, system, bleu, ter, chrf}")
    p.add_argument("--baseline", help="system name to compare the top entry against")
    p.add_argument("--sort", choices=("bleu", "ter", "chrf"), default="bleu")
    p.add_argument("--metric-scale", choices=("fraction", "percent"), default="fraction")
    _add_json_flag(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("agree", help="human-evaluation report for one system/direction")
    p.add_argument("annotations", help="JSONL annotation bundle")
    p.add_argument("--system", required=True, help="system id to report on")
    p.add_argument("--direction", required=True, help="direction, e.g. en2ga")
    _add_json_flag(p)
    p.set_defaults(func=cmd_agree)

    p = sub.add_parser("green", help="energy and emissions for a training run")
    p.add_argument("--power-watts", type=float, required=True)
    p.add_argument("--utilization", type=float, default=greenreport.DEFAULT_UTILIZATION)
    p.add_argument("--hours", type=float, required=True)
    intensity = p.add_mutually_exclusive_group(required=True)
    intensity.add_argument("--intensity", type=float, help="kgCO2 per kWh of the region")
    intensity.add_argument(
        "--carbon-neutral", action="store_true", help="assert a zero-emission region"
    )
    p.add_argument("--system-id", default="run")
    p.add_argument("--gpu-name", default="gpu")
    _add_json_flag(p)
    p.set_defaults(func=cmd_green)

    p = sub.add_parser("split", help="split a parallel corpus into train/valid/test files")
    p.add_argument("source", help="source-side file")
    p.add_argument("target", help="target-side file")
    p.add_argument("--source-lang", required=True)
    p.add_argument("--target-lang", required=True)
    p.add_argument("--ratio", required=True, help="train/validation/test, e.g. 0.8/0.1/0.1")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--seed", type=int, help="shuffle deterministically before slicing")
    _add_json_flag(p)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("dedup", help="drop duplicate segment pairs")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--source-lang", required=True)
    p.add_argument("--target-lang", required=True)
    p.add_argument("--out", required=True, help="output directory")
    _add_json_flag(p)
    p.set_defaults(func=cmd_dedup)

    p = sub.add_parser("hpo", help="enumerate a hyperparameter grid into trial configs")
    p.add_argument("--grid", required=True, help="JSON grid file")
    p.add_argument("--out", required=True, help="directory for trial_{index}.json files")
    p.add_argument("--template", help="JSON object merged under every trial")
    _add_json_flag(p)
    p.set_defaults(func=cmd_hpo)

    return parser


def _emit(args, payload: dict, rendered: str) -> int:
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(rendered)
    return 0


def cmd_evaluate(args) -> int:
    hyps = corpus_mod.read_segment_lines(args.hypothesis)
    refs = corpus_mod.read_segment_lines(args.reference)
    if len(hyps) != len(refs):
        raise LengthMismatch(len(hyps), len(refs))
    report = evaluate_all(
        hyps,
        refs,
        bleu_config=BleuConfig(lowercase=args.lowercase),
        chrf_config=ChrfConfig(beta=float(args.chrf_beta)),
        tokenizer=TokenizerConfig(lowercase=args.lowercase),
    )
    payload = reports.metric_payload(report, args.metric_scale)
    reports.log_run("evaluate", payload)
    return _emit(args, payload, reports.render_metric_report(report, args.metric_scale))


def cmd_compare(args) -> int:
    entries = reports.load_entries(args.entries)
    table = reports.build_comparison(entries, args.baseline, args.sort)
    payload = table.to_dict()
    reports.log_run("compare", payload)
    return _emit(args, payload, reports.render_comparison(table, args.metric_scale))


def cmd_agree(args) -> int:
    records = humaneval.load_annotations(args.annotations)
    sqm = humaneval.sqm_mean(records, args.system, args.direction)
    by_annotator = humaneval.mqm_error_counts(records, args.system, args.direction, "annotator")
    by_category = humaneval.mqm_error_counts(records, args.system, args.direction, "category")
    weighted = humaneval.mqm_weighted_score(records, args.system, args.direction)
    agreement = humaneval.agreement_report(records, args.system, args.direction)
    payload = reports.agreement_payload(sqm, by_annotator, by_category, weighted, agreement)
    reports.log_run("agree", payload)
    return _emit(args, payload, reports.render_agreement(payload))


def cmd_green(args) -> int:
    profile = greenreport.GpuProfile(
        name=args.gpu_name, max_power_watts=args.power_watts, utilization=args.utilization
    )
    run = greenreport.RunRecord(
        system_id=args.system_id,
        runtime_hours=args.hours,
        region_carbon_intensity=0.0 if args.carbon_neutral else args.intensity,
    )
    report = greenreport.build_report(profile, run)
    payload = report.to_dict()
    reports.log_run("green", payload)
    return _emit(args, payload, reports.render_energy(report))


def _parse_ratio(text: str) -> corpus_mod.SplitRatio:
    parts = text.split("/")
    if len(parts) != 3:
        raise UsageError(f"--ratio must be train/validation/test, got {text!r}")
    try:
        train, validation, test = (float(p) for p in parts)
    except ValueError:
        raise UsageError(f"--ratio parts must be numbers, got {text!r}") from None
    return corpus_mod.SplitRatio(train=train, validation=validation, test=test)


def cmd_split(args) -> int:
    corpus = corpus_mod.load_parallel(args.source, args.target, args.source_lang, args.target_lang)
    ratio = _parse_ratio(args.ratio)
    result = corpus_mod.split(corpus, ratio, seed=args.seed)
    files = corpus_mod.write_splits(result, args.out)
    payload = {
        "train": len(result.train),
        "validation": len(result.validation),
        "test": len(result.test),
        "dedup_removed": result.dedup_removed,
        "train_dropped": result.train_dropped,
        "seed": args.seed,
        "files": [str(f) for f in files],
    }
    reports.log_run("split", payload)
    rendered = (
        f"train {payload['train']}  validation {payload['validation']}  test {payload['test']}\n"
        f"duplicate pairs removed: {payload['dedup_removed']}"
        f" (train pairs colliding with held-out splits: {payload['train_dropped']})\n"
        + "\n".join(payload["files"])
    )
    return _emit(args, payload, rendered)


def cmd_dedup(args) -> int:
    corpus = corpus_mod.load_parallel(args.source, args.target, args.source_lang, args.target_lang)
    deduped, removed = corpus_mod.deduplicate(corpus)
    files = corpus_mod.write_pair(deduped, args.out, "deduped")
    payload = {"kept": len(deduped), "removed": removed, "files": [str(f) for f in files]}
    reports.log_run("dedup", payload)
    rendered = f"kept {payload['kept']} pairs, removed {removed}\n" + "\n".join(payload["files"])
    return _emit(args, payload, rendered)


def cmd_hpo(args) -> int:
    grid = hpo.load_grid(args.grid)
    trials = hpo.enumerate_grid(grid)
    template = None
    if args.template:
        template = json.loads(Path(args.template).read_text(encoding="utf-8"))
        if not isinstance(template, dict):
            raise hpo.HpoError("template file must hold a JSON object")
    written = hpo.emit_configs(trials, args.out, template)
    payload = {"trials": written, "out_dir": str(args.out)}
    reports.log_run("hpo", payload)
    return _emit(args, payload, f"wrote {written} trial configs to {args.out}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename or exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON: {exc}", file=sys.stderr)
        return 2
    except (corpus_mod.EmptyFile, corpus_mod.EncodingError, corpus_mod.BlankLine) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (corpus_mod.LineCountMismatch, LengthMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except reports.ComparisonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except humaneval.AnnotationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except EmptyInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        corpus_mod.CorpusError,
        MetricError,
        hpo.HpoError,
        greenreport.GreenReportError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
