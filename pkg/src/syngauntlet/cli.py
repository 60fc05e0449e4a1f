"""Command-line front door: validate suites, run evaluations, compare reports.

Exit codes: 0 success; 1 validation findings or report mismatch; 2 unreadable
or invalid input; 3 scorer failure during a run (partial report written).
"""

from __future__ import annotations

import argparse
import glob
import json
import os
import sys
from pathlib import Path

from .engine import (
    compare_runs,
    evaluate_run,
    load_report,
    render_comparison_table,
    render_report_table,
    report_to_csv,
    report_to_json_bytes,
)
from .errors import ScorerUnavailable, SuiteSetMismatch, SyngauntletError
from .remote import FillClient, RemoteScorer, RequestPolicy
from .scoring import NgramScorer, UniformScorer, train_ngram
from .suite_data import data_root
from .suites import TestSuite, load_suite, validate_suite

ENDPOINT_ENV = "SYNGAUNTLET_ENDPOINT"

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_UNREADABLE = 2
EXIT_SCORER_FAILURE = 3


def _collect_paths(patterns: list[str]) -> list[Path]:
    """Expand files, directories, and glob patterns into suite document paths."""
    paths: list[Path] = []
    for pattern in patterns:
        p = Path(pattern)
        if p.is_dir():
            paths.extend(sorted(p.rglob("*.json")))
        elif p.is_file():
            paths.append(p)
        else:
            matches = sorted(glob.glob(pattern, recursive=True))
            if not matches:
                raise FileNotFoundError(pattern)
            for m in matches:
                mp = Path(m)
                if mp.is_dir():
                    paths.extend(sorted(mp.rglob("*.json")))
                else:
                    paths.append(mp)
    return [p for p in paths if p.name != "anchors.json"]


def _shipped_paths() -> list[Path]:
    root = Path(str(data_root()))
    return [p for p in sorted(root.rglob("*.json")) if p.name != "anchors.json"]


def _load_suites(paths: list[Path]) -> list[tuple[Path, TestSuite]]:
    return [(path, load_suite(path.read_bytes())) for path in paths]


def _apply_filters(suites, language: str | None, circuit: str | None):
    if language:
        suites = [(p, s) for p, s in suites if s.language == language]
    if circuit:
        wanted = circuit.replace("_", "").lower()
        suites = [
            (p, s) for p, s in suites
            if s.circuit.value.lower() == wanted or s.circuit.name.lower() == circuit.lower()
        ]
    return suites


def _merge_config(args: argparse.Namespace, defaults: dict) -> dict:
    """Effective settings with precedence: flags > config file > defaults."""
    settings = dict(defaults)
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            settings.update(json.load(fh))
    for key in defaults:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    return settings


_RUN_DEFAULTS = {
    "scorer": "uniform",
    "corpus": None,
    "order": 3,
    "lambdas": "0.6,0.3,0.1",
    "vocab_size": 1024,
    "endpoint": None,
    "timeout_ms": 10000,
    "retries": 3,
    "in_flight": 4,
    "workers": 1,
    "format": "table",
    "out": None,
    "language": None,
    "circuit": None,
}


def _build_scorer(settings: dict):
    kind = settings["scorer"]
    if kind == "uniform":
        return UniformScorer(int(settings["vocab_size"]))
    if kind == "ngram":
        corpus_path = settings.get("corpus")
        if not corpus_path:
            raise SyngauntletError("--corpus is required for the ngram scorer")
        with open(corpus_path, "r", encoding="utf-8") as fh:
            sentences = [line.strip() for line in fh if line.strip()]
        weights = tuple(float(w) for w in str(settings["lambdas"]).split(","))
        model = train_ngram(sentences, order=int(settings["order"]), weights=weights)
        name = Path(corpus_path).stem
        return NgramScorer(model, scorer_id=f"ngram-k{model.order}-{name}")
    if kind == "remote":
        endpoint = settings.get("endpoint") or os.environ.get(ENDPOINT_ENV)
        if not endpoint:
            raise SyngauntletError(
                f"--endpoint or ${ENDPOINT_ENV} is required for the remote scorer"
            )
        policy = RequestPolicy(
            timeout_s=float(settings["timeout_ms"]) / 1000.0,
            max_retries=int(settings["retries"]),
            max_in_flight=int(settings["in_flight"]),
        )
        return RemoteScorer(FillClient(endpoint, policy))
    raise SyngauntletError(f"unknown scorer kind {kind!r}")


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        paths = _collect_paths(args.paths) if args.paths else _shipped_paths()
        loaded = _load_suites(paths)
    except (OSError, SyngauntletError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNREADABLE
    clean = True
    for path, suite in loaded:
        report = validate_suite(suite)
        if report.ok:
            print(f"{path}: OK ({suite.name}, {len(suite.items)} items)")
        else:
            clean = False
            print(f"{path}: {len(report.errors)} problem(s)")
            for error in report.errors:
                where = f" [item {error.item_index}]" if error.item_index else ""
                print(f"  {error.code.value}{where}: {error.message}")
    return EXIT_OK if clean else EXIT_FINDINGS


def cmd_run(args: argparse.Namespace) -> int:
    try:
        settings = _merge_config(args, _RUN_DEFAULTS)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return EXIT_UNREADABLE

    try:
        paths = _collect_paths(args.paths) if args.paths else _shipped_paths()
        loaded = _apply_filters(_load_suites(paths), settings["language"], settings["circuit"])
    except (OSError, SyngauntletError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNREADABLE
    if not loaded:
        print("error: no suites selected", file=sys.stderr)
        return EXIT_UNREADABLE

    invalid = False
    for path, suite in loaded:
        report = validate_suite(suite)
        if not report.ok:
            invalid = True
            print(f"error: {path} fails validation: {report.errors[0].message}", file=sys.stderr)
    if invalid:
        return EXIT_UNREADABLE

    try:
        scorer = _build_scorer(settings)
    except (OSError, SyngauntletError) as exc:
        print(f"error: cannot build scorer: {exc}", file=sys.stderr)
        return EXIT_UNREADABLE

    try:
        report = evaluate_run(
            [suite for _, suite in loaded], scorer, workers=int(settings["workers"])
        )
    except ScorerUnavailable as exc:
        print(f"error: scorer unavailable: {exc}", file=sys.stderr)
        return EXIT_SCORER_FAILURE

    fmt = settings["format"]
    if fmt == "json":
        payload = report_to_json_bytes(report)
    elif fmt == "csv":
        payload = report_to_csv(report).encode("utf-8")
    else:
        payload = render_report_table(report).encode("utf-8")

    out = settings["out"]
    if out:
        Path(out).write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()

    if report.partial:
        print(f"error: scorer failed mid-run: {report.error}", file=sys.stderr)
        return EXIT_SCORER_FAILURE
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    try:
        reports = [load_report(Path(p).read_bytes()) for p in args.reports]
    except (OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: cannot read report: {exc}", file=sys.stderr)
        return EXIT_UNREADABLE
    try:
        table = compare_runs(reports)
    except SuiteSetMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FINDINGS
    sys.stdout.write(render_comparison_table(table))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="syngauntlet",
        description="Run surprisal-based syntactic test suites against LM scorers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="check suite documents against the format invariants")
    p_validate.add_argument("paths", nargs="*", help="suite files, dirs, or globs (default: shipped set)")
    p_validate.set_defaults(func=cmd_validate)

    p_run = sub.add_parser("run", help="evaluate suites with a scorer and write a report")
    p_run.add_argument("paths", nargs="*", help="suite files, dirs, or globs (default: shipped set)")
    p_run.add_argument("--config", help="JSON config file (flags take precedence)")
    p_run.add_argument("--scorer", choices=["ngram", "uniform", "remote"])
    p_run.add_argument("--corpus", help="training corpus for the ngram scorer (one sentence per line)")
    p_run.add_argument("--order", type=int, help="ngram order K")
    p_run.add_argument("--lambdas", help="comma-separated interpolation weights, highest order first")
    p_run.add_argument("--vocab-size", dest="vocab_size", type=int, help="uniform scorer vocabulary size")
    p_run.add_argument("--endpoint", help=f"fill service endpoint (default: ${ENDPOINT_ENV})")
    p_run.add_argument("--timeout-ms", dest="timeout_ms", type=int)
    p_run.add_argument("--retries", type=int)
    p_run.add_argument("--in-flight", dest="in_flight", type=int)
    p_run.add_argument("--workers", type=int)
    p_run.add_argument("--format", choices=["table", "json", "csv"])
    p_run.add_argument("--out", help="write the report here instead of stdout")
    p_run.add_argument("--language", help="only suites with this language tag")
    p_run.add_argument("--circuit", help="only suites in this circuit")
    p_run.set_defaults(func=cmd_run)

    p_compare = sub.add_parser("compare", help="side-by-side matrix over saved JSON reports")
    p_compare.add_argument("reports", nargs="+", help="JSON report files (>= 2)")
    p_compare.set_defaults(func=cmd_compare)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "compare" and len(args.reports) < 2:
        print("error: compare needs at least two reports", file=sys.stderr)
        return EXIT_UNREADABLE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
