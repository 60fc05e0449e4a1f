"""Suite evaluation: render, score, align, evaluate predictions, aggregate.

An item passes iff every one of its suite's predictions holds on the item's
surprisal table. Suite accuracy is the fraction of passing items; a run
aggregates unweighted means per circuit and overall plus modifier pairs.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from statistics import fmean
from typing import Mapping, Sequence

from .alignment import assign_regions, region_surprisals
from .errors import (
    DuplicateSuiteName,
    ProtocolViolation,
    ScorerFailure,
    ScorerUnavailable,
    SuiteSetMismatch,
    TokenizationMismatch,
)
from .predictions import (
    PredictionAst,
    SurprisalTable,
    evaluate_prediction,
    parse_prediction,
)
from .scoring import Scorer
from .suites import Circuit, Item, TestSuite, render_sentence

_SCORER_ERRORS = (ScorerUnavailable, ProtocolViolation, TokenizationMismatch)


@dataclass(frozen=True)
class ItemResult:
    item_index: int
    prediction_results: tuple[bool, ...]
    passed: bool
    table: SurprisalTable


@dataclass(frozen=True)
class SuiteResult:
    suite_name: str
    circuit: Circuit
    language: str
    has_modifier: bool
    modifier_pair_id: str | None
    item_results: tuple[ItemResult, ...]
    accuracy: float


@dataclass(frozen=True)
class ModifierPair:
    pair_id: str
    accuracy_without: float
    accuracy_with: float


@dataclass(frozen=True)
class RunReport:
    scorer_id: str
    suite_results: tuple[SuiteResult, ...]
    circuit_means: Mapping[str, float]
    overall: float
    modifier_pairs: tuple[ModifierPair, ...]
    partial: bool = False
    error: str | None = None


def _parsed_predictions(suite: TestSuite) -> list[PredictionAst]:
    return [parse_prediction(source) for source in suite.predictions]


def build_item_table(suite: TestSuite, item: Item, scorer: Scorer) -> SurprisalTable:
    """Render, score, align, and aggregate every condition of one item."""
    entries: dict[tuple[str, int], float] = {}
    for condition in suite.condition_names:
        sentence = item.sentences[condition]
        text, spans = render_sentence(sentence)
        tokens = scorer.score(text)
        assignment = assign_regions(spans, tokens)
        fragment = region_surprisals(assignment, tokens, suite.region_count, condition)
        entries.update(dict(fragment.items()))
    return SurprisalTable(entries)


def evaluate_item(
    suite: TestSuite,
    item: Item,
    scorer: Scorer,
    parsed: Sequence[PredictionAst] | None = None,
) -> ItemResult:
    if parsed is None:
        parsed = _parsed_predictions(suite)
    try:
        table = build_item_table(suite, item, scorer)
    except _SCORER_ERRORS as exc:
        raise ScorerFailure(suite.name, item.index, exc) from exc
    results = tuple(evaluate_prediction(ast, table) for ast in parsed)
    return ItemResult(
        item_index=item.index,
        prediction_results=results,
        passed=all(results),
        table=table,
    )


def evaluate_suite(suite: TestSuite, scorer: Scorer, workers: int = 1) -> SuiteResult:
    parsed = _parsed_predictions(suite)
    if workers <= 1:
        results = [evaluate_item(suite, item, scorer, parsed) for item in suite.items]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(evaluate_item, suite, item, scorer, parsed)
                for item in suite.items
            ]
            # surface the first failure in item order, not completion order
            results = []
            failure: ScorerFailure | None = None
            for future in futures:
                try:
                    results.append(future.result())
                except ScorerFailure as exc:
                    failure = failure or exc
            if failure is not None:
                raise failure
    passed = sum(1 for r in results if r.passed)
    return SuiteResult(
        suite_name=suite.name,
        circuit=suite.circuit,
        language=suite.language,
        has_modifier=suite.has_modifier,
        modifier_pair_id=suite.modifier_pair_id,
        item_results=tuple(results),
        accuracy=passed / len(results) if results else 0.0,
    )


def _aggregate(scorer_id: str, suite_results: Sequence[SuiteResult],
               partial: bool = False, error: str | None = None) -> RunReport:
    by_circuit: dict[str, list[float]] = {}
    for result in suite_results:
        by_circuit.setdefault(result.circuit.value, []).append(result.accuracy)
    circuit_means = {name: fmean(accs) for name, accs in sorted(by_circuit.items())}
    overall = fmean([r.accuracy for r in suite_results]) if suite_results else 0.0

    pairs = []
    pair_ids = sorted({r.modifier_pair_id for r in suite_results if r.modifier_pair_id})
    for pair_id in pair_ids:
        without = [r.accuracy for r in suite_results
                   if r.modifier_pair_id == pair_id and not r.has_modifier]
        with_mod = [r.accuracy for r in suite_results
                    if r.modifier_pair_id == pair_id and r.has_modifier]
        if without and with_mod:
            pairs.append(ModifierPair(pair_id, fmean(without), fmean(with_mod)))

    return RunReport(
        scorer_id=scorer_id,
        suite_results=tuple(suite_results),
        circuit_means=circuit_means,
        overall=overall,
        modifier_pairs=tuple(pairs),
        partial=partial,
        error=error,
    )


def evaluate_run(suites: Sequence[TestSuite], scorer: Scorer, workers: int = 1) -> RunReport:
    """Evaluate suites in order; a scorer failure aborts the run and yields a
    report flagged partial rather than silently skipping items."""
    if not suites:
        raise ValueError("no suites to evaluate")
    seen: set[str] = set()
    for suite in suites:
        if suite.name in seen:
            raise DuplicateSuiteName(suite.name)
        seen.add(suite.name)

    completed: list[SuiteResult] = []
    for suite in suites:
        try:
            completed.append(evaluate_suite(suite, scorer, workers=workers))
        except ScorerFailure as exc:
            return _aggregate(scorer.descriptor.id, completed, partial=True, error=str(exc))
    return _aggregate(scorer.descriptor.id, completed)


# --- comparison -------------------------------------------------------------------

@dataclass(frozen=True)
class ComparisonTable:
    column_labels: tuple[str, ...]
    rows: tuple[tuple[str, tuple[float, ...]], ...]  # (label, one value per column)


def compare_runs(reports: Sequence[RunReport]) -> ComparisonTable:
    """Side-by-side per-suite/per-circuit/overall matrix over identical suite sets."""
    if not reports:
        raise ValueError("no reports to compare")
    base = [r.suite_name for r in reports[0].suite_results]
    for report in reports[1:]:
        names = [r.suite_name for r in report.suite_results]
        if sorted(names) != sorted(base):
            raise SuiteSetMismatch(
                f"report {report.scorer_id!r} covers a different suite set"
            )

    def accuracy_of(report: RunReport, suite_name: str) -> float:
        for result in report.suite_results:
            if result.suite_name == suite_name:
                return result.accuracy
        raise SuiteSetMismatch(suite_name)

    rows: list[tuple[str, tuple[float, ...]]] = []
    first = reports[0]
    for result in first.suite_results:
        rows.append((
            result.suite_name,
            tuple(accuracy_of(r, result.suite_name) for r in reports),
        ))
    for circuit in sorted(first.circuit_means):
        rows.append((
            f"[{circuit}]",
            tuple(r.circuit_means.get(circuit, 0.0) for r in reports),
        ))
    rows.append(("overall", tuple(r.overall for r in reports)))
    return ComparisonTable(
        column_labels=tuple(r.scorer_id for r in reports),
        rows=tuple(rows),
    )


# --- serialization ------------------------------------------------------------------

def _pct(value: float) -> str:
    return f"{value * 100:.2f}"


def report_to_dict(report: RunReport) -> dict:
    return {
        "scorer_id": report.scorer_id,
        "partial": report.partial,
        "error": report.error,
        "overall": report.overall,
        "circuit_means": dict(report.circuit_means),
        "modifier_pairs": [
            {
                "pair_id": p.pair_id,
                "accuracy_without": p.accuracy_without,
                "accuracy_with": p.accuracy_with,
            }
            for p in report.modifier_pairs
        ],
        "suites": [
            {
                "name": s.suite_name,
                "circuit": s.circuit.value,
                "language": s.language,
                "has_modifier": s.has_modifier,
                "modifier_pair_id": s.modifier_pair_id,
                "accuracy": s.accuracy,
                "items": [
                    {
                        "index": item.item_index,
                        "passed": item.passed,
                        "predictions": list(item.prediction_results),
                        "surprisals": _table_to_dict(item.table),
                    }
                    for item in s.item_results
                ],
            }
            for s in report.suite_results
        ],
    }


def _table_to_dict(table: SurprisalTable) -> dict[str, list[float]]:
    by_condition: dict[str, dict[int, float]] = {}
    for (condition, region), value in table.items():
        by_condition.setdefault(condition, {})[region] = value
    return {
        condition: [regions[r] for r in sorted(regions)]
        for condition, regions in sorted(by_condition.items())
    }


def report_to_json_bytes(report: RunReport) -> bytes:
    doc = report_to_dict(report)
    return (json.dumps(doc, ensure_ascii=False, sort_keys=True, indent=2) + "\n").encode("utf-8")


def load_report(data: bytes | str) -> RunReport:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    doc = json.loads(data)
    suites = []
    for s in doc["suites"]:
        items = tuple(
            ItemResult(
                item_index=i["index"],
                prediction_results=tuple(bool(b) for b in i["predictions"]),
                passed=i["passed"],
                table=SurprisalTable({
                    (condition, r): value
                    for condition, values in i["surprisals"].items()
                    for r, value in enumerate(values, 1)
                }),
            )
            for i in s["items"]
        )
        suites.append(SuiteResult(
            suite_name=s["name"],
            circuit=Circuit(s["circuit"]),
            language=s["language"],
            has_modifier=s["has_modifier"],
            modifier_pair_id=s.get("modifier_pair_id"),
            item_results=items,
            accuracy=s["accuracy"],
        ))
    return RunReport(
        scorer_id=doc["scorer_id"],
        suite_results=tuple(suites),
        circuit_means=dict(doc["circuit_means"]),
        overall=doc["overall"],
        modifier_pairs=tuple(
            ModifierPair(p["pair_id"], p["accuracy_without"], p["accuracy_with"])
            for p in doc["modifier_pairs"]
        ),
        partial=doc.get("partial", False),
        error=doc.get("error"),
    )


def report_to_csv(report: RunReport) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["suite", "circuit", "language", "has_modifier", "accuracy"])
    for result in report.suite_results:
        writer.writerow([
            result.suite_name,
            result.circuit.value,
            result.language,
            str(result.has_modifier).lower(),
            repr(result.accuracy),
        ])
    return out.getvalue()


def render_report_table(report: RunReport) -> str:
    """Human-readable run report: suites grouped by circuit, percent scores."""
    lines = [f"scorer: {report.scorer_id}"]
    if report.partial:
        lines.append(f"PARTIAL RESULTS: {report.error}")
    width = max(
        [len(s.suite_name) + 2 for s in report.suite_results]
        + [len(c) + 2 for c in report.circuit_means]
        + [12],
    )
    for circuit in sorted(report.circuit_means):
        lines.append(circuit)
        for result in report.suite_results:
            if result.circuit.value != circuit:
                continue
            name = result.suite_name
            lines.append(f"  {name:<{width}} {_pct(result.accuracy):>8}")
        lines.append(f"  {'[circuit mean]':<{width}} {_pct(report.circuit_means[circuit]):>8}")
    lines.append(f"{'overall':<{width + 2}} {_pct(report.overall):>8}")
    if report.modifier_pairs:
        lines.append("modifier pairs (accuracy without / with):")
        for pair in report.modifier_pairs:
            lines.append(
                f"  {pair.pair_id:<{width}} "
                f"{_pct(pair.accuracy_without):>8} {_pct(pair.accuracy_with):>8}"
            )
    return "\n".join(lines) + "\n"


def render_comparison_table(table: ComparisonTable) -> str:
    label_width = max([len(label) for label, _ in table.rows] + [len("suite")])
    col_width = max([len(c) for c in table.column_labels] + [8])
    header = f"{'suite':<{label_width}}"
    for col in table.column_labels:
        header += f" {col:>{col_width}}"
    lines = [header]
    for label, values in table.rows:
        line = f"{label:<{label_width}}"
        for value in values:
            line += f" {_pct(value):>{col_width}}"
        lines.append(line)
    return "\n".join(lines) + "\n"
