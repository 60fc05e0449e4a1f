"""Test-suite data model: loading, validation, and sentence rendering.

A suite is a circuit-tagged set of items; each item maps condition names to
region-segmented sentences. Region identity is positional (1-based); the
declared ``region_names`` are documentation only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Mapping

from .errors import EmptySentence, MalformedDocument, MissingField, TypeMismatch


class Circuit(str, Enum):
    AGREEMENT = "Agreement"
    LICENSING = "Licensing"
    CENTER_EMBEDDING = "CenterEmbedding"
    LONG_DISTANCE_DEPENDENCIES = "LongDistanceDependencies"
    GROSS_SYNTACTIC_STATE = "GrossSyntacticState"
    GARDEN_PATH_EFFECTS = "GardenPathEffects"
    LINEARIZATION = "Linearization"


@dataclass(frozen=True)
class RegionedSentence:
    """An ordered list of regions; an empty string is a gap region."""

    regions: tuple[str, ...]


@dataclass(frozen=True)
class Item:
    index: int
    sentences: Mapping[str, RegionedSentence]


@dataclass(frozen=True)
class TestSuite:
    name: str
    circuit: Circuit
    language: str
    has_modifier: bool
    modifier_pair_id: str | None
    condition_names: tuple[str, ...]
    region_names: tuple[str, ...]
    items: tuple[Item, ...]
    predictions: tuple[str, ...]

    @property
    def region_count(self) -> int:
        return len(self.region_names)


class ValidationCode(str, Enum):
    EMPTY_CONDITION_NAMES = "EmptyConditionNames"
    EMPTY_REGION_NAMES = "EmptyRegionNames"
    DUPLICATE_CONDITION_NAME = "DuplicateConditionName"
    DUPLICATE_REGION_NAME = "DuplicateRegionName"
    MISSING_CONDITION = "MissingCondition"
    EXTRA_CONDITION = "ExtraCondition"
    REGION_COUNT_MISMATCH = "RegionCountMismatch"
    EMPTY_SENTENCE = "EmptySentence"
    LINE_BREAK_IN_REGION = "LineBreakInRegion"
    DUPLICATE_ITEM_INDEX = "DuplicateItemIndex"
    NON_CONTIGUOUS_ITEM_INDEX = "NonContiguousItemIndex"
    UNPARSEABLE_PREDICTION = "UnparseablePrediction"
    DANGLING_REGION_REF = "DanglingRegionRef"
    UNKNOWN_CONDITION_REF = "UnknownConditionRef"


@dataclass(frozen=True)
class ValidationError:
    code: ValidationCode
    message: str
    item_index: int | None = None


@dataclass(frozen=True)
class ValidationReport:
    errors: tuple[ValidationError, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.errors

    def codes(self) -> set[ValidationCode]:
        return {e.code for e in self.errors}


_TOP_LEVEL_KEYS = {
    "name",
    "circuit",
    "language",
    "has_modifier",
    "modifier_pair_id",
    "region_names",
    "condition_names",
    "predictions",
    "items",
}
_REQUIRED_KEYS = _TOP_LEVEL_KEYS - {"modifier_pair_id"}


def _expect(value: Any, typ: type, fieldname: str) -> Any:
    # bool is an int subtype; keep the check strict
    if typ is int and isinstance(value, bool):
        raise TypeMismatch(fieldname, "int", value)
    if not isinstance(value, typ):
        raise TypeMismatch(fieldname, typ.__name__, value)
    return value


def _string_list(value: Any, fieldname: str) -> tuple[str, ...]:
    _expect(value, list, fieldname)
    for i, entry in enumerate(value):
        _expect(entry, str, f"{fieldname}[{i}]")
    return tuple(value)


def load_suite(data: bytes | str) -> TestSuite:
    """Parse a suite document. Shape and primitive types are checked here;
    cross-field invariants are ``validate_suite``'s job."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"invalid suite document: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedDocument("suite document must be a single object")

    unknown = set(doc) - _TOP_LEVEL_KEYS
    if unknown:
        raise MalformedDocument(f"unknown keys: {sorted(unknown)}")
    for key in sorted(_REQUIRED_KEYS):
        if key not in doc:
            raise MissingField(key)

    circuit_raw = _expect(doc["circuit"], str, "circuit")
    try:
        circuit = Circuit(circuit_raw)
    except ValueError:
        raise MalformedDocument(
            f"unknown circuit {circuit_raw!r}; expected one of "
            f"{[c.value for c in Circuit]}"
        ) from None

    pair_id = doc.get("modifier_pair_id")
    if pair_id is not None:
        _expect(pair_id, str, "modifier_pair_id")

    items = []
    _expect(doc["items"], list, "items")
    for i, raw in enumerate(doc["items"]):
        _expect(raw, dict, f"items[{i}]")
        unknown = set(raw) - {"index", "conditions"}
        if unknown:
            raise MalformedDocument(f"items[{i}]: unknown keys: {sorted(unknown)}")
        if "index" not in raw:
            raise MissingField(f"items[{i}].index")
        if "conditions" not in raw:
            raise MissingField(f"items[{i}].conditions")
        index = _expect(raw["index"], int, f"items[{i}].index")
        conditions = _expect(raw["conditions"], dict, f"items[{i}].conditions")
        sentences = {}
        for cond, spec in conditions.items():
            where = f"items[{i}].conditions[{cond!r}]"
            _expect(spec, dict, where)
            unknown = set(spec) - {"regions"}
            if unknown:
                raise MalformedDocument(f"{where}: unknown keys: {sorted(unknown)}")
            if "regions" not in spec:
                raise MissingField(f"{where}.regions")
            sentences[cond] = RegionedSentence(_string_list(spec["regions"], f"{where}.regions"))
        items.append(Item(index=index, sentences=sentences))

    return TestSuite(
        name=_expect(doc["name"], str, "name"),
        circuit=circuit,
        language=_expect(doc["language"], str, "language"),
        has_modifier=_expect(doc["has_modifier"], bool, "has_modifier"),
        modifier_pair_id=pair_id,
        condition_names=_string_list(doc["condition_names"], "condition_names"),
        region_names=_string_list(doc["region_names"], "region_names"),
        items=tuple(items),
        predictions=_string_list(doc["predictions"], "predictions"),
    )


def suite_to_document(suite: TestSuite) -> dict:
    """Inverse of ``load_suite``: plain-dict form of a suite."""
    return {
        "name": suite.name,
        "circuit": suite.circuit.value,
        "language": suite.language,
        "has_modifier": suite.has_modifier,
        "modifier_pair_id": suite.modifier_pair_id,
        "region_names": list(suite.region_names),
        "condition_names": list(suite.condition_names),
        "predictions": list(suite.predictions),
        "items": [
            {
                "index": item.index,
                "conditions": {
                    cond: {"regions": list(sent.regions)}
                    for cond, sent in item.sentences.items()
                },
            }
            for item in suite.items
        ],
    }


def serialize_suite(suite: TestSuite) -> bytes:
    return (json.dumps(suite_to_document(suite), ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def validate_suite(suite: TestSuite) -> ValidationReport:
    """Check every cross-field invariant; violations are report entries."""
    from .predictions import parse_prediction, referenced_targets

    errors: list[ValidationError] = []

    def err(code: ValidationCode, message: str, item_index: int | None = None) -> None:
        errors.append(ValidationError(code=code, message=message, item_index=item_index))

    if not suite.condition_names:
        err(ValidationCode.EMPTY_CONDITION_NAMES, "condition_names is empty")
    if not suite.region_names:
        err(ValidationCode.EMPTY_REGION_NAMES, "region_names is empty")

    seen: set[str] = set()
    for name in suite.condition_names:
        if name in seen:
            err(ValidationCode.DUPLICATE_CONDITION_NAME, f"condition {name!r} declared twice")
        seen.add(name)
    seen = set()
    for name in suite.region_names:
        if name in seen:
            err(ValidationCode.DUPLICATE_REGION_NAME, f"region {name!r} declared twice")
        seen.add(name)

    declared = set(suite.condition_names)
    n_regions = suite.region_count
    for item in suite.items:
        for cond in suite.condition_names:
            if cond not in item.sentences:
                err(
                    ValidationCode.MISSING_CONDITION,
                    f"item {item.index} lacks condition {cond!r}",
                    item.index,
                )
        for cond in item.sentences:
            if cond not in declared:
                err(
                    ValidationCode.EXTRA_CONDITION,
                    f"item {item.index} has undeclared condition {cond!r}",
                    item.index,
                )
        for cond, sentence in item.sentences.items():
            if len(sentence.regions) != n_regions:
                err(
                    ValidationCode.REGION_COUNT_MISMATCH,
                    f"item {item.index}, condition {cond!r}: "
                    f"{len(sentence.regions)} regions, declared {n_regions}",
                    item.index,
                )
            if sentence.regions and not any(sentence.regions):
                err(
                    ValidationCode.EMPTY_SENTENCE,
                    f"item {item.index}, condition {cond!r}: all regions empty",
                    item.index,
                )
            for r, region in enumerate(sentence.regions, 1):
                if "\n" in region or "\r" in region:
                    err(
                        ValidationCode.LINE_BREAK_IN_REGION,
                        f"item {item.index}, condition {cond!r}, region {r}: line break",
                        item.index,
                    )

    indices = [item.index for item in suite.items]
    dup = sorted({i for i in indices if indices.count(i) > 1})
    if dup:
        for i in dup:
            err(ValidationCode.DUPLICATE_ITEM_INDEX, f"item index {i} occurs more than once")
    elif indices and sorted(indices) != list(range(1, len(indices) + 1)):
        err(
            ValidationCode.NON_CONTIGUOUS_ITEM_INDEX,
            f"item indices {sorted(indices)} do not form 1..{len(indices)}",
        )

    for source in suite.predictions:
        try:
            ast = parse_prediction(source)
        except Exception as exc:
            err(ValidationCode.UNPARSEABLE_PREDICTION, f"{source!r}: {exc}")
            continue
        for region, cond in sorted(referenced_targets(ast)):
            if not 1 <= region <= n_regions:
                err(
                    ValidationCode.DANGLING_REGION_REF,
                    f"{source!r} references region {region} of a {n_regions}-region suite",
                )
            if cond not in declared:
                err(
                    ValidationCode.UNKNOWN_CONDITION_REF,
                    f"{source!r} references undeclared condition {cond!r}",
                )

    return ValidationReport(errors=tuple(errors))


Span = tuple[int, int]


def render_sentence(sentence: RegionedSentence) -> tuple[str, list[Span]]:
    """Join non-empty regions with single spaces and return per-region
    half-open char spans. Empty regions get an empty span at the point where
    the next non-empty region starts (end of text if there is none)."""
    if not any(sentence.regions):
        raise EmptySentence("all regions are empty")

    text_parts: list[str] = []
    spans: list[Span | None] = []
    pos = 0
    for region in sentence.regions:
        if not region:
            spans.append(None)
            continue
        if text_parts:
            pos += 1  # join space
        start = pos
        pos += len(region)
        text_parts.append(region)
        spans.append((start, pos))

    text = " ".join(text_parts)
    resolved: list[Span] = []
    for i, span in enumerate(spans):
        if span is not None:
            resolved.append(span)
            continue
        anchor = len(text)
        for later in spans[i + 1:]:
            if later is not None:
                anchor = later[0]
                break
        resolved.append((anchor, anchor))
    return text, resolved
