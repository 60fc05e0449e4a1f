"""Suite model: loading, validation, rendering."""

import json

import pytest
from hypothesis import given, settings, strategies as st

from syngauntlet.errors import EmptySentence, MalformedDocument, MissingField, TypeMismatch
from syngauntlet.suites import (
    Circuit,
    RegionedSentence,
    ValidationCode,
    load_suite,
    render_sentence,
    serialize_suite,
    suite_to_document,
    validate_suite,
)

from helpers import base_suite_doc


def _load(doc: dict):
    return load_suite(json.dumps(doc, ensure_ascii=False))


class TestLoadSuite:
    def test_minimal_document(self):
        suite = _load(base_suite_doc())
        assert suite.name == "fixture-basic"
        assert suite.circuit is Circuit.AGREEMENT
        assert suite.condition_names == ("match", "mismatch")
        assert len(suite.items) == 3
        assert suite.items[0].sentences["match"].regions == ("El gato", "duerme")

    def test_single_item_document(self):
        doc = base_suite_doc()
        doc["items"] = doc["items"][:1]
        suite = _load(doc)
        assert len(suite.items) == 1
        assert validate_suite(suite).ok

    def test_missing_circuit(self):
        doc = base_suite_doc()
        del doc["circuit"]
        with pytest.raises(MissingField) as exc:
            _load(doc)
        assert exc.value.field == "circuit"

    def test_unknown_key_rejected(self):
        doc = base_suite_doc()
        doc["surprise"] = 1
        with pytest.raises(MalformedDocument):
            _load(doc)

    def test_type_mismatch(self):
        doc = base_suite_doc()
        doc["has_modifier"] = "yes"
        with pytest.raises(TypeMismatch):
            _load(doc)

    def test_bad_json(self):
        with pytest.raises(MalformedDocument):
            load_suite(b"{not json")

    def test_unknown_circuit(self):
        doc = base_suite_doc()
        doc["circuit"] = "Morphology"
        with pytest.raises(MalformedDocument):
            _load(doc)

    def test_load_does_not_cross_validate(self):
        # loading tolerates a dangling prediction; validate reports it
        doc = base_suite_doc()
        doc["predictions"] = ["(9;match) < (2;mismatch)"]
        suite = _load(doc)
        assert not validate_suite(suite).ok

    def test_round_trip(self):
        suite = _load(base_suite_doc())
        again = load_suite(serialize_suite(suite))
        assert again == suite
        assert suite_to_document(again) == suite_to_document(suite)


class TestValidateSuite:
    def test_clean(self):
        report = validate_suite(_load(base_suite_doc()))
        assert report.ok
        assert report.errors == ()

    def test_purity(self):
        suite = _load(base_suite_doc())
        assert validate_suite(suite) == validate_suite(suite)

    def test_missing_condition_carries_item_index(self):
        doc = base_suite_doc()
        del doc["items"][2]["conditions"]["mismatch"]
        report = validate_suite(_load(doc))
        assert [e.code for e in report.errors] == [ValidationCode.MISSING_CONDITION]
        assert report.errors[0].item_index == 3

    def test_extra_condition(self):
        doc = base_suite_doc()
        doc["items"][0]["conditions"]["bonus"] = {"regions": ["El gato", "duerme ya"]}
        report = validate_suite(_load(doc))
        assert report.codes() == {ValidationCode.EXTRA_CONDITION}

    def test_dangling_region_ref(self):
        doc = base_suite_doc()
        doc["predictions"] = ["(9;match) < (2;mismatch)"]
        report = validate_suite(_load(doc))
        assert report.codes() == {ValidationCode.DANGLING_REGION_REF}

    def test_empty_declared_name_lists(self):
        doc = base_suite_doc()
        doc["region_names"] = []
        doc["predictions"] = []
        for item in doc["items"]:
            for spec in item["conditions"].values():
                spec["regions"] = []
        report = validate_suite(_load(doc))
        assert report.codes() == {ValidationCode.EMPTY_REGION_NAMES}

        doc = base_suite_doc()
        doc["condition_names"] = []
        doc["predictions"] = []
        report = validate_suite(_load(doc))
        assert ValidationCode.EMPTY_CONDITION_NAMES in report.codes()

    def test_line_break_in_region(self):
        doc = base_suite_doc()
        doc["items"][0]["conditions"]["match"]["regions"] = ["El gato", "duerme\nbien"]
        report = validate_suite(_load(doc))
        assert report.codes() == {ValidationCode.LINE_BREAK_IN_REGION}

    def test_non_contiguous_item_indices(self):
        doc = base_suite_doc()
        doc["items"][2]["index"] = 7
        report = validate_suite(_load(doc))
        assert report.codes() == {ValidationCode.NON_CONTIGUOUS_ITEM_INDEX}


class TestRenderSentence:
    def test_three_regions(self):
        text, spans = render_sentence(RegionedSentence(("The girls", "run", "fast.")))
        assert text == "The girls run fast."
        assert spans == [(0, 9), (10, 13), (14, 19)]

    def test_gap_region_span(self):
        sentence = RegionedSentence(("Yo sé lo que tu amigo tiró", "", "al suelo."))
        text, spans = render_sentence(sentence)
        assert text == "Yo sé lo que tu amigo tiró al suelo."
        assert spans[1] == (27, 27)
        assert text[spans[2][0]:spans[2][1]] == "al suelo."

    def test_all_empty(self):
        with pytest.raises(EmptySentence):
            render_sentence(RegionedSentence(("", "")))

    def test_leading_and_trailing_gaps(self):
        text, spans = render_sentence(RegionedSentence(("", "hola", "")))
        assert text == "hola"
        assert spans == [(0, 0), (0, 4), (4, 4)]

    @settings(derandomize=True)
    @given(st.lists(
        st.text(alphabet=st.characters(blacklist_characters="\n\r"), max_size=8),
        min_size=1, max_size=6,
    ).filter(lambda regions: any(regions)))
    def test_span_reconstruction(self, regions):
        text, spans = render_sentence(RegionedSentence(tuple(regions)))
        assert len(spans) == len(regions)
        previous_end = 0
        for (start, end), region in zip(spans, regions):
            assert 0 <= start <= end <= len(text)
            assert start >= previous_end or start == end
            assert text[start:end] == region
            if region:
                previous_end = end
        joins = sum(1 for r in regions if r) - 1
        assert sum(end - start for start, end in spans) == len(text) - joins
