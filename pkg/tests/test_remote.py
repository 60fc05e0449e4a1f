"""Wire-protocol client: validation, retries, backoff, in-flight bound."""

import json
import math
import threading
import time

import httpx
import pytest

from syngauntlet.errors import ProtocolViolation, ScorerUnavailable, Timeout
from syngauntlet.remote import FillClient, RemoteScorer, RequestPolicy
from syngauntlet.scoring import sequential_mlm_score, total_surprisal

from helpers import MockBigramFill, random_transitions, simple_tokens

import random


def _mock_service_handler(fill: MockBigramFill):
    """A handler implementing the wire protocol on top of the bigram mock."""

    def handle(request: httpx.Request) -> httpx.Response:
        if request.url.path == "/v1/info":
            return httpx.Response(200, json={
                "model_id": fill.model_id,
                "vocabulary_size": len(fill.transitions) - 1,
                "max_text_len": 512,
            })
        if request.url.path == "/v1/score":
            body = json.loads(request.content)
            text = body["text"]
            spans = fill.tokenize(text)
            payload = {
                "model_id": fill.model_id,
                "tokens": [{"text": t.text, "start": t.start, "end": t.end} for t in spans],
            }
            if body["mode"] == "sequential_score":
                scored = sequential_mlm_score(fill, text)
                payload["surprisal_bits"] = [t.surprisal_bits for t in scored]
            return httpx.Response(200, json=payload)
        return httpx.Response(404)

    return handle


def _client(handler, policy=None, sleep=lambda s: None):
    return FillClient(
        "http://fill.test",
        policy or RequestPolicy(max_retries=2),
        transport=httpx.MockTransport(handler),
        sleep=sleep,
        rng=random.Random(0),
    )


@pytest.fixture
def fill():
    return MockBigramFill(random_transitions(random.Random(13), ["a", "b", "c"]))


class TestScoreRequests:
    def test_healthy_two_tokens(self, fill):
        with _client(_mock_service_handler(fill)) as client:
            response = client.score("a b")
        assert len(response.tokens) == 2
        assert len(response.surprisal_bits) == 2
        assert response.model_id == "mock-bigram"

    def test_tokenize_mode(self, fill):
        with _client(_mock_service_handler(fill)) as client:
            response = client.score("a b c", mode="tokenize")
        assert response.surprisal_bits is None
        assert [t.text for t in response.tokens] == ["a", "b", "c"]

    def test_overlapping_spans_rejected(self):
        def handler(request):
            return httpx.Response(200, json={
                "model_id": "m",
                "tokens": [
                    {"text": "ab", "start": 0, "end": 2},
                    {"text": "b", "start": 1, "end": 2},
                ],
                "surprisal_bits": [1.0, 1.0],
            })

        with _client(handler) as client:
            with pytest.raises(ProtocolViolation):
                client.score("ab")

    def test_surprisal_length_mismatch_rejected(self, fill):
        def handler(request):
            return httpx.Response(200, json={
                "model_id": "m",
                "tokens": [{"text": "a", "start": 0, "end": 1}],
                "surprisal_bits": [1.0, 2.0],
            })

        with _client(handler) as client:
            with pytest.raises(ProtocolViolation):
                client.score("a")

    def test_negative_surprisal_rejected(self):
        def handler(request):
            return httpx.Response(200, json={
                "model_id": "m",
                "tokens": [{"text": "a", "start": 0, "end": 1}],
                "surprisal_bits": [-0.5],
            })

        with _client(handler) as client:
            with pytest.raises(ProtocolViolation):
                client.score("a")

    def test_chain_rule_oracle(self, fill):
        text = "a b b c a"
        with _client(_mock_service_handler(fill)) as client:
            response = client.score(text)
        total = math.fsum(response.surprisal_bits)
        assert abs(total - fill.chain_surprisal(simple_tokens(text))) < 1e-9


class TestRetries:
    def test_retries_transient_5xx(self, fill):
        calls = {"n": 0}
        inner = _mock_service_handler(fill)

        def flaky(request):
            calls["n"] += 1
            if calls["n"] <= 2:
                return httpx.Response(503)
            return inner(request)

        sleeps = []
        with _client(flaky, RequestPolicy(max_retries=3), sleep=sleeps.append) as client:
            response = client.score("a b")
        assert len(response.tokens) == 2
        assert calls["n"] == 3
        assert len(sleeps) == 2
        assert all(s >= 0 for s in sleeps)

    def test_exhausted_retries(self):
        def always_down(request):
            return httpx.Response(500)

        with _client(always_down, RequestPolicy(max_retries=2), sleep=lambda s: None) as client:
            with pytest.raises(ScorerUnavailable):
                client.score("a")

    def test_timeout_surfaced(self):
        def too_slow(request):
            raise httpx.ReadTimeout("slow")

        with _client(too_slow, RequestPolicy(max_retries=1), sleep=lambda s: None) as client:
            with pytest.raises(Timeout):
                client.score("a")

    def test_no_retry_on_protocol_violation(self):
        calls = {"n": 0}

        def bad_body(request):
            calls["n"] += 1
            return httpx.Response(200, json={"nope": True})

        with _client(bad_body, RequestPolicy(max_retries=5)) as client:
            with pytest.raises(ProtocolViolation):
                client.score("a")
        assert calls["n"] == 1

    def test_client_error_is_protocol_violation(self):
        def reject(request):
            return httpx.Response(422, text="too long")

        with _client(reject) as client:
            with pytest.raises(ProtocolViolation):
                client.score("a")


class TestProbe:
    def test_healthy(self, fill):
        with _client(_mock_service_handler(fill)) as client:
            info = client.probe()
        assert info.model_id == "mock-bigram"
        assert info.max_text_len == 512

    def test_dead_endpoint(self):
        def down(request):
            raise httpx.ConnectError("refused")

        with _client(down, RequestPolicy(max_retries=1), sleep=lambda s: None) as client:
            with pytest.raises(ScorerUnavailable):
                client.probe()

    def test_malformed_info(self):
        def odd(request):
            return httpx.Response(200, json={"model": "x"})

        with _client(odd) as client:
            with pytest.raises(ProtocolViolation):
                client.probe()


class TestInFlightBound:
    def test_bound_never_exceeded(self, fill):
        inner = _mock_service_handler(fill)
        lock = threading.Lock()
        state = {"now": 0, "peak": 0}

        def slow(request):
            with lock:
                state["now"] += 1
                state["peak"] = max(state["peak"], state["now"])
            time.sleep(0.01)
            with lock:
                state["now"] -= 1
            return inner(request)

        policy = RequestPolicy(max_retries=0, max_in_flight=3)
        with _client(slow, policy) as client:
            threads = [threading.Thread(target=client.score, args=("a b c",)) for _ in range(12)]
            for t in threads:
                t.start()
            for t in threads:
                t.join()
        assert state["peak"] <= 3


class TestRemoteScorer:
    def test_drives_suite_evaluation(self, fill):
        from syngauntlet.engine import evaluate_suite
        from syngauntlet.suites import load_suite

        doc = {
            "name": "mock-vocab", "circuit": "Agreement", "language": "zz",
            "has_modifier": False, "modifier_pair_id": None,
            "region_names": ["prefix", "target"],
            "condition_names": ["x", "y"],
            "predictions": ["(2;x) < (2;y)"],
            "items": [
                {"index": 1, "conditions": {
                    "x": {"regions": ["a", "b"]},
                    "y": {"regions": ["a", "c"]},
                }},
            ],
        }
        suite = load_suite(json.dumps(doc))
        with _client(_mock_service_handler(fill)) as client:
            result = evaluate_suite(suite, RemoteScorer(client))
        p_b = fill.transitions["a"]["b"]
        p_c = fill.transitions["a"]["c"]
        assert result.item_results[0].passed == (p_b > p_c)

    def test_failure_wrapped_with_item_context(self, fill):
        from syngauntlet.engine import evaluate_run
        from syngauntlet.suites import load_suite

        doc = {
            "name": "mock-vocab", "circuit": "Agreement", "language": "zz",
            "has_modifier": False, "modifier_pair_id": None,
            "region_names": ["target"], "condition_names": ["x"],
            "predictions": [], "items": [
                {"index": 1, "conditions": {"x": {"regions": ["a b"]}}},
            ],
        }
        suite = load_suite(json.dumps(doc))

        def always_down(request):
            return httpx.Response(503)

        with _client(always_down, RequestPolicy(max_retries=0), sleep=lambda s: None) as client:
            scorer = RemoteScorer(client, scorer_id="down")
            report = evaluate_run([suite], scorer)
        assert report.partial is True
        assert "mock-vocab" in report.error and "item 1" in report.error

    def test_scored_tokens(self, fill):
        with _client(_mock_service_handler(fill)) as client:
            scorer = RemoteScorer(client)
            tokens = scorer.score("a b c")
        assert scorer.descriptor.id == "mock-bigram"
        assert [t.text for t in tokens] == ["a", "b", "c"]
        assert abs(total_surprisal(tokens) - fill.chain_surprisal(["a", "b", "c"])) < 1e-9

    def test_deterministic(self, fill):
        with _client(_mock_service_handler(fill)) as client:
            scorer = RemoteScorer(client)
            assert scorer.score("a b c") == scorer.score("a b c")
