"""Client side of the fill-service wire protocol.

Transport errors and 5xx responses are retried with jittered exponential
backoff; responses violating the wire contract are never retried. A
semaphore bounds the number of in-flight requests per client handle.
"""

from __future__ import annotations

import math
import random
import threading
import time
from dataclasses import dataclass, field
from typing import Callable

import httpx

from .errors import ProtocolViolation, ScorerUnavailable, Timeout
from .scoring import ScoredToken, ScorerDescriptor, check_span_coverage, total_surprisal


@dataclass(frozen=True)
class RequestPolicy:
    timeout_s: float = 10.0
    max_retries: int = 3
    backoff_base_s: float = 0.25
    backoff_factor: float = 2.0
    max_in_flight: int = 4


@dataclass(frozen=True)
class WireToken:
    text: str
    start: int
    end: int


@dataclass(frozen=True)
class FillResponse:
    model_id: str
    tokens: tuple[WireToken, ...]
    surprisal_bits: tuple[float, ...] | None  # absent in tokenize mode


@dataclass(frozen=True)
class ServiceInfo:
    model_id: str
    vocabulary_size: int
    max_text_len: int


class FillClient:
    """Shareable handle to a fill service endpoint."""

    def __init__(
        self,
        endpoint: str,
        policy: RequestPolicy = RequestPolicy(),
        transport: httpx.BaseTransport | None = None,
        sleep: Callable[[float], None] = time.sleep,
        rng: random.Random | None = None,
    ):
        self.endpoint = endpoint.rstrip("/")
        self.policy = policy
        self._sleep = sleep
        self._rng = rng or random.Random()
        self._in_flight = threading.BoundedSemaphore(policy.max_in_flight)
        self._client = httpx.Client(
            base_url=self.endpoint,
            timeout=policy.timeout_s,
            transport=transport,
        )

    def close(self) -> None:
        self._client.close()

    def __enter__(self) -> "FillClient":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    # -- transport with retries -------------------------------------------------

    def _request(self, method: str, path: str, **kwargs) -> httpx.Response:
        last_timeout = False
        for attempt in range(self.policy.max_retries + 1):
            try:
                with self._in_flight:
                    response = self._client.request(method, path, **kwargs)
            except httpx.TimeoutException as exc:
                last_timeout, last_error = True, exc
            except httpx.TransportError as exc:
                last_timeout, last_error = False, exc
            else:
                if response.status_code < 500:
                    return response
                last_timeout, last_error = False, RuntimeError(
                    f"server error {response.status_code}"
                )
            if attempt < self.policy.max_retries:
                delay = self.policy.backoff_base_s * self.policy.backoff_factor ** attempt
                self._sleep(self._rng.uniform(0, delay))
        if last_timeout:
            raise Timeout(f"{self.endpoint}: {last_error}")
        raise ScorerUnavailable(f"{self.endpoint}: {last_error}")

    def _json_body(self, response: httpx.Response) -> dict:
        if response.status_code != 200:
            raise ProtocolViolation(
                f"unexpected status {response.status_code}: {response.text[:200]}"
            )
        try:
            body = response.json()
        except ValueError as exc:
            raise ProtocolViolation(f"response body is not valid JSON: {exc}") from exc
        if not isinstance(body, dict):
            raise ProtocolViolation("response body must be an object")
        return body

    # -- protocol operations ------------------------------------------------------

    def probe(self) -> ServiceInfo:
        body = self._json_body(self._request("GET", "/v1/info"))
        try:
            info = ServiceInfo(
                model_id=body["model_id"],
                vocabulary_size=body["vocabulary_size"],
                max_text_len=body["max_text_len"],
            )
        except KeyError as exc:
            raise ProtocolViolation(f"info response missing key {exc}") from exc
        if not isinstance(info.model_id, str) or not isinstance(info.vocabulary_size, int):
            raise ProtocolViolation("info response has wrong field types")
        return info

    def score(self, text: str, mode: str = "sequential_score") -> FillResponse:
        body = self._json_body(
            self._request("POST", "/v1/score", json={"text": text, "mode": mode})
        )
        return _validate_fill_response(body, text, expect_surprisals=mode == "sequential_score")


def _validate_fill_response(body: dict, text: str, expect_surprisals: bool) -> FillResponse:
    model_id = body.get("model_id")
    raw_tokens = body.get("tokens")
    if not isinstance(model_id, str) or not isinstance(raw_tokens, list):
        raise ProtocolViolation("score response must carry model_id and tokens")
    tokens = []
    for i, raw in enumerate(raw_tokens):
        if not isinstance(raw, dict):
            raise ProtocolViolation(f"tokens[{i}] is not an object")
        try:
            token = WireToken(raw["text"], raw["start"], raw["end"])
        except KeyError as exc:
            raise ProtocolViolation(f"tokens[{i}] missing key {exc}") from exc
        if not isinstance(token.text, str) or not isinstance(token.start, int) \
                or not isinstance(token.end, int):
            raise ProtocolViolation(f"tokens[{i}] has wrong field types")
        tokens.append(token)

    problem = check_span_coverage(text, [(t.start, t.end) for t in tokens])
    if problem is not None:
        raise ProtocolViolation(problem)

    surprisals = None
    if expect_surprisals:
        raw_surprisals = body.get("surprisal_bits")
        if not isinstance(raw_surprisals, list):
            raise ProtocolViolation("sequential_score response must carry surprisal_bits")
        if len(raw_surprisals) != len(tokens):
            raise ProtocolViolation(
                f"{len(raw_surprisals)} surprisals for {len(tokens)} tokens"
            )
        for i, value in enumerate(raw_surprisals):
            if not isinstance(value, (int, float)) or isinstance(value, bool) \
                    or not math.isfinite(value) or value < 0:
                raise ProtocolViolation(f"surprisal_bits[{i}] = {value!r} is invalid")
        surprisals = tuple(float(v) for v in raw_surprisals)

    return FillResponse(model_id=model_id, tokens=tuple(tokens), surprisal_bits=surprisals)


class RemoteScorer:
    """Scorer backed by a fill service; the sequential loop runs server-side."""

    def __init__(self, client: FillClient, scorer_id: str | None = None):
        self.client = client
        if scorer_id is None:
            scorer_id = client.probe().model_id
        self.descriptor = ScorerDescriptor(
            id=scorer_id, kind="remote_mlm",
            parameters={"endpoint": client.endpoint},
        )

    def score(self, text: str) -> list[ScoredToken]:
        response = self.client.score(text, mode="sequential_score")
        assert response.surprisal_bits is not None
        return [
            ScoredToken(token.text, token.start, token.end, bits)
            for token, bits in zip(response.tokens, response.surprisal_bits)
        ]

    def sentence_total(self, text: str) -> float:
        return total_surprisal(self.score(text))
