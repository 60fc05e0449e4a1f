"""Scorer contract and the deterministic scorer implementations.

A scorer turns a sentence into an ordered list of tokens with character
spans and per-token surprisal in bits (-log2 p). Three kinds exist: an
interpolated n-gram model, a uniform scorer, and the sequential masked-LM
procedure driven over a fill service (in-process or remote).
"""

from __future__ import annotations

import math
import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Protocol, Sequence

from .errors import (
    BadWeights,
    EmptyCorpus,
    EmptyText,
    ProtocolViolation,
    TokenizationMismatch,
)

BOS = "<bos>"
UNK = "<unk>"

# Maximal runs of letters/digits are word tokens; any other non-whitespace
# character stands alone. No lowercasing.
_TOKEN_RE = re.compile(r"[^\W_]+|\S", re.UNICODE)


@dataclass(frozen=True)
class TokenSpan:
    text: str
    start: int
    end: int


@dataclass(frozen=True)
class ScoredToken:
    text: str
    char_start: int
    char_end: int
    surprisal_bits: float


@dataclass(frozen=True)
class ScorerDescriptor:
    id: str
    kind: str  # "ngram" | "uniform" | "remote_mlm"
    parameters: Mapping[str, object] = field(default_factory=dict)


def tokenize_with_spans(text: str) -> list[TokenSpan]:
    return [TokenSpan(m.group(), m.start(), m.end()) for m in _TOKEN_RE.finditer(text)]


def total_surprisal(tokens: Iterable[ScoredToken]) -> float:
    """Correctly-rounded sum of token surprisals (the conservation anchor)."""
    return math.fsum(t.surprisal_bits for t in tokens)


def check_span_coverage(text: str, spans: Sequence[tuple[int, int]]) -> str | None:
    """Return a problem description if spans are unordered, overlapping, out
    of bounds, or fail to cover every non-whitespace character; else None."""
    prev_end = 0
    for start, end in spans:
        if not (0 <= start < end <= len(text)):
            return f"span ({start}, {end}) out of bounds for text of length {len(text)}"
        if start < prev_end:
            return f"span ({start}, {end}) overlaps or precedes an earlier span"
        prev_end = end
    covered = [False] * len(text)
    for start, end in spans:
        for i in range(start, end):
            covered[i] = True
    for i, ch in enumerate(text):
        if not ch.isspace() and not covered[i]:
            return f"character {ch!r} at offset {i} not covered by any token"
    return None


class Scorer(Protocol):
    descriptor: ScorerDescriptor

    def score(self, text: str) -> list[ScoredToken]: ...

    def sentence_total(self, text: str) -> float: ...


def _require_text(text: str) -> None:
    if not text.strip():
        raise EmptyText("cannot score empty text")


# --- uniform -------------------------------------------------------------------

class UniformScorer:
    """Assigns every token the same probability 1/|V|."""

    def __init__(self, vocab_size: int):
        if vocab_size < 1:
            raise ValueError("vocab_size must be >= 1")
        self.vocab_size = vocab_size
        self.bits_per_token = math.log2(vocab_size)
        self.descriptor = ScorerDescriptor(
            id=f"uniform-v{vocab_size}", kind="uniform",
            parameters={"vocab_size": vocab_size},
        )

    def score(self, text: str) -> list[ScoredToken]:
        _require_text(text)
        return [
            ScoredToken(t.text, t.start, t.end, self.bits_per_token)
            for t in tokenize_with_spans(text)
        ]

    def sentence_total(self, text: str) -> float:
        _require_text(text)
        return len(tokenize_with_spans(text)) * self.bits_per_token


# --- interpolated n-gram ---------------------------------------------------------

@dataclass(frozen=True)
class NgramModel:
    """Linearly interpolated n-gram model with an add-one unigram floor.

    ``lambdas`` are indexed by order: ``lambdas[k-1]`` weighs the order-k
    estimate. The unigram estimate is add-one smoothed over the vocabulary
    (observed tokens plus UNK, excluding BOS), so every probability is > 0.
    """

    order: int
    lambdas: tuple[float, ...]
    vocabulary: frozenset[str]
    counts: Mapping[int, Mapping[tuple[str, ...], Mapping[str, int]]]
    history_totals: Mapping[int, Mapping[tuple[str, ...], int]]
    token_total: int


def _validate_weights(order: int, weights: Sequence[float]) -> None:
    if len(weights) != order:
        raise BadWeights(f"expected {order} weights, got {len(weights)}")
    if any(w < 0 for w in weights):
        raise BadWeights("weights must be non-negative")
    if not math.isclose(sum(weights), 1.0, abs_tol=1e-9):
        raise BadWeights(f"weights sum to {sum(weights)!r}, expected 1")


def train_ngram(
    corpus: Iterable[str],
    order: int = 3,
    weights: Sequence[float] = (0.6, 0.3, 0.1),
) -> NgramModel:
    """Count n-grams of orders 1..order over the corpus sentences.

    ``weights`` are given highest order first, matching how interpolation
    weights are conventionally quoted; they are stored per-order.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    _validate_weights(order, weights)
    lambdas = tuple(reversed(weights))  # lambdas[k-1] = weight of order k

    sentences = list(corpus)
    if not sentences:
        raise EmptyCorpus("corpus has no sentences")

    counts: dict[int, dict[tuple[str, ...], dict[str, int]]] = {
        k: defaultdict(lambda: defaultdict(int)) for k in range(1, order + 1)
    }
    history_totals: dict[int, dict[tuple[str, ...], int]] = {
        k: defaultdict(int) for k in range(1, order + 1)
    }
    vocabulary: set[str] = set()
    token_total = 0

    for sentence in sentences:
        tokens = [t.text for t in tokenize_with_spans(sentence)]
        vocabulary.update(tokens)
        token_total += len(tokens)
        padded = (BOS,) * (order - 1) + tuple(tokens)
        for i in range(order - 1, len(padded)):
            token = padded[i]
            for k in range(1, order + 1):
                history = padded[i - k + 1 : i]
                counts[k][history][token] += 1
                history_totals[k][history] += 1

    if token_total == 0:
        raise EmptyCorpus("corpus has no tokens")

    vocabulary.add(UNK)
    return NgramModel(
        order=order,
        lambdas=lambdas,
        vocabulary=frozenset(vocabulary),
        counts={k: {h: dict(tok) for h, tok in counts[k].items()} for k in counts},
        history_totals={k: dict(history_totals[k]) for k in history_totals},
        token_total=token_total,
    )


def _normalize_symbol(model: NgramModel, token: str) -> str:
    if token == BOS:
        return BOS
    return token if token in model.vocabulary else UNK


def ngram_prob(model: NgramModel, history: Sequence[str], token: str) -> float:
    """Interpolated probability; unknown tokens map to UNK, histories are
    truncated to order-1, and a dead history contributes 0 at that order."""
    token = UNK if token not in model.vocabulary or token == BOS else token
    hist = tuple(_normalize_symbol(model, h) for h in history)[-(model.order - 1):] \
        if model.order > 1 else ()

    vocab_size = len(model.vocabulary)  # includes UNK, excludes BOS
    unigram = (model.counts[1][()].get(token, 0) + 1) / (model.token_total + vocab_size)
    p = model.lambdas[0] * unigram
    for k in range(2, model.order + 1):
        h = hist[-(k - 1):] if len(hist) >= k - 1 else None
        if h is None:
            continue
        total = model.history_totals[k].get(h, 0)
        if total == 0:
            continue
        p += model.lambdas[k - 1] * (model.counts[k].get(h, {}).get(token, 0) / total)
    return p


class NgramScorer:
    def __init__(self, model: NgramModel, scorer_id: str = "ngram"):
        self.model = model
        self.descriptor = ScorerDescriptor(
            id=scorer_id, kind="ngram",
            parameters={"order": model.order,
                        "weights": tuple(reversed(model.lambdas))},
        )

    def _probabilities(self, text: str) -> list[tuple[TokenSpan, float]]:
        spans = tokenize_with_spans(text)
        history: tuple[str, ...] = (BOS,) * (self.model.order - 1)
        out = []
        for span in spans:
            p = ngram_prob(self.model, history, span.text)
            out.append((span, p))
            symbol = _normalize_symbol(self.model, span.text)
            if self.model.order > 1:
                history = (history + (symbol,))[-(self.model.order - 1):]
        return out

    def score(self, text: str) -> list[ScoredToken]:
        _require_text(text)
        return [
            ScoredToken(span.text, span.start, span.end, -math.log2(p))
            for span, p in self._probabilities(text)
        ]

    def sentence_total(self, text: str) -> float:
        _require_text(text)
        return math.fsum(-math.log2(p) for _, p in self._probabilities(text))


# --- sequential masked-LM procedure -----------------------------------------------

class FillService(Protocol):
    """A service that tokenizes text and fills one masked position at a time."""

    def tokenize(self, text: str) -> Sequence[TokenSpan]: ...

    def fill_distribution(self, tokens: Sequence[str], position: int) -> Mapping[str, float]:
        """Distribution over candidates at 1-based ``position`` given that
        tokens 1..position-1 are revealed and the rest (including the
        end-of-sentence slot) are masked."""
        ...


def sequential_mlm_score(fill: FillService, text: str) -> list[ScoredToken]:
    """Left-to-right sequential scoring over a fill service.

    Positions are revealed one at a time; surprisal at position i is
    -log2 of the probability the service assigns the original token there.
    The trailing end-of-sentence slot stays masked and is never emitted.
    """
    _require_text(text)
    spans = list(fill.tokenize(text))
    problem = check_span_coverage(text, [(t.start, t.end) for t in spans])
    if problem is not None:
        raise TokenizationMismatch(problem)
    token_texts = [t.text for t in spans]
    scored = []
    for i in range(1, len(spans) + 1):
        dist = fill.fill_distribution(token_texts, i)
        p = dist.get(token_texts[i - 1], 0.0)
        if not (0.0 < p <= 1.0) or not math.isfinite(p):
            raise ProtocolViolation(
                f"fill service assigned probability {p!r} to token "
                f"{token_texts[i - 1]!r} at position {i}"
            )
        span = spans[i - 1]
        scored.append(ScoredToken(span.text, span.start, span.end, -math.log2(p)))
    return scored


class SequentialMlmScorer:
    """Adapts a FillService to the Scorer contract."""

    def __init__(self, fill: FillService, descriptor: ScorerDescriptor):
        self.fill = fill
        self.descriptor = descriptor

    def score(self, text: str) -> list[ScoredToken]:
        return sequential_mlm_score(self.fill, text)

    def sentence_total(self, text: str) -> float:
        return total_surprisal(self.score(text))
