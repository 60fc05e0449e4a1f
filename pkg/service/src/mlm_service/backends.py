"""Model backends: a deterministic mock bigram and Hugging Face masked LMs.

Both implement the same surface: tokenize with character offsets, run the
left-to-right sequential scoring loop (reveal tokens one at a time against a
mask-filled context, read the probability of the original token), and answer
position-wise fill queries for the equivalence tests.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol, Sequence

_TOKEN_RE = re.compile(r"[^\W_]+|\S", re.UNICODE)


@dataclass(frozen=True)
class Token:
    text: str
    start: int
    end: int


class ScoringError(Exception):
    """Input the backend cannot score (bad request, HTTP 400)."""


class TextTooLong(Exception):
    """Tokenized length exceeds the model's positional budget (HTTP 422)."""


class Backend(Protocol):
    model_id: str
    vocabulary_size: int
    max_text_len: int

    def tokenize(self, text: str) -> list[Token]: ...

    def sequential_surprisals(self, text: str) -> tuple[list[Token], list[float]]: ...

    def fill_probabilities(
        self, prefix_ids: Sequence[int], position: int,
        candidate_ids: Sequence[int], total_length: int | None,
    ) -> list[float]: ...


# --- mock bigram ------------------------------------------------------------------

BOS_SYMBOL = "<s>"


class MockBigramBackend:
    """Explicit transition table P(next | prev); rows must sum to 1.

    Token ids are indices into the sorted next-symbol vocabulary. The
    sequential loop over this backend equals the bigram chain rule exactly,
    which is what the protocol equivalence tests pin down.
    """

    def __init__(self, transitions: dict[str, dict[str, float]]):
        for prev, row in transitions.items():
            total = math.fsum(row.values())
            if abs(total - 1.0) > 1e-9:
                raise ValueError(f"transition row {prev!r} sums to {total!r}, expected 1")
        self.transitions = transitions
        self.vocab = sorted({nxt for row in transitions.values() for nxt in row})
        self._id_of = {symbol: i for i, symbol in enumerate(self.vocab)}
        self.model_id = "mock-bigram"
        self.vocabulary_size = len(self.vocab)
        self.max_text_len = 512

    @classmethod
    def from_table_file(cls, path: str | Path) -> "MockBigramBackend":
        """Lines ``prev next prob``; blank lines and # comments ignored."""
        transitions: dict[str, dict[str, float]] = {}
        for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3:
                raise ValueError(f"{path}:{lineno}: expected 'prev next prob'")
            prev, nxt, prob = parts[0], parts[1], float(parts[2])
            transitions.setdefault(prev, {})[nxt] = prob
        return cls(transitions)

    def tokenize(self, text: str) -> list[Token]:
        return [Token(m.group(), m.start(), m.end()) for m in _TOKEN_RE.finditer(text)]

    def _row(self, prev: str) -> dict[str, float]:
        try:
            return self.transitions[prev]
        except KeyError:
            raise ScoringError(f"no transition row for {prev!r}") from None

    def sequential_surprisals(self, text: str) -> tuple[list[Token], list[float]]:
        tokens = self.tokenize(text)
        if len(tokens) > self.max_text_len:
            raise TextTooLong(f"{len(tokens)} tokens > {self.max_text_len}")
        surprisals = []
        prev = BOS_SYMBOL
        for token in tokens:
            p = self._row(prev).get(token.text, 0.0)
            if p <= 0.0:
                raise ScoringError(f"token {token.text!r} has zero probability after {prev!r}")
            surprisals.append(-math.log2(p))
            prev = token.text
        return tokens, surprisals

    def fill_probabilities(self, prefix_ids, position, candidate_ids, total_length=None):
        if len(prefix_ids) != position - 1:
            raise ScoringError(
                f"position {position} needs {position - 1} revealed ids, got {len(prefix_ids)}"
            )
        for candidate in list(prefix_ids) + list(candidate_ids):
            if not 0 <= candidate < len(self.vocab):
                raise ScoringError(f"unknown token id {candidate}")
        prev = self.vocab[prefix_ids[-1]] if prefix_ids else BOS_SYMBOL
        row = self._row(prev)
        return [row.get(self.vocab[c], 0.0) for c in candidate_ids]

    def ids_of(self, symbols: Sequence[str]) -> list[int]:
        return [self._id_of[s] for s in symbols]


# --- Hugging Face masked LM ----------------------------------------------------------

class HfMaskedLmBackend:
    """Sequential scoring over a masked LM: the input is a begin-of-sentence
    token followed by N+1 masks (the final one standing in for the end of the
    sentence and never revealed); at step i tokens 1..i-1 are revealed and the
    distribution is read at position i."""

    def __init__(self, model_id: str, tokenizer=None, model=None):
        if tokenizer is None or model is None:
            from transformers import AutoModelForMaskedLM, AutoTokenizer

            tokenizer = AutoTokenizer.from_pretrained(model_id, use_fast=True)
            model = AutoModelForMaskedLM.from_pretrained(model_id)
        import torch

        self._torch = torch
        self.tokenizer = tokenizer
        self.model = model.eval()
        self.model_id = model_id
        self.vocabulary_size = int(getattr(tokenizer, "vocab_size", 0)) or len(tokenizer)
        positions = int(getattr(self.model.config, "max_position_embeddings", 512))
        self.max_text_len = positions - 2  # room for bos and the trailing mask
        self._bos_id = tokenizer.cls_token_id
        if self._bos_id is None:
            self._bos_id = tokenizer.bos_token_id
        self._mask_id = tokenizer.mask_token_id
        if self._bos_id is None or self._mask_id is None:
            raise ValueError(f"{model_id} lacks a bos/cls or mask token")

    def _encode(self, text: str):
        encoded = self.tokenizer(
            text, add_special_tokens=False, return_offsets_mapping=True
        )
        ids = encoded["input_ids"]
        offsets = encoded["offset_mapping"]
        tokens = [
            Token(text[start:end], start, end)
            for (start, end) in offsets
        ]
        return ids, tokens

    def _distribution_at(self, ids: Sequence[int], position: int, total: int):
        """Softmax over the vocabulary at 1-based ``position`` with tokens
        before it revealed and everything from it to the end masked."""
        torch = self._torch
        input_ids = [self._bos_id] + list(ids[: position - 1]) \
            + [self._mask_id] * (total + 1 - (position - 1))
        batch = torch.tensor([input_ids])
        with torch.no_grad():
            logits = self.model(input_ids=batch).logits
        return torch.softmax(logits[0, position].double(), dim=-1)

    def sequential_surprisals(self, text: str) -> tuple[list[Token], list[float]]:
        ids, tokens = self._encode(text)
        if not ids:
            raise ScoringError("text produced no tokens")
        if len(ids) > self.max_text_len:
            raise TextTooLong(f"{len(ids)} tokens > {self.max_text_len}")
        surprisals = []
        for i in range(1, len(ids) + 1):
            distribution = self._distribution_at(ids, i, len(ids))
            p = float(distribution[ids[i - 1]])
            if p <= 0.0:
                raise ScoringError(f"model assigned zero probability at position {i}")
            surprisals.append(-math.log2(p))
        return tokens, surprisals

    def fill_probabilities(self, prefix_ids, position, candidate_ids, total_length=None):
        if len(prefix_ids) != position - 1:
            raise ScoringError(
                f"position {position} needs {position - 1} revealed ids, got {len(prefix_ids)}"
            )
        total = total_length if total_length is not None else position
        if total < position:
            raise ScoringError("total_length is smaller than position")
        if total > self.max_text_len:
            raise TextTooLong(f"{total} tokens > {self.max_text_len}")
        distribution = self._distribution_at(list(prefix_ids), position, total)
        return [float(distribution[c]) for c in candidate_ids]


def build_backend(kind: str, *, table: str | None = None, model: str | None = None) -> Backend:
    if kind == "mock":
        if not table:
            raise ValueError("mock backend needs --table")
        return MockBigramBackend.from_table_file(table)
    if kind == "hf":
        if not model:
            raise ValueError("hf backend needs --model")
        return HfMaskedLmBackend(model)
    raise ValueError(f"unknown backend kind {kind!r}")
