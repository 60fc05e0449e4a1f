"""Request/response models for the /v1 wire protocol."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class InfoResponse(BaseModel):
    model_id: str
    vocabulary_size: int
    max_text_len: int


class ScoreRequest(BaseModel):
    text: str
    mode: Literal["tokenize", "sequential_score"] = "sequential_score"


class TokenOut(BaseModel):
    text: str
    start: int
    end: int


class ScoreResponse(BaseModel):
    model_id: str
    tokens: list[TokenOut]
    surprisal_bits: list[float] | None = None  # omitted in tokenize mode


class FillRequest(BaseModel):
    """Position-wise query: reveal ``prefix_ids`` and read the distribution
    at ``position`` (1-based) of a sequence with ``total_length`` tokens."""

    prefix_ids: list[int]
    position: int = Field(ge=1)
    candidate_ids: list[int]
    total_length: int | None = None


class FillProbeResponse(BaseModel):
    model_id: str
    position: int
    probabilities: list[float]
