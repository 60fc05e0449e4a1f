"""FastAPI application implementing the /v1 scoring protocol."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .backends import Backend, ScoringError, TextTooLong
from .schemas import (
    FillProbeResponse,
    FillRequest,
    InfoResponse,
    ScoreRequest,
    ScoreResponse,
    TokenOut,
)


def create_app(backend: Backend) -> FastAPI:
    app = FastAPI(title="mlm-service", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        # the wire contract reserves 422 for over-long text
        return JSONResponse(status_code=400, content={"detail": "malformed request body"})

    @app.exception_handler(ScoringError)
    async def unscorable(request: Request, exc: ScoringError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(TextTooLong)
    async def too_long(request: Request, exc: TextTooLong):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.get("/v1/info", response_model=InfoResponse)
    def info() -> InfoResponse:
        return InfoResponse(
            model_id=backend.model_id,
            vocabulary_size=backend.vocabulary_size,
            max_text_len=backend.max_text_len,
        )

    @app.post("/v1/score", response_model=ScoreResponse, response_model_exclude_none=True)
    def score(request: ScoreRequest) -> ScoreResponse:
        if not request.text.strip():
            raise ScoringError("text is empty")
        if request.mode == "tokenize":
            tokens = backend.tokenize(request.text)
            surprisals = None
        else:
            tokens, surprisals = backend.sequential_surprisals(request.text)
        return ScoreResponse(
            model_id=backend.model_id,
            tokens=[TokenOut(text=t.text, start=t.start, end=t.end) for t in tokens],
            surprisal_bits=surprisals,
        )

    @app.post("/v1/fill", response_model=FillProbeResponse)
    def fill(request: FillRequest) -> FillProbeResponse:
        probabilities = backend.fill_probabilities(
            request.prefix_ids, request.position,
            request.candidate_ids, request.total_length,
        )
        return FillProbeResponse(
            model_id=backend.model_id,
            position=request.position,
            probabilities=probabilities,
        )

    return app
