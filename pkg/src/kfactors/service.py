"""Stateless HTTP+JSON facade for the web UI.

POST /api/check, /api/generate and /api/kfactor carry the same payloads as
the corresponding CLI commands, plus ``elapsed_ms``, ``seed`` and
``version``.  Errors use a uniform ``{"error": {"code", "message"}}``
envelope: 400 for schema violations, 422 for domain errors, 500 for
internal assertions.

Run with ``kfactors-serve [--host H] [--port P] [--ui DIR]``; ``--ui``
mounts a built frontend at the web root.
"""

from __future__ import annotations

import argparse
import os
import time

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import __version__
from .errors import (
    InconsistentReport,
    KFactorsError,
    SwitchNotFound,
)
from .payloads import check_payload, generate_payload, kfactor_payload
from .sequences import DegreeSequence, KabParams, zz_min_length

# Hard cap on the vertex count of any request; the adjacency structures
# and the complement scan are O(n^2).
MAX_N = 10_000


class CheckRequest(BaseModel):
    seq: list[int]
    k: int | None = None


class GenerateRequest(BaseModel):
    mode: str
    seed: int
    a: int | None = None
    b: int | None = None
    k: int | None = None
    n: int | None = None
    x: int | None = None
    variant: str = "general"
    max_retries: int = 1000


class KFactorRequest(BaseModel):
    seq: list[int]
    k: int


class RequestTooLarge(KFactorsError):
    pass


def _error_response(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"error": {"code": code, "message": message}},
    )


def _parse_sequence(values: list[int]) -> DegreeSequence:
    if len(values) > MAX_N:
        raise RequestTooLarge(f"sequence length {len(values)} exceeds cap {MAX_N}")
    return DegreeSequence.from_unsorted(values)


def create_app() -> FastAPI:
    app = FastAPI(title="kfactors service", version=__version__)
    origins = os.environ.get("KFACTORS_CORS_ORIGINS", "*").split(",")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=origins,
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def _schema_error(request: Request, exc: RequestValidationError):
        return _error_response(400, "SchemaViolation", str(exc.errors()))

    @app.exception_handler(ValueError)
    async def _value_error(request: Request, exc: ValueError):
        return _error_response(422, "ValueError", str(exc))

    @app.exception_handler(KFactorsError)
    async def _domain_error(request: Request, exc: KFactorsError):
        if isinstance(exc, (SwitchNotFound, InconsistentReport)):
            return _error_response(500, type(exc).__name__, str(exc))
        return _error_response(422, type(exc).__name__, str(exc))

    @app.exception_handler(AssertionError)
    async def _assertion_error(request: Request, exc: AssertionError):
        return _error_response(500, "AssertionError", str(exc))

    def _finish(payload: dict, started: float) -> dict:
        out = dict(payload)
        out["seed"] = payload.get("seed")
        out["elapsed_ms"] = round((time.perf_counter() - started) * 1000, 3)
        out["version"] = __version__
        return out

    # sync handlers run in the threadpool, so one long computation
    # does not stall other requests
    @app.post("/api/check")
    def api_check(req: CheckRequest):
        started = time.perf_counter()
        seq = _parse_sequence(req.seq)
        return _finish(check_payload(seq, req.k), started)

    @app.post("/api/generate")
    def api_generate(req: GenerateRequest):
        started = time.perf_counter()
        if req.n is not None and req.n > MAX_N:
            raise RequestTooLarge(f"n={req.n} exceeds cap {MAX_N}")
        if req.a is not None and req.b is not None:
            # (a, b) imply the sequence length; keep that under the cap too
            implied = zz_min_length(KabParams(req.a, req.b))
            if implied > MAX_N:
                raise RequestTooLarge(
                    f"a={req.a}, b={req.b} imply length {implied}, above cap {MAX_N}"
                )
        payload = generate_payload(
            req.mode,
            seed=req.seed,
            a=req.a,
            b=req.b,
            k=req.k,
            n=req.n,
            x=req.x,
            variant=req.variant,
            max_retries=req.max_retries,
        )
        return _finish(payload, started)

    @app.post("/api/kfactor")
    def api_kfactor(req: KFactorRequest):
        started = time.perf_counter()
        seq = _parse_sequence(req.seq)
        return _finish(kfactor_payload(seq, req.k), started)

    return app


app = create_app()


def main(argv: list[str] | None = None) -> int:
    import uvicorn

    parser = argparse.ArgumentParser(prog="kfactors-serve", description="run the HTTP service")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8000)
    parser.add_argument("--ui", default=None, help="directory with a built frontend to serve at /")
    args = parser.parse_args(argv)

    serve_app = create_app()
    if args.ui:
        from fastapi.staticfiles import StaticFiles

        serve_app.mount("/", StaticFiles(directory=args.ui, html=True), name="ui")
    uvicorn.run(serve_app, host=args.host, port=args.port)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
