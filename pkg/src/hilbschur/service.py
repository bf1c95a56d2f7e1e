"""FastAPI service exposing the algebra: dimensions, bases, products,
verification suites and exports over HTTP.

The service wraps the pure compute facade; all state is memoized pure
computation, so concurrent requests are safe and identical requests give
identical responses.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__, api


class DimsRequest(BaseModel):
    n: int = Field(ge=0, le=8)
    target: str
    source: str


class DimsResponse(BaseModel):
    n: int
    target: str
    source: str
    dimension: int


class BasisRequest(BaseModel):
    n: int = Field(ge=0, le=8)
    target: str
    source: str


class BasisIndexModel(BaseModel):
    rep: str
    label: list[str]


class BasisResponse(BaseModel):
    n: int
    target: str
    source: str
    count: int
    indices: list[BasisIndexModel]


class StalkModel(BaseModel):
    rep: str
    character: list[dict]


class KClassModel(BaseModel):
    target: str
    source: str
    stalks: list[StalkModel]


class MultiplyRequest(BaseModel):
    left: KClassModel
    right: KClassModel


class MultiplyResponse(BaseModel):
    product: KClassModel


class CheckRequest(BaseModel):
    suite: str
    n: int = Field(ge=0, le=8)
    samples: int = Field(default=200, ge=1, le=100000)
    seed: int = 0


class CheckResponse(BaseModel):
    ok: bool
    output: str


class PhiRequest(BaseModel):
    shape: str


class ExportRequest(BaseModel):
    # the table has ~dim^2 products; n = 4 takes seconds, n = 5 minutes
    n: int = Field(ge=0, le=5)
    reduced: bool = True
    mod_p: int | None = None


class ExportResponse(BaseModel):
    document: str


def create_app() -> FastAPI:
    app = FastAPI(title="hilbschur", version=__version__)

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/dims", response_model=DimsResponse)
    def dims(req: DimsRequest):
        try:
            return api.compute_dims(req.n, req.target, req.source)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.post("/basis", response_model=BasisResponse)
    def basis(req: BasisRequest):
        try:
            return api.compute_basis(req.n, req.target, req.source)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.post("/multiply", response_model=MultiplyResponse)
    def multiply(req: MultiplyRequest):
        try:
            return api.do_multiply(req.left.model_dump(), req.right.model_dump())
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.post("/check", response_model=CheckResponse)
    def check(req: CheckRequest):
        try:
            return api.run_check(req.suite, req.n, req.samples, req.seed)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.get("/quiver")
    def quiver():
        return api.quiver_doc()

    @app.post("/phi")
    def phi(req: PhiRequest):
        try:
            return api.phi_doc(req.shape)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.post("/export", response_model=ExportResponse)
    def export(req: ExportRequest):
        try:
            return {"document": api.export_doc(req.n, req.reduced, req.mod_p)}
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    return app


app = create_app()
