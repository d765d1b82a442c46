"""FastAPI application exposing the library over HTTP.

Run with:  uvicorn qfock.service.app:app  (or `qfock serve`).
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from . import handlers
from . import models as m

app = FastAPI(
    title="qfock",
    version=__version__,
    description=(
        "Exact computations in the level-one Schur-basis modules of the "
        "quantum affine algebra: straightening, Littlewood-Richardson "
        "products, current actions, generator words and verification suites."
    ),
)


def _guard(fn, req):
    try:
        return fn(req)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/v1/straighten", response_model=m.StraightenResponse)
def straighten(req: m.StraightenRequest):
    return _guard(handlers.handle_straighten, req)


@app.post("/v1/conjugate", response_model=m.ConjugateResponse)
def conjugate(req: m.ConjugateRequest):
    return _guard(handlers.handle_conjugate, req)


@app.post("/v1/lr", response_model=m.PolyResponse)
def lr(req: m.LrRequest):
    return _guard(handlers.handle_lr, req)


@app.post("/v1/pieri", response_model=m.PolyResponse)
def pieri(req: m.PieriRequest):
    return _guard(handlers.handle_pieri, req)


@app.post("/v1/jt", response_model=m.JtResponse)
def jt(req: m.JtRequest):
    return _guard(handlers.handle_jt, req)


@app.post("/v1/convert", response_model=m.PolyResponse)
def convert(req: m.ConvertRequest):
    return _guard(handlers.handle_convert, req)


@app.post("/v1/mixed", response_model=m.MixedResponse)
def mixed(req: m.MixedRequest):
    return _guard(handlers.handle_mixed, req)


@app.post("/v1/x", response_model=m.VectorResponse)
def x(req: m.XRequest):
    return _guard(handlers.handle_x, req)


@app.post("/v1/divided", response_model=m.VectorResponse)
def divided(req: m.DividedRequest):
    return _guard(handlers.handle_divided, req)


@app.post("/v1/apply", response_model=m.VectorResponse)
def apply(req: m.ApplyRequest):
    return _guard(handlers.handle_apply, req)


@app.post("/v1/inner", response_model=m.InnerResponse)
def inner(req: m.InnerRequest):
    return _guard(handlers.handle_inner, req)


@app.post("/v1/check", response_model=m.CheckResponse)
def check(req: m.CheckRequest):
    return _guard(handlers.handle_check, req)
