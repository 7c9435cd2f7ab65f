"""FastAPI service exposing the orbit, CSP, witness, and trajectory runs."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import service
from .errors import StateSpaceTooLarge, TogglekitError
from .families import SHIPPED_FAMILIES

app = FastAPI(title="togglekit", version="0.1.0")


def _run(handler, cfg):
    try:
        return handler(cfg)
    except StateSpaceTooLarge as exc:
        raise HTTPException(status_code=413, detail=str(exc)) from exc
    except TogglekitError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/v1/health")
def health() -> dict:
    return {"status": "ok"}


@app.get("/v1/families")
def families() -> dict:
    return {"schema": service.SCHEMA_VERSION, "families": list(SHIPPED_FAMILIES)}


@app.post("/v1/orbits", response_model=service.OrbitsResponse, response_model_by_alias=True)
def orbits(cfg: service.RunConfig):
    return _run(service.run_orbits, cfg)


@app.post("/v1/order", response_model=service.OrderResponse, response_model_by_alias=True)
def order(cfg: service.RunConfig):
    return _run(service.run_order, cfg)


@app.post("/v1/csp", response_model=service.CspResponse, response_model_by_alias=True)
def csp(cfg: service.CspConfig):
    return _run(service.run_csp, cfg)


@app.post("/v1/witness", response_model=service.WitnessResponse, response_model_by_alias=True)
def witness(cfg: service.WitnessConfig):
    return _run(service.run_witness, cfg)


@app.post("/v1/trajectory", response_model=service.TrajectoryResponse, response_model_by_alias=True)
def trajectory(cfg: service.RunConfig):
    return _run(service.run_trajectory, cfg)
