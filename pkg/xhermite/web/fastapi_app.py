# xhermite/web/fastapi_app.py
from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel
from typing import List, Optional
import json
import logging
import os

from xhermite import __version__, config
from xhermite.agents import export_agent
from xhermite.agents.verification_agent import verify_family, verify_first_order
from xhermite.core.families import FamilyParams, FirstOrderFamily, describe, format_v2, potential_v2
from xhermite.core.numerics import sample_potential
from xhermite.core.operators import zero_modes
from xhermite.errors import InvalidParametersError, XHermiteError

# ---- Config ----
# request bounds: the exact checks grow quickly with ν and n
MAX_REQUEST_NU = int(os.environ.get("XHERMITE_MAX_REQUEST_NU", 16))
MAX_REQUEST_DEGREE = int(os.environ.get("XHERMITE_MAX_REQUEST_DEGREE", 30))

logger = logging.getLogger("uvicorn.error")

app = FastAPI(title="xhermite", version=__version__)
app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"])


class VerifyPayload(BaseModel):
    m1: Optional[int] = None
    m2: Optional[int] = None
    m: Optional[int] = None
    max_nu: int = 6
    max_degree: int = 12
    numeric: bool = False


def _params(m1: int, m2: int) -> FamilyParams:
    try:
        return FamilyParams(m1, m2)
    except InvalidParametersError as e:
        raise HTTPException(status_code=422, detail=str(e))


def _bounded(name: str, value: int, limit: int) -> int:
    if value < 0 or value > limit:
        raise HTTPException(status_code=422, detail=f"{name}={value} outside 0..{limit}")
    return value


def _call(fn, *args, **kwargs):
    """Run an agent call, mapping toolkit errors onto HTTP status codes."""
    try:
        return fn(*args, **kwargs)
    except InvalidParametersError as e:
        raise HTTPException(status_code=422, detail=str(e))
    except XHermiteError as e:
        logger.exception("%s failed", getattr(fn, "__name__", fn))
        raise HTTPException(status_code=500, detail=f"{type(e).__name__}: {e}")


@app.get("/family")
async def family(m1: int, m2: int, max_degree: int = config.MAX_DEGREE, levels: int = 8):
    params = _params(m1, m2)
    _bounded("max_degree", max_degree, MAX_REQUEST_DEGREE)
    data = _call(export_agent.family_json, params, max_degree, levels)
    data["display"] = _call(describe, params)
    return data


@app.get("/potential")
async def potential(m1: Optional[int] = None, m2: Optional[int] = None, m: Optional[int] = None,
                    half_width: float = config.FD_HALF_WIDTH, points: int = 201):
    if m is not None:
        pot = _call(lambda: FirstOrderFamily(m).potential)
        exact = str(pot)
    elif m1 is not None and m2 is not None:
        params = _params(m1, m2)
        pot = _call(potential_v2, params)
        exact = _call(format_v2, params)
    else:
        raise HTTPException(status_code=422, detail="give m1 and m2, or m")
    _bounded("points", points, 10001)
    samples = sample_potential(pot, half_width, points)
    return {"exact": exact, "rational": pot.full_rational().to_json(), "samples": json.loads(samples.to_json(orient="records"))}


@app.get("/spectrum")
async def spectrum(m1: int, m2: int, levels: int = 5):
    params = _params(m1, m2)
    _bounded("levels", levels, 20)
    df = _call(export_agent.spectrum_table, params, levels)
    return {"params": params.to_json(), "levels": json.loads(df.to_json(orient="records"))}


@app.get("/ladder")
async def ladder(m1: int, m2: int, operator: str = "c", max_nu: int = 6):
    params = _params(m1, m2)
    _bounded("max_nu", max_nu, MAX_REQUEST_NU)
    df = _call(export_agent.ladder_frame, params, operator, max_nu)
    zm = _call(zero_modes, params, operator)
    return {"params": params.to_json(), "actions": json.loads(df.to_json(orient="records")), "zero_modes": zm.to_json()}


@app.post("/verify")
async def verify(payload: VerifyPayload):
    _bounded("max_nu", payload.max_nu, MAX_REQUEST_NU)
    _bounded("max_degree", payload.max_degree, MAX_REQUEST_DEGREE)
    if payload.m is not None:
        report = _call(verify_first_order, payload.m, payload.max_nu, payload.max_degree, payload.numeric)
    elif payload.m1 is not None and payload.m2 is not None:
        params = _params(payload.m1, payload.m2)
        report = _call(verify_family, params, payload.max_nu, payload.max_degree, payload.numeric)
    else:
        raise HTTPException(status_code=422, detail="give m1 and m2, or m")
    return report.to_json()


@app.get("/")
async def health():
    return {
        "status": "ok",
        "message": "xhermite backend is running. See /docs for API.",
        "version": __version__,
    }
