"""Stateless JSON-over-HTTP facade; every request carries the full arrangement.

Responses are emitted through the same canonical serializer as the CLI,
so the two surfaces are byte-identical for identical inputs.
"""
from __future__ import annotations

import json

from fastapi import FastAPI, Query, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import moves, render, sweep
from .arrangement import arrangement_from_dict, arrangement_to_dict, validate
from .errors import CannotPlace, CircleSweepError, DegeneratePoint, OutsideClosure, SeedSwallowed
from .geom import Axis
from .jsonio import canonical_json


def _json_response(payload, status: int = 200) -> Response:
    return Response(canonical_json(payload), status_code=status, media_type="application/json")


def _error(status: int, message: str) -> Response:
    return _json_response({"error": message}, status)


async def _read_arrangement(request: Request):
    try:
        body = await request.body()
        data = json.loads(body)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        return None, _error(400, f"malformed JSON body: {exc}")
    return _parse_arrangement(data)


def _parse_arrangement(data):
    try:
        return arrangement_from_dict(data), None
    except (ValueError, CircleSweepError) as exc:
        return None, _error(400, f"malformed arrangement: {exc}")


def create_app() -> FastAPI:
    app = FastAPI(title="circlesweep", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.post("/api/validate")
    async def api_validate(request: Request):
        arr, err = await _read_arrangement(request)
        if err is not None:
            return err
        return _json_response(validate(arr).to_dict())

    @app.post("/api/graph")
    async def api_graph(request: Request, axis: str = Query("x")):
        if axis not in ("x", "y"):
            return _error(400, f"bad axis {axis!r}")
        arr, err = await _read_arrangement(request)
        if err is not None:
            return err
        report = validate(arr)
        if not report.valid:
            return _json_response(report.to_dict(), 422)
        g = sweep.build_graph(arr, Axis.X if axis == "x" else Axis.Y)
        return _json_response(g.to_dict())

    async def _move_request(request: Request):
        try:
            data = json.loads(await request.body())
            move = data["move"]
            circle = str(move["circle"])
            angle = float(move["angle"])
            radius = move.get("radius")
            radius = None if radius is None else float(radius)
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            return None, _error(400, f"malformed move request: {exc}")
        arr, err = _parse_arrangement(data.get("arrangement"))
        if err is not None:
            return None, err
        report = validate(arr)
        if not report.valid:
            return None, _json_response(report.to_dict(), 422)
        try:
            mp = moves.resolve_move_point(arr, circle, angle)
            mrep = moves.verify(arr, mp, radius)
        except (CannotPlace, SeedSwallowed, DegeneratePoint, OutsideClosure) as exc:
            return None, _error(409, str(exc))
        except KeyError as exc:
            return None, _error(400, f"unknown circle {exc}")
        return mrep, None

    @app.post("/api/move/preview")
    async def api_preview(request: Request):
        mrep, err = await _move_request(request)
        if err is not None:
            return err
        payload = mrep.to_dict()
        payload["render"] = render.render_svg(mrep.result)
        return _json_response(payload)

    @app.post("/api/move/commit")
    async def api_commit(request: Request):
        mrep, err = await _move_request(request)
        if err is not None:
            return err
        return _json_response(arrangement_to_dict(mrep.result))

    async def _render_arr(arr):
        report = validate(arr)
        if not report.valid:
            return _json_response(report.to_dict(), 422)
        return Response(render.render_svg(arr), media_type="image/svg+xml")

    @app.get("/api/render")
    async def api_render_get(arrangement: str = Query(...)):
        try:
            data = json.loads(arrangement)
        except json.JSONDecodeError as exc:
            return _error(400, f"malformed arrangement parameter: {exc}")
        arr, err = _parse_arrangement(data)
        if err is not None:
            return err
        return await _render_arr(arr)

    @app.post("/api/render")
    async def api_render_post(request: Request):
        arr, err = await _read_arrangement(request)
        if err is not None:
            return err
        return await _render_arr(arr)

    return app
