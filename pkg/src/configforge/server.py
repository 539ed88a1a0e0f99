"""HTTP service exposing one shared configuration session.

Mutating endpoints are serialized with a lock, so concurrent clicks
observe a total order. Artifact endpoints return plain text and answer
409 while the configuration is incomplete or conflicting.
"""

from __future__ import annotations

import os
import threading
from pathlib import Path

from fastapi import FastAPI
from fastapi.responses import HTMLResponse, JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles

from .errors import (
    ConflictingConfigurationError,
    IncompleteConfigurationError,
    UnknownOptionError,
)
from .generators import generate_config_h, generate_config_mk
from .graph import graph_payload, to_dot
from .inference import COMPLETE, ENGINES
from .parser import parse_deps
from .session import Session, valuation_text

PORT_ENV_VAR = "CONFIGFORGE_PORT"
DEFAULT_PORT = 8000

_FALLBACK_PAGE = """<!doctype html>
<html>
<head><meta charset="utf-8"><title>configforge</title></head>
<body>
<h1>configforge</h1>
<p>No web UI bundle is installed. The JSON API is live under /api/.</p>
</body>
</html>
"""


def default_static_dir() -> Path | None:
    candidate = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    return candidate if candidate.is_dir() else None


def build_app(session: Session, static_dir: Path | None = None) -> FastAPI:
    app = FastAPI(title="configforge")
    lock = threading.Lock()

    def state_payload() -> dict:
        payload = graph_payload(session.model, session.statuses())
        payload["conflict"] = session.conflict
        payload["complete"] = session.is_complete()
        payload["engine"] = session.engine
        return payload

    @app.get("/api/graph")
    def get_graph() -> JSONResponse:
        with lock:
            return JSONResponse(state_payload())

    @app.get("/api/graph.dot")
    def get_graph_dot() -> PlainTextResponse:
        with lock:
            return PlainTextResponse(to_dot(session.model, session.statuses()))

    @app.post("/api/click/{option_id:path}")
    def post_click(option_id: str) -> JSONResponse:
        with lock:
            try:
                session.click(option_id)
            except UnknownOptionError as err:
                return JSONResponse({"error": str(err)}, status_code=404)
            return JSONResponse(state_payload())

    @app.post("/api/reset")
    def post_reset() -> JSONResponse:
        with lock:
            session.reset()
            return JSONResponse(state_payload())

    @app.post("/api/engine")
    def post_engine(body: dict) -> JSONResponse:
        engine = body.get("engine") if isinstance(body, dict) else None
        if engine not in ENGINES:
            return JSONResponse(
                {"error": f"engine must be one of {list(ENGINES)}"}, status_code=400
            )
        with lock:
            session.set_engine(engine)
            return JSONResponse(state_payload())

    def artifact(producer) -> PlainTextResponse | JSONResponse:
        with lock:
            try:
                valuation = session.save_valuation()
            except IncompleteConfigurationError as err:
                return JSONResponse(
                    {"error": "incomplete", "missing": err.missing}, status_code=409
                )
            except ConflictingConfigurationError as err:
                return JSONResponse(
                    {"error": "conflict", "detail": str(err)}, status_code=409
                )
            return PlainTextResponse(producer(valuation))

    @app.post("/api/save")
    def post_save():
        return artifact(lambda v: valuation_text(session.model.options, v))

    @app.get("/api/config.h")
    def get_config_h():
        return artifact(lambda v: generate_config_h(session.model, v))

    @app.get("/api/config.mk")
    def get_config_mk():
        return artifact(lambda v: generate_config_mk(session.model, v))

    if static_dir is not None and static_dir.is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    else:

        @app.get("/")
        def index() -> HTMLResponse:
            return HTMLResponse(_FALLBACK_PAGE)

    return app


def resolve_port(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(PORT_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_PORT


def serve(
    deps_path: str,
    port: int | None = None,
    engine: str = COMPLETE,
    static_dir: Path | None = None,
) -> None:
    import uvicorn

    source = Path(deps_path).read_text()
    session = Session(parse_deps(source), engine=engine)
    app = build_app(
        session, static_dir if static_dir is not None else default_static_dir()
    )
    uvicorn.run(app, host="127.0.0.1", port=resolve_port(port))
