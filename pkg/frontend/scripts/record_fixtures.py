"""Record real API traffic into JSON fixtures for the UI tests.

The UI test suite replays these files through a scripted fetch, so every
payload and artifact byte the tests assert against comes from the actual
server, not from hand-written mocks. Re-run after changing the API:

    python3 scripts/record_fixtures.py

Requires the configforge package (and its dev extras) to be installed.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi.testclient import TestClient

from configforge import Session, parse_deps
from configforge.server import build_app

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "tests" / "fixtures"
DATA = ROOT.parent / "tests" / "data"


def record(client: TestClient, steps: list[tuple[str, str, dict | None]]) -> list[dict]:
    entries = []
    for method, path, body in steps:
        response = client.request(method, path, json=body)
        content_type = response.headers.get("content-type", "")
        is_json = content_type.startswith("application/json")
        entries.append(
            {
                "method": method,
                "path": path,
                "body": body,
                "status": response.status_code,
                "kind": "json" if is_json else "text",
                "response": response.json() if is_json else response.text,
            }
        )
    return entries


def write(name: str, entries: list[dict]) -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    path = FIXTURES / name
    path.write_text(json.dumps(entries, indent=2) + "\n")
    print(f"wrote {path} ({len(entries)} steps)")


def fig1_client() -> TestClient:
    model = parse_deps((DATA / "fig1.deps").read_text())
    return TestClient(build_app(Session(model)))


def main() -> None:
    with fig1_client() as client:
        write(
            "flow_llsc.json",
            record(
                client,
                [
                    ("GET", "/api/graph", None),
                    ("POST", "/api/click/sched", None),
                    ("POST", "/api/click/arm", None),
                    ("POST", "/api/click/arm", None),
                    ("POST", "/api/click/arm", None),
                ],
            ),
        )

    with fig1_client() as client:
        write(
            "flow_conflict.json",
            record(
                client,
                [
                    ("GET", "/api/graph", None),
                    ("POST", "/api/click/arm", None),
                    ("POST", "/api/click/powerpc", None),
                ],
            ),
        )

    with fig1_client() as client:
        write(
            "flow_engine.json",
            record(
                client,
                [
                    ("GET", "/api/graph", None),
                    ("POST", "/api/click/sched", None),
                    ("POST", "/api/click/arm", None),
                    ("POST", "/api/engine", {"engine": "heuristic"}),
                    ("POST", "/api/engine", {"engine": "complete"}),
                ],
            ),
        )

    with fig1_client() as client:
        write(
            "save_incomplete.json",
            record(
                client,
                [
                    ("GET", "/api/graph", None),
                    ("POST", "/api/save", None),
                ],
            ),
        )

    # Fig. 1 plus the property lines, so config.mk has real content.
    props_model = parse_deps(
        (DATA / "fig1.deps").read_text() + (DATA / "kernel_props.deps").read_text()
    )
    with TestClient(build_app(Session(props_model))) as client:
        write(
            "flow_save.json",
            record(
                client,
                [
                    ("GET", "/api/graph", None),
                    ("POST", "/api/click/sched", None),
                    ("POST", "/api/click/s12xe", None),
                    ("POST", "/api/click/microkernel", None),
                    ("POST", "/api/save", None),
                    ("GET", "/api/config.h", None),
                    ("GET", "/api/config.mk", None),
                ],
            ),
        )


if __name__ == "__main__":
    main()
