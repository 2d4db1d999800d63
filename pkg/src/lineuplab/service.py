"""HTTP service for classroom lineup sessions.

Each session lives in its own directory under the store as an
append-only JSONL event log (created, response, revealed). Replaying the
log reconstructs the exact session state: the created event carries the
CSV, the spec, and the creation timestamp, and the build is
deterministic, so the bundle, key, and rendered SVG come back identical.
"""

from __future__ import annotations

import json
import os
import secrets
import sys
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, File, Request, UploadFile
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .errors import LineupError, NullGenerationFailed
from .lineup import LineupBundle, build_lineup, validate_spec, visual_p_value
from .render import render_lineup
from .serialize import spec_from_doc, spec_to_doc
from .table import parse_csv


@dataclass
class Session:
    id: str
    bundle: LineupBundle
    svg: str
    admin_token: str
    responses: list[tuple[str, int, str]] = field(default_factory=list)
    revealed: bool = False
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def m(self) -> int:
        return self.bundle.spec.m

    def seen(self, observer_tag: str) -> bool:
        return any(tag == observer_tag for tag, _, _ in self.responses)

    def reveal_body(self) -> dict:
        body: dict = {"K": len(self.responses)}
        data_panel = self.bundle.key.data_panel
        if data_panel is None:
            return body
        body["data_panel"] = data_panel
        x = sum(1 for _, panel, _ in self.responses if panel == data_panel)
        body["x"] = x
        if body["K"] > 0:
            body["p"] = visual_p_value(x, body["K"], self.m).p
        return body


class _Store:
    """Session registry backed by per-session JSONL event logs."""

    def __init__(self, root: Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self.sessions: dict[str, Session] = {}
        self.registry_lock = threading.Lock()
        self._replay_all()

    def _log_path(self, session_id: str) -> Path:
        return self.root / session_id / "events.jsonl"

    def append_event(self, session_id: str, event: dict) -> None:
        path = self._log_path(session_id)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(event, separators=(",", ":")) + "\n")
            fh.flush()
            os.fsync(fh.fileno())

    def _replay_all(self) -> None:
        for entry in sorted(self.root.iterdir()) if self.root.exists() else []:
            log = entry / "events.jsonl"
            if not log.is_file():
                continue
            try:
                session = self._replay_one(entry.name, log)
            except Exception as exc:  # noqa: BLE001 - a bad log must not sink the rest
                print(f"warning: skipping session {entry.name}: {exc}", file=sys.stderr)
                continue
            self.sessions[session.id] = session

    def _replay_one(self, session_id: str, log: Path) -> Session:
        session: Session | None = None
        with open(log, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                event = json.loads(line)
                kind = event["event"]
                if kind == "created":
                    ds = parse_csv(event["csv"])
                    spec = spec_from_doc(event["spec"])
                    created = datetime.fromisoformat(event["created"])
                    bundle = build_lineup(ds, spec, created=created)
                    session = Session(
                        id=session_id,
                        bundle=bundle,
                        svg=render_lineup(bundle),
                        admin_token=event["admin_token"],
                    )
                elif kind == "response":
                    assert session is not None
                    session.responses.append(
                        (event["observer_tag"], event["panel"], event["received_at"])
                    )
                elif kind == "revealed":
                    assert session is not None
                    session.revealed = True
        if session is None:
            raise ValueError("log has no created event")
        return session

    def create(self, csv_text: str, spec_doc: dict) -> Session:
        ds = parse_csv(csv_text)
        spec = spec_from_doc(spec_doc)
        validate_spec(ds, spec)
        created = datetime.now(timezone.utc)
        bundle = build_lineup(ds, spec, created=created)
        session = Session(
            id=secrets.token_urlsafe(16),
            bundle=bundle,
            svg=render_lineup(bundle),
            admin_token=secrets.token_urlsafe(16),
        )
        self.append_event(
            session.id,
            {
                "event": "created",
                "created": created.isoformat(),
                "csv": csv_text,
                "spec": spec_to_doc(spec),
                "admin_token": session.admin_token,
            },
        )
        with self.registry_lock:
            self.sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session | None:
        with self.registry_lock:
            return self.sessions.get(session_id)


class ResponseBody(BaseModel):
    observer_tag: str
    panel: int


def _err(status: int, code: str) -> JSONResponse:
    return JSONResponse({"error": code}, status_code=status)


def create_app(store_dir: Path, ui_dir: Path | None = None) -> FastAPI:
    app = FastAPI(title="lineuplab session service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = _Store(Path(store_dir))
    app.state.store = store

    @app.post("/sessions", status_code=201)
    def create_session(data: UploadFile = File(...), spec: UploadFile = File(...)):
        try:
            csv_text = data.file.read().decode("utf-8")
            spec_doc = json.loads(spec.file.read().decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError):
            return _err(400, "bad_upload")
        try:
            session = store.create(csv_text, spec_doc)
        except NullGenerationFailed as exc:
            return _err(422, exc.code)
        except LineupError as exc:
            return _err(400, exc.code)
        return JSONResponse(
            {
                "session_id": session.id,
                "m": session.m,
                "plot_kind": session.bundle.spec.plot_kind,
                "admin_token": session.admin_token,
            },
            status_code=201,
        )

    @app.get("/sessions/{session_id}/lineup.svg")
    def get_lineup(session_id: str):
        session = store.get(session_id)
        if session is None:
            return _err(404, "unknown_session")
        return Response(content=session.svg, media_type="image/svg+xml")

    @app.post("/sessions/{session_id}/responses")
    def submit_response(session_id: str, body: ResponseBody):
        session = store.get(session_id)
        if session is None:
            return _err(404, "unknown_session")
        if not body.observer_tag:
            return _err(422, "bad_observer_tag")
        with session.lock:
            if session.revealed:
                return _err(410, "already_revealed")
            if not 1 <= body.panel <= session.m:
                return _err(422, "panel_out_of_range")
            if session.seen(body.observer_tag):
                return _err(409, "duplicate_observer")
            received_at = datetime.now(timezone.utc).isoformat()
            store.append_event(
                session_id,
                {
                    "event": "response",
                    "observer_tag": body.observer_tag,
                    "panel": body.panel,
                    "received_at": received_at,
                },
            )
            session.responses.append((body.observer_tag, body.panel, received_at))
            return {"accepted": True, "responses_so_far": len(session.responses)}

    @app.post("/sessions/{session_id}/reveal")
    def reveal_session(session_id: str, request: Request):
        session = store.get(session_id)
        if session is None:
            return _err(404, "unknown_session")
        token = request.headers.get("X-Admin-Token")
        if token != session.admin_token:
            return _err(403, "bad_admin_token")
        with session.lock:
            if not session.revealed:
                store.append_event(
                    session_id,
                    {
                        "event": "revealed",
                        "revealed_at": datetime.now(timezone.utc).isoformat(),
                    },
                )
                session.revealed = True
            return session.reveal_body()

    @app.get("/sessions/{session_id}/status")
    def session_status(session_id: str):
        session = store.get(session_id)
        if session is None:
            return _err(404, "unknown_session")
        with session.lock:
            return {
                "m": session.m,
                "plot_kind": session.bundle.spec.plot_kind,
                "responses_so_far": len(session.responses),
                "revealed": session.revealed,
            }

    if ui_dir is not None:
        app.mount("/ui", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
