"""File-backed HTTP JSON API for the workbench.

Cases persist as canonical JSON files under ``store/cases`` so they stay
human-reviewable and diffable in version control. Writes are optimistic:
the client sends ``If-Match: <revision>`` and loses with a 409 if the
stored revision moved. Writes to one case are serialized by a per-case
lock and land via temp-file-plus-rename, so a crash leaves either the
old or the new file, never a torn one.

Store layout: ``cases/*.json``, ``datasets/*.csv``, ``evidence/**``,
``maps/*.json`` (optional registry overrides).
"""

from __future__ import annotations

import os
import re
import tempfile
import threading
import uuid
from dataclasses import replace
from pathlib import Path

from fastapi import FastAPI, Query, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import reports
from .case_model import AssuranceCase, from_canonical_json, to_canonical_json
from .dsl import format_case
from .errors import (
    ConflictError,
    DecodeError,
    EmptyTableError,
    NotFoundError,
    PreconditionError,
    SchemaError,
)
from .evaluator import EvidenceStores, evaluate_case
from .fairness_map import BUILTIN_MAP_ID, consideration_registry, map_coverage
from .lifecycle import stage_coverage, stage_registry
from .metrics import ingest_table
from .validator import validate

_TOKEN_RE = re.compile(r"[A-Za-z0-9_-]+\Z")


class CaseStore:
    """Canonical-JSON case files with per-case write serialization."""

    def __init__(self, root: Path):
        self.root = Path(root)
        self.cases_dir = self.root / "cases"
        self.cases_dir.mkdir(parents=True, exist_ok=True)
        self._locks: dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def _lock(self, case_id: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks.setdefault(case_id, threading.Lock())

    def _path(self, case_id: str) -> Path:
        if not _TOKEN_RE.match(case_id):
            raise NotFoundError(f"invalid case id {case_id!r}")
        return self.cases_dir / f"{case_id}.json"

    def list_cases(self) -> list[dict]:
        entries = []
        for path in sorted(self.cases_dir.glob("*.json")):
            case = from_canonical_json(path.read_bytes())
            entries.append(
                {"caseId": path.stem, "title": case.title, "revision": case.revision}
            )
        return entries

    def load(self, case_id: str) -> AssuranceCase:
        path = self._path(case_id)
        if not path.is_file():
            raise NotFoundError(f"case {case_id!r} not found")
        return from_canonical_json(path.read_bytes())

    def _write(self, path: Path, case: AssuranceCase):
        data = to_canonical_json(case)
        fd, tmp = tempfile.mkstemp(dir=self.cases_dir, suffix=".tmp")
        try:
            with os.fdopen(fd, "wb") as handle:
                handle.write(data)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def create(self, body: bytes) -> tuple[str, int]:
        case = from_canonical_json(body)
        case_id = uuid.uuid4().hex[:12]
        with self._lock(case_id):
            self._write(self._path(case_id), case)
        return case_id, case.revision

    def save(self, case_id: str, body: bytes, expected_revision: int) -> int:
        case = from_canonical_json(body)
        path = self._path(case_id)
        with self._lock(case_id):
            if not path.is_file():
                raise NotFoundError(f"case {case_id!r} not found")
            stored = from_canonical_json(path.read_bytes())
            if stored.revision != expected_revision:
                raise ConflictError(
                    f"revision mismatch: stored {stored.revision}, expected {expected_revision}"
                )
            bumped = replace(case, revision=expected_revision + 1)
            self._write(path, bumped)
            return bumped.revision


def _error(status: int, code: str, message: str, **extra) -> JSONResponse:
    return JSONResponse(status_code=status, content={"code": code, "message": message, **extra})


def create_app(store_root: Path) -> FastAPI:
    root = Path(store_root)
    store = CaseStore(root)
    stores = EvidenceStores(evidence_dir=root / "evidence", datasets_dir=root / "datasets")
    map_dirs = (root / "maps",)

    app = FastAPI(title="tea-workbench", version="0.1.0")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.get("/api/v1/cases")
    def list_cases():
        return store.list_cases()

    @app.post("/api/v1/cases", status_code=201)
    async def create_case(request: Request):
        body = await request.body()
        try:
            case_id, revision = store.create(body)
        except DecodeError as exc:
            return _error(400, "BadRequest", str(exc))
        return {"caseId": case_id, "revision": revision}

    @app.get("/api/v1/cases/{case_id}")
    def get_case(case_id: str):
        try:
            case = store.load(case_id)
        except NotFoundError as exc:
            return _error(404, "NotFound", str(exc))
        return Response(
            content=to_canonical_json(case),
            media_type="application/json",
            headers={"ETag": f'"{case.revision}"'},
        )

    @app.put("/api/v1/cases/{case_id}")
    async def put_case(case_id: str, request: Request):
        raw = request.headers.get("if-match")
        if raw is None:
            return _error(400, "BadRequest", "If-Match header with the expected revision is required")
        try:
            expected = int(raw.strip().strip('"'))
        except ValueError:
            return _error(400, "BadRequest", f"malformed If-Match value {raw!r}")
        body = await request.body()
        try:
            revision = store.save(case_id, body, expected)
        except DecodeError as exc:
            return _error(400, "BadRequest", str(exc))
        except NotFoundError as exc:
            return _error(404, "NotFound", str(exc))
        except ConflictError as exc:
            return _error(409, "Conflict", str(exc))
        return {"caseId": case_id, "revision": revision}

    @app.get("/api/v1/cases/{case_id}/dsl")
    def get_case_dsl(case_id: str):
        try:
            case = store.load(case_id)
        except NotFoundError as exc:
            return _error(404, "NotFound", str(exc))
        return Response(
            content=format_case(case),
            media_type="text/plain; charset=utf-8",
            headers={"ETag": f'"{case.revision}"'},
        )

    @app.post("/api/v1/cases/{case_id}/validate")
    def validate_case(case_id: str):
        try:
            case = store.load(case_id)
        except NotFoundError as exc:
            return _error(404, "NotFound", str(exc))
        return reports.diagnostics_to_json(validate(case, map_dirs=map_dirs))

    @app.post("/api/v1/cases/{case_id}/coverage")
    def coverage_case(case_id: str, map_id: str = Query(default=BUILTIN_MAP_ID, alias="map")):
        try:
            case = store.load(case_id)
            considerations = map_coverage(case, map_id, search_dirs=map_dirs)
        except NotFoundError as exc:
            return _error(404, "NotFound", str(exc))
        return reports.coverage_to_json(stage_coverage(case), considerations)

    @app.post("/api/v1/cases/{case_id}/evaluate")
    def evaluate_endpoint(case_id: str):
        try:
            case = store.load(case_id)
        except NotFoundError as exc:
            return _error(404, "NotFound", str(exc))
        try:
            result = evaluate_case(case, stores)
        except PreconditionError as exc:
            return _error(
                422,
                "PreconditionFailed",
                str(exc),
                diagnostics=reports.diagnostics_to_json(exc.diagnostics),
            )
        return reports.evaluation_to_json(case, result)

    @app.get("/api/v1/registry/stages")
    def registry_stages():
        return reports.stages_to_json(stage_registry())

    @app.get("/api/v1/registry/considerations")
    def registry_considerations(map_id: str = Query(default=BUILTIN_MAP_ID, alias="map")):
        try:
            entries = consideration_registry(map_id, search_dirs=map_dirs)
        except NotFoundError as exc:
            return _error(404, "NotFound", str(exc))
        return reports.considerations_to_json(entries)

    @app.post("/api/v1/datasets/{name}", status_code=201)
    async def upload_dataset(name: str, request: Request):
        if not _TOKEN_RE.match(name):
            return _error(400, "BadRequest", f"invalid dataset name {name!r}")
        body = await request.body()
        try:
            table = ingest_table(body)
        except SchemaError as exc:
            return _error(422, "SchemaError", str(exc))
        except EmptyTableError as exc:
            return _error(422, "EmptyError", str(exc))
        except (ValueError, UnicodeDecodeError) as exc:
            return _error(422, "ValueError", str(exc))
        datasets_dir = root / "datasets"
        datasets_dir.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=datasets_dir, suffix=".tmp")
        with os.fdopen(fd, "wb") as handle:
            handle.write(body)
        os.replace(tmp, datasets_dir / f"{name}.csv")
        return {"name": name, "rows": len(table.rows)}

    return app
