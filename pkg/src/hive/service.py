"""HTTP/JSON service over one store.

Route handlers stay thin: each one calls a payload builder that the CLI's
``--json`` mode reuses, which is what keeps the two surfaces byte-equivalent.
Errors always leave as ``{"error": {"code": ..., "message": ...}}``.
"""

from __future__ import annotations

import logging
import os
import tempfile
from pathlib import Path

from fastapi import FastAPI, File, Form, Request, UploadFile
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles

from .documents import DocumentSource, fetch_url
from .encoders import ENCODING_FORMATS, encode_concept
from .errors import (
    ConceptNotFoundError,
    DocumentError,
    EmptyOntologyError,
    HiveError,
    RdfParseError,
    StoreError,
    UnknownFormatError,
    UnknownOntologyError,
)
from .indexing import SORT_MODES, arrange_hits, index_document
from .ingest import ingest_file
from .keywords import ALGORITHMS, ExtractionConfig
from .search import search_concepts
from .store import Store, StoreSnapshot

log = logging.getLogger(__name__)

DEFAULT_PORT = 8080
DEFAULT_LIMIT = 100
UI_DIR_ENV_VAR = "HIVE_UI_DIR"

_ENCODING_MEDIA_TYPES = {
    "json-ld": "application/ld+json",
    "skos-rdf-xml": "application/rdf+xml",
    "dc-xml": "application/xml",
    "plain-xml": "application/xml",
}


# --- payload builders (shared with the CLI) -----------------------------------


def ontologies_payload(snapshot: StoreSnapshot) -> dict:
    return {
        "version": snapshot.version,
        "ontologies": [record.to_dict() for record in snapshot.records()],
    }


def roots_payload(snapshot: StoreSnapshot, ontology_id: str) -> dict:
    loaded = snapshot.get(ontology_id)
    return {
        "ontology_id": ontology_id,
        "roots": [c.to_dict() for c in loaded.graph.roots()],
    }


def concept_payload(snapshot: StoreSnapshot, ontology_id: str, uri: str) -> dict:
    return snapshot.get(ontology_id).graph.get(uri).to_dict()


def children_payload(
    snapshot: StoreSnapshot,
    ontology_id: str,
    uri: str,
    offset: int = 0,
    limit: int = DEFAULT_LIMIT,
) -> dict:
    kids = snapshot.get(ontology_id).graph.children(uri)
    page = kids[offset : offset + limit]
    return {
        "ontology_id": ontology_id,
        "uri": uri,
        "total": len(kids),
        "offset": offset,
        "limit": limit,
        "children": [c.to_dict() for c in page],
    }


def search_payload(
    snapshot: StoreSnapshot,
    query: str,
    ontology_ids: list[str] | None,
    offset: int = 0,
    limit: int = DEFAULT_LIMIT,
) -> dict:
    if ontology_ids is None:
        ontology_ids = snapshot.ids()
    groups = search_concepts(snapshot, query, ontology_ids)
    return {
        "query": query,
        "offset": offset,
        "limit": limit,
        "groups": [
            {
                "ontology_id": ontology_id,
                "total": len(concepts),
                "concepts": [c.to_dict() for c in concepts[offset : offset + limit]],
            }
            for ontology_id, concepts in groups.items()
        ],
    }


def index_payload(
    snapshot: StoreSnapshot,
    source: DocumentSource,
    ontology_ids: list[str],
    config: ExtractionConfig,
    sort: str = "score",
) -> dict:
    result = index_document(snapshot, source, ontology_ids, config)
    payload = result.to_dict()
    payload["arranged"] = arrange_hits(result, sort)
    return payload


def encoding_body(snapshot: StoreSnapshot, ontology_id: str, uri: str, format: str) -> str:
    concept = snapshot.get(ontology_id).graph.get(uri)
    return encode_concept(concept, format)


def healthz_payload(snapshot: StoreSnapshot) -> dict:
    return {
        "status": "ok",
        "version": snapshot.version,
        "ontologies": len(snapshot.ids()),
    }


# --- error mapping ------------------------------------------------------------

_ERROR_STATUS: list[tuple[type[Exception], int, str]] = [
    (UnknownOntologyError, 404, "unknown-ontology"),
    (ConceptNotFoundError, 404, "concept-not-found"),
    (UnknownFormatError, 400, "unknown-format"),
    (RdfParseError, 400, "parse-error"),
    (EmptyOntologyError, 400, "empty-ontology"),
    (DocumentError, 400, "document-error"),
    (StoreError, 500, "store-error"),
    (HiveError, 400, "bad-request"),
]


def _error_response(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status, content={"error": {"code": code, "message": message}}
    )


def _classify(exc: Exception) -> tuple[int, str]:
    for exc_type, status, code in _ERROR_STATUS:
        if isinstance(exc, exc_type):
            return status, code
    return 500, "internal"


# --- app ----------------------------------------------------------------------


def find_ui_dir() -> Path | None:
    """Built frontend assets, if any: $HIVE_UI_DIR or ./frontend/dist."""
    override = os.environ.get(UI_DIR_ENV_VAR)
    candidates = [Path(override)] if override else [Path("frontend") / "dist"]
    for candidate in candidates:
        if candidate.is_dir() and (candidate / "index.html").is_file():
            return candidate
    return None


def create_app(store: Store) -> FastAPI:
    app = FastAPI(title="hive", docs_url=None, redoc_url=None, openapi_url=None)

    @app.exception_handler(HiveError)
    async def hive_error_handler(request: Request, exc: HiveError):
        status, code = _classify(exc)
        if status >= 500:
            log.error("request %s failed: %s", request.url.path, exc)
        return _error_response(status, code, str(exc))

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        return _error_response(400, "validation", str(exc.errors()[:3]))

    @app.get("/healthz")
    def healthz():
        return healthz_payload(store.snapshot())

    @app.get("/ontologies")
    def list_ontologies():
        return ontologies_payload(store.snapshot())

    @app.post("/ontologies", status_code=201)
    async def upload_ontology(
        file: UploadFile = File(...),
        id: str = Form(default=""),
        format: str = Form(default="auto"),
        display_name: str = Form(default=""),
    ):
        suffix = Path(file.filename or "upload.rdf").suffix or ".rdf"
        data = await file.read()
        with tempfile.NamedTemporaryFile(suffix=suffix, delete=False) as tmp:
            tmp.write(data)
            tmp_path = tmp.name
        try:
            record, report = ingest_file(
                store,
                tmp_path,
                format=format,
                ontology_id=id or None,
                display_name=display_name or (file.filename or None),
            )
        finally:
            os.unlink(tmp_path)
        return {"ontology": record.to_dict(), "report": report.to_dict()}

    @app.delete("/ontologies/{ontology_id}")
    def delete_ontology(ontology_id: str):
        version = store.delete_ontology(ontology_id)
        return {"deleted": ontology_id, "version": version}

    @app.get("/ontologies/{ontology_id}/roots")
    def roots(ontology_id: str):
        return roots_payload(store.snapshot(), ontology_id)

    @app.get("/ontologies/{ontology_id}/concept")
    def concept(ontology_id: str, uri: str):
        return concept_payload(store.snapshot(), ontology_id, uri)

    @app.get("/ontologies/{ontology_id}/children")
    def children(ontology_id: str, uri: str, offset: int = 0, limit: int = DEFAULT_LIMIT):
        return children_payload(store.snapshot(), ontology_id, uri, offset, limit)

    @app.get("/search")
    def search(q: str, onts: str = "", offset: int = 0, limit: int = DEFAULT_LIMIT):
        ids = [part for part in onts.split(",") if part] or None
        return search_payload(store.snapshot(), q, ids, offset, limit)

    @app.post("/index")
    async def index(request: Request):
        body = await request.json()
        if not isinstance(body, dict):
            raise HiveError("request body must be a JSON object")
        source = _source_from_body(body)
        ontology_ids = body.get("ontologies")
        if not isinstance(ontology_ids, list) or not ontology_ids:
            raise HiveError("'ontologies' must be a non-empty list of ids")
        config = ExtractionConfig(
            algorithm=body.get("algorithm", "rake"),
            max_phrase_len=int(body.get("max_phrase_len", 3)),
            top_k=int(body.get("top_k", 30)),
        )
        config.validate()
        sort = body.get("sort", "score")
        if sort not in SORT_MODES:
            raise HiveError(f"unknown sort mode {sort!r}; expected one of {SORT_MODES}")
        return index_payload(store.snapshot(), source, ontology_ids, config, sort)

    @app.get("/concept/encoding")
    def concept_encoding(uri: str, ont: str, format: str):
        body = encoding_body(store.snapshot(), ont, uri, format)
        return Response(
            content=body,
            media_type=_ENCODING_MEDIA_TYPES.get(format, "text/plain"),
        )

    ui_dir = find_ui_dir()
    if ui_dir is not None:
        app.mount("/ui", StaticFiles(directory=str(ui_dir), html=True), name="ui")
        log.info("serving UI assets from %s", ui_dir)

    return app


def _source_from_body(body: dict) -> DocumentSource:
    text = body.get("text")
    url = body.get("url")
    if (text is None) == (url is None):
        raise HiveError("provide exactly one of 'text' or 'url'")
    if text is not None:
        if not isinstance(text, str):
            raise HiveError("'text' must be a string")
        return DocumentSource.from_text(text)
    if not isinstance(url, str):
        raise HiveError("'url' must be a string")
    return fetch_url(url)


def serve(store_path: str, port: int = DEFAULT_PORT, host: str = "127.0.0.1") -> None:
    """Blocking entry point used by the CLI."""
    import uvicorn

    store = Store.open(store_path)
    app = create_app(store)
    try:
        uvicorn.run(app, host=host, port=port, log_level="info")
    finally:
        store.close()


# quick check that the list above stays in sync with the encoders module
assert set(_ENCODING_MEDIA_TYPES) == set(ENCODING_FORMATS)
assert "rake" in ALGORITHMS
