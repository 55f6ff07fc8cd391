"""HTTP JSON API over the analysis pipeline.

Stateless per request: the loaded AppState is immutable after startup and
shared across handlers; the embedding cache is the only mutable structure
and synchronizes internally.
"""

from __future__ import annotations

import logging

from fastapi import FastAPI, Request, UploadFile
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .errors import (
    EmptyDocument,
    EmptyInput,
    EncodingError,
    FormatMismatch,
    MalformedMarkup,
    OversizeDocument,
    SkillmapError,
    UnsupportedFormat,
)
from .pipeline import AppState, analyze_document
from .textprep import RawDocument

logger = logging.getLogger(__name__)

_EXTENSION_FORMATS = {
    "txt": "txt",
    "html": "html",
    "htm": "html",
    "xml": "xml",
}


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"code": code, "message": message})


def _format_for_name(name: str) -> str:
    ext = name.rsplit(".", 1)[-1].lower() if "." in name else ""
    return _EXTENSION_FORMATS.get(ext, "pre_extracted")


def create_app(state: AppState | None = None, cors_origins: list[str] | None = None) -> FastAPI:
    app = FastAPI(title="skillmap", docs_url=None, redoc_url=None)
    app.state.engine = state
    if cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=cors_origins,
            allow_methods=["*"],
            allow_headers=["*"],
        )

    def engine() -> AppState | None:
        return app.state.engine

    @app.post("/api/analyze")
    async def analyze(request: Request, file: UploadFile | None = None):
        st = engine()
        if st is None:
            return _error(503, "loading", "service is still loading catalogs")
        if file is not None:
            data = await file.read()
            name = file.filename or "upload"
            declared = _format_for_name(name)
        else:
            try:
                payload = await request.json()
            except Exception:
                return _error(400, "bad_request", "expected multipart file or JSON body")
            if not isinstance(payload, dict) or "text" not in payload:
                return _error(400, "bad_request", "JSON body needs a 'text' field")
            name = str(payload.get("name", "document"))
            declared = str(payload.get("format", "txt"))
            data = str(payload["text"]).encode("utf-8")
        if len(data) > st.prep.max_size_bytes:
            return _error(413, "oversize", f"document exceeds {st.prep.max_size_bytes} bytes")
        doc = RawDocument(name=name, declared_format=declared, data=data)
        try:
            return analyze_document(doc, st, include_timings=True)
        except OversizeDocument as exc:
            return _error(413, "oversize", str(exc))
        except (EmptyDocument, EmptyInput) as exc:
            return _error(422, "empty_document", str(exc))
        except (UnsupportedFormat, FormatMismatch, EncodingError, MalformedMarkup) as exc:
            return _error(400, "invalid_document", str(exc))
        except SkillmapError as exc:
            logger.exception("analysis failed for %s", name)
            return _error(500, "internal", str(exc))

    @app.get("/api/sdg/{sdg_id}")
    def sdg_detail(sdg_id: int):
        st = engine()
        if st is None:
            return _error(503, "loading", "service is still loading catalogs")
        for entry in st.sdgs:
            if entry.sdg_id == sdg_id:
                return {"id": entry.sdg_id, "name": entry.name, "description": entry.description}
        return _error(404, "not_found", f"no SDG with id {sdg_id}")

    @app.get("/api/health")
    def health():
        st = engine()
        if st is None:
            return _error(503, "loading", "service is still loading catalogs")
        return {
            "status": "ok",
            "catalog_sizes": {
                "skills": len(st.skills),
                "occupations": len(st.occupations),
                "courses": len(st.courses),
                "sdgs": len(st.sdgs),
            },
            "embedder_dim": st.embedder.dim,
        }

    @app.get("/api/config")
    def config_echo():
        st = engine()
        if st is None:
            return _error(503, "loading", "service is still loading catalogs")
        return {
            "prep": {
                "max_size_bytes": st.prep.max_size_bytes,
                "chunk_size_limit": st.prep.chunk_size_limit,
                "supported_formats": list(st.prep.supported_formats),
            },
            "extraction": {
                "tau": st.extraction.tau,
                "chunk_size_limit": st.extraction.chunk_size_limit,
                "dedup_similarity": st.extraction.dedup_similarity,
                "max_skills": st.extraction.max_skills,
            },
            "mapping": {
                "w_rho": st.mapping.w_rho,
                "w_sigma": st.mapping.w_sigma,
                "tau_c": st.mapping.tau_c,
                "top_occupations": st.mapping.top_occupations,
                "top_courses": st.mapping.top_courses,
            },
            "embedder": {
                "kind": st.embedder.kind,
                "dim": st.embedder.dim,
                "seed": st.embedder.seed,
                "cache_capacity": st.embedder.cache_capacity,
            },
        }

    return app
