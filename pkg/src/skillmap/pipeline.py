"""End-to-end analysis: one document in, skills/occupations/courses/SDGs out.

Holds the loaded catalogs, indexes and embedder so both the CLI and the
HTTP service run the identical pipeline.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import catalogs
from .catalogs import (
    CourseEntry,
    OccupationEntry,
    SdgEntry,
    SkillEntry,
    bundled_data_path,
)
from .embedding import EmbedderSpec, EmbeddingCache, EmbeddingStore, load_embedding_store
from .extraction import ExtractionConfig, SkillProfile, extract_skills
from .mapping import (
    MappingConfig,
    document_vector,
    recommend_courses,
    score_occupations,
    score_sdgs,
)
from .textprep import PrepConfig, RawDocument, chunk_text, clean_text, extract_text, validate_document
from .vindex import VectorIndex, load_index


@dataclass
class AppState:
    skills: list[SkillEntry]
    occupations: list[OccupationEntry]
    courses: list[CourseEntry]
    sdgs: list[SdgEntry]
    skill_index: VectorIndex
    course_index: VectorIndex
    occupation_vectors: dict[str, np.ndarray]
    sdg_vectors: dict[int, np.ndarray]
    embedder: EmbedderSpec
    prep: PrepConfig = field(default_factory=PrepConfig)
    extraction: ExtractionConfig = field(default_factory=ExtractionConfig)
    mapping: MappingConfig = field(default_factory=MappingConfig)
    store: EmbeddingStore | None = None
    cache: EmbeddingCache = None  # shared, internally synchronized

    def __post_init__(self):
        if self.cache is None:
            self.cache = EmbeddingCache(self.embedder.cache_capacity)


def load_state(
    skills_path=None,
    occupations_path=None,
    courses_path=None,
    sdgs_path=None,
    skill_index_path=None,
    course_index_path=None,
    embeddings_path=None,
    embedder: EmbedderSpec | None = None,
    prep: PrepConfig | None = None,
    extraction: ExtractionConfig | None = None,
    mapping: MappingConfig | None = None,
) -> AppState:
    """Load catalogs (bundled defaults when paths are omitted) and build or
    load the vector indexes."""
    embedder = embedder or EmbedderSpec()
    skills = catalogs.load_skills(skills_path or bundled_data_path("skills.csv"))
    occupations = catalogs.load_occupations(occupations_path or bundled_data_path("occupations.csv"))
    courses = catalogs.load_courses(courses_path or bundled_data_path("courses.csv"))
    sdgs = catalogs.load_sdgs(sdgs_path or bundled_data_path("sdgs.csv"))
    store = load_embedding_store(embeddings_path) if embeddings_path else None
    skill_index = (
        load_index(skill_index_path) if skill_index_path
        else catalogs.build_skill_index(skills, embedder, store)
    )
    course_index = (
        load_index(course_index_path) if course_index_path
        else catalogs.build_course_index(courses, embedder, store)
    )
    return AppState(
        skills=skills,
        occupations=occupations,
        courses=courses,
        sdgs=sdgs,
        skill_index=skill_index,
        course_index=course_index,
        occupation_vectors=catalogs.embed_occupation_descriptions(occupations, embedder, store),
        sdg_vectors=catalogs.embed_sdgs(sdgs, embedder, store),
        embedder=embedder,
        prep=prep or PrepConfig(),
        extraction=extraction or ExtractionConfig(),
        mapping=mapping or MappingConfig(),
        store=store,
    )


def profile_to_dict(profile: SkillProfile) -> list[dict]:
    return [
        {
            "skill_id": m.skill_id,
            "label": m.label,
            "frequency": m.frequency,
            "max_score": round(m.max_score, 6),
            "mean_score": round(m.mean_score, 6),
        }
        for m in profile.matches
    ]


def analyze_document(doc: RawDocument, state: AppState, include_timings: bool = True) -> dict:
    """Run the whole pipeline and serialize an analysis result.

    Timings are wall-clock and therefore excluded when a byte-deterministic
    result is needed (CLI output)."""
    timings: dict[str, float] = {}

    def timed(stage, fn):
        start = time.perf_counter()
        result = fn()
        timings[stage] = round((time.perf_counter() - start) * 1000.0, 3)
        return result

    validate_document(doc, state.prep)
    clean = timed("preprocess", lambda: clean_text(extract_text(doc), source_name=doc.name))
    chunks = timed("chunk", lambda: chunk_text(clean, state.extraction.chunk_size_limit))
    profile = timed("extract_skills", lambda: extract_skills(
        doc, state.skill_index, state.extraction, state.embedder,
        prep=state.prep, cache=state.cache, store=state.store,
    ))
    doc_vec = timed("document_vector", lambda: document_vector(
        chunks, state.embedder, cache=state.cache, store=state.store,
    ))
    occupations = timed("occupations", lambda: score_occupations(
        profile, doc_vec, state.occupations, state.occupation_vectors, state.mapping,
    ))
    courses = timed("courses", lambda: recommend_courses(
        profile, state.course_index, state.mapping, state.embedder,
        cache=state.cache, store=state.store,
    ))
    sdg_scores = timed("sdgs", lambda: score_sdgs(doc_vec, state.sdgs, state.sdg_vectors))

    result = {
        "document_name": doc.name,
        "chunk_count": profile.chunk_count,
        "skills": profile_to_dict(profile),
        "occupations": [
            {
                "occupation_id": o.occupation_id,
                "title": o.title,
                "overlap_ratio": round(o.overlap_ratio, 6),
                "text_similarity": round(o.text_similarity, 6),
                "combined": round(o.combined, 6),
            }
            for o in occupations
        ],
        "courses": [
            {
                "course_id": c.course_id,
                "title": c.title,
                "score": round(c.score, 6),
                "matched_skill_ids": c.matched_skill_ids,
            }
            for c in courses
        ],
        "sdgs": [
            {"sdg_id": s.sdg_id, "name": s.name, "relevance": round(s.relevance, 6)}
            for s in sdg_scores
        ],
    }
    if include_timings:
        result["timings"] = timings
    return result
