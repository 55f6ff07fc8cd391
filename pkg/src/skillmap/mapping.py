"""Mapping extracted skills to occupations, courses and the 17 SDGs."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .catalogs import OccupationEntry, SdgEntry
from .embedding import EmbedderSpec, EmbeddingCache, EmbeddingStore, embed_cached, normalize
from .errors import EmptyDocument, ZeroVector
from .extraction import SkillProfile
from .textprep import Chunk
from .vindex import VectorIndex, cosine_similarity, search_threshold

DEFAULT_W_RHO = 0.5
DEFAULT_W_SIGMA = 0.5
DEFAULT_TAU_C = 0.35
DEFAULT_TOP_OCCUPATIONS = 10
DEFAULT_TOP_COURSES = 10


@dataclass(frozen=True)
class MappingConfig:
    w_rho: float = DEFAULT_W_RHO
    w_sigma: float = DEFAULT_W_SIGMA
    tau_c: float = DEFAULT_TAU_C
    top_occupations: int = DEFAULT_TOP_OCCUPATIONS
    top_courses: int = DEFAULT_TOP_COURSES

    def __post_init__(self):
        if self.w_rho < 0 or self.w_sigma < 0:
            raise ValueError("weights must be non-negative")
        if abs(self.w_rho + self.w_sigma - 1.0) > 1e-9:
            raise ValueError("w_rho + w_sigma must equal 1")


@dataclass(frozen=True)
class OccupationScore:
    occupation_id: str
    title: str
    overlap_ratio: float
    text_similarity: float
    combined: float


@dataclass(frozen=True)
class CourseRecommendation:
    course_id: str
    title: str
    score: float
    matched_skill_ids: list[str]


@dataclass(frozen=True)
class SdgScore:
    sdg_id: int
    name: str
    relevance: float


def document_vector(
    chunks: list[Chunk],
    embedder: EmbedderSpec,
    cache: EmbeddingCache | None = None,
    store: EmbeddingStore | None = None,
) -> np.ndarray:
    """Normalized centroid of the chunk embeddings."""
    if not chunks:
        raise EmptyDocument("no chunks to pool")
    cache = cache if cache is not None else EmbeddingCache(embedder.cache_capacity)
    vectors = [embed_cached(c.text, embedder, cache, store=store) for c in chunks]
    mean = np.mean(np.vstack(vectors).astype(np.float64), axis=0)
    return normalize(mean)


def score_occupations(
    profile: SkillProfile,
    doc_vector: np.ndarray,
    occupations: list[OccupationEntry],
    description_vectors: dict[str, np.ndarray],
    config: MappingConfig | None = None,
) -> list[OccupationScore]:
    """Composite ranking: weighted sum of required-skill overlap and
    document-to-description similarity."""
    config = config or MappingConfig()
    extracted = profile.skill_ids()
    scored = []
    for occ in occupations:
        overlap = len(extracted & occ.required_skill_ids) / len(occ.required_skill_ids)
        similarity = cosine_similarity(doc_vector, description_vectors[occ.id])
        combined = config.w_rho * overlap + config.w_sigma * similarity
        scored.append(
            OccupationScore(
                occupation_id=occ.id,
                title=occ.title,
                overlap_ratio=overlap,
                text_similarity=similarity,
                combined=combined,
            )
        )
    scored.sort(key=lambda s: (-s.combined, s.occupation_id))
    return scored[: config.top_occupations]


def recommend_courses(
    profile: SkillProfile,
    course_index: VectorIndex,
    config: MappingConfig | None = None,
    embedder: EmbedderSpec | None = None,
    cache: EmbeddingCache | None = None,
    store: EmbeddingStore | None = None,
) -> list[CourseRecommendation]:
    """Threshold-search the course index per extracted skill; a course's
    score is the max similarity over its contributing skills."""
    config = config or MappingConfig()
    embedder = embedder or EmbedderSpec()
    cache = cache if cache is not None else EmbeddingCache(embedder.cache_capacity)

    per_course: dict[str, list[tuple[float, str]]] = {}
    for match in profile.matches:
        if embedder.kind == "precomputed":
            query = embed_cached(match.skill_id, embedder, cache, store=store)
        else:
            query = embed_cached(match.label, embedder, cache, store=store)
        for hit in search_threshold(course_index, query, config.tau_c):
            per_course.setdefault(hit.id, []).append((hit.score, match.skill_id))

    recommendations = []
    for course_id, contributions in per_course.items():
        contributions.sort(key=lambda c: (-c[0], c[1]))
        recommendations.append(
            CourseRecommendation(
                course_id=course_id,
                title=course_index.label_of(course_id),
                score=contributions[0][0],
                matched_skill_ids=[skill_id for _, skill_id in contributions],
            )
        )
    recommendations.sort(key=lambda r: (-r.score, r.course_id))
    return recommendations[: config.top_courses]


def score_sdgs(
    doc_vector: np.ndarray,
    sdgs: list[SdgEntry],
    sdg_vectors: dict[int, np.ndarray],
) -> list[SdgScore]:
    """Relevance of the document to each of the 17 goals, best first."""
    scores = [
        SdgScore(
            sdg_id=s.sdg_id,
            name=s.name,
            relevance=cosine_similarity(doc_vector, sdg_vectors[s.sdg_id]),
        )
        for s in sdgs
    ]
    scores.sort(key=lambda s: (-s.relevance, s.sdg_id))
    return scores
