"""Skill extraction and mapping engine.

Pipeline: document intake and chunking, unit-normalized embeddings,
thresholded flat vector search against skill catalogs, and mapping of the
extracted profile to occupations, courses and the 17 SDGs.
"""

from .embedding import EmbedderSpec, EmbeddingCache, embed, embed_cached, normalize
from .extraction import ExtractionConfig, SkillProfile, extract_skills
from .mapping import MappingConfig, recommend_courses, score_occupations, score_sdgs
from .pipeline import AppState, analyze_document, load_state
from .textprep import Chunk, CleanText, PrepConfig, RawDocument, chunk_text, clean_text
from .vindex import (
    VectorIndex,
    build_index,
    cosine_similarity,
    load_index,
    save_index,
    search_threshold,
    search_topk,
)

__version__ = "0.1.0"

__all__ = [
    "AppState",
    "Chunk",
    "CleanText",
    "EmbedderSpec",
    "EmbeddingCache",
    "ExtractionConfig",
    "MappingConfig",
    "PrepConfig",
    "RawDocument",
    "SkillProfile",
    "VectorIndex",
    "analyze_document",
    "build_index",
    "chunk_text",
    "clean_text",
    "cosine_similarity",
    "embed",
    "embed_cached",
    "extract_skills",
    "load_index",
    "load_state",
    "normalize",
    "recommend_courses",
    "save_index",
    "score_occupations",
    "score_sdgs",
    "search_threshold",
    "search_topk",
]
