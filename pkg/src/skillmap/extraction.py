"""Document-to-skill-profile pipeline.

A document is cleaned, chunked, each chunk embedded and matched against the
skill index above a similarity threshold, and per-chunk hits are consolidated
into chunk-level frequencies. A chunk contributes at most once per skill, so
repeated mentions inside a chunk never inflate counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .embedding import EmbedderSpec, EmbeddingCache, EmbeddingStore, embed_cached
from .textprep import (
    Chunk,
    PrepConfig,
    RawDocument,
    chunk_text,
    clean_text,
    extract_text,
    validate_document,
)
from .vindex import SearchHit, VectorIndex, search_threshold

DEFAULT_TAU = 0.35
DEFAULT_DEDUP_SIMILARITY = 0.9
DEFAULT_MAX_SKILLS = 50


@dataclass(frozen=True)
class ExtractionConfig:
    tau: float = DEFAULT_TAU
    chunk_size_limit: int = 120
    dedup_similarity: float = DEFAULT_DEDUP_SIMILARITY
    max_skills: int = DEFAULT_MAX_SKILLS

    def __post_init__(self):
        if not -1.0 <= self.tau <= 1.0:
            raise ValueError("tau must be in [-1, 1]")
        if not 0.0 <= self.dedup_similarity <= 1.0:
            raise ValueError("dedup_similarity must be in [0, 1]")
        if self.max_skills < 1:
            raise ValueError("max_skills must be >= 1")


@dataclass(frozen=True)
class SkillMatch:
    skill_id: str
    label: str
    frequency: int
    max_score: float
    mean_score: float


@dataclass(frozen=True)
class SkillProfile:
    document_name: str
    chunk_count: int
    matches: list[SkillMatch] = field(default_factory=list)

    def skill_ids(self) -> set[str]:
        return {m.skill_id for m in self.matches}


def match_chunk(
    chunk: Chunk,
    index: VectorIndex,
    config: ExtractionConfig,
    embedder: EmbedderSpec,
    cache: EmbeddingCache | None = None,
    store: EmbeddingStore | None = None,
) -> list[SearchHit]:
    cache = cache if cache is not None else EmbeddingCache(embedder.cache_capacity)
    query = embed_cached(chunk.text, embedder, cache, store=store)
    return search_threshold(index, query, config.tau)


def aggregate_frequencies(
    per_chunk_hits: list[list[SearchHit]], index: VectorIndex
) -> list[SkillMatch]:
    """Chunk-level indicator counting: each chunk adds at most 1 per skill."""
    scores_by_skill: dict[str, list[float]] = {}
    for hits in per_chunk_hits:
        best_in_chunk: dict[str, float] = {}
        for hit in hits:
            prev = best_in_chunk.get(hit.id)
            if prev is None or hit.score > prev:
                best_in_chunk[hit.id] = hit.score
        for skill_id, score in best_in_chunk.items():
            scores_by_skill.setdefault(skill_id, []).append(score)
    matches = [
        SkillMatch(
            skill_id=skill_id,
            label=index.label_of(skill_id),
            frequency=len(scores),
            max_score=max(scores),
            mean_score=sum(scores) / len(scores),
        )
        for skill_id, scores in scores_by_skill.items()
    ]
    matches.sort(key=lambda m: (-m.frequency, -m.max_score, m.skill_id))
    return matches


def levenshtein(a: str, b: str) -> int:
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i]
        for j, cb in enumerate(b, start=1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def label_similarity(a: str, b: str) -> float:
    """Normalized Levenshtein similarity: 1 - dist / max(len)."""
    if not a and not b:
        return 1.0
    return 1.0 - levenshtein(a, b) / max(len(a), len(b))


def dedupe_matches(
    matches: list[SkillMatch], dedup_similarity: float = DEFAULT_DEDUP_SIMILARITY
) -> list[SkillMatch]:
    """Drop lower-ranked matches whose labels are near-duplicates of a kept
    match (wording variants of the same capability)."""
    kept: list[SkillMatch] = []
    for match in matches:
        duplicate = any(
            label_similarity(match.label.lower(), k.label.lower()) >= dedup_similarity
            for k in kept
        )
        if not duplicate:
            kept.append(match)
    return kept


def extract_skills(
    doc: RawDocument,
    index: VectorIndex,
    config: ExtractionConfig | None = None,
    embedder: EmbedderSpec | None = None,
    prep: PrepConfig | None = None,
    cache: EmbeddingCache | None = None,
    store: EmbeddingStore | None = None,
) -> SkillProfile:
    """Full pipeline: validate, extract, clean, chunk, match, consolidate."""
    config = config or ExtractionConfig()
    embedder = embedder or EmbedderSpec()
    prep = prep or PrepConfig()
    cache = cache if cache is not None else EmbeddingCache(embedder.cache_capacity)

    validate_document(doc, prep)
    clean = clean_text(extract_text(doc), source_name=doc.name)
    chunks = chunk_text(clean, config.chunk_size_limit)
    per_chunk = [
        match_chunk(c, index, config, embedder, cache=cache, store=store) for c in chunks
    ]
    matches = aggregate_frequencies(per_chunk, index)
    matches = dedupe_matches(matches, config.dedup_similarity)
    return SkillProfile(
        document_name=doc.name,
        chunk_count=len(chunks),
        matches=matches[: config.max_skills],
    )
