"""Catalog files: skills, occupations, courses and the 17 SDGs.

All catalogs are UTF-8 CSV with a header row and RFC-4180 quoting.
Multi-valued cells (alt_labels, required_skill_ids) are |-separated.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

from .embedding import EmbedderSpec, EmbeddingStore, embed, normalize
from .errors import CatalogError, IoError
from .vindex import VectorIndex, build_index

SDG_COUNT = 17


@dataclass(frozen=True)
class SkillEntry:
    id: str
    label: str
    alt_labels: tuple[str, ...]
    description: str

    def embed_text(self) -> str:
        """Text matched against chunks: label plus alternate labels. The
        description is deliberately excluded so a short catalog phrase is
        not drowned out by explanatory prose."""
        return ". ".join([self.label, *self.alt_labels])


@dataclass(frozen=True)
class OccupationEntry:
    id: str
    title: str
    description: str
    required_skill_ids: frozenset[str]


@dataclass(frozen=True)
class CourseEntry:
    id: str
    title: str
    description: str
    url: str

    def embed_text(self) -> str:
        return f"{self.title}. {self.description}"


@dataclass(frozen=True)
class SdgEntry:
    sdg_id: int
    name: str
    description: str

    def embed_text(self) -> str:
        return f"{self.name}. {self.description}"


def _read_rows(path, expected_fields: list[str]) -> list[dict]:
    path = Path(path)
    try:
        with path.open(newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != expected_fields:
                raise CatalogError(
                    f"{path}: expected header {','.join(expected_fields)}, "
                    f"got {reader.fieldnames}"
                )
            rows = []
            for lineno, row in enumerate(reader, start=2):
                if any(v is None for v in row.values()):
                    raise CatalogError(f"{path}: row {lineno}: wrong field count")
                rows.append(row)
            return rows
    except OSError as exc:
        raise IoError(f"cannot read catalog {path}: {exc}") from exc


def _split_multi(cell: str) -> tuple[str, ...]:
    return tuple(p.strip() for p in cell.split("|") if p.strip())


def load_skills(path) -> list[SkillEntry]:
    rows = _read_rows(path, ["id", "label", "alt_labels", "description"])
    skills = [
        SkillEntry(
            id=r["id"].strip(),
            label=r["label"].strip(),
            alt_labels=_split_multi(r["alt_labels"]),
            description=r["description"].strip(),
        )
        for r in rows
    ]
    _check_unique(path, [s.id for s in skills])
    return skills


def load_occupations(path) -> list[OccupationEntry]:
    rows = _read_rows(path, ["id", "title", "description", "required_skill_ids"])
    occupations = []
    for lineno, r in enumerate(rows, start=2):
        required = frozenset(_split_multi(r["required_skill_ids"]))
        if not required:
            raise CatalogError(f"{path}: row {lineno}: empty required_skill_ids")
        occupations.append(
            OccupationEntry(
                id=r["id"].strip(),
                title=r["title"].strip(),
                description=r["description"].strip(),
                required_skill_ids=required,
            )
        )
    _check_unique(path, [o.id for o in occupations])
    return occupations


def load_courses(path) -> list[CourseEntry]:
    rows = _read_rows(path, ["id", "title", "description", "url"])
    courses = [
        CourseEntry(
            id=r["id"].strip(),
            title=r["title"].strip(),
            description=r["description"].strip(),
            url=r["url"].strip(),
        )
        for r in rows
    ]
    _check_unique(path, [c.id for c in courses])
    return courses


def load_sdgs(path) -> list[SdgEntry]:
    rows = _read_rows(path, ["id", "name", "description"])
    entries = []
    for lineno, r in enumerate(rows, start=2):
        try:
            sdg_id = int(r["id"])
        except ValueError as exc:
            raise CatalogError(f"{path}: row {lineno}: bad SDG id {r['id']!r}") from exc
        entries.append(
            SdgEntry(sdg_id=sdg_id, name=r["name"].strip(), description=r["description"].strip())
        )
    entries.sort(key=lambda e: e.sdg_id)
    if [e.sdg_id for e in entries] != list(range(1, SDG_COUNT + 1)):
        raise CatalogError(f"{path}: must contain exactly SDG ids 1..{SDG_COUNT}")
    return entries


def _check_unique(path, ids: list[str]) -> None:
    seen: set[str] = set()
    for i in ids:
        if not i:
            raise CatalogError(f"{path}: empty id")
        if i in seen:
            raise CatalogError(f"{path}: duplicate id {i!r}")
        seen.add(i)


def _resolve_vector(key: str, text: str, spec: EmbedderSpec, store: EmbeddingStore | None):
    """Precomputed stores are keyed by catalog item id; fall back to the
    hashing baseline when the spec says so."""
    if spec.kind == "precomputed":
        return embed(key, spec, store=store)
    return embed(text, spec)


def build_skill_index(
    skills: list[SkillEntry], spec: EmbedderSpec, store: EmbeddingStore | None = None
) -> VectorIndex:
    return build_index(
        (s.id, s.label, _resolve_vector(s.id, s.embed_text(), spec, store)) for s in skills
    )


def build_course_index(
    courses: list[CourseEntry], spec: EmbedderSpec, store: EmbeddingStore | None = None
) -> VectorIndex:
    return build_index(
        (c.id, c.title, _resolve_vector(c.id, c.embed_text(), spec, store)) for c in courses
    )


def embed_sdgs(
    sdgs: list[SdgEntry], spec: EmbedderSpec, store: EmbeddingStore | None = None
) -> dict[int, object]:
    return {
        s.sdg_id: _resolve_vector(f"sdg-{s.sdg_id}", s.embed_text(), spec, store) for s in sdgs
    }


def embed_occupation_descriptions(
    occupations: list[OccupationEntry], spec: EmbedderSpec, store: EmbeddingStore | None = None
) -> dict[str, object]:
    return {
        o.id: _resolve_vector(o.id, f"{o.title}. {o.description}", spec, store)
        for o in occupations
    }


def bundled_data_path(name: str) -> Path:
    return Path(__file__).parent / "data" / name
