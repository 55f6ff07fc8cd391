"""Exact flat inner-product index with binary persistence.

Catalog vectors are unit-normalized, so cosine similarity is the plain dot
product. Search is an exhaustive scan: at catalog scales of a few thousand
entries this is both exact and fast, which the validation suite depends on.
"""

from __future__ import annotations

import json
import struct
import zlib
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    ChecksumError,
    DimensionMismatch,
    DuplicateId,
    EmptyCatalog,
    FormatError,
    IoError,
)

MAGIC = b"VIDX"
VERSION = 1


@dataclass(frozen=True)
class SearchHit:
    id: str
    score: float
    rank: int


class VectorIndex:
    """Immutable after construction; concurrent searches are safe."""

    def __init__(self, dim: int, ids: list[str], labels: list[str], matrix: np.ndarray):
        self.dim = dim
        self.ids = ids
        self.labels = labels
        self.matrix = matrix  # (n, dim) float32, row i is entry i
        self._label_by_id = dict(zip(ids, labels))
        self._row_by_id = {sid: i for i, sid in enumerate(ids)}

    def __len__(self) -> int:
        return len(self.ids)

    def label_of(self, entry_id: str) -> str:
        return self._label_by_id[entry_id]

    def vector_of(self, entry_id: str) -> np.ndarray:
        return self.matrix[self._row_by_id[entry_id]]


def cosine_similarity(a: np.ndarray, b: np.ndarray) -> float:
    """Dot product of unit vectors, clamped to [-1, 1] against rounding."""
    a = np.asarray(a, dtype=np.float32)
    b = np.asarray(b, dtype=np.float32)
    if a.shape != b.shape:
        raise DimensionMismatch(f"dims differ: {a.shape} vs {b.shape}")
    score = float(np.dot(a.astype(np.float64), b.astype(np.float64)))
    return max(-1.0, min(1.0, score))


def build_index(entries) -> VectorIndex:
    """Build from an iterable of (id, label, vector); order is preserved."""
    ids: list[str] = []
    labels: list[str] = []
    rows: list[np.ndarray] = []
    seen: set[str] = set()
    for entry_id, label, vector in entries:
        if entry_id in seen:
            raise DuplicateId(f"duplicate catalog id {entry_id!r}")
        seen.add(entry_id)
        v = np.asarray(vector, dtype=np.float32)
        if rows and v.shape[0] != rows[0].shape[0]:
            raise DimensionMismatch(
                f"entry {entry_id!r} has dim {v.shape[0]}, expected {rows[0].shape[0]}"
            )
        ids.append(entry_id)
        labels.append(label)
        rows.append(v)
    if not rows:
        raise EmptyCatalog("cannot build an index from zero entries")
    matrix = np.vstack(rows).astype(np.float32)
    return VectorIndex(dim=matrix.shape[1], ids=ids, labels=labels, matrix=matrix)


def _scores(index: VectorIndex, query: np.ndarray) -> np.ndarray:
    q = np.asarray(query, dtype=np.float32)
    if q.shape[0] != index.dim:
        raise DimensionMismatch(f"query dim {q.shape[0]} != index dim {index.dim}")
    # float32 storage, float64 accumulation for cross-platform reproducibility
    scores = index.matrix.astype(np.float64) @ q.astype(np.float64)
    return np.clip(scores, -1.0, 1.0)


def _ranked(index: VectorIndex, scores: np.ndarray, rows) -> list[SearchHit]:
    order = sorted(rows, key=lambda i: (-scores[i], index.ids[i]))
    return [
        SearchHit(id=index.ids[i], score=float(scores[i]), rank=rank)
        for rank, i in enumerate(order)
    ]


def search_topk(index: VectorIndex, query: np.ndarray, k: int) -> list[SearchHit]:
    """The min(k, n) best entries, score descending, ties by ascending id."""
    if k < 1:
        raise ValueError("k must be >= 1")
    scores = _scores(index, query)
    return _ranked(index, scores, range(len(index)))[:k]


def search_threshold(index: VectorIndex, query: np.ndarray, tau: float) -> list[SearchHit]:
    """All entries with score strictly greater than tau, sorted as in topk."""
    scores = _scores(index, query)
    rows = np.nonzero(scores > tau)[0]
    return _ranked(index, scores, rows.tolist())


def save_index(index: VectorIndex, path) -> None:
    meta = json.dumps(
        [{"id": i, "label": l} for i, l in zip(index.ids, index.labels)],
        ensure_ascii=False,
    ).encode("utf-8")
    payload = (
        struct.pack("<4sIIQ", MAGIC, VERSION, index.dim, len(index))
        + np.ascontiguousarray(index.matrix, dtype="<f4").tobytes()
        + struct.pack("<Q", len(meta))
        + meta
    )
    blob = payload + struct.pack("<I", zlib.crc32(payload) & 0xFFFFFFFF)
    try:
        Path(path).write_bytes(blob)
    except OSError as exc:
        raise IoError(f"cannot write index {path}: {exc}") from exc


def load_index(path) -> VectorIndex:
    try:
        blob = Path(path).read_bytes()
    except OSError as exc:
        raise IoError(f"cannot read index {path}: {exc}") from exc
    header_size = struct.calcsize("<4sIIQ")
    if len(blob) < header_size + 4:
        raise FormatError(f"{path}: truncated index file")
    magic, version, dim, count = struct.unpack_from("<4sIIQ", blob, 0)
    if magic != MAGIC:
        raise FormatError(f"{path}: bad magic {magic!r}")
    if version != VERSION:
        raise FormatError(f"{path}: unsupported version {version}")
    vec_bytes = dim * count * 4
    meta_len_off = header_size + vec_bytes
    if len(blob) < meta_len_off + 8 + 4:
        raise FormatError(f"{path}: truncated index file")
    (meta_len,) = struct.unpack_from("<Q", blob, meta_len_off)
    total = meta_len_off + 8 + meta_len + 4
    if len(blob) != total:
        raise FormatError(f"{path}: size mismatch ({len(blob)} vs {total})")
    (stored_crc,) = struct.unpack_from("<I", blob, total - 4)
    if zlib.crc32(blob[: total - 4]) & 0xFFFFFFFF != stored_crc:
        raise ChecksumError(f"{path}: CRC32 mismatch")
    matrix = np.frombuffer(
        blob, dtype="<f4", count=dim * count, offset=header_size
    ).reshape(count, dim).astype(np.float32)
    try:
        meta = json.loads(blob[meta_len_off + 8: meta_len_off + 8 + meta_len].decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise FormatError(f"{path}: bad metadata JSON: {exc}") from exc
    if len(meta) != count:
        raise FormatError(f"{path}: metadata count {len(meta)} != {count}")
    ids = [m["id"] for m in meta]
    labels = [m["label"] for m in meta]
    return VectorIndex(dim=dim, ids=ids, labels=labels, matrix=matrix)
