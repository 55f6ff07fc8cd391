"""Unit-normalized text embeddings.

Two embedder kinds share one interface: a deterministic signed n-gram
hashing baseline (no model download, bit-identical across platforms) and a
lookup into a store of precomputed vectors exported offline from a real
sentence encoder.
"""

from __future__ import annotations

import re
import threading
from collections import OrderedDict
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    DimensionMismatch,
    EmptyInput,
    FormatError,
    IoError,
    MissingEmbedding,
    NonFinite,
    ZeroVector,
)

DEFAULT_DIM = 256
DEFAULT_SEED = 42
DEFAULT_CACHE_CAPACITY = 4096

NORM_TOLERANCE = 1e-6


@dataclass(frozen=True)
class EmbedderSpec:
    kind: str = "hashed_ngram"  # or "precomputed"
    dim: int = DEFAULT_DIM
    seed: int = DEFAULT_SEED
    cache_capacity: int = DEFAULT_CACHE_CAPACITY

    def __post_init__(self):
        if self.kind not in ("hashed_ngram", "precomputed"):
            raise ValueError(f"unknown embedder kind: {self.kind!r}")
        if self.dim < 8:
            raise ValueError("dim must be >= 8")
        if self.cache_capacity < 1:
            raise ValueError("cache_capacity must be >= 1")


def normalize(values) -> np.ndarray:
    """Scale a vector to unit L2 norm (float32)."""
    v = np.asarray(values, dtype=np.float32)
    if not np.all(np.isfinite(v)):
        raise NonFinite("vector has non-finite components")
    norm = float(np.linalg.norm(v.astype(np.float64)))
    if norm == 0.0:
        raise ZeroVector("cannot normalize the zero vector")
    return (v / np.float32(norm)).astype(np.float32)


_TOKEN_RE = re.compile(r"[a-z0-9]+")

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK64 = 0xFFFFFFFFFFFFFFFF


def tokenize(text: str) -> list[str]:
    return _TOKEN_RE.findall(text.lower())


def _fnv1a(data: bytes, seed: int) -> int:
    h = _FNV_OFFSET
    for b in seed.to_bytes(8, "little", signed=False) + data:
        h = ((h ^ b) * _FNV_PRIME) & _MASK64
    return h


class EmbeddingStore:
    """Mapping from text keys to precomputed unit vectors of one dimension."""

    def __init__(self, dim: int):
        self.dim = dim
        self._vectors: dict[str, np.ndarray] = {}

    def __len__(self) -> int:
        return len(self._vectors)

    def __contains__(self, key: str) -> bool:
        return key in self._vectors

    def put(self, key: str, values) -> None:
        v = normalize(values)
        if v.shape[0] != self.dim:
            raise DimensionMismatch(
                f"store dim {self.dim}, vector dim {v.shape[0]} for key {key!r}"
            )
        self._vectors[key] = v

    def get(self, key: str) -> np.ndarray:
        try:
            return self._vectors[key]
        except KeyError:
            raise MissingEmbedding(f"no precomputed embedding for key {key!r}") from None

    def keys(self):
        return self._vectors.keys()


def embed(text: str, spec: EmbedderSpec, store: EmbeddingStore | None = None) -> np.ndarray:
    """Embed text deterministically. hashed_ngram: signed feature hashing of
    unigrams and adjacent bigrams; precomputed: exact-key store lookup."""
    if spec.kind == "precomputed":
        if store is None:
            raise MissingEmbedding("precomputed embedder requires an EmbeddingStore")
        if store.dim != spec.dim:
            raise DimensionMismatch(f"store dim {store.dim} != spec dim {spec.dim}")
        return store.get(text)

    tokens = tokenize(text)
    if not tokens:
        raise EmptyInput("text has no alphanumeric tokens")
    acc = np.zeros(spec.dim, dtype=np.float32)
    features = tokens + [f"{a} {b}" for a, b in zip(tokens, tokens[1:])]
    for feat in features:
        h = _fnv1a(feat.encode("utf-8"), spec.seed)
        sign = 1.0 if (h >> 63) == 0 else -1.0
        acc[h % spec.dim] += sign
    return normalize(acc)


class EmbeddingCache:
    """Thread-safe strict-LRU cache keyed by exact text strings."""

    def __init__(self, capacity: int = DEFAULT_CACHE_CAPACITY):
        if capacity < 1:
            raise ValueError("capacity must be >= 1")
        self.capacity = capacity
        self._entries: OrderedDict[str, np.ndarray] = OrderedDict()
        self._lock = threading.Lock()
        self.hit_count = 0
        self.miss_count = 0

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key: str) -> bool:
        with self._lock:
            return key in self._entries

    def lookup(self, key: str) -> np.ndarray | None:
        with self._lock:
            vec = self._entries.get(key)
            if vec is None:
                self.miss_count += 1
                return None
            self._entries.move_to_end(key)
            self.hit_count += 1
            return vec

    def insert(self, key: str, vec: np.ndarray) -> None:
        with self._lock:
            self._entries[key] = vec
            self._entries.move_to_end(key)
            while len(self._entries) > self.capacity:
                self._entries.popitem(last=False)


def embed_cached(
    text: str,
    spec: EmbedderSpec,
    cache: EmbeddingCache,
    store: EmbeddingStore | None = None,
) -> np.ndarray:
    """Cache-transparent wrapper around embed()."""
    vec = cache.lookup(text)
    if vec is not None:
        return vec
    vec = embed(text, spec, store=store)
    cache.insert(text, vec)
    return vec


# --- store file format ---
# header: "EMBSTORE v1 dim=<D> count=<N>"
# then N lines: "<byte-length>:<key>\t<D space-separated floats>"

_HEADER_RE = re.compile(r"^EMBSTORE v1 dim=(\d+) count=(\d+)$")


def load_embedding_store(path) -> EmbeddingStore:
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise IoError(f"cannot read embedding store {path}: {exc}") from exc
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise FormatError(f"{path}: not UTF-8: {exc}") from exc
    lines = text.split("\n")
    m = _HEADER_RE.match(lines[0].strip())
    if not m:
        raise FormatError(f"{path}: bad header line {lines[0]!r}")
    dim, count = int(m.group(1)), int(m.group(2))
    store = EmbeddingStore(dim)
    body = [ln for ln in lines[1:] if ln]
    if len(body) != count:
        raise FormatError(f"{path}: header says {count} entries, found {len(body)}")
    for lineno, line in enumerate(body, start=2):
        try:
            length_s, rest = line.split(":", 1)
            key_len = int(length_s)
        except ValueError as exc:
            raise FormatError(f"{path}:{lineno}: bad key length prefix") from exc
        key_bytes = rest.encode("utf-8")[:key_len]
        key = key_bytes.decode("utf-8")
        tail = rest.encode("utf-8")[key_len:].decode("utf-8")
        if not tail.startswith("\t"):
            raise FormatError(f"{path}:{lineno}: missing tab after key")
        try:
            values = [float(x) for x in tail[1:].split()]
        except ValueError as exc:
            raise FormatError(f"{path}:{lineno}: bad float") from exc
        if len(values) != dim:
            raise DimensionMismatch(
                f"{path}:{lineno}: expected dim {dim}, got {len(values)}"
            )
        store.put(key, values)
    return store


def save_embedding_store(store: EmbeddingStore, path) -> None:
    path = Path(path)
    lines = [f"EMBSTORE v1 dim={store.dim} count={len(store)}"]
    for key in store.keys():
        vec = store.get(key)
        floats = " ".join(repr(float(x)) for x in vec)
        lines.append(f"{len(key.encode('utf-8'))}:{key}\t{floats}")
    try:
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot write embedding store {path}: {exc}") from exc
