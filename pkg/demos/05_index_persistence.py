"""Build a vector index, persist it, and prove the round trip is exact.

The on-disk format is a small binary layout (magic, dim, count, float32
rows, JSON metadata, CRC32). A corrupted byte is caught on load.
Run with: python3 demos/05_index_persistence.py
"""

import tempfile
from pathlib import Path

import numpy as np

from skillmap.catalogs import build_skill_index, bundled_data_path, load_skills
from skillmap.embedding import EmbedderSpec, embed
from skillmap.errors import ChecksumError
from skillmap.vindex import load_index, save_index, search_topk

spec = EmbedderSpec()
skills = load_skills(bundled_data_path("skills.csv"))
index = build_skill_index(skills, spec)

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "skills.vidx"
    save_index(index, path)
    print(f"wrote {path.stat().st_size} bytes for {len(index)} vectors")

    loaded = load_index(path)
    query = embed("careful budget planning", spec)
    before = [(h.id, h.score) for h in search_topk(index, query, 5)]
    after = [(h.id, h.score) for h in search_topk(loaded, query, 5)]
    print(f"round trip exact: {before == after}")

    blob = bytearray(path.read_bytes())
    blob[100] ^= 0xFF
    path.write_bytes(bytes(blob))
    try:
        load_index(path)
    except ChecksumError as exc:
        print(f"corruption detected: {exc}")
