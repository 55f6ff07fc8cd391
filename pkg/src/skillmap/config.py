"""Layered configuration: flags > environment > config file > defaults.

The config file is TOML with one table per component, e.g.::

    [extraction]
    tau = 0.35
    chunk_size_limit = 120

    [embedder]
    kind = "hashed_ngram"
    dim = 256
    seed = 42

Environment variables use the form SKILLMAP_<SECTION>_<KEY>, e.g.
SKILLMAP_EXTRACTION_TAU=0.5.
"""

from __future__ import annotations

import os

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib
from dataclasses import dataclass, field
from pathlib import Path

from .embedding import EmbedderSpec
from .extraction import ExtractionConfig
from .mapping import MappingConfig
from .textprep import PrepConfig
from .validation import SdgScorerConfig

_SECTIONS = {
    "prep": {"max_size_bytes": int, "chunk_size_limit": int},
    "embedder": {"kind": str, "dim": int, "seed": int, "cache_capacity": int},
    "extraction": {
        "tau": float, "chunk_size_limit": int, "dedup_similarity": float, "max_skills": int,
    },
    "mapping": {
        "w_rho": float, "w_sigma": float, "tau_c": float,
        "top_occupations": int, "top_courses": int,
    },
    "sdg_validation": {
        "w_seq": float, "w_term": float, "w_sem": float,
        "explicit_threshold": float, "implicit_threshold": float,
    },
    "service": {"port": int, "cors_origins": list},
}

_SERVICE_DEFAULTS = {"port": 8080, "cors_origins": []}


@dataclass(frozen=True)
class CliConfig:
    prep: PrepConfig
    embedder: EmbedderSpec
    extraction: ExtractionConfig
    mapping: MappingConfig
    sdg_validation: SdgScorerConfig
    service: dict = field(default_factory=lambda: dict(_SERVICE_DEFAULTS))

    def as_dict(self) -> dict:
        return {
            "prep": {
                "max_size_bytes": self.prep.max_size_bytes,
                "chunk_size_limit": self.prep.chunk_size_limit,
                "supported_formats": list(self.prep.supported_formats),
            },
            "embedder": {
                "kind": self.embedder.kind,
                "dim": self.embedder.dim,
                "seed": self.embedder.seed,
                "cache_capacity": self.embedder.cache_capacity,
            },
            "extraction": {
                "tau": self.extraction.tau,
                "chunk_size_limit": self.extraction.chunk_size_limit,
                "dedup_similarity": self.extraction.dedup_similarity,
                "max_skills": self.extraction.max_skills,
            },
            "mapping": {
                "w_rho": self.mapping.w_rho,
                "w_sigma": self.mapping.w_sigma,
                "tau_c": self.mapping.tau_c,
                "top_occupations": self.mapping.top_occupations,
                "top_courses": self.mapping.top_courses,
            },
            "sdg_validation": {
                "w_seq": self.sdg_validation.w_seq,
                "w_term": self.sdg_validation.w_term,
                "w_sem": self.sdg_validation.w_sem,
                "explicit_threshold": self.sdg_validation.explicit_threshold,
                "implicit_threshold": self.sdg_validation.implicit_threshold,
            },
            "service": dict(self.service),
        }


def _coerce(value, target):
    if target is list:
        if isinstance(value, str):
            return [v.strip() for v in value.split(",") if v.strip()]
        return list(value)
    return target(value)


def _env_layer(env) -> dict:
    layer: dict[str, dict] = {}
    for section, keys in _SECTIONS.items():
        for key in keys:
            var = f"SKILLMAP_{section.upper()}_{key.upper()}"
            if var in env:
                layer.setdefault(section, {})[key] = env[var]
    return layer


def load_config(
    path=None,
    overrides: dict | None = None,
    env=None,
) -> CliConfig:
    """Merge defaults, config file, environment and explicit overrides.

    ``overrides`` is a mapping of section name to {key: value}, carrying
    command-line flag values (highest precedence)."""
    merged: dict[str, dict] = {s: {} for s in _SECTIONS}
    layers = []
    if path is not None:
        with open(path, "rb") as fh:
            layers.append(tomllib.load(fh))
    layers.append(_env_layer(os.environ if env is None else env))
    if overrides:
        layers.append(overrides)
    for layer in layers:
        for section, values in layer.items():
            if section not in _SECTIONS or values is None:
                continue
            for key, value in values.items():
                if key in _SECTIONS[section] and value is not None:
                    merged[section][key] = _coerce(value, _SECTIONS[section][key])

    service = dict(_SERVICE_DEFAULTS)
    service.update(merged["service"])
    return CliConfig(
        prep=PrepConfig(**merged["prep"]),
        embedder=EmbedderSpec(**merged["embedder"]),
        extraction=ExtractionConfig(**merged["extraction"]),
        mapping=MappingConfig(**merged["mapping"]),
        sdg_validation=SdgScorerConfig(**merged["sdg_validation"]),
        service=service,
    )
