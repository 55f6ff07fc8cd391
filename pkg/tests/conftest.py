import numpy as np
import pytest

from skillmap.catalogs import (
    bundled_data_path,
    load_courses,
    load_occupations,
    load_sdgs,
    load_skills,
)
from skillmap.embedding import EmbedderSpec
from skillmap.pipeline import load_state


@pytest.fixture(scope="session")
def spec():
    return EmbedderSpec()


@pytest.fixture(scope="session")
def skills():
    return load_skills(bundled_data_path("skills.csv"))


@pytest.fixture(scope="session")
def occupations():
    return load_occupations(bundled_data_path("occupations.csv"))


@pytest.fixture(scope="session")
def courses():
    return load_courses(bundled_data_path("courses.csv"))


@pytest.fixture(scope="session")
def sdgs():
    return load_sdgs(bundled_data_path("sdgs.csv"))


@pytest.fixture(scope="session")
def app_state():
    return load_state()


@pytest.fixture(scope="session")
def sample_policy_bytes():
    return bundled_data_path("sample_policy.txt").read_bytes()


def random_unit_vectors(rng: np.random.Generator, n: int, dim: int) -> np.ndarray:
    m = rng.standard_normal((n, dim))
    return (m / np.linalg.norm(m, axis=1, keepdims=True)).astype(np.float32)
