import numpy as np
import pytest

from skillmap.catalogs import OccupationEntry
from skillmap.embedding import EmbedderSpec, embed
from skillmap.errors import EmptyDocument
from skillmap.extraction import SkillMatch, SkillProfile
from skillmap.mapping import (
    MappingConfig,
    document_vector,
    recommend_courses,
    score_occupations,
    score_sdgs,
)
from skillmap.textprep import Chunk
from skillmap.vindex import build_index, cosine_similarity


def make_profile(skill_ids, labels=None):
    labels = labels or skill_ids
    matches = [
        SkillMatch(skill_id=i, label=l, frequency=1, max_score=0.5, mean_score=0.5)
        for i, l in zip(skill_ids, labels)
    ]
    return SkillProfile(matches=matches, chunk_count=1, document_name="d")


def make_chunk(text, index=0):
    return Chunk(index=index, text=text, token_count=len(text.split()))


class TestMappingConfig:
    def test_weights_must_sum_to_one(self):
        with pytest.raises(ValueError):
            MappingConfig(w_rho=0.7, w_sigma=0.6)
        with pytest.raises(ValueError):
            MappingConfig(w_rho=-0.1, w_sigma=1.1)
        MappingConfig(w_rho=0.3, w_sigma=0.7)


class TestDocumentVector:
    def test_unit_norm(self, spec):
        chunks = [make_chunk("alpha beta gamma"), make_chunk("delta epsilon", 1)]
        v = document_vector(chunks, spec)
        assert abs(np.linalg.norm(v) - 1.0) <= 1e-6

    def test_centroid_oracle(self, spec):
        chunks = [make_chunk("alpha beta"), make_chunk("gamma delta", 1)]
        v = document_vector(chunks, spec)
        mean = (embed("alpha beta", spec).astype(np.float64)
                + embed("gamma delta", spec).astype(np.float64)) / 2
        expected = mean / np.linalg.norm(mean)
        assert np.allclose(v, expected, atol=1e-6)

    def test_single_chunk_equals_embedding(self, spec):
        v = document_vector([make_chunk("just one chunk")], spec)
        assert np.allclose(v, embed("just one chunk", spec), atol=1e-6)

    def test_no_chunks(self, spec):
        with pytest.raises(EmptyDocument):
            document_vector([], spec)


class TestScoreOccupations:
    def make_occupations(self):
        return [
            OccupationEntry(id="O1", title="first role", description="d1",
                            required_skill_ids=frozenset({"S1", "S2", "S3", "S4"})),
            OccupationEntry(id="O2", title="second role", description="d2",
                            required_skill_ids=frozenset({"S5", "S6"})),
        ]

    def make_vectors(self, doc_vec, sims):
        # craft description vectors with exact cosine against doc_vec
        out = {}
        perp = np.zeros_like(doc_vec)
        axis = int(np.argmin(np.abs(doc_vec)))
        perp[axis] = 1.0
        perp = perp - float(perp @ doc_vec) * doc_vec
        perp = perp / np.linalg.norm(perp)
        for occ_id, s in sims.items():
            v = s * doc_vec + np.sqrt(max(0.0, 1 - s * s)) * perp
            out[occ_id] = (v / np.linalg.norm(v)).astype(np.float32)
        return out

    def test_composite_formula(self, spec):
        doc_vec = embed("some document text here", spec)
        occupations = self.make_occupations()
        vectors = self.make_vectors(doc_vec, {"O1": 0.2, "O2": 0.8})
        profile = make_profile(["S1", "S2", "S9"])
        scores = score_occupations(profile, doc_vec, occupations, vectors)
        by_id = {s.occupation_id: s for s in scores}
        # O1: overlap 2/4, similarity 0.2 -> 0.5*0.5 + 0.5*0.2 = 0.35
        assert by_id["O1"].overlap_ratio == pytest.approx(0.5)
        assert by_id["O1"].combined == pytest.approx(0.35, abs=1e-6)
        # O2: overlap 0, similarity 0.8 -> 0.40
        assert by_id["O2"].combined == pytest.approx(0.40, abs=1e-6)
        assert scores[0].occupation_id == "O2"

    def test_weight_extremes(self, spec):
        doc_vec = embed("document body", spec)
        occupations = self.make_occupations()
        vectors = self.make_vectors(doc_vec, {"O1": 0.9, "O2": 0.1})
        profile = make_profile(["S5", "S6"])
        overlap_only = score_occupations(
            profile, doc_vec, occupations, vectors, MappingConfig(w_rho=1.0, w_sigma=0.0)
        )
        assert overlap_only[0].occupation_id == "O2"
        assert overlap_only[0].combined == pytest.approx(1.0)
        text_only = score_occupations(
            profile, doc_vec, occupations, vectors, MappingConfig(w_rho=0.0, w_sigma=1.0)
        )
        assert text_only[0].occupation_id == "O1"
        assert text_only[0].combined == pytest.approx(0.9, abs=1e-6)

    def test_top_n_and_tie_break(self, spec):
        doc_vec = embed("tie case", spec)
        occupations = [
            OccupationEntry(id=f"O{i}", title=f"t{i}", description="d",
                            required_skill_ids=frozenset({"S1"}))
            for i in range(5)
        ]
        vectors = self.make_vectors(doc_vec, {o.id: 0.5 for o in occupations})
        scores = score_occupations(
            make_profile([]), doc_vec, occupations, vectors,
            MappingConfig(top_occupations=3),
        )
        assert [s.occupation_id for s in scores] == ["O0", "O1", "O2"]

    def test_empty_profile_uses_similarity_only(self, app_state, spec):
        doc_vec = embed("general text with no catalog terms", spec)
        scores = score_occupations(
            make_profile([]), doc_vec, app_state.occupations,
            app_state.occupation_vectors, app_state.mapping,
        )
        assert all(s.overlap_ratio == 0.0 for s in scores)
        assert all(s.combined == pytest.approx(0.5 * s.text_similarity) for s in scores)


class TestRecommendCourses:
    def test_threshold_and_max_aggregation(self, spec):
        course_index = build_index([
            ("C1", "course one", embed("alpha beta gamma", spec)),
            ("C2", "course two", embed("totally unrelated words", spec)),
        ])
        profile = make_profile(["S1", "S2"], labels=["alpha beta gamma", "alpha beta"])
        recs = recommend_courses(profile, course_index, MappingConfig(), spec)
        assert [r.course_id for r in recs] == ["C1"]
        # oracle: score is the max per-skill similarity above tau_c
        sims = [
            cosine_similarity(embed(l, spec), embed("alpha beta gamma", spec))
            for l in ("alpha beta gamma", "alpha beta")
        ]
        expected = max(s for s in sims if s > 0.35)
        assert recs[0].score == pytest.approx(expected, abs=1e-6)
        assert recs[0].matched_skill_ids[0] == "S1"

    def test_tau_c_monotonicity(self, app_state):
        profile = make_profile(
            [s.id for s in app_state.skills[:10]],
            labels=[s.label for s in app_state.skills[:10]],
        )
        ids = {}
        for tau_c in (0.6, 0.35, 0.1, -1.0):
            recs = recommend_courses(
                profile, app_state.course_index,
                MappingConfig(tau_c=tau_c, top_courses=10 ** 9),
                app_state.embedder,
            )
            ids[tau_c] = {r.course_id for r in recs}
        assert ids[0.6] <= ids[0.35] <= ids[0.1] <= ids[-1.0]

    def test_empty_profile(self, app_state):
        recs = recommend_courses(
            make_profile([]), app_state.course_index,
            app_state.mapping, app_state.embedder,
        )
        assert recs == []

    def test_top_n_cap(self, app_state):
        profile = make_profile(
            [s.id for s in app_state.skills],
            labels=[s.label for s in app_state.skills],
        )
        recs = recommend_courses(
            profile, app_state.course_index,
            MappingConfig(tau_c=-1.0, top_courses=5), app_state.embedder,
        )
        assert len(recs) == 5
        assert all(recs[i].score >= recs[i + 1].score for i in range(4))


class TestScoreSdgs:
    def test_all_goals_scored_and_sorted(self, app_state, spec):
        doc_vec = embed("community health programs for everyone", spec)
        scores = score_sdgs(doc_vec, app_state.sdgs, app_state.sdg_vectors)
        assert len(scores) == 17
        assert sorted(s.sdg_id for s in scores) == list(range(1, 18))
        assert all(scores[i].relevance >= scores[i + 1].relevance for i in range(16))

    def test_relevance_matches_cosine(self, app_state, spec):
        doc_vec = embed("clean water and sanitation for all", spec)
        scores = score_sdgs(doc_vec, app_state.sdgs, app_state.sdg_vectors)
        for s in scores:
            assert s.relevance == pytest.approx(
                cosine_similarity(doc_vec, app_state.sdg_vectors[s.sdg_id]), abs=1e-9
            )
