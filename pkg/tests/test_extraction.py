import numpy as np
import pytest

from skillmap.catalogs import build_skill_index
from skillmap.embedding import EmbedderSpec, embed
from skillmap.errors import EmptyDocument
from skillmap.extraction import (
    ExtractionConfig,
    SkillMatch,
    aggregate_frequencies,
    dedupe_matches,
    extract_skills,
    label_similarity,
    levenshtein,
    match_chunk,
)
from skillmap.textprep import Chunk, RawDocument
from skillmap.vindex import SearchHit, build_index, cosine_similarity


@pytest.fixture(scope="module")
def small_index(skills, spec):
    return build_skill_index(skills[:20], spec)


def make_txt(text, name="doc"):
    return RawDocument(name=name, declared_format="txt", data=text.encode("utf-8"))


class TestMatchChunk:
    def test_verbatim_label_is_top_hit(self, skills, small_index, spec):
        # oracle: brute-force similarity over the catalog
        target = skills[0]
        chunk = Chunk(index=0, text=target.label, token_count=len(target.label.split()))
        query = embed(chunk.text, spec)
        brute = {
            s.id: cosine_similarity(query, embed(s.embed_text(), spec)) for s in skills[:20]
        }
        best_id = max(brute, key=lambda i: brute[i])
        hits = match_chunk(chunk, small_index, ExtractionConfig(), spec)
        assert hits
        assert hits[0].id == best_id == target.id

    def test_gibberish_no_hits(self, skills, small_index, spec):
        chunk = Chunk(index=0, text="zzqj wvxk pluvh drnn", token_count=4)
        assert match_chunk(chunk, small_index, ExtractionConfig(), spec) == []
        # brute-force oracle agrees: nothing clears the threshold
        query = embed(chunk.text, spec)
        assert all(
            cosine_similarity(query, embed(s.embed_text(), spec)) <= 0.35
            for s in skills[:20]
        )

    def test_tau_minus_one_returns_all(self, small_index, spec):
        chunk = Chunk(index=0, text="anything at all", token_count=3)
        hits = match_chunk(chunk, small_index, ExtractionConfig(tau=-1.0), spec)
        assert len(hits) == len(small_index)


class TestAggregate:
    def make_index(self):
        v = np.zeros(8, dtype=np.float32)
        v[0] = 1.0
        return build_index([("S", "skill s", v), ("T", "skill t", v)])

    def test_indicator_sum(self):
        index = self.make_index()
        per_chunk = [
            [SearchHit(id="S", score=0.36, rank=0)],
            [],
            [SearchHit(id="S", score=0.50, rank=0)],
        ]
        (match,) = aggregate_frequencies(per_chunk, index)
        assert match.frequency == 2
        assert match.max_score == pytest.approx(0.50)
        assert match.mean_score == pytest.approx(0.43)

    def test_empty(self):
        assert aggregate_frequencies([], self.make_index()) == []
        assert aggregate_frequencies([[], []], self.make_index()) == []

    def test_single_hit(self):
        index = self.make_index()
        (match,) = aggregate_frequencies([[SearchHit(id="T", score=0.9, rank=0)]], index)
        assert (match.frequency, match.max_score, match.mean_score) == (1, 0.9, 0.9)

    def test_chunk_contributes_once_per_skill(self):
        index = self.make_index()
        per_chunk = [[
            SearchHit(id="S", score=0.4, rank=0),
            SearchHit(id="S", score=0.6, rank=1),
        ]]
        (match,) = aggregate_frequencies(per_chunk, index)
        assert match.frequency == 1
        assert match.max_score == pytest.approx(0.6)

    def test_sort_order(self):
        index = build_index(
            [(i, i, np.eye(4, dtype=np.float32)[0]) for i in ("A", "B", "C")]
        )
        per_chunk = [
            [SearchHit("A", 0.5, 0), SearchHit("B", 0.9, 1), SearchHit("C", 0.9, 2)],
            [SearchHit("A", 0.4, 0)],
        ]
        matches = aggregate_frequencies(per_chunk, index)
        assert [m.skill_id for m in matches] == ["A", "B", "C"]


class TestDedupe:
    def make(self, label, freq):
        return SkillMatch(skill_id=label, label=label, frequency=freq,
                          max_score=0.5, mean_score=0.5)

    def test_near_duplicate_dropped(self):
        assert levenshtein("manage budgets", "manage budget") == 1
        kept = dedupe_matches(
            [self.make("manage budgets", 5), self.make("manage budget", 2)], 0.9
        )
        assert [m.label for m in kept] == ["manage budgets"]

    def test_distinct_labels_kept(self):
        kept = dedupe_matches(
            [self.make("welding", 3), self.make("data analysis", 2)], 0.9
        )
        assert len(kept) == 2

    def test_empty(self):
        assert dedupe_matches([], 0.9) == []

    def test_similarity_formula(self):
        assert label_similarity("manage budgets", "manage budget") == pytest.approx(1 - 1 / 14)


class TestExtractSkills:
    def test_repeated_mention_counts_once_per_chunk(self, skills, small_index, spec):
        label = skills[0].label
        text = f"{label}. {label}. {label}."
        profile = extract_skills(make_txt(text), small_index, ExtractionConfig(), spec)
        assert profile.chunk_count == 1
        match = next(m for m in profile.matches if m.skill_id == skills[0].id)
        assert match.frequency == 1

    def test_per_chunk_counting_with_small_chunks(self, skills, small_index, spec):
        label = skills[0].label
        # limit of 8 tokens forces each sentence into its own chunk
        text = ". ".join([f"{label} team duty work now"] * 3) + "."
        config = ExtractionConfig(chunk_size_limit=8)
        profile = extract_skills(make_txt(text), small_index, config, spec)
        assert profile.chunk_count == 3
        match = next(m for m in profile.matches if m.skill_id == skills[0].id)
        assert match.frequency == 3

    def test_empty_document(self, small_index, spec):
        with pytest.raises(EmptyDocument):
            extract_skills(make_txt("   "), small_index, ExtractionConfig(), spec)

    def test_deterministic(self, skills, small_index, spec):
        text = f"{skills[0].label} and later {skills[1].label}."
        a = extract_skills(make_txt(text), small_index, ExtractionConfig(), spec)
        b = extract_skills(make_txt(text), small_index, ExtractionConfig(), spec)
        assert a == b

    def test_tau_monotonicity(self, skills, small_index, spec):
        text = " ".join(f"the team values {s.label}." for s in skills[:6])
        low = extract_skills(make_txt(text), small_index, ExtractionConfig(tau=0.2), spec)
        high = extract_skills(make_txt(text), small_index, ExtractionConfig(tau=0.5), spec)
        low_by_id = {m.skill_id: m for m in low.matches}
        assert set(m.skill_id for m in high.matches) <= set(low_by_id)
        for m in high.matches:
            assert m.frequency <= low_by_id[m.skill_id].frequency

    def test_frequency_equation_fidelity(self, skills, small_index, spec):
        from skillmap.textprep import chunk_text, clean_text
        config = ExtractionConfig()
        text = " ".join(f"notes praise {s.label} in depth." for s in skills[:4])
        profile = extract_skills(make_txt(text), small_index, config, spec)
        chunks = chunk_text(clean_text(text, "t"), config.chunk_size_limit)
        for match in profile.matches:
            catalog_vec = embed(skills[[s.id for s in skills].index(match.skill_id)].embed_text(), spec)
            recount = sum(
                1 for c in chunks
                if cosine_similarity(embed(c.text, spec), catalog_vec) > config.tau
            )
            assert recount == match.frequency
