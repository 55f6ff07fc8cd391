"""Synthetic validation suites: corpus generation and precision/recall/F1.

Two corpora of 80 documents each (40 explicit, 40 implicit) exercise skill
extraction and SDG detection. Explicit documents carry preferred labels
verbatim; implicit documents reference items only through alternate labels,
keyword paraphrases and verb-object constructions, never by preferred name.
"""

from __future__ import annotations

import json
import math
import random
import re
from dataclasses import dataclass, field
from difflib import SequenceMatcher
from pathlib import Path

from .catalogs import SdgEntry, SkillEntry, embed_sdgs
from .embedding import EmbedderSpec, EmbeddingCache, EmbeddingStore, embed_cached, tokenize
from .errors import CatalogTooSmall, MissingAltLabels
from .extraction import ExtractionConfig, extract_skills
from .catalogs import build_skill_index
from .textprep import RawDocument, split_sentences
from .vindex import cosine_similarity

DEFAULT_SUBSET_SIZE = 200
DEFAULT_DOC_COUNT = 80

# Vocabulary for synthetic filler text. Kept clear of the bundled catalog's
# label/alt-label words so filler never drags unrelated items over threshold.
_CONNECTORS = [
    "the board asked about",
    "several teams rely on",
    "our spring memo praised",
    "staff sessions often cover",
    "visitors frequently discuss",
    "the council minutes mention",
    "new hires study",
    "the charter highlights",
    "field notes describe",
    "this quarter emphasised",
]

_FILLER_WORDS = [
    "although", "committees", "gathered", "yesterday", "because", "members",
    "wanted", "clearer", "answers", "about", "pending", "questions", "raised",
    "earlier", "meetings", "everyone", "agreed", "further", "talks", "would",
    "happen", "once", "letters", "arrive", "from", "distant", "offices",
    "whose", "staff", "still", "await", "final", "word", "regarding", "travel",
    "dates", "and", "other", "administrative", "matters",
]

_STOPWORDS = frozenset(
    "a an and are as at be by for from has have in into is it its of on or "
    "that the their this to was were will with all every each".split()
)

_COMMON_VERBS = frozenset(
    "manage use apply run lead conduct perform deliver operate build create "
    "write read plan audit design develop maintain negotiate supervise "
    "coordinate evaluate implement analyse analyze track brief keep take sat "
    "met held ran".split()
)

_VERB_SUFFIXES = ("ing", "ize", "ise", "yse", "yze", "age")

# A mention sentence must not pack together with its neighbour, so each
# synthetic sentence is padded past half the default 120-token chunk limit.
_MIN_SENTENCE_TOKENS = 62


@dataclass(frozen=True)
class TestDocument:
    name: str
    kind: str  # explicit | implicit
    target: str  # skills | sdg
    text: str
    ground_truth_ids: frozenset


@dataclass
class Counts:
    tp: int = 0
    fp: int = 0
    fn: int = 0

    def add(self, predicted: set, truth: set) -> None:
        self.tp += len(predicted & truth)
        self.fp += len(predicted - truth)
        self.fn += len(truth - predicted)

    @property
    def precision(self) -> float:
        return self.tp / (self.tp + self.fp) if self.tp + self.fp else 0.0

    @property
    def recall(self) -> float:
        return self.tp / (self.tp + self.fn) if self.tp + self.fn else 0.0

    @property
    def f1(self) -> float:
        return f1_from_precision_recall(self.precision, self.recall)

    def as_dict(self) -> dict:
        return {
            "tp": self.tp, "fp": self.fp, "fn": self.fn,
            "precision": self.precision, "recall": self.recall, "f1": self.f1,
        }


def f1_from_precision_recall(precision: float, recall: float) -> float:
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def compute_metrics(predicted: set, truth: set) -> Counts:
    counts = Counts()
    counts.add(set(predicted), set(truth))
    return counts


@dataclass(frozen=True)
class MetricsReport:
    per_kind: dict
    overall: Counts
    per_document: list = field(default_factory=list)

    def as_dict(self, suite: str, seed: int, config_echo: dict) -> dict:
        return {
            "suite": suite,
            "seed": seed,
            "config_echo": config_echo,
            "per_kind": {k: c.as_dict() for k, c in self.per_kind.items()},
            "overall": self.overall.as_dict(),
            "per_document": self.per_document,
        }


def select_skill_subset(skills: list[SkillEntry], n: int = DEFAULT_SUBSET_SIZE, seed: int = 1) -> list[str]:
    """Deterministic seeded sample of skill ids."""
    if n < 1:
        raise CatalogTooSmall("subset size must be >= 1")
    if len(skills) < n:
        raise CatalogTooSmall(f"catalog has {len(skills)} skills, need {n}")
    ids = sorted(s.id for s in skills)
    rng = random.Random(seed)
    return sorted(rng.sample(ids, n))


def _pad_sentence(clauses: list[str], rng: random.Random) -> str:
    words = " ".join(clauses).split()
    while len(words) < _MIN_SENTENCE_TOKENS:
        words.append(rng.choice(_FILLER_WORDS))
    return " ".join(words) + "."


def _mention_sentence(phrase: str, rng: random.Random, mentions: int = 6) -> str:
    clauses = [f"{rng.choice(_CONNECTORS)} {phrase}" for _ in range(mentions)]
    return _pad_sentence(clauses, rng)


def generate_test_documents(
    skills: list[SkillEntry], count: int = DEFAULT_DOC_COUNT, seed: int = 1
) -> list[TestDocument]:
    """Half explicit, half implicit. Each document names 3-6 target skills,
    one long sentence per skill so every target lands in its own chunk."""
    if not skills:
        raise CatalogTooSmall("need at least one skill")
    rng = random.Random(seed)
    by_id = {s.id: s for s in skills}
    docs: list[TestDocument] = []
    half = count // 2
    for i in range(count):
        kind = "explicit" if i < half else "implicit"
        n_targets = rng.randint(3, min(6, len(skills)))
        targets = rng.sample(sorted(by_id), n_targets)
        sentences = []
        for skill_id in targets:
            skill = by_id[skill_id]
            if kind == "explicit":
                phrase = skill.label
            else:
                if not skill.alt_labels:
                    raise MissingAltLabels(f"{skill_id} has no alt_labels to paraphrase")
                phrase = rng.choice(skill.alt_labels)
            sentences.append(_mention_sentence(phrase, rng))
            if kind == "implicit":
                pairs = extract_verb_object_phrases(skill.description)
                if pairs:
                    verb, obj = pairs[0]
                    sentences.append(
                        _pad_sentence([f"teams keep {verb} {obj} in view"], rng)
                    )
        text = " ".join(sentences)
        truth = frozenset(targets)
        if kind == "explicit":
            assert all(by_id[t].label in text for t in truth)
        else:
            assert not any(by_id[t].label in text for t in truth)
        docs.append(TestDocument(
            name=f"skills-{kind}-{i:03d}", kind=kind, target="skills",
            text=text, ground_truth_ids=truth,
        ))
    return docs


def extract_verb_object_phrases(text: str) -> list[tuple[str, str]]:
    """Heuristic verb-object pairs: a verb-like token (suffix or common-verb
    match) followed by up to 4 non-stopword tokens in the same sentence."""
    pairs: list[tuple[str, str]] = []
    for sentence in split_sentences(text):
        tokens = tokenize(sentence)
        for i, token in enumerate(tokens):
            verb_like = token in _COMMON_VERBS or (
                len(token) > 4 and token.endswith(_VERB_SUFFIXES)
            )
            if not verb_like:
                continue
            obj_tokens = []
            for nxt in tokens[i + 1:]:
                if nxt in _STOPWORDS:
                    continue
                if nxt in _COMMON_VERBS or (len(nxt) > 4 and nxt.endswith(_VERB_SUFFIXES)):
                    break
                obj_tokens.append(nxt)
                if len(obj_tokens) == 4:
                    break
            if obj_tokens:
                pairs.append((token, " ".join(obj_tokens)))
    return pairs


# --- SDG multi-method scorer ---

DEFAULT_W_SEQ = 0.4
DEFAULT_W_TERM = 0.3
DEFAULT_W_SEM = 0.3
DEFAULT_EXPLICIT_THRESHOLD = 0.45
DEFAULT_IMPLICIT_THRESHOLD = 0.30


@dataclass(frozen=True)
class SdgScorerConfig:
    w_seq: float = DEFAULT_W_SEQ
    w_term: float = DEFAULT_W_TERM
    w_sem: float = DEFAULT_W_SEM
    explicit_threshold: float = DEFAULT_EXPLICIT_THRESHOLD
    implicit_threshold: float = DEFAULT_IMPLICIT_THRESHOLD

    def __post_init__(self):
        if min(self.w_seq, self.w_term, self.w_sem) < 0:
            raise ValueError("weights must be non-negative")
        if abs(self.w_seq + self.w_term + self.w_sem - 1.0) > 1e-9:
            raise ValueError("weights must sum to 1")


def sdg_keywords(entry: SdgEntry) -> list[str]:
    seen = []
    for token in tokenize(f"{entry.name} {entry.description}"):
        if len(token) > 3 and token not in _STOPWORDS and token not in seen:
            seen.append(token)
    return seen


class SdgMultiScorer:
    """Combines sequence matching, idf-weighted keyword coverage and
    embedding similarity into one relevance score per goal."""

    def __init__(
        self,
        sdgs: list[SdgEntry],
        config: SdgScorerConfig | None = None,
        embedder: EmbedderSpec | None = None,
        store: EmbeddingStore | None = None,
    ):
        self.sdgs = {s.sdg_id: s for s in sdgs}
        self.config = config or SdgScorerConfig()
        self.embedder = embedder or EmbedderSpec()
        self.store = store
        self.cache = EmbeddingCache(self.embedder.cache_capacity)
        self.keywords = {s.sdg_id: sdg_keywords(s) for s in sdgs}
        df: dict[str, int] = {}
        for kws in self.keywords.values():
            for k in set(kws):
                df[k] = df.get(k, 0) + 1
        n = len(sdgs)
        self.idf = {k: math.log(1 + n / c) for k, c in df.items()}
        self.vectors = embed_sdgs(sdgs, self.embedder, store)

    def _seq_component(self, sentences: list[str], name: str) -> float:
        target = " ".join(tokenize(name))
        best = 0.0
        for sentence in sentences:
            norm = " ".join(tokenize(sentence))
            if norm:
                best = max(best, SequenceMatcher(None, norm, target).ratio())
        return best

    def _term_component(self, text_tokens: set, sdg_id: int) -> float:
        kws = self.keywords[sdg_id]
        total = sum(self.idf[k] for k in kws)
        if total == 0:
            return 0.0
        matched = sum(self.idf[k] for k in kws if k in text_tokens)
        return matched / total

    def score(self, text: str, sdg_id: int) -> float:
        entry = self.sdgs[sdg_id]
        cfg = self.config
        seq = self._seq_component(split_sentences(text), entry.name)
        term = self._term_component(set(tokenize(text)), sdg_id)
        try:
            vec = embed_cached(text, self.embedder, self.cache, store=self.store)
            sem = max(0.0, min(1.0, cosine_similarity(vec, self.vectors[sdg_id])))
        except Exception:
            sem = 0.0
        return cfg.w_seq * seq + cfg.w_term * term + cfg.w_sem * sem


def score_sdg_multimethod(
    text: str,
    sdg_entry: SdgEntry,
    config: SdgScorerConfig,
    scorer: SdgMultiScorer,
) -> float:
    return scorer.score(text, sdg_entry.sdg_id)


def generate_sdg_documents(
    sdgs: list[SdgEntry], count: int = DEFAULT_DOC_COUNT, seed: int = 1
) -> list[TestDocument]:
    """Explicit docs name goals verbatim; implicit docs only paraphrase a
    goal's keyword vocabulary."""
    rng = random.Random(seed)
    docs: list[TestDocument] = []
    half = count // 2
    all_names = [s.name for s in sdgs]
    for i in range(count):
        kind = "explicit" if i < half else "implicit"
        targets = rng.sample(sdgs, rng.randint(1, 3))
        sentences = []
        for entry in targets:
            kws = sdg_keywords(entry)
            if kind == "explicit":
                sentences.append(f"{entry.name}.")
                picked = rng.sample(kws, min(8, len(kws)))
                sentences.append("The brief points to " + ", ".join(picked) + ".")
            else:
                for _ in range(2):
                    for _attempt in range(20):
                        picked = rng.sample(kws, min(7, len(kws)))
                        candidate = "Programmes here pursue " + ", ".join(picked) + "."
                        if not any(n.lower() in candidate.lower() for n in all_names):
                            sentences.append(candidate)
                            break
        if kind == "implicit":
            # Thematic drift: borrow vocabulary from a non-target goal, the
            # way real policy prose wanders across sustainability topics.
            target_ids = {e.sdg_id for e in targets}
            distractor = rng.choice([s for s in sdgs if s.sdg_id not in target_ids])
            for _attempt in range(20):
                picked = rng.sample(sdg_keywords(distractor), 5)
                candidate = "Adjacent work touches " + ", ".join(picked) + "."
                if not any(n.lower() in candidate.lower() for n in all_names):
                    sentences.append(candidate)
                    break
        filler = rng.sample(_FILLER_WORDS, 8)
        sentences.append(" ".join(filler) + ".")
        text = " ".join(sentences)
        truth = frozenset(e.sdg_id for e in targets)
        if kind == "implicit":
            assert not any(
                self_name.lower() in text.lower()
                for self_name in (self_e.name for self_e in targets)
            )
        docs.append(TestDocument(
            name=f"sdg-{kind}-{i:03d}", kind=kind, target="sdg",
            text=text, ground_truth_ids=truth,
        ))
    return docs


def _aggregate(rows: list[tuple[str, str, set, set]]) -> MetricsReport:
    per_kind = {"explicit": Counts(), "implicit": Counts()}
    overall = Counts()
    per_document = []
    for name, kind, predicted, truth in rows:
        per_kind[kind].add(predicted, truth)
        overall.add(predicted, truth)
        doc_counts = compute_metrics(predicted, truth)
        per_document.append({
            "name": name,
            "kind": kind,
            "predicted": sorted(predicted),
            "truth": sorted(truth),
            **doc_counts.as_dict(),
        })
    return MetricsReport(per_kind=per_kind, overall=overall, per_document=per_document)


def run_skills_validation(
    skills: list[SkillEntry],
    config: ExtractionConfig | None = None,
    embedder: EmbedderSpec | None = None,
    seed: int = 1,
    subset_size: int = DEFAULT_SUBSET_SIZE,
    doc_count: int = DEFAULT_DOC_COUNT,
    store: EmbeddingStore | None = None,
    report_path=None,
) -> MetricsReport:
    config = config or ExtractionConfig()
    embedder = embedder or EmbedderSpec()
    subset_ids = set(select_skill_subset(skills, subset_size, seed))
    subset = [s for s in skills if s.id in subset_ids]
    index = build_skill_index(subset, embedder, store)
    docs = generate_test_documents(subset, doc_count, seed)
    cache = EmbeddingCache(embedder.cache_capacity)
    rows = []
    for doc in docs:
        raw = RawDocument(name=doc.name, declared_format="txt", data=doc.text.encode("utf-8"))
        profile = extract_skills(raw, index, config, embedder, cache=cache, store=store)
        rows.append((doc.name, doc.kind, profile.skill_ids(), set(doc.ground_truth_ids)))
    report = _aggregate(rows)
    if report_path is not None:
        write_report(report, report_path, suite="skills", seed=seed, config_echo={
            "tau": config.tau,
            "chunk_size_limit": config.chunk_size_limit,
            "dedup_similarity": config.dedup_similarity,
            "max_skills": config.max_skills,
            "embedder": {"kind": embedder.kind, "dim": embedder.dim, "seed": embedder.seed},
            "subset_size": subset_size,
            "doc_count": doc_count,
        })
    return report


def run_sdg_validation(
    sdgs: list[SdgEntry],
    config: SdgScorerConfig | None = None,
    embedder: EmbedderSpec | None = None,
    seed: int = 1,
    doc_count: int = DEFAULT_DOC_COUNT,
    store: EmbeddingStore | None = None,
    report_path=None,
) -> MetricsReport:
    config = config or SdgScorerConfig()
    embedder = embedder or EmbedderSpec()
    scorer = SdgMultiScorer(sdgs, config, embedder, store)
    docs = generate_sdg_documents(sdgs, doc_count, seed)
    rows = []
    for doc in docs:
        threshold = (
            config.explicit_threshold if doc.kind == "explicit" else config.implicit_threshold
        )
        predicted = {
            s.sdg_id for s in sdgs if scorer.score(doc.text, s.sdg_id) > threshold
        }
        rows.append((doc.name, doc.kind, predicted, set(doc.ground_truth_ids)))
    report = _aggregate(rows)
    if report_path is not None:
        write_report(report, report_path, suite="sdg", seed=seed, config_echo={
            "w_seq": config.w_seq, "w_term": config.w_term, "w_sem": config.w_sem,
            "explicit_threshold": config.explicit_threshold,
            "implicit_threshold": config.implicit_threshold,
            "embedder": {"kind": embedder.kind, "dim": embedder.dim, "seed": embedder.seed},
            "doc_count": doc_count,
        })
    return report


def write_report(report: MetricsReport, path, suite: str, seed: int, config_echo: dict) -> None:
    payload = report.as_dict(suite=suite, seed=seed, config_echo=config_echo)
    Path(path).write_text(
        json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
