"""Score a document against the 17 Sustainable Development Goals.

Shows both scorers: the fast embedding-cosine ranking used inside the
pipeline, and the multi-method scorer (sequence match + weighted keyword
coverage + embedding) used by the validation suite.
Run with: python3 demos/03_sdg_relevance.py
"""

from skillmap.catalogs import bundled_data_path, embed_sdgs, load_sdgs
from skillmap.embedding import EmbedderSpec, embed
from skillmap.mapping import score_sdgs
from skillmap.validation import SdgMultiScorer

spec = EmbedderSpec()
sdgs = load_sdgs(bundled_data_path("sdgs.csv"))
vectors = embed_sdgs(sdgs, spec)

text = ("The ministry expands access to clean water, sanitation services and "
        "safe hygiene in rural districts, with new wells and treatment works.")

print("embedding-cosine ranking (top 5):")
for s in score_sdgs(embed(text, spec), sdgs, vectors)[:5]:
    print(f"  SDG {s.sdg_id:>2}  {s.relevance:.3f}  {s.name}")

scorer = SdgMultiScorer(sdgs)
print("\nmulti-method scores (top 5):")
scored = sorted(((scorer.score(text, s.sdg_id), s) for s in sdgs), reverse=True,
                key=lambda pair: pair[0])
for value, s in scored[:5]:
    print(f"  SDG {s.sdg_id:>2}  {value:.3f}  {s.name}")
