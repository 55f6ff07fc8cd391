"""Extract skills from the bundled sample document.

Walks the core pipeline by hand: validate, clean, chunk, embed, search,
aggregate. Run with: python3 demos/01_extract_skills.py
"""

from skillmap.catalogs import build_skill_index, bundled_data_path, load_skills
from skillmap.embedding import EmbedderSpec
from skillmap.extraction import ExtractionConfig, extract_skills
from skillmap.textprep import RawDocument, chunk_text, clean_text, extract_text

spec = EmbedderSpec()
skills = load_skills(bundled_data_path("skills.csv"))
index = build_skill_index(skills, spec)
print(f"catalog: {len(skills)} skills, index dim {index.dim}")

data = bundled_data_path("sample_policy.txt").read_bytes()
doc = RawDocument(name="sample_policy.txt", declared_format="txt", data=data)

clean = clean_text(extract_text(doc), source_name=doc.name)
chunks = chunk_text(clean, 120)
print(f"document: {len(clean.text.split())} tokens -> {len(chunks)} chunks")

profile = extract_skills(doc, index, ExtractionConfig(), spec)
print(f"\nextracted {len(profile.matches)} skills (frequency = matching chunks):")
for m in profile.matches:
    print(f"  {m.skill_id}  freq={m.frequency}  max={m.max_score:.3f}  {m.label}")
