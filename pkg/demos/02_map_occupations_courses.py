"""Map an extracted skill profile to occupations and courses.

Occupations are ranked by a weighted blend of required-skill overlap and
document-to-description similarity; courses by best per-skill similarity
above a threshold. Run with: python3 demos/02_map_occupations_courses.py
"""

from skillmap.catalogs import bundled_data_path
from skillmap.extraction import extract_skills
from skillmap.mapping import document_vector, recommend_courses, score_occupations
from skillmap.pipeline import load_state
from skillmap.textprep import RawDocument, chunk_text, clean_text, extract_text

state = load_state()
data = bundled_data_path("sample_policy.txt").read_bytes()
doc = RawDocument(name="sample_policy.txt", declared_format="txt", data=data)

profile = extract_skills(doc, state.skill_index, state.extraction, state.embedder)
chunks = chunk_text(clean_text(extract_text(doc), source_name=doc.name),
                    state.extraction.chunk_size_limit)
doc_vec = document_vector(chunks, state.embedder)

print("top occupations (overlap, text similarity, combined):")
ranked = score_occupations(profile, doc_vec, state.occupations,
                           state.occupation_vectors, state.mapping)
for occ in ranked[:5]:
    print(f"  {occ.occupation_id}  {occ.overlap_ratio:.2f}  "
          f"{occ.text_similarity:.3f}  {occ.combined:.3f}  {occ.title}")

print("\nrecommended courses (max similarity over matched skills):")
for rec in recommend_courses(profile, state.course_index, state.mapping,
                             state.embedder)[:5]:
    print(f"  {rec.course_id}  {rec.score:.3f}  {rec.title}  "
          f"via {', '.join(rec.matched_skill_ids)}")
