"""Run both synthetic validation suites and print their metric tables.

Each suite generates 80 documents (half explicit mentions, half implicit
paraphrases), runs the detector, and micro-averages precision/recall/F1.
Run with: python3 demos/04_validation_suites.py
"""

from skillmap.catalogs import bundled_data_path, load_sdgs, load_skills
from skillmap.validation import run_sdg_validation, run_skills_validation


def show(title, report):
    print(f"\n{title}")
    print(f"  {'kind':<10}{'precision':>10}{'recall':>8}{'f1':>8}")
    for kind in ("explicit", "implicit"):
        c = report.per_kind[kind]
        print(f"  {kind:<10}{c.precision:>10.4f}{c.recall:>8.4f}{c.f1:>8.4f}")
    c = report.overall
    print(f"  {'overall':<10}{c.precision:>10.4f}{c.recall:>8.4f}{c.f1:>8.4f}")


skills = load_skills(bundled_data_path("skills.csv"))
show("skills suite (seed=1)", run_skills_validation(skills, seed=1))

sdgs = load_sdgs(bundled_data_path("sdgs.csv"))
show("SDG suite (seed=1)", run_sdg_validation(sdgs, seed=1))
