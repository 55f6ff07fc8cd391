#!/usr/bin/env python3
"""Regenerate the bundled demonstration catalogs under src/skillmap/data/.

The skill labels are composed so that any two skills share at most one
content word. The hashing embedder separates items by lexical overlap, so
catalogs whose entries share whole phrases would cross-match; keeping the
vocabulary spread out gives the demo and validation corpora clean geometry.
"""

from __future__ import annotations

import csv
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from skillmap.extraction import label_similarity  # noqa: E402

DATA_DIR = Path(__file__).resolve().parents[1] / "src" / "skillmap" / "data"

VERBS = [
    ("manage", "management", "overseeing"),
    ("coordinate", "coordination", "orchestrating"),
    ("evaluate", "evaluation", "appraising"),
    ("design", "design work", "drafting"),
    ("implement", "implementation", "deploying"),
    ("negotiate", "negotiation", "brokering"),
    ("supervise", "supervision", "directing"),
    ("analyse", "analysis", "examining"),
    ("develop", "development", "building"),
    ("maintain", "upkeep", "servicing"),
    ("plan", "planning", "scheduling"),
    ("audit", "auditing", "inspecting"),
]

ADJECTIVES = [
    "coastal", "municipal", "orbital", "alpine", "arctic", "tropical",
    "seasonal", "offshore", "urban", "rural", "glacial", "volcanic",
    "riverine", "prairie", "island", "highland", "wetland", "suburban",
    "nocturnal", "subterranean",
]

TOPICS = [
    "fishery", "vineyard", "railway", "observatory", "brewery", "greenhouse",
    "shipyard", "quarry", "apiary", "foundry", "orchard", "dairy",
    "turbine", "reservoir", "sawmill", "tannery", "kiln", "hatchery",
    "cannery", "refinery",
]

NOUNS = [
    "logistics", "ledgers", "forecasts", "rosters", "manifests", "quotas",
    "corridors", "inventories", "beacons", "gauges", "tariffs", "permits",
    "blueprints", "salvage", "drainage", "telemetry", "moorings", "compost",
    "signage", "irrigation",
]

TARGET_SKILLS = 240


def object_words(obj: str) -> set[str]:
    return set(obj.split())


def generate_skills():
    skills = []
    kept_objects: list[set[str]] = []
    idx = 0
    for noun_i, noun in enumerate(NOUNS):
        for topic_i, topic in enumerate(TOPICS):
            if len(skills) >= TARGET_SKILLS:
                return skills
            adj = ADJECTIVES[(noun_i * 7 + topic_i * 3) % len(ADJECTIVES)]
            obj = f"{adj} {topic} {noun}"
            words = object_words(obj)
            if any(len(words & prev) > 1 for prev in kept_objects):
                continue
            kept_objects.append(words)
            verb, verb_noun, gerund = VERBS[idx % len(VERBS)]
            idx += 1
            label = f"{verb} {obj}"
            alt1 = f"{verb_noun} of {obj}"
            alt2 = f"{gerund} {obj}"
            description = (
                f"Take charge of {obj} by tracking outcomes, briefing partners, "
                f"and keeping records current across every site."
            )
            skills.append({
                "id": f"S{len(skills) + 1:03d}",
                "label": label,
                "alt_labels": f"{alt1}|{alt2}",
                "description": description,
            })
    return skills


def generate_occupations(skills):
    occupations = []
    block = 8
    for j in range(0, min(len(skills), 24 * block), block):
        group = skills[j:j + block]
        if len(group) < 4:
            break
        required = group[:6]
        lead_obj = " ".join(required[0]["label"].split()[1:])
        objs = [" ".join(s["label"].split()[1:]) for s in required]
        occupations.append({
            "id": f"O{len(occupations) + 1:02d}",
            "title": f"{lead_obj} programme lead",
            "description": (
                "Leads teams responsible for "
                + ", ".join(objs[:-1])
                + f", and {objs[-1]}."
            ),
            "required_skill_ids": "|".join(s["id"] for s in required),
        })
    return occupations


def generate_courses(skills):
    courses = []
    for j in range(0, min(len(skills), 40 * 3), 3):
        group = skills[j:j + 3]
        if len(group) < 3:
            break
        objs = [" ".join(s["label"].split()[1:]) for s in group]
        courses.append({
            "id": f"C{len(courses) + 1:02d}",
            "title": f"Certificate in {objs[0]}",
            "description": (
                f"Modules on {objs[0]}, {objs[1]}, and {objs[2]}. "
                f"Casework deepens {objs[0]}, {objs[1]}, and {objs[2]} practice."
            ),
            "url": f"https://courses.example.org/c{len(courses) + 1:02d}",
        })
    return courses


SDGS = [
    (1, "No Poverty", "End poverty in all its forms everywhere, expanding social protection systems, equal economic resources, and resilience for the poor and vulnerable."),
    (2, "Zero Hunger", "End hunger, achieve food security and improved nutrition, and promote sustainable agriculture, supporting smallholder farmers and resilient food production."),
    (3, "Good Health and Well-being", "Ensure healthy lives and promote well-being for all at all ages, strengthening health coverage, vaccines, and disease prevention."),
    (4, "Quality Education", "Ensure inclusive and equitable quality education and promote lifelong learning opportunities, literacy, numeracy, and skills for decent employment."),
    (5, "Gender Equality", "Achieve gender equality and empower all women and girls, ending discrimination and ensuring full participation in leadership and decision making."),
    (6, "Clean Water and Sanitation", "Ensure availability and sustainable management of water and sanitation for all, improving water quality and protecting aquifers and freshwater ecosystems."),
    (7, "Affordable and Clean Energy", "Ensure access to affordable, reliable, sustainable and modern energy for all, expanding renewable capacity and improving energy efficiency."),
    (8, "Decent Work and Economic Growth", "Promote sustained, inclusive and sustainable economic growth, full and productive employment and decent work, protecting labour rights."),
    (9, "Industry, Innovation and Infrastructure", "Build resilient infrastructure, promote inclusive and sustainable industrialization and foster innovation, research, and reliable transport networks."),
    (10, "Reduced Inequalities", "Reduce inequality within and among countries, promoting social, economic and political inclusion and well managed migration policies."),
    (11, "Sustainable Cities and Communities", "Make cities and human settlements inclusive, safe, resilient and sustainable, with adequate housing, transport systems, and green public spaces."),
    (12, "Responsible Consumption and Production", "Ensure sustainable consumption and production patterns, reducing waste generation, food losses, and the footprint of material use."),
    (13, "Climate Action", "Take urgent steps to combat climate change and its impacts, strengthening adaptive capacity and integrating climate measures into policies."),
    (14, "Life Below Water", "Conserve and sustainably use the oceans, seas and marine resources, reducing marine pollution and protecting coastal ecosystems from overfishing."),
    (15, "Life on Land", "Protect, restore and promote sustainable use of terrestrial ecosystems, manage forests, combat desertification, and halt biodiversity loss."),
    (16, "Peace, Justice and Strong Institutions", "Promote peaceful and inclusive societies, provide access to justice for all and build effective, accountable institutions, reducing corruption."),
    (17, "Partnerships for the Goals", "Strengthen the means of implementation and revitalize the global partnership for sustainable development, finance, technology and capacity building."),
]


def sample_policy(skills):
    picked = [skills[4], skills[40], skills[100]]
    paragraphs = []
    for skill in picked:
        label = skill["label"]
        sentences = (
            f"The freight programme treats {label} as a core duty, funds {label} "
            f"training for depot staff, schedules {label} reviews each quarter, and "
            f"asks every regional partner to report {label} progress so that the "
            f"steering group can compare {label} results before new routes open. "
            f"Auditors trace {label} decisions through the shared ledger while the "
            f"council notes that clearer {label} guidance lowered emissions on the "
            f"busiest corridors last year."
        )
        paragraphs.append(sentences)
    return "\n\n".join(paragraphs) + "\n"


def write_csv(path, fieldnames, rows):
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=fieldnames)
        writer.writeheader()
        writer.writerows(rows)


def main():
    skills = generate_skills()
    assert len(skills) == TARGET_SKILLS, len(skills)
    labels = [s["label"] for s in skills]
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            sim = label_similarity(labels[i], labels[j])
            assert sim < 0.9, (labels[i], labels[j], sim)

    DATA_DIR.mkdir(parents=True, exist_ok=True)
    write_csv(DATA_DIR / "skills.csv", ["id", "label", "alt_labels", "description"], skills)
    occupations = generate_occupations(skills)
    write_csv(
        DATA_DIR / "occupations.csv",
        ["id", "title", "description", "required_skill_ids"],
        occupations,
    )
    courses = generate_courses(skills)
    write_csv(DATA_DIR / "courses.csv", ["id", "title", "description", "url"], courses)
    write_csv(
        DATA_DIR / "sdgs.csv",
        ["id", "name", "description"],
        [{"id": i, "name": n, "description": d} for i, n, d in SDGS],
    )
    (DATA_DIR / "sample_policy.txt").write_text(sample_policy(skills), encoding="utf-8")
    print(f"wrote {len(skills)} skills, {len(occupations)} occupations, "
          f"{len(courses)} courses, {len(SDGS)} sdgs")


if __name__ == "__main__":
    main()
