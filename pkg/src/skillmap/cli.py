"""Command-line entry points: index building, analysis, validation, serving."""

from __future__ import annotations

import json
import re
import socket
import sys
from pathlib import Path

import click

from . import catalogs
from .config import CliConfig, load_config
from .embedding import load_embedding_store
from .errors import CatalogError, IoError, SkillmapError
from .pipeline import analyze_document, load_state
from .textprep import RawDocument
from .validation import run_sdg_validation, run_skills_validation
from .vindex import save_index

EXIT_INPUT = 2
EXIT_IO = 3


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _config_from_ctx(ctx) -> CliConfig:
    path = ctx.obj.get("config_path")
    try:
        return load_config(path, overrides=ctx.obj.get("overrides"))
    except (OSError, ValueError, TypeError) as exc:
        _fail(EXIT_INPUT, f"bad config: {exc}")


@click.group()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="TOML config file.")
@click.pass_context
def main(ctx, config_path):
    """Skill extraction and mapping engine."""
    ctx.ensure_object(dict)
    ctx.obj["config_path"] = config_path
    ctx.obj["overrides"] = {}


def _catalog_options(fn):
    for name in ("embeddings", "course-index", "skill-index", "sdgs", "courses",
                 "occupations", "skills"):
        fn = click.option(f"--{name}", type=click.Path(exists=True, dir_okay=False),
                          default=None)(fn)
    return fn


def _load_state_or_fail(cfg: CliConfig, **paths):
    try:
        return load_state(
            skills_path=paths.get("skills"),
            occupations_path=paths.get("occupations"),
            courses_path=paths.get("courses"),
            sdgs_path=paths.get("sdgs"),
            skill_index_path=paths.get("skill_index"),
            course_index_path=paths.get("course_index"),
            embeddings_path=paths.get("embeddings"),
            embedder=cfg.embedder,
            prep=cfg.prep,
            extraction=cfg.extraction,
            mapping=cfg.mapping,
        )
    except IoError as exc:
        _fail(EXIT_IO, str(exc))
    except SkillmapError as exc:
        _fail(EXIT_INPUT, str(exc))


@main.group()
def index():
    """Build and inspect vector index files."""


@index.command("build")
@click.option("--skills", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--courses", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--embeddings", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--out", required=True, type=click.Path(dir_okay=False))
@click.pass_context
def index_build(ctx, skills, courses, embeddings, out):
    """Embed one catalog CSV and persist it as a binary index."""
    if bool(skills) == bool(courses):
        _fail(EXIT_INPUT, "pass exactly one of --skills or --courses")
    cfg = _config_from_ctx(ctx)
    try:
        store = load_embedding_store(embeddings) if embeddings else None
        if skills:
            entries = catalogs.load_skills(skills)
            built = catalogs.build_skill_index(entries, cfg.embedder, store)
        else:
            entries = catalogs.load_courses(courses)
            built = catalogs.build_course_index(entries, cfg.embedder, store)
    except (CatalogError, SkillmapError) as exc:
        _fail(EXIT_INPUT, str(exc))
    try:
        save_index(built, out)
    except IoError as exc:
        _fail(EXIT_IO, str(exc))
    click.echo(f"wrote {out}: {len(built)} entries, dim {built.dim}")


_FORMAT_BY_EXT = {".txt": "txt", ".html": "html", ".htm": "html", ".xml": "xml"}


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "output_format", type=click.Choice(["json", "table"]),
              default="json")
@click.option("--doc-format", type=click.Choice(["txt", "html", "xml", "pre_extracted"]),
              default=None, help="Override format inferred from the extension.")
@_catalog_options
@click.pass_context
def analyze(ctx, file, output_format, doc_format, **paths):
    """Analyze one document and print the result."""
    cfg = _config_from_ctx(ctx)
    state = _load_state_or_fail(cfg, **paths)
    path = Path(file)
    declared = doc_format or _FORMAT_BY_EXT.get(path.suffix.lower(), "pre_extracted")
    doc = RawDocument(name=path.name, declared_format=declared, data=path.read_bytes())
    try:
        result = analyze_document(doc, state, include_timings=False)
    except SkillmapError as exc:
        _fail(EXIT_INPUT, str(exc))
    if output_format == "json":
        click.echo(json.dumps(result, indent=2, sort_keys=True))
    else:
        _print_tables(result)


def _print_tables(result: dict) -> None:
    click.echo(f"document: {result['document_name']}  chunks: {result['chunk_count']}")
    click.echo("\nskills")
    click.echo(f"{'id':<8}{'frequency':>10}{'max':>8}{'mean':>8}  label")
    for m in result["skills"]:
        click.echo(f"{m['skill_id']:<8}{m['frequency']:>10}{m['max_score']:>8.3f}"
                   f"{m['mean_score']:>8.3f}  {m['label']}")
    click.echo("\noccupations")
    click.echo(f"{'id':<8}{'overlap':>8}{'sim':>8}{'score':>8}  title")
    for o in result["occupations"]:
        click.echo(f"{o['occupation_id']:<8}{o['overlap_ratio']:>8.3f}"
                   f"{o['text_similarity']:>8.3f}{o['combined']:>8.3f}  {o['title']}")
    click.echo("\ncourses")
    click.echo(f"{'id':<8}{'score':>8}  title")
    for c in result["courses"]:
        click.echo(f"{c['course_id']:<8}{c['score']:>8.3f}  {c['title']}")
    click.echo("\nsdgs")
    click.echo(f"{'id':>4}{'relevance':>11}  name")
    for s in result["sdgs"]:
        click.echo(f"{s['sdg_id']:>4}{s['relevance']:>11.3f}  {s['name']}")


_ASSERT_RE = re.compile(
    r"^(overall|explicit|implicit)_(precision|recall|f1)\s*(>=|<=|>|<)\s*([0-9.]+)$"
)


def _check_assertion(expr: str, report) -> bool:
    m = _ASSERT_RE.match(expr.strip())
    if not m:
        _fail(EXIT_INPUT, f"bad --assert expression {expr!r} "
                          "(expected e.g. overall_f1>=0.8)")
    scope, metric, op, bound = m.groups()
    counts = report.overall if scope == "overall" else report.per_kind[scope]
    value = getattr(counts, metric)
    bound = float(bound)
    return {
        ">=": value >= bound, "<=": value <= bound,
        ">": value > bound, "<": value < bound,
    }[op]


@main.command()
@click.option("--suite", type=click.Choice(["skills", "sdg"]), required=True)
@click.option("--seed", type=int, default=1, show_default=True)
@click.option("--report", "report_path", type=click.Path(dir_okay=False), default=None)
@click.option("--assert", "assertions", multiple=True,
              help="Metric bound such as overall_f1>=0.8; exit 1 when violated.")
@click.option("--skills", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--sdgs", type=click.Path(exists=True, dir_okay=False), default=None)
@click.pass_context
def validate(ctx, suite, seed, report_path, assertions, skills, sdgs):
    """Run a synthetic validation suite and print its metric table."""
    cfg = _config_from_ctx(ctx)
    try:
        if suite == "skills":
            entries = catalogs.load_skills(skills or catalogs.bundled_data_path("skills.csv"))
            report = run_skills_validation(
                entries, cfg.extraction, cfg.embedder, seed=seed, report_path=report_path,
            )
        else:
            entries = catalogs.load_sdgs(sdgs or catalogs.bundled_data_path("sdgs.csv"))
            report = run_sdg_validation(
                entries, cfg.sdg_validation, cfg.embedder, seed=seed, report_path=report_path,
            )
    except SkillmapError as exc:
        _fail(EXIT_INPUT, str(exc))

    click.echo(f"{'kind':<10}{'precision':>11}{'recall':>9}{'f1':>9}")
    for kind in ("explicit", "implicit"):
        c = report.per_kind[kind]
        click.echo(f"{kind:<10}{c.precision:>11.4f}{c.recall:>9.4f}{c.f1:>9.4f}")
    c = report.overall
    click.echo(f"{'overall':<10}{c.precision:>11.4f}{c.recall:>9.4f}{c.f1:>9.4f}")
    if report_path:
        click.echo(f"report written to {report_path}")

    failed = [a for a in assertions if not _check_assertion(a, report)]
    for a in failed:
        click.echo(f"assertion failed: {a}", err=True)
    if failed:
        sys.exit(1)


@main.command()
@click.option("--port", type=int, default=None, help="Port to bind (0 for ephemeral).")
@click.option("--host", default="127.0.0.1", show_default=True)
@_catalog_options
@click.pass_context
def serve(ctx, port, host, **paths):
    """Launch the HTTP service."""
    import uvicorn

    from .service import create_app

    cfg = _config_from_ctx(ctx)
    state = _load_state_or_fail(cfg, **paths)
    app = create_app(state, cors_origins=cfg.service.get("cors_origins") or None)
    bind_port = cfg.service["port"] if port is None else port
    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        sock.bind((host, bind_port))
    except OSError as exc:
        _fail(EXIT_IO, f"cannot bind {host}:{bind_port}: {exc}")
    sock.listen(128)
    click.echo(f"listening on {host}:{sock.getsockname()[1]}")
    server = uvicorn.Server(uvicorn.Config(app, log_level="warning"))
    server.run(sockets=[sock])


@main.group("config")
def config_group():
    """Inspect configuration."""


@config_group.command("show")
@click.pass_context
def config_show(ctx):
    """Print the effective merged configuration."""
    cfg = _config_from_ctx(ctx)
    click.echo(json.dumps(cfg.as_dict(), indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
