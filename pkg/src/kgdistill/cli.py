"""Command-line interface for the dataset distillation pipeline."""

from __future__ import annotations

import functools
import logging
import sys
from pathlib import Path

import click

from .pipeline import CurationNeededError, PipelineConfig, PipelineRunner

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CURATION_NEEDED = 2


def _config_from(ctx_params: dict) -> PipelineConfig:
    overrides = {
        key: ctx_params.get(key)
        for key in (
            "endpoint_url",
            "catalog",
            "k",
            "variant",
            "seed",
            "decision_file",
            "output_dir",
            "dataset_name",
            "reasoner",
            "page_size",
        )
        if ctx_params.get(key) is not None
    }
    for flag in (
        "infer_declarations",
        "degree_includes_types",
        "fixpoint_extraction",
        "allow_http_imports",
        "one_based_ids",
        "strict_punning",
    ):
        if ctx_params.get(flag):
            overrides[flag] = True
    if ctx_params.get("no_una"):
        overrides["una"] = False
    if ctx_params.get("ratios"):
        overrides["ratios"] = tuple(float(r) for r in ctx_params["ratios"].split(","))
    if ctx_params.get("source"):
        files = tuple(s for s in ctx_params["source"] if not s.startswith(("http://", "https://")))
        urls = [s for s in ctx_params["source"] if s.startswith(("http://", "https://"))]
        if files:
            overrides["source_files"] = files
        if urls:
            overrides["endpoint_url"] = urls[0]
    if ctx_params.get("schema"):
        overrides["schema_files"] = tuple(ctx_params["schema"])

    config_path = ctx_params.get("config")
    if config_path:
        return PipelineConfig.load(config_path, **overrides).validate()
    return PipelineConfig(**overrides).validate()


def common_options(fn):
    decorators = [
        click.option("--config", type=click.Path(exists=True), help="JSON config file"),
        click.option("--source", multiple=True, help="source dump file(s) or endpoint URL"),
        click.option("--schema", multiple=True, type=click.Path(exists=True), help="schema document(s)"),
        click.option("--endpoint-url", help="SPARQL endpoint URL"),
        click.option("--catalog", type=click.Path(exists=True), help="import catalog TSV"),
        click.option("--allow-http-imports", is_flag=True, default=False),
        click.option("--infer-declarations", is_flag=True, default=False),
        click.option("--min-degree", "--k", "k", type=int, help="extraction threshold k"),
        click.option("--degree-includes-types", is_flag=True, default=False),
        click.option("--fixpoint", "fixpoint_extraction", is_flag=True, default=False),
        click.option("--variant", type=click.Choice(["base", "materialize", "both"])),
        click.option("--ratios", help="train,valid,test e.g. 0.8,0.1,0.1"),
        click.option("--seed", type=int),
        click.option("--decisions", "decision_file", type=click.Path(exists=True)),
        click.option("--output-dir", "-o", type=click.Path()),
        click.option("--dataset-name", help="dataset label (the {name}-{k} convention)"),
        click.option("--reasoner", help="builtin or external:<dir>"),
        click.option("--no-una", is_flag=True, default=False, help="disable unique-name clash kinds"),
        click.option("--one-based", "one_based_ids", is_flag=True, default=False),
        click.option("--strict-punning", is_flag=True, default=False),
        click.option("--page-size", type=int),
        click.option("-v", "--verbose", is_flag=True, default=False),
    ]
    for d in reversed(decorators):
        fn = d(fn)
    return fn


def _runner(params) -> PipelineRunner:
    if params.get("verbose"):
        logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    return PipelineRunner(_config_from(params))


def _guard(fn):
    @functools.wraps(fn)
    def wrapped(**params):
        try:
            fn(_runner(params))
        except CurationNeededError as e:
            click.echo(f"curation needed: {e}", err=True)
            sys.exit(EXIT_CURATION_NEEDED)
        except Exception as e:  # noqa: BLE001 - single CLI error funnel
            click.echo(f"error: {e}", err=True)
            sys.exit(EXIT_ERROR)

    return wrapped


@click.group()
@click.version_option()
def main() -> None:
    """Distill RDF/OWL knowledge graphs into ML-ready datasets."""


@main.command()
@common_options
@_guard
def merge(runner: PipelineRunner) -> None:
    """Collapse the schema import closure."""
    onto = runner.phase_merge()
    click.echo(f"merged schema: {len(onto)} axioms -> {runner.ws.work / '01_schema_merged.ttl'}")


@main.command("check-schema")
@common_options
@_guard
def check_schema(runner: PipelineRunner) -> None:
    """Detect and remove unsatisfiable classes and properties."""
    cleaned, unsat = runner.phase_clean_schema()
    n = len(unsat.flagged())
    click.echo(f"schema clean: {len(cleaned)} axioms, {n} unsatisfiable entities removed")


@main.command()
@common_options
@_guard
def materialize(runner: PipelineRunner) -> None:
    """Compute the deductive closure and write the inferred axiom set."""
    inferred = runner.phase_materialize()
    click.echo(f"materialized {len(inferred)} inferred axioms")


@main.command()
@common_options
@_guard
def extract(runner: PipelineRunner) -> None:
    """Extract the degree-filtered ABox subset and class assertions."""
    relations = runner.phase_extract()
    typings = runner.phase_typings()
    click.echo(f"extracted {len(relations)} relation assertions, {len(typings)} typings")


@main.command("check-consistency")
@common_options
@_guard
def check_consistency_cmd(runner: PipelineRunner) -> None:
    """Check schema+ABox consistency; exit 2 with a report when clashes remain."""
    relations, typings = runner.phase_curate()
    click.echo(f"consistent: {len(relations)} relations, {len(typings)} typings")


@main.command("realize")
@common_options
@_guard
def realize_cmd(runner: PipelineRunner) -> None:
    """Materialize implicit class assertions of the curated ABox."""
    realized = runner.phase_realize()
    click.echo(f"realized {len(realized)} class assertions")


@main.command()
@common_options
@_guard
def modularize(runner: PipelineRunner) -> None:
    """Extract the ABox-tailored schema module and write the components."""
    result = runner.run()
    for variant, bundle in result.bundles.items():
        click.echo(f"{variant}: components {bundle.components.sizes()}")


@main.command()
@common_options
@_guard
def postprocess(runner: PipelineRunner) -> None:
    """Split, filter leakage, map ids, and export index tables."""
    result = runner.run()
    for variant, bundle in result.bundles.items():
        click.echo(
            f"{variant}: train/valid/test = "
            f"{len(bundle.split.train)}/{len(bundle.split.valid)}/{len(bundle.split.test)}"
            f" -> {bundle.directory}"
        )


@main.command("run")
@common_options
@_guard
def run_cmd(runner: PipelineRunner) -> None:
    """Run the full pipeline end to end."""
    result = runner.run()
    for variant, bundle in result.bundles.items():
        click.echo(f"{variant}: bundle written to {bundle.directory}")


@main.command()
@click.argument("bundle_dir", type=click.Path(exists=True))
def stats(bundle_dir: str) -> None:
    """Print the statistics report of an existing bundle directory."""
    stats_path = Path(bundle_dir) / "stats.md"
    if not stats_path.exists():
        click.echo(f"error: {stats_path} not found", err=True)
        sys.exit(EXIT_ERROR)
    click.echo(stats_path.read_text(encoding="utf-8"))


if __name__ == "__main__":
    main()
