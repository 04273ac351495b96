"""Command-line twin of the HTTP endpoints, operating on a workspace dir."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from ..docprep.document import DocumentError
from ..freightnet.model import NetworkValidationError
from ..mcda.scenario import ScenarioSpecError
from ..ontogen.core import CoreError
from ..rdf.turtle import TurtleParseError
from ..schemagen.schema import CyclicHierarchyError
from ..sparql.eval import UnknownPrefixError, evaluate
from ..sparql.parser import QueryParseError, parse_query
from ..sparql.render import render_table
from . import ops
from .workspace import UnknownIdError, Workspace, WorkspaceError

_USER_ERRORS = (
    TurtleParseError,
    QueryParseError,
    UnknownPrefixError,
    WorkspaceError,
    UnknownIdError,
    DocumentError,
    NetworkValidationError,
    ScenarioSpecError,
    CyclicHierarchyError,
    CoreError,
    ValueError,
)


@click.group()
@click.option(
    "--workspace", "workspace_dir", default=".ontofreight",
    show_default=True, help="Workspace directory.",
)
@click.pass_context
def main(ctx, workspace_dir):
    """Ontology-driven freight decision support toolkit."""
    ctx.obj = {"workspace_dir": workspace_dir}


def _ws(ctx) -> Workspace:
    return Workspace(ctx.obj["workspace_dir"])


def _emit(payload) -> None:
    click.echo(json.dumps(payload, indent=2, sort_keys=True))


def _run(ctx, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except _USER_ERRORS as exc:
        raise click.ClickException(str(exc))


@main.command("onto-add")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--id", "entry_id", default=None, help="Registry id (default: content hash).")
@click.pass_context
def onto_add(ctx, path, entry_id):
    """Register a Turtle ontology file."""
    turtle = Path(path).read_text(encoding="utf-8")
    _emit(_run(ctx, ops.upload_ontology, _ws(ctx), turtle, entry_id))


@main.command("ingest-doc")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--id", "entry_id", default=None, help="Registry id (default: content hash).")
@click.pass_context
def ingest_doc(ctx, path, entry_id):
    """Register a document JSON file."""
    document = json.loads(Path(path).read_text(encoding="utf-8"))
    _emit(_run(ctx, ops.ingest_document, _ws(ctx), document, entry_id))


@main.command("gen-onto")
@click.option("--document", "document_id", required=True, help="Document id.")
@click.option("--core", type=click.Choice(["rule", "llm"]), default="rule",
              show_default=True)
@click.option("--config", "config_path", type=click.Path(exists=True),
              default=None, help="JSON with core_config/pipeline_config.")
@click.option("--id", "entry_id", default=None, help="Ontology id to register.")
@click.pass_context
def gen_onto(ctx, document_id, core, config_path, entry_id):
    """Run the construction pipeline over a registered document."""
    config = {}
    if config_path:
        config = json.loads(Path(config_path).read_text(encoding="utf-8"))
    _emit(_run(
        ctx, ops.run_pipeline_op, _ws(ctx), document_id, core,
        config.get("core_config"), config.get("pipeline_config"), entry_id,
    ))


@main.command("query")
@click.option("--ontology", "ontology_id", required=True, help="Ontology id.")
@click.argument("query_file", type=click.Path(exists=True, dir_okay=False),
                required=False)
@click.option("--query", "query_text", default=None, help="Inline query text.")
@click.option("--format", "fmt", type=click.Choice(["tsv", "json"]),
              default="tsv", show_default=True)
@click.pass_context
def query(ctx, ontology_id, query_file, query_text, fmt):
    """Run a SPARQL query file (or inline text) against an ontology."""
    if query_text is None:
        if query_file is None:
            raise click.UsageError("provide a QUERY_FILE or --query")
        query_text = Path(query_file).read_text(encoding="utf-8")

    def run():
        graph = _ws(ctx).ontology_graph(ontology_id)
        return evaluate(parse_query(query_text), graph)

    table = _run(ctx, run)
    click.echo(render_table(table, fmt), nl=False)


@main.command("derive-schema")
@click.option("--ontology", "ontology_id", required=True, help="Ontology id.")
@click.pass_context
def derive_schema(ctx, ontology_id):
    """Derive DDL, ERD JSON, and seed inserts from an ontology."""
    _emit(_run(ctx, ops.derive_schema_op, _ws(ctx), ontology_id))


@main.command("net-load")
@click.argument("directory", type=click.Path(exists=True, file_okay=False))
@click.option("--id", "entry_id", default=None, help="Registry id.")
@click.pass_context
def net_load(ctx, directory, entry_id):
    """Register a network from a directory of hubs.csv/segments.csv."""
    directory = Path(directory)
    hubs = (directory / "hubs.csv").read_text(encoding="utf-8")
    segments = (directory / "segments.csv").read_text(encoding="utf-8")
    factors_path = directory / "factors.csv"
    transfer_path = directory / "transfer_penalties.json"
    _emit(_run(
        ctx, ops.load_network_op, _ws(ctx), hubs, segments, entry_id,
        factors_path.read_text(encoding="utf-8") if factors_path.exists() else None,
        transfer_path.read_text(encoding="utf-8") if transfer_path.exists() else None,
    ))


@main.command("optimize")
@click.option("--network", "network_id", required=True, help="Network id.")
@click.option("--scenario", "scenario_path", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Scenario JSON file.")
@click.option("--id", "entry_id", default=None, help="Scenario id to register.")
@click.pass_context
def optimize(ctx, network_id, scenario_path, entry_id):
    """Solve a scenario: enumerate, aggregate, rank."""
    scenario = json.loads(Path(scenario_path).read_text(encoding="utf-8"))
    _emit(_run(
        ctx, ops.solve_scenario_op, _ws(ctx), network_id, scenario, entry_id
    ))


@main.command("export-graph")
@click.option("--network", "network_id", required=True, help="Network id.")
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default=None,
              help="Write nodes.csv/edges.csv here instead of printing JSON.")
@click.pass_context
def export_graph(ctx, network_id, out_dir):
    """Export a network as property-graph CSV records."""
    payload = _run(ctx, ops.export_graph_op, _ws(ctx), network_id)
    if out_dir:
        directory = Path(out_dir)
        directory.mkdir(parents=True, exist_ok=True)
        (directory / "nodes.csv").write_text(payload["nodes_csv"], encoding="utf-8")
        (directory / "edges.csv").write_text(payload["edges_csv"], encoding="utf-8")
        click.echo(json.dumps({"written": [str(directory / "nodes.csv"),
                                           str(directory / "edges.csv")]},
                              indent=2))
    else:
        _emit(payload)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8080, show_default=True, type=int)
@click.pass_context
def serve(ctx, host, port):
    """Run the HTTP gateway."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(_ws(ctx)), host=host, port=port)


if __name__ == "__main__":
    sys.exit(main())
