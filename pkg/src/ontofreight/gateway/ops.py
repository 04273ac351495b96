"""Shared operation layer: the CLI and HTTP endpoints both call these,
so the two surfaces cannot drift apart semantically."""

from __future__ import annotations

import json
from typing import Optional

from ..mcda.scenario import scenario_from_dict, solve_scenario
from ..ontogen.core import LlmCore, LlmCoreConfig, RuleBasedCore
from ..ontogen.pipeline import PipelineConfig, run_pipeline
from ..rdf.ontology import extract_ontology_view
from ..rdf.turtle import serialize_turtle
from ..schemagen.ddl import emit_ddl, seed_inserts
from ..schemagen.propertygraph import (
    export_property_graph,
    render_property_graph_csv,
)
from ..schemagen.schema import RelationalSchema, derive_schema
from ..sparql.eval import evaluate
from ..sparql.parser import parse_query
from ..sparql.render import table_to_dict
from .workspace import Workspace, content_id


def make_core(kind: str = "rule", config: Optional[dict] = None):
    if kind == "rule":
        return RuleBasedCore()
    if kind == "llm":
        config = config or {}
        if "endpoint" not in config:
            raise ValueError("llm core requires an 'endpoint' in its config")
        return LlmCore(LlmCoreConfig(
            endpoint=config["endpoint"],
            model=config.get("model", "gpt-4"),
            auth_env_var=config.get("auth_env_var", "ONTOFREIGHT_LLM_TOKEN"),
            timeout=float(config.get("timeout", 30.0)),
            retries=int(config.get("retries", 2)),
        ))
    raise ValueError(f"unknown core kind {kind!r}")


def schema_to_dict(schema: RelationalSchema) -> dict:
    return {
        "tables": [
            {
                "name": t.name,
                "columns": [
                    {"name": c.name, "type": c.type, "nullable": c.nullable}
                    for c in t.columns
                ],
                "primary_key": t.primary_key,
                "foreign_keys": [[col, target] for col, target in t.foreign_keys],
                "origin": t.origin.value if t.origin else None,
            }
            for t in schema.tables
        ],
        "warnings": list(schema.warnings),
    }


def upload_ontology(ws: Workspace, turtle: str,
                    ontology_id: Optional[str] = None) -> dict:
    return {"id": ws.add_ontology(turtle, ontology_id)}


def get_ontology(ws: Workspace, ontology_id: str) -> str:
    return ws.ontology_text(ontology_id)


def ingest_document(ws: Workspace, document: dict,
                    document_id: Optional[str] = None) -> dict:
    return {"id": ws.add_document(document, document_id)}


def run_query(ws: Workspace, ontology_id: str, sparql: str) -> dict:
    graph = ws.ontology_graph(ontology_id)
    table = evaluate(parse_query(sparql), graph)
    return table_to_dict(table)


def run_pipeline_op(
    ws: Workspace,
    document_id: str,
    core_kind: str = "rule",
    core_config: Optional[dict] = None,
    pipeline_config: Optional[dict] = None,
    ontology_id: Optional[str] = None,
) -> dict:
    document = ws.document(document_id)
    core = make_core(core_kind, core_config)
    config = PipelineConfig(**(pipeline_config or {}))
    result = run_pipeline(document, core, config)
    merged_text = serialize_turtle(result.merged)
    merged_id = ws.add_ontology(
        merged_text,
        ontology_id or content_id(merged_text),
        meta={"document": document_id, "core": core_kind},
    )
    module_ids = []
    for i, graph in enumerate(result.section_graphs):
        module_id = f"{merged_id}-s{i}"
        ws.add_ontology(
            serialize_turtle(graph), module_id,
            meta={"document": document_id, "section": i},
        )
        module_ids.append(module_id)
    return {
        "ontology_id": merged_id,
        "module_ids": module_ids,
        "report": result.report.to_dict(),
    }


def derive_schema_op(ws: Workspace, ontology_id: str) -> dict:
    snapshot = extract_ontology_view(ws.ontology_graph(ontology_id))
    schema = derive_schema(snapshot)
    ddl = emit_ddl(schema)
    inserts, insert_warnings = seed_inserts(snapshot, schema)
    erd = schema_to_dict(schema)
    erd["warnings"].extend(insert_warnings)
    ws.store_schema(ontology_id, ddl, erd, inserts)
    return {"ddl": ddl, "erd": erd, "inserts": inserts}


def load_network_op(
    ws: Workspace,
    hubs_csv: str,
    segments_csv: str,
    network_id: Optional[str] = None,
    factors_csv: Optional[str] = None,
    transfer_json: Optional[str] = None,
) -> dict:
    return {
        "id": ws.add_network(
            hubs_csv, segments_csv, network_id, factors_csv, transfer_json
        )
    }


def export_graph_op(ws: Workspace, network_id: str) -> dict:
    export = export_property_graph(ws.network(network_id))
    nodes_csv, edges_csv = render_property_graph_csv(export)
    return {"nodes_csv": nodes_csv, "edges_csv": edges_csv}


def solve_scenario_op(
    ws: Workspace,
    network_id: str,
    scenario: dict,
    scenario_id: Optional[str] = None,
) -> dict:
    network = ws.network(network_id)
    factors = ws.factors(network_id)
    spec = scenario_from_dict(scenario)
    result = solve_scenario(network, factors, spec)
    record = {
        "network_id": network_id,
        "scenario": scenario,
        "result": result.to_dict(),
    }
    entry_id = ws.add_scenario(
        record,
        scenario_id or content_id(network_id, json.dumps(scenario, sort_keys=True)),
    )
    return {"scenario_id": entry_id, "result": record["result"]}


def get_scenario(ws: Workspace, scenario_id: str) -> dict:
    return ws.scenario(scenario_id)
