"""HTTP/JSON endpoints over a workspace (FastAPI application)."""

from __future__ import annotations

from typing import Optional, Union

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel

from ..docprep.document import DocumentError
from ..freightnet.model import NetworkValidationError
from ..mcda.scenario import ScenarioSpecError
from ..ontogen.core import CoreError
from ..rdf.turtle import TurtleParseError
from ..schemagen.schema import CyclicHierarchyError
from ..sparql.eval import UnknownPrefixError
from ..sparql.parser import QueryParseError
from . import ops
from .workspace import UnknownIdError, Workspace, WorkspaceError


class OntologyUpload(BaseModel):
    turtle: str
    id: Optional[str] = None


class DocumentUpload(BaseModel):
    document: dict
    id: Optional[str] = None


class QueryRequest(BaseModel):
    ontology_id: str
    sparql: str


class PipelineRequest(BaseModel):
    document_id: str
    core: str = "rule"
    core_config: Optional[dict] = None
    pipeline_config: Optional[dict] = None
    ontology_id: Optional[str] = None


class SchemaRequest(BaseModel):
    ontology_id: str


class NetworkUpload(BaseModel):
    hubs_csv: str
    segments_csv: str
    id: Optional[str] = None
    factors_csv: Optional[str] = None
    transfer_json: Optional[str] = None


class ScenarioRequest(BaseModel):
    network_id: str
    scenario: dict
    id: Optional[str] = None


def create_app(workspace: Union[str, Workspace]) -> FastAPI:
    ws = workspace if isinstance(workspace, Workspace) else Workspace(workspace)
    app = FastAPI(title="ontofreight gateway", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def bad_request(exc: Exception) -> HTTPException:
        return HTTPException(status_code=400, detail=str(exc))

    @app.post("/ontologies")
    def upload_ontology(payload: OntologyUpload):
        try:
            return ops.upload_ontology(ws, payload.turtle, payload.id)
        except (TurtleParseError, WorkspaceError) as exc:
            raise bad_request(exc)

    @app.get("/ontologies/{ontology_id}", response_class=PlainTextResponse)
    def get_ontology(ontology_id: str):
        try:
            return ops.get_ontology(ws, ontology_id)
        except UnknownIdError as exc:
            raise HTTPException(status_code=404, detail=str(exc))

    @app.post("/documents")
    def upload_document(payload: DocumentUpload):
        try:
            return ops.ingest_document(ws, payload.document, payload.id)
        except (DocumentError, WorkspaceError) as exc:
            raise bad_request(exc)

    @app.post("/query")
    def run_query(payload: QueryRequest):
        try:
            return ops.run_query(ws, payload.ontology_id, payload.sparql)
        except UnknownIdError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        except (QueryParseError, UnknownPrefixError, TurtleParseError) as exc:
            raise bad_request(exc)

    def _core_failure(exc: BaseException) -> bool:
        seen = set()
        current: BaseException = exc
        while current is not None and id(current) not in seen:
            if isinstance(current, CoreError):
                return True
            seen.add(id(current))
            current = current.__cause__ or current.__context__
        return False

    @app.post("/pipeline/run")
    def pipeline_run(payload: PipelineRequest):
        try:
            return ops.run_pipeline_op(
                ws,
                payload.document_id,
                payload.core,
                payload.core_config,
                payload.pipeline_config,
                payload.ontology_id,
            )
        except UnknownIdError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        except Exception as exc:  # noqa: BLE001 - mapped to status codes below
            if _core_failure(exc):
                raise HTTPException(status_code=502, detail=str(exc))
            if isinstance(exc, (ValueError, WorkspaceError, RuntimeError)):
                raise bad_request(exc)
            raise

    @app.post("/schema/derive")
    def schema_derive(payload: SchemaRequest):
        try:
            return ops.derive_schema_op(ws, payload.ontology_id)
        except UnknownIdError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        except CyclicHierarchyError as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.post("/networks")
    def upload_network(payload: NetworkUpload):
        try:
            return ops.load_network_op(
                ws,
                payload.hubs_csv,
                payload.segments_csv,
                payload.id,
                payload.factors_csv,
                payload.transfer_json,
            )
        except (NetworkValidationError, WorkspaceError) as exc:
            raise bad_request(exc)

    @app.get("/networks/{network_id}/export")
    def export_network(network_id: str):
        try:
            return ops.export_graph_op(ws, network_id)
        except UnknownIdError as exc:
            raise HTTPException(status_code=404, detail=str(exc))

    @app.post("/scenarios")
    def solve(payload: ScenarioRequest):
        try:
            return ops.solve_scenario_op(
                ws, payload.network_id, payload.scenario, payload.id
            )
        except UnknownIdError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        except (ScenarioSpecError, ValueError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.get("/scenarios/{scenario_id}")
    def get_scenario(scenario_id: str):
        try:
            return ops.get_scenario(ws, scenario_id)
        except UnknownIdError as exc:
            raise HTTPException(status_code=404, detail=str(exc))

    return app
