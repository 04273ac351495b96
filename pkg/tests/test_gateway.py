"""Workspace persistence, endpoint contracts, CLI twins, and parity."""

import json

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from ontofreight.gateway import Workspace, create_app
from ontofreight.gateway.cli import main as cli_main
from parity import (
    data_text,
    load_requests,
    materialize_inputs,
    run_cli,
    run_http,
    tree_digest,
)


@pytest.fixture()
def client(tmp_path):
    return TestClient(create_app(tmp_path / "ws"))


class TestWorkspace:
    def test_roundtrip_byte_stable(self, tmp_path):
        root = tmp_path / "ws"
        ws = Workspace(root)
        ws.add_ontology(data_text("pizza_auto.ttl"), "pizza")
        ws.add_document(
            json.loads(data_text("docs/pizza_document.json")), "pizza-doc"
        )
        ws.add_network(
            data_text("network/hubs.csv"), data_text("network/segments.csv"),
            "demo",
        )
        before = tree_digest(root)
        reopened = Workspace(root)
        assert reopened.ids("ontologies") == ["pizza"]
        assert reopened.ontology_text("pizza") == data_text("pizza_auto.ttl")
        reopened.document("pizza-doc")
        reopened.network("demo")
        assert tree_digest(root) == before

    def test_no_temp_files_left(self, tmp_path):
        root = tmp_path / "ws"
        ws = Workspace(root)
        ws.add_ontology(data_text("pizza_auto.ttl"), "pizza")
        assert not list(root.rglob("*.tmp"))

    def test_invalid_id_rejected(self, tmp_path):
        from ontofreight.gateway import WorkspaceError

        ws = Workspace(tmp_path / "ws")
        with pytest.raises(WorkspaceError):
            ws.add_ontology("", "Bad Id!")


class TestEndpoints:
    def test_upload_and_byte_identical_fetch(self, client):
        turtle = data_text("pizza_auto.ttl")
        response = client.post("/ontologies", json={"turtle": turtle, "id": "pizza"})
        assert response.status_code == 200
        assert response.json() == {"id": "pizza"}
        fetched = client.get("/ontologies/pizza")
        assert fetched.text == turtle

    def test_malformed_turtle_400_with_position(self, client):
        response = client.post("/ontologies", json={"turtle": "ex:a ex:p ."})
        assert response.status_code == 400
        assert "line" in response.json()["detail"]

    def test_unknown_ontology_404(self, client):
        response = client.post(
            "/query", json={"ontology_id": "nope", "sparql": "SELECT * WHERE { ?s ?p ?o . }"}
        )
        assert response.status_code == 404

    def test_bad_query_400(self, client):
        client.post("/ontologies", json={"turtle": "", "id": "empty"})
        response = client.post(
            "/query", json={"ontology_id": "empty", "sparql": "SELECT ?x WHERE {"}
        )
        assert response.status_code == 400

    def test_unknown_prefix_400(self, client):
        client.post("/ontologies", json={"turtle": "", "id": "empty"})
        response = client.post(
            "/query",
            json={"ontology_id": "empty",
                  "sparql": "SELECT ?x WHERE { ?x zz:t ?y . }"},
        )
        assert response.status_code == 400

    def test_vegetable_query_four_rows(self, client):
        client.post("/ontologies",
                    json={"turtle": data_text("pizza_auto.ttl"), "id": "pizza"})
        response = client.post("/query", json={
            "ontology_id": "pizza",
            "sparql": data_text("queries/pizza_vegetable_toppings.rq"),
        })
        rows = response.json()["rows"]
        assert len(rows) == 4
        names = {row["vegetableTopping"].rsplit("#", 1)[1] for row in rows}
        assert names == {"Artichokes", "Mushrooms", "Onion", "Tomatoes"}

    def test_ftot_inputs_ten_rows(self, client):
        client.post("/ontologies",
                    json={"turtle": data_text("ftot.ttl"), "id": "ftot"})
        response = client.post("/query", json={
            "ontology_id": "ftot",
            "sparql": data_text("queries/ftot_scenario_inputs.rq"),
        })
        assert len(response.json()["rows"]) == 10

    def test_pipeline_deterministic_bytes(self, client):
        doc = json.loads(data_text("docs/pizza_document.json"))
        client.post("/documents", json={"document": doc, "id": "pizza-doc"})
        payload = {
            "document_id": "pizza-doc",
            "pipeline_config": {"base_iri": "http://example.org/generated/pizza"},
        }
        first = client.post("/pipeline/run", json={**payload, "ontology_id": "gen1"})
        second = client.post("/pipeline/run", json={**payload, "ontology_id": "gen2"})
        text1 = client.get("/ontologies/gen1").text
        text2 = client.get("/ontologies/gen2").text
        assert first.status_code == second.status_code == 200
        assert text1 == text2

    def test_pipeline_missing_document_404(self, client):
        response = client.post("/pipeline/run", json={"document_id": "ghost"})
        assert response.status_code == 404

    def test_pipeline_llm_core_failure_502(self, client):
        doc = json.loads(data_text("docs/pizza_document.json"))
        client.post("/documents", json={"document": doc, "id": "pizza-doc"})
        response = client.post("/pipeline/run", json={
            "document_id": "pizza-doc",
            "core": "llm",
            "core_config": {"endpoint": "http://127.0.0.1:1/v1/chat",
                            "timeout": 0.2, "retries": 0},
        })
        assert response.status_code == 502

    def test_generated_ontology_answers_vegetable_cq(self, client):
        doc = json.loads(data_text("docs/pizza_document.json"))
        client.post("/documents", json={"document": doc, "id": "pizza-doc"})
        run = client.post("/pipeline/run", json={
            "document_id": "pizza-doc",
            "pipeline_config": {"base_iri": "http://example.org/generated/pizza"},
        })
        onto_id = run.json()["ontology_id"]
        query = """
        PREFIX rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#>
        PREFIX gen: <http://example.org/generated/pizza#>
        SELECT ?x WHERE { ?x rdf:type gen:VegetableTopping . }
        """
        response = client.post("/query", json={"ontology_id": onto_id,
                                               "sparql": query})
        assert len(response.json()["rows"]) == 4

    def test_schema_derive_cyclic_422(self, client):
        cyclic = """
        @prefix ex: <http://x/> .
        @prefix owl: <http://www.w3.org/2002/07/owl#> .
        @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
        ex:A a owl:Class ; rdfs:subClassOf ex:B .
        ex:B a owl:Class ; rdfs:subClassOf ex:A .
        """
        client.post("/ontologies", json={"turtle": cyclic, "id": "cyclic"})
        response = client.post("/schema/derive", json={"ontology_id": "cyclic"})
        assert response.status_code == 422

    def test_schema_derive_empty_ontology(self, client):
        client.post("/ontologies", json={"turtle": "", "id": "empty"})
        response = client.post("/schema/derive", json={"ontology_id": "empty"})
        assert response.status_code == 200
        assert response.json()["ddl"] == ""

    def test_scenario_unreachable_is_200(self, client):
        client.post("/networks", json={
            "hubs_csv": "id,name,region,intermodal,lon,lat\n"
                        "a,A,r,true,0,0\nb,B,r,false,1,1\n",
            "segments_csv": "id,from,to,mode,distance_km,slope,one_way\n",
            "id": "disconnected",
        })
        response = client.post("/scenarios", json={
            "network_id": "disconnected",
            "scenario": {"origin": "a", "destination": "b",
                         "method": "weighted", "weights": {"time": 1.0}},
        })
        assert response.status_code == 200
        assert response.json()["result"]["status"] == "unreachable"

    def test_scenario_invalid_spec_422(self, client):
        client.post("/networks", json={
            "hubs_csv": "id,name,region,intermodal,lon,lat\na,A,r,true,0,0\n",
            "segments_csv": "id,from,to,mode,distance_km,slope,one_way\n",
            "id": "one",
        })
        response = client.post("/scenarios", json={
            "network_id": "one",
            "scenario": {"origin": "a", "destination": "a",
                         "method": "weighted", "weights": {}},
        })
        assert response.status_code == 422

    def test_scenario_replay(self, client):
        client.post("/networks", json={
            "hubs_csv": data_text("network/hubs.csv"),
            "segments_csv": data_text("network/segments.csv"),
            "id": "demo",
        })
        solved = client.post("/scenarios", json={
            "network_id": "demo", "id": "replayed",
            "scenario": {"origin": "nashville", "destination": "memphis",
                         "method": "weighted", "weights": {"ghg": 1.0}},
        })
        replay = client.get("/scenarios/replayed")
        assert replay.status_code == 200
        assert replay.json()["result"] == solved.json()["result"]


class TestCli:
    def test_unknown_subcommand_usage_exit_2(self):
        runner = CliRunner()
        result = runner.invoke(cli_main, ["frobnicate"])
        assert result.exit_code == 2
        assert "Usage" in result.output or "No such command" in result.output

    def test_query_tsv_matches_endpoint_rows(self, tmp_path):
        inputs = materialize_inputs(tmp_path / "inputs")
        ws_dir = tmp_path / "ws"
        runner = CliRunner()
        upload = runner.invoke(cli_main, [
            "--workspace", str(ws_dir), "onto-add",
            str(inputs / "pizza_auto.ttl"), "--id", "pizza",
        ])
        assert upload.exit_code == 0
        result = runner.invoke(cli_main, [
            "--workspace", str(ws_dir), "query", "--ontology", "pizza",
            str(inputs / "queries/pizza_vegetable_toppings.rq"),
        ])
        assert result.exit_code == 0
        lines = result.output.strip().split("\n")
        assert lines[0] == "vegetableTopping"
        assert len(lines) == 5

        client = TestClient(create_app(tmp_path / "ws2"))
        client.post("/ontologies",
                    json={"turtle": data_text("pizza_auto.ttl"), "id": "pizza"})
        endpoint_rows = client.post("/query", json={
            "ontology_id": "pizza",
            "sparql": data_text("queries/pizza_vegetable_toppings.rq"),
        }).json()["rows"]
        assert lines[1:] == [row["vegetableTopping"] for row in endpoint_rows]

    def test_error_exit_nonzero(self, tmp_path):
        runner = CliRunner()
        result = runner.invoke(cli_main, [
            "--workspace", str(tmp_path / "ws"), "query", "--ontology", "ghost",
            "--query", "SELECT * WHERE { ?s ?p ?o . }",
        ])
        assert result.exit_code == 1
        assert "not found" in result.output


class TestParity:
    def test_cli_and_http_outputs_identical(self, tmp_path):
        inputs = materialize_inputs(tmp_path / "inputs")
        scratch = tmp_path / "scratch"
        scratch.mkdir()
        http_ws = tmp_path / "http-ws"
        cli_ws = tmp_path / "cli-ws"
        client = TestClient(create_app(http_ws))

        for request in load_requests():
            status, http_payload = run_http(client, request)
            assert status == 200, request["name"]
            exit_code, output = run_cli(cli_ws, request, inputs, scratch)
            assert exit_code == 0, (request["name"], output)
            cli_payload = json.loads(output)
            assert cli_payload == http_payload, request["name"]

        http_tree = tree_digest(http_ws)
        cli_tree = tree_digest(cli_ws)
        assert http_tree == cli_tree
