#!/usr/bin/env python3
"""Record gateway responses for the frontend contract tests.

Drives the real gateway in-process and freezes the JSON responses under
frontend/tests/fixtures/. Re-run after changing the demo network, factor
table, or result schema:

    python scripts/record_frontend_fixtures.py
"""

import json
from importlib import resources
from pathlib import Path
from tempfile import TemporaryDirectory

from fastapi.testclient import TestClient

from ontofreight.gateway import create_app

OUT_DIR = Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixtures"

RIVER_CLOSURES = [
    {"segment": "w-nash-mem", "closed": True},
    {"segment": "w-mem-no", "closed": True},
    {"segment": "w-mob-no", "closed": True},
]


def data_text(name: str) -> str:
    return resources.files("ontofreight.data").joinpath(name).read_text(
        encoding="utf-8"
    )


def scenario(weights, disruptions=None, multiplier=None):
    constraints = {}
    if disruptions:
        constraints["disruptions"] = disruptions
    payload = {
        "origin": "nashville",
        "destination": "new-orleans",
        "method": "weighted",
        "weights": weights,
    }
    if constraints:
        payload["constraints"] = constraints
    return payload


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    with TemporaryDirectory() as ws_dir:
        client = TestClient(create_app(ws_dir))
        client.post("/ontologies", json={
            "turtle": data_text("pizza_auto.ttl"), "id": "pizza"})
        client.post("/ontologies", json={
            "turtle": data_text("faf.ttl"), "id": "faf"})
        client.post("/networks", json={
            "hubs_csv": data_text("network/hubs.csv"),
            "segments_csv": data_text("network/segments.csv"),
            "factors_csv": data_text("network/factors.csv"),
            "transfer_json": data_text("network/transfer_penalties.json"),
            "id": "demo",
        })

        fixtures = {
            "scenario_time_weighted.json": client.post("/scenarios", json={
                "network_id": "demo", "id": "fx-time",
                "scenario": scenario({"time": 1.0}),
            }).json(),
            "scenario_ghg_weighted.json": client.post("/scenarios", json={
                "network_id": "demo", "id": "fx-ghg",
                "scenario": scenario({"ghg": 1.0}),
            }).json(),
            "scenario_balanced.json": client.post("/scenarios", json={
                "network_id": "demo", "id": "fx-balanced",
                "scenario": scenario({"ghg": 0.5, "time": 0.3, "cost": 0.2}),
            }).json(),
            "scenario_river_closed.json": client.post("/scenarios", json={
                "network_id": "demo", "id": "fx-closed",
                "scenario": scenario({"ghg": 1.0}, disruptions=RIVER_CLOSURES),
            }).json(),
            "scenario_road_slowed.json": client.post("/scenarios", json={
                "network_id": "demo", "id": "fx-slowed",
                "scenario": scenario(
                    {"time": 1.0},
                    disruptions=[{"segment": "r-nash-bham", "multiplier": 2.0},
                                 {"segment": "r-bham-no", "multiplier": 2.0}],
                ),
            }).json(),
            "scenario_unreachable.json": client.post("/scenarios", json={
                "network_id": "demo", "id": "fx-unreachable",
                "scenario": {
                    "origin": "nashville", "destination": "boston",
                    "method": "weighted", "weights": {"time": 1.0},
                    "constraints": {"allowed_modes": ["water"]},
                },
            }).json(),
            "query_vegetable_toppings.json": client.post("/query", json={
                "ontology_id": "pizza",
                "sparql": data_text("queries/pizza_vegetable_toppings.rq"),
            }).json(),
            "query_faf_regions.json": client.post("/query", json={
                "ontology_id": "faf",
                "sparql": data_text("queries/faf_regions.rq"),
            }).json(),
            "query_error.json": client.post("/query", json={
                "ontology_id": "pizza", "sparql": "SELECT ?x WHERE {",
            }).json(),
            "hubs.json": {
                "hubs": [
                    {"id": line.split(",")[0], "name": line.split(",")[1]}
                    for line in data_text("network/hubs.csv").splitlines()[1:]
                    if line.strip()
                ]
            },
        }
        for name, payload in fixtures.items():
            path = OUT_DIR / name
            path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n",
                            encoding="utf-8")
            print(f"wrote {path}")


if __name__ == "__main__":
    main()
