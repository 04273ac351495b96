"""Schema derivation, DDL round trip, seed inserts, property-graph export."""

import json
from importlib import resources

import pytest

from conftest import NETWORK_DIR

from ontofreight.freightnet import Hub, Segment, TransportNetwork
from ontofreight.rdf import (
    Iri,
    OntologySnapshot,
    extract_ontology_view,
    parse_turtle,
)
from ontofreight.schemagen import (
    EDGE_ATTR_WHITELIST,
    NODE_ATTR_WHITELIST,
    CyclicHierarchyError,
    derive_schema,
    emit_ddl,
    export_property_graph,
    fk_targets_resolve,
    parse_ddl,
    render_property_graph_csv,
    same_structure,
    seed_inserts,
    snake_case,
)


def _faf_snapshot():
    text = resources.files("ontofreight.data").joinpath("faf.ttl").read_text()
    return extract_ontology_view(parse_turtle(text))


def _mini_snapshot(turtle: str) -> OntologySnapshot:
    prefixes = """
    @prefix ex: <http://x/> .
    @prefix owl: <http://www.w3.org/2002/07/owl#> .
    @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
    @prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
    """
    return extract_ontology_view(parse_turtle(prefixes + turtle))


class TestDeriveSchema:
    def test_empty_snapshot(self):
        schema = derive_schema(OntologySnapshot())
        assert schema.tables == []

    def test_class_with_two_data_properties(self):
        schema = derive_schema(_mini_snapshot("""
        ex:Shipment a owl:Class .
        ex:weight a owl:DatatypeProperty ;
            rdfs:domain ex:Shipment ; rdfs:range xsd:decimal .
        ex:year a owl:DatatypeProperty ;
            rdfs:domain ex:Shipment ; rdfs:range xsd:integer .
        """))
        (table,) = schema.tables
        assert table.name == "shipment"
        assert table.column_names() == ["id", "weight", "year"]
        assert [c.type for c in table.columns] == ["INTEGER", "DECIMAL", "INTEGER"]

    def test_non_functional_property_becomes_join_table(self):
        schema = derive_schema(_mini_snapshot("""
        ex:Pizza a owl:Class .
        ex:Topping a owl:Class .
        ex:hasTopping a owl:ObjectProperty ;
            rdfs:domain ex:Pizza ; rdfs:range ex:Topping .
        """))
        join = schema.table("has_topping")
        assert "pizza_id" in join.column_names()
        assert "topping_id" in join.column_names()
        assert sorted(join.foreign_keys) == [
            ("pizza_id", "pizza"), ("topping_id", "topping")]

    def test_functional_property_becomes_fk_column(self):
        schema = derive_schema(_mini_snapshot("""
        ex:Pizza a owl:Class .
        ex:Dough a owl:Class .
        ex:hasBase a owl:ObjectProperty , owl:FunctionalProperty ;
            rdfs:domain ex:Pizza ; rdfs:range ex:Dough .
        """))
        pizza = schema.table("pizza")
        assert "has_base_id" in pizza.column_names()
        assert ("has_base_id", "dough") in pizza.foreign_keys
        assert len(schema.tables) == 2  # no join table

    def test_subclass_carries_parent_fk(self):
        schema = derive_schema(_mini_snapshot("""
        ex:Food a owl:Class .
        ex:Topping a owl:Class ; rdfs:subClassOf ex:Food .
        """))
        topping = schema.table("topping")
        assert ("parent_id", "food") in topping.foreign_keys

    def test_missing_domain_skipped_with_warning(self):
        schema = derive_schema(_mini_snapshot("""
        ex:Pizza a owl:Class .
        ex:orphan a owl:DatatypeProperty ; rdfs:range xsd:string .
        """))
        assert any("no usable domain" in w for w in schema.warnings)

    def test_cyclic_snapshot_rejected(self):
        snap = OntologySnapshot()
        a, b = Iri("http://x/A"), Iri("http://x/B")
        snap.classes = {a, b}
        snap.subclass_edges = {(a, b), (b, a)}
        with pytest.raises(CyclicHierarchyError):
            derive_schema(snap)

    def test_table_count_rule_on_faf(self):
        snapshot = _faf_snapshot()
        schema = derive_schema(snapshot)
        non_functional = sum(
            1 for p in snapshot.object_properties if not p.functional
        )
        assert len(schema.tables) == len(snapshot.classes) + non_functional
        assert fk_targets_resolve(schema)

    def test_deterministic(self):
        a = derive_schema(_faf_snapshot())
        b = derive_schema(_faf_snapshot())
        assert same_structure(a, b)
        assert emit_ddl(a) == emit_ddl(b)


class TestDdl:
    def test_empty_schema_empty_ddl(self):
        assert emit_ddl(derive_schema(OntologySnapshot())) == ""

    def test_single_table_has_primary_key_clause(self):
        schema = derive_schema(_mini_snapshot("ex:Hub a owl:Class ."))
        ddl = emit_ddl(schema)
        assert ddl.count("CREATE TABLE") == 1
        assert "PRIMARY KEY (id)" in ddl

    def test_parse_back_identical_structure(self):
        schema = derive_schema(_faf_snapshot())
        ddl = emit_ddl(schema)
        parsed = parse_ddl(ddl)
        assert same_structure(schema, parsed)

    def test_dependency_order_valid(self):
        schema = derive_schema(_faf_snapshot())
        ddl = emit_ddl(schema)
        seen = set()
        for statement in ddl.split("\n\n"):
            parsed = parse_ddl(statement if statement.endswith("\n") else statement + "\n")
            for table in parsed.tables:
                for _, target in table.foreign_keys:
                    assert target in seen or target == table.name
                seen.add(table.name)

    def test_idempotent(self):
        schema = derive_schema(_faf_snapshot())
        assert emit_ddl(schema) == emit_ddl(schema)


class TestSeedInserts:
    def test_no_individuals_empty(self):
        schema = derive_schema(_mini_snapshot("ex:Hub a owl:Class ."))
        sql, warnings = seed_inserts(
            _mini_snapshot("ex:Hub a owl:Class ."), schema
        )
        assert sql == "" and warnings == []

    def test_regions_get_24_inserts(self):
        snapshot = _faf_snapshot()
        schema = derive_schema(snapshot)
        sql, _ = seed_inserts(snapshot, schema)
        region_rows = [line for line in sql.splitlines()
                       if line.startswith("INSERT INTO regions ")]
        assert len(region_rows) == 24
        assert any("Mobile-Daphne-Fairhope" in line for line in region_rows)

    def test_multi_typed_individual_two_inserts(self):
        snapshot = _mini_snapshot("""
        ex:Veg a owl:Class .
        ex:Ing a owl:Class .
        ex:Tomato a owl:NamedIndividual , ex:Veg , ex:Ing .
        """)
        schema = derive_schema(snapshot)
        sql, _ = seed_inserts(snapshot, schema)
        assert sql.count("'Tomato'") == 2

    def test_quote_escaping(self):
        snapshot = _mini_snapshot("""
        ex:Hub a owl:Class .
        ex:Oddball a owl:NamedIndividual , ex:Hub ; rdfs:label "O'Hare" .
        """)
        schema = derive_schema(snapshot)
        sql, _ = seed_inserts(snapshot, schema)
        assert "'O''Hare'" in sql


def _tiny_network():
    hubs = [
        Hub(id="a", name="Alpha", intermodal=True),
        Hub(id="b", name="Beta"),
    ]
    segments = [
        Segment(id="s1", from_hub="a", to_hub="b", mode="road",
                distance_km=10.0, slope=0.01),
    ]
    return TransportNetwork(hubs, segments)


class TestPropertyGraph:
    def test_empty_network(self):
        export = export_property_graph(TransportNetwork([], []))
        assert export.nodes == [] and export.edges == []

    def test_two_nodes_one_edge(self):
        export = export_property_graph(_tiny_network())
        assert len(export.nodes) == 2
        assert len(export.edges) == 1
        assert export.edges[0].label == "road"

    def test_attribute_whitelist(self):
        export = export_property_graph(_tiny_network())
        for node in export.nodes:
            assert set(node.attributes) <= NODE_ATTR_WHITELIST
        for edge in export.edges:
            assert set(edge.attributes) <= EDGE_ATTR_WHITELIST

    def test_no_metric_attributes_on_bundled_sample(self):
        from ontofreight.freightnet import load_network_dir

        network = load_network_dir(NETWORK_DIR)
        export = export_property_graph(network)
        forbidden = {"cost", "emission", "ghg", "time", "fuel"}
        for edge in export.edges:
            assert not (set(edge.attributes) & forbidden)
            assert set(edge.attributes) <= EDGE_ATTR_WHITELIST

    def test_csv_rendering(self):
        export = export_property_graph(_tiny_network())
        nodes_csv, edges_csv = render_property_graph_csv(export)
        assert nodes_csv.splitlines()[0] == "id,labels,attr_json"
        assert edges_csv.splitlines()[0] == "id,from,to,label,attr_json"
        attr = json.loads(edges_csv.splitlines()[1].split(",", 4)[4].strip('"').replace('""', '"'))
        assert attr["distance_km"] == 10.0


def test_snake_case():
    assert snake_case("FreightFlow") == "freight_flow"
    assert snake_case("hasTopping") == "has_topping"
    assert snake_case("FAF5Database") == "faf5_database"
    assert snake_case("Mobile-Daphne") == "mobile_daphne"
