"""Glossary persistence, taxonomy, relations, OWL emission, pipeline."""

import json
import math
from fractions import Fraction

import httpx
import pytest

from ontofreight.docprep import Section, SourceDocument, TokenChunk, load_document
from ontofreight.ontogen import (
    AdHocRelation,
    CoreError,
    GlossaryTerm,
    IndividualSpec,
    LlmCore,
    LlmCoreConfig,
    PipelineConfig,
    RelationProposal,
    RuleBasedCore,
    TaxonomyEdge,
    TermProposal,
    build_taxonomy,
    define_adhoc_relations,
    emit_owl,
    extract_glossary,
    normalize_key,
    run_pipeline,
    validate_against_domain,
    verify_consistency,
)
from ontofreight.rdf import (
    Graph,
    Iri,
    OntologySnapshot,
    check_acyclic_subclasses,
    extract_ontology_view,
    serialize_turtle,
)

from conftest import DOCS_DIR

FIXTURE_DIR = DOCS_DIR


class ScriptedCore:
    """Core whose extraction follows a per-call schedule of term lists."""

    def __init__(self, schedule, taxonomy=(), relations=()):
        self.schedule = [list(terms) for terms in schedule]
        self.calls = 0
        self._taxonomy = list(taxonomy)
        self._relations = list(relations)

    def extract_terms(self, chunk, title, keywords):
        terms = self.schedule[min(self.calls, len(self.schedule) - 1)]
        self.calls += 1
        return [TermProposal(label=t) for t in terms]

    def confirm_terms(self, terms, section):
        return list(terms)

    def propose_taxonomy(self, terms):
        return list(self._taxonomy)

    def propose_relations(self, terms, sentences):
        return list(self._relations)

    def summarize_caption(self, caption):
        return caption


def _chunk(tokens):
    return TokenChunk(tokens=list(tokens), section_index=0)


class TestPersistenceFilter:
    def test_empty_chunk_list(self):
        terms, dropped = extract_glossary([], "T", [], RuleBasedCore(), iterations=1)
        assert terms == [] and dropped == []

    def test_one_of_three_iterations_dropped(self):
        core = ScriptedCore([["Freight", "Spam"], ["Freight"], ["Freight"]])
        terms, dropped = extract_glossary(
            [_chunk(["x"])], "T", [], core, iterations=3, threshold_fraction=2 / 3
        )
        assert [t.key for t in terms] == ["freight"]
        assert dropped == ["spam"]
        assert terms[0].support == 3

    @pytest.mark.parametrize("num,den", [(1, 3), (1, 2), (2, 3), (1, 1)])
    @pytest.mark.parametrize("n", range(1, 7))
    def test_exhaustive_threshold_truth_table(self, n, num, den):
        tau = num / den
        expected_threshold = math.ceil(Fraction(n) * Fraction(num, den))
        for s in range(0, n + 1):
            schedule = [["Target"] if i < s else [] for i in range(n)]
            core = ScriptedCore(schedule)
            terms, _ = extract_glossary(
                [_chunk(["x"])], "T", [], core,
                iterations=n, threshold_fraction=tau,
            )
            survived = bool(terms)
            assert survived == (s >= expected_threshold), (n, tau, s)

    def test_deterministic_core_full_support(self):
        core = ScriptedCore([["Hub", "Route"]])
        terms, _ = extract_glossary([_chunk(["x"])], "T", [], core, iterations=4)
        assert all(t.support == 4 for t in terms)


class TestConsistency:
    def test_empty(self):
        kept, dropped = verify_consistency([], Section("h", "body"), RuleBasedCore())
        assert kept == [] and dropped == []

    def test_absent_term_dropped_present_kept(self):
        glossary = [
            GlossaryTerm(label="Freight Hub", key="freight hub"),
            GlossaryTerm(label="Unicorn", key="unicorn"),
        ]
        section = Section("h", "The freight hub moves cargo.")
        kept, dropped = verify_consistency(glossary, section, RuleBasedCore())
        assert [t.key for t in kept] == ["freight hub"]
        assert dropped == ["unicorn"]


class TestTaxonomy:
    def test_single_term_attaches_to_root(self):
        glossary = [GlossaryTerm(label="Hub", key="hub")]
        edges, broken = build_taxonomy(glossary, RuleBasedCore(), root_key="network")
        assert edges == [TaxonomyEdge("hub", "network")]
        assert broken == []

    def test_shared_head_longer_label_becomes_child(self):
        glossary = [
            GlossaryTerm(label="VegetableToppings", key="vegetable topping"),
            GlossaryTerm(label="PizzaToppings", key="pizza topping"),
        ]
        edges, _ = build_taxonomy(glossary, RuleBasedCore(), root_key="doc")
        assert TaxonomyEdge("vegetable topping", "pizza topping") in edges

    def test_eight_children_under_pizza_toppings(self):
        labels = [
            "Pizza", "Pizza Toppings", "Cheese Toppings", "Fruit Toppings",
            "Herb And Spice Toppings", "Meat Toppings", "Other Toppings",
            "Sauce Toppings", "Seafood Toppings", "Vegetable Toppings",
        ]
        glossary = [GlossaryTerm(label=l, key=normalize_key(l)) for l in labels]
        edges, _ = build_taxonomy(glossary, RuleBasedCore(), root_key="pizza")
        children = {e.child for e in edges if e.parent == "pizza topping"}
        assert len(children) == 8
        assert "vegetable topping" in children

    def test_cycle_broken_deterministically(self):
        glossary = [
            GlossaryTerm(label="Alpha", key="alpha"),
            GlossaryTerm(label="Beta", key="beta"),
        ]
        core = ScriptedCore([["Alpha", "Beta"]],
                            taxonomy=[("Alpha", "Beta"), ("Beta", "Alpha")])
        edges, broken = build_taxonomy(glossary, core, root_key="doc")
        assert TaxonomyEdge("alpha", "beta") in edges
        # The dropped edge is the one whose child sorts last.
        assert broken == [TaxonomyEdge("beta", "alpha")]
        assert TaxonomyEdge("beta", "doc") in edges


class TestRelations:
    def test_empty_sentences(self):
        glossary = [GlossaryTerm(label="Pizza", key="pizza")]
        assert define_adhoc_relations(glossary, [], [], RuleBasedCore()) == []

    def test_has_pattern(self):
        glossary = [
            GlossaryTerm(label="Pizza", key="pizza"),
            GlossaryTerm(label="Base", key="base"),
        ]
        relations = define_adhoc_relations(
            glossary, [], ["a pizza has a base"], RuleBasedCore()
        )
        assert relations == [
            AdHocRelation(name="hasBase", domain="pizza", range="base",
                          kind="associative")
        ]

    def test_subclassof_rejected(self):
        glossary = [GlossaryTerm(label="Pizza", key="pizza")]
        core = ScriptedCore([["Pizza"]], relations=[
            RelationProposal(name="subClassOf", domain="Pizza", range="Pizza"),
        ])
        assert define_adhoc_relations(glossary, [], ["x"], core) == []

    def test_taxonomy_duplicate_rejected(self):
        glossary = [
            GlossaryTerm(label="Veg", key="veg"),
            GlossaryTerm(label="Topping", key="topping"),
        ]
        core = ScriptedCore([["Veg"]], relations=[
            RelationProposal(name="kindOf", domain="Veg", range="Topping"),
        ])
        taxonomy = [TaxonomyEdge("veg", "topping")]
        assert define_adhoc_relations(glossary, taxonomy, ["x"], core) == []

    def test_attribute_requires_datatype(self):
        glossary = [GlossaryTerm(label="Hub", key="hub")]
        core = ScriptedCore([["Hub"]], relations=[
            RelationProposal(name="has code", domain="Hub", range="string",
                             kind="attribute"),
            RelationProposal(name="has junk", domain="Hub", range="Widget",
                             kind="attribute"),
        ])
        relations = define_adhoc_relations(glossary, [], ["x"], core)
        assert relations == [
            AdHocRelation(name="hasCode", domain="hub", range="string",
                          kind="attribute")
        ]

    def test_duplicates_removed(self):
        glossary = [
            GlossaryTerm(label="Pizza", key="pizza"),
            GlossaryTerm(label="Base", key="base"),
        ]
        sentences = ["a pizza has a base", "every pizza has a base"]
        relations = define_adhoc_relations(glossary, [], sentences, RuleBasedCore())
        assert len(relations) == 1


class TestEmitOwl:
    def test_empty_inputs_header_only(self):
        graph = emit_owl([], [], [], {}, "http://x/onto")
        assert len(graph) == 1

    def test_one_class_one_individual_three_content_triples(self):
        glossary = [GlossaryTerm(label="Hub", key="hub")]
        individuals = {"memphis": IndividualSpec(label="Memphis", types={"hub"})}
        graph = emit_owl(glossary, [], [], individuals, "http://x/onto")
        assert len(graph) == 4  # ontology header + 3 content triples

    def test_label_only_when_differing(self):
        glossary = [
            GlossaryTerm(label="Hub", key="hub"),
            GlossaryTerm(label="Freight Hub", key="freight hub"),
        ]
        graph = emit_owl(glossary, [], [], {}, "http://x/onto")
        labels = [t for t in graph.triples if t.predicate.local_name == "label"]
        assert len(labels) == 1
        assert labels[0].object.lexical == "Freight Hub"

    def test_attribute_relation_becomes_datatype_property(self):
        glossary = [GlossaryTerm(label="Hub", key="hub")]
        relations = [AdHocRelation("hasCode", "hub", "string", "attribute")]
        graph = emit_owl(glossary, [], relations, {}, "http://x/onto")
        snapshot = extract_ontology_view(graph)
        assert len(snapshot.data_properties) == 1
        assert snapshot.data_properties[0].range == "string"


class TestDomainValidation:
    def _snapshot(self, classes, edges=()):
        snap = OntologySnapshot()
        snap.classes = {Iri(f"http://x#{c}") for c in classes}
        snap.subclass_edges = {
            (Iri(f"http://x#{a}"), Iri(f"http://x#{b}")) for a, b in edges
        }
        return snap

    def test_identical_snapshots_all_mapped(self):
        snap = self._snapshot(["Food", "Topping"], [("Topping", "Food")])
        report = validate_against_domain(snap, snap)
        assert len(report.mapped) == 2
        assert report.unmapped == []
        assert report.conflicts == []

    def test_empty_candidate(self):
        report = validate_against_domain(
            OntologySnapshot(), self._snapshot(["Food"])
        )
        assert report.mapped == [] and report.unmapped == []

    def test_plural_stripped_keys_map(self):
        candidate = self._snapshot(["VegetableTopping"])
        reference = self._snapshot(["VegetableToppings"])
        report = validate_against_domain(candidate, reference)
        assert len(report.mapped) == 1

    def test_head_token_suffix_maps(self):
        candidate = self._snapshot(["Tomato"])
        reference = self._snapshot(["TomatoTopping"])
        report = validate_against_domain(candidate, reference)
        assert len(report.mapped) == 1

    def test_conflict_outside_parent_subtree(self):
        candidate = self._snapshot(
            ["Tomato", "Equipment"], [("Tomato", "Equipment")]
        )
        reference = self._snapshot(
            ["Tomato", "Equipment", "Food"], [("Tomato", "Food")]
        )
        report = validate_against_domain(candidate, reference)
        assert len(report.conflicts) == 1
        assert report.conflicts[0][0] == "tomato"


@pytest.fixture(scope="module")
def pizza_doc():
    return load_document(FIXTURE_DIR / "pizza_document.json")


class TestPipeline:

    def test_rule_core_deterministic_bytes(self, pizza_doc):
        config = PipelineConfig(base_iri="http://example.org/generated/pizza")
        first = run_pipeline(pizza_doc, RuleBasedCore(), config)
        second = run_pipeline(pizza_doc, RuleBasedCore(), config)
        assert serialize_turtle(first.merged) == serialize_turtle(second.merged)

    def test_emitted_graphs_acyclic(self, pizza_doc):
        result = run_pipeline(pizza_doc, RuleBasedCore(), PipelineConfig())
        for graph in result.section_graphs + [result.merged]:
            assert check_acyclic_subclasses(extract_ontology_view(graph)).ok

    def test_each_term_exactly_once_class_or_individual(self, pizza_doc):
        result = run_pipeline(pizza_doc, RuleBasedCore(), PipelineConfig())
        for graph in result.section_graphs:
            snapshot = extract_ontology_view(graph)
            class_iris = set(snapshot.classes)
            individual_iris = set(snapshot.individuals)
            assert not (class_iris & individual_iris)

    def test_max_rounds_one_single_pass(self, pizza_doc):
        config = PipelineConfig(max_rounds=1)
        result = run_pipeline(pizza_doc, RuleBasedCore(), config)
        assert all(s.rounds_used == 1 for s in result.report.sections)
        multi = run_pipeline(pizza_doc, RuleBasedCore(), PipelineConfig(max_rounds=5))
        assert serialize_turtle(result.merged) == serialize_turtle(multi.merged)

    def test_vegetable_individuals_present(self, pizza_doc):
        config = PipelineConfig(base_iri="http://example.org/generated/pizza")
        result = run_pipeline(pizza_doc, RuleBasedCore(), config)
        snapshot = extract_ontology_view(result.merged)
        veg = Iri("http://example.org/generated/pizza#VegetableTopping")
        typed = [i for i, types in snapshot.individuals.items() if veg in types]
        names = {i.local_name for i in typed}
        assert names == {"Artichoke", "Mushroom", "Onion", "Tomatoe"}

    def test_empty_body_section_warns(self):
        doc = SourceDocument(
            title="Empty",
            sections=[Section(heading="s", body="", figure_captions=["zz qq"])],
        )
        result = run_pipeline(doc, RuleBasedCore(), PipelineConfig())
        assert result.report.sections[0].warnings
        assert len(result.merged) == 1  # header only

    def test_three_intermodal_documents_merge(self):
        docs = [
            load_document(FIXTURE_DIR / name)
            for name in ("faf_document.json", "ftot_document.json",
                         "optimization_document.json")
        ]
        from ontofreight.rdf import merge_graphs

        merged_modules = []
        for i, doc in enumerate(docs):
            config = PipelineConfig(base_iri=f"http://example.org/generated/m{i}")
            merged_modules.append(run_pipeline(doc, RuleBasedCore(), config).merged)
        combined = merge_graphs(merged_modules)
        assert len(combined) > sum(1 for _ in ())  # non-empty
        snapshot = extract_ontology_view(combined)
        assert len(snapshot.classes) >= 3


class TestLlmCore:
    def _core(self, handler):
        transport = httpx.MockTransport(handler)
        config = LlmCoreConfig(endpoint="http://llm.test/v1/chat", retries=0)
        return LlmCore(config, transport=transport)

    def test_extract_terms_parses_json_list(self):
        def handler(request):
            content = json.dumps(["Freight Hub", {"label": "Route",
                                                  "is_instance": True,
                                                  "instance_of": "Freight Hub"}])
            return httpx.Response(200, json={
                "choices": [{"message": {"content": content}}]})

        core = self._core(handler)
        proposals = core.extract_terms(_chunk(["x"]), "T", [])
        assert proposals[0].label == "Freight Hub"
        assert proposals[1].is_instance

    def test_non_json_response_raises_core_error(self):
        def handler(request):
            return httpx.Response(200, json={
                "choices": [{"message": {"content": "not json"}}]})

        with pytest.raises(CoreError):
            self._core(handler).extract_terms(_chunk(["x"]), "T", [])

    def test_http_failure_retries_then_raises(self):
        calls = {"n": 0}

        def handler(request):
            calls["n"] += 1
            return httpx.Response(500, text="boom")

        transport = httpx.MockTransport(handler)
        config = LlmCoreConfig(endpoint="http://llm.test/v1/chat", retries=2)
        core = LlmCore(config, transport=transport)
        with pytest.raises(CoreError):
            core.summarize_caption("caption")
        assert calls["n"] == 3

    def test_confirm_terms_filters_to_supplied(self):
        def handler(request):
            content = json.dumps(["Hub", "Invented"])
            return httpx.Response(200, json={
                "choices": [{"message": {"content": content}}]})

        core = self._core(handler)
        assert core.confirm_terms(["Hub"], Section("h", "hub text")) == ["Hub"]
