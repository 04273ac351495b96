"""Matching, merging, ontology views, and cycle checking."""

import random

import pytest

from ontofreight.rdf import (
    Graph,
    GraphStore,
    Iri,
    OntologySnapshot,
    PrefixConflictError,
    Triple,
    check_acyclic_subclasses,
    extract_ontology_view,
    match,
    merge_graphs,
    parse_turtle,
)

EX = "http://x/"


def _t(s, p, o):
    return Triple(Iri(EX + s), Iri(EX + p), Iri(EX + o))


def test_match_empty_graph():
    assert match(Graph(), None, None, None) == []


def test_match_bound_subject():
    graph = Graph([_t("a", "p", "b")])
    assert match(graph, subject=Iri(EX + "a")) == [_t("a", "p", "b")]
    assert match(graph, subject=Iri(EX + "zz")) == []


def test_match_all_wildcards_returns_every_triple():
    triples = [_t("a", "p", "b"), _t("b", "p", "c"), _t("a", "q", "c")]
    graph = Graph(triples)
    assert len(match(graph)) == len(graph)


def test_match_sorted_canonically():
    graph = Graph([_t("b", "p", "c"), _t("a", "q", "c"), _t("a", "p", "b")])
    found = match(graph)
    keys = [(t.subject.value, t.predicate.value) for t in found]
    assert keys == sorted(keys)


def test_merge_identity_and_union():
    g1 = Graph([_t("a", "p", "b")], {"ex": EX})
    assert merge_graphs([g1]) == g1
    g2 = Graph([_t("b", "p", "c")], {"ex": EX})
    merged = merge_graphs([g1, g2])
    assert len(merged) == 2
    assert len(merged) <= len(g1) + len(g2)


def test_merge_idempotent_commutative_associative():
    g1 = Graph([_t("a", "p", "b"), _t("x", "p", "y")])
    g2 = Graph([_t("b", "p", "c")])
    g3 = Graph([_t("a", "p", "b"), _t("c", "p", "d")])
    assert merge_graphs([g1, g1]) == g1
    assert merge_graphs([g1, g2]) == merge_graphs([g2, g1])
    assert merge_graphs([merge_graphs([g1, g2]), g3]) == merge_graphs(
        [g1, merge_graphs([g2, g3])]
    )


def test_merge_prefix_conflict():
    g1 = Graph([], {"ex": "http://one/"})
    g2 = Graph([], {"ex": "http://two/"})
    with pytest.raises(PrefixConflictError):
        merge_graphs([g1, g2])


def test_extract_empty_graph():
    snapshot = extract_ontology_view(Graph())
    assert snapshot.classes == set()
    assert snapshot.subclass_edges == set()
    assert snapshot.individuals == {}


def test_extract_view_classes_and_individuals():
    text = """
    @prefix ex: <http://x/> .
    @prefix owl: <http://www.w3.org/2002/07/owl#> .
    @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
    ex:Food a owl:Class .
    ex:Topping a owl:Class ; rdfs:subClassOf ex:Food ; rdfs:label "Topping" .
    ex:Mystery rdfs:subClassOf ex:Unknown .
    ex:Olive a owl:NamedIndividual , ex:Topping .
    ex:hasTopping a owl:ObjectProperty ; rdfs:domain ex:Food ; rdfs:range ex:Topping .
    ex:weight a owl:DatatypeProperty ; rdfs:domain ex:Topping ;
        rdfs:range <http://www.w3.org/2001/XMLSchema#decimal> .
    """
    snapshot = extract_ontology_view(parse_turtle(text))
    assert snapshot.classes == {Iri("http://x/Food"), Iri("http://x/Topping")}
    assert snapshot.subclass_edges == {(Iri("http://x/Topping"), Iri("http://x/Food"))}
    assert snapshot.labels[Iri("http://x/Topping")] == "Topping"
    assert snapshot.individuals == {Iri("http://x/Olive"): {Iri("http://x/Topping")}}
    assert any("untyped" in w for w in snapshot.warnings)
    (obj_prop,) = snapshot.object_properties
    assert obj_prop.domain == Iri("http://x/Food")
    assert not obj_prop.functional
    (data_prop,) = snapshot.data_properties
    assert data_prop.range == "decimal"
    # View never invents IRIs that are absent from the graph.
    graph_iris = set()
    for t in parse_turtle(text).triples:
        graph_iris.add(t.subject)
        if isinstance(t.object, Iri):
            graph_iris.add(t.object)
        graph_iris.add(t.predicate)
    mentioned = set(snapshot.classes) | {i for i in snapshot.individuals}
    assert mentioned <= graph_iris


def test_cycle_check_empty_ok():
    assert check_acyclic_subclasses(OntologySnapshot()).ok


def test_cycle_check_two_cycle():
    snapshot = OntologySnapshot()
    a, b = Iri(EX + "A"), Iri(EX + "B")
    snapshot.classes = {a, b}
    snapshot.subclass_edges = {(a, b), (b, a)}
    report = check_acyclic_subclasses(snapshot)
    assert not report.ok
    assert set(report.cycle) == {a, b}


def _oracle_has_cycle(edges) -> bool:
    # Independent detector: Kahn's algorithm.
    nodes = {n for e in edges for n in e}
    indegree = {n: 0 for n in nodes}
    adj = {n: [] for n in nodes}
    for child, parent in edges:
        adj[child].append(parent)
        indegree[parent] += 1
    queue = [n for n in nodes if indegree[n] == 0]
    seen = 0
    while queue:
        node = queue.pop()
        seen += 1
        for nxt in adj[node]:
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                queue.append(nxt)
    return seen != len(nodes)


@pytest.mark.parametrize("seed", range(40))
def test_cycle_checker_agrees_with_kahn_oracle(seed):
    rng = random.Random(seed)
    n = rng.randrange(2, 12)
    nodes = [Iri(EX + f"C{i}") for i in range(n)]
    edges = set()
    for _ in range(rng.randrange(0, 2 * n)):
        a, b = rng.sample(range(n), 2)
        if rng.random() < 0.8:
            a, b = min(a, b), max(a, b)  # mostly forward edges -> often acyclic
        edges.add((nodes[a], nodes[b]))
    snapshot = OntologySnapshot()
    snapshot.classes = set(nodes)
    snapshot.subclass_edges = edges
    report = check_acyclic_subclasses(snapshot)
    assert report.ok == (not _oracle_has_cycle(edges))
    if not report.ok:
        cycle = report.cycle
        for i, node in enumerate(cycle):
            assert (node, cycle[(i + 1) % len(cycle)]) in edges


def test_store_snapshot_reads():
    store = GraphStore()
    g1 = Graph([_t("a", "p", "b")])
    store.put("main", g1)
    snapshot = store.get("main")
    store.put("main", Graph([_t("x", "p", "y")]))
    assert snapshot == g1
    assert store.get("main") != g1
    with pytest.raises(KeyError):
        store.get("missing")
