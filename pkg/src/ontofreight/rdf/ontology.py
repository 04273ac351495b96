"""Ontology-view extraction and subclass cycle checking."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .model import (
    OWL_CLASS,
    OWL_DATATYPE_PROPERTY,
    OWL_FUNCTIONAL_PROPERTY,
    OWL_NAMED_INDIVIDUAL,
    OWL_OBJECT_PROPERTY,
    RDF_TYPE,
    RDFS_DOMAIN,
    RDFS_LABEL,
    RDFS_RANGE,
    RDFS_SUBCLASSOF,
    DATATYPE_BY_XSD,
    DataProperty,
    Graph,
    Iri,
    Literal,
    ObjectProperty,
    OntologySnapshot,
)


def extract_ontology_view(graph: Graph) -> OntologySnapshot:
    """Build an :class:`OntologySnapshot` from OWL vocabulary assertions.

    Subclass edges whose endpoints are not declared classes are reported in
    ``warnings`` rather than raising; individual type assertions are kept
    only when the type is a declared class.
    """
    snapshot = OntologySnapshot()
    snapshot.classes = set(graph.subjects(RDF_TYPE, OWL_CLASS))

    for t in sorted(graph.triples, key=lambda t: (t.subject.value, t.predicate.value)):
        if t.predicate == RDFS_SUBCLASSOF and isinstance(t.object, Iri):
            if t.subject in snapshot.classes and t.object in snapshot.classes:
                snapshot.subclass_edges.add((t.subject, t.object))
            else:
                snapshot.warnings.append(
                    f"subclass edge with untyped endpoint: "
                    f"{t.subject.value} -> {t.object.value}"
                )
        elif t.predicate == RDFS_LABEL and isinstance(t.object, Literal):
            snapshot.labels[t.subject] = t.object.lexical

    functional = set(graph.subjects(RDF_TYPE, OWL_FUNCTIONAL_PROPERTY))
    for prop in graph.subjects(RDF_TYPE, OWL_OBJECT_PROPERTY):
        snapshot.object_properties.append(
            ObjectProperty(
                iri=prop,
                domain=_first_iri(graph, prop, RDFS_DOMAIN),
                range=_first_iri(graph, prop, RDFS_RANGE),
                functional=prop in functional,
            )
        )
    for prop in graph.subjects(RDF_TYPE, OWL_DATATYPE_PROPERTY):
        range_iri = _first_iri(graph, prop, RDFS_RANGE)
        snapshot.data_properties.append(
            DataProperty(
                iri=prop,
                domain=_first_iri(graph, prop, RDFS_DOMAIN),
                range=DATATYPE_BY_XSD.get(range_iri.value) if range_iri else None,
            )
        )

    named = set(graph.subjects(RDF_TYPE, OWL_NAMED_INDIVIDUAL))
    typed: dict = {ind: set() for ind in named}
    for t in graph.triples:
        if t.predicate == RDF_TYPE and t.object in snapshot.classes:
            typed.setdefault(t.subject, set()).add(t.object)
    snapshot.individuals = typed
    return snapshot


def _first_iri(graph: Graph, subject: Iri, predicate: Iri) -> Optional[Iri]:
    objs = [o for o in graph.objects(subject, predicate) if isinstance(o, Iri)]
    return objs[0] if objs else None


@dataclass
class CycleReport:
    ok: bool
    cycle: List[Iri]

    def __bool__(self) -> bool:
        return self.ok


def check_acyclic_subclasses(snapshot: OntologySnapshot) -> CycleReport:
    """Detect the first subclass cycle in deterministic order, if any.

    Iterative DFS over children sorted by IRI; the reported cycle starts at
    the smallest node where the back edge was found.
    """
    children: dict = {}
    for child, parent in snapshot.subclass_edges:
        children.setdefault(child, []).append(parent)
    for parents in children.values():
        parents.sort(key=lambda i: i.value)

    WHITE, GRAY, BLACK = 0, 1, 2
    color = {node: WHITE for node in children}
    for parents in children.values():
        for p in parents:
            color.setdefault(p, WHITE)

    for start in sorted(color, key=lambda i: i.value):
        if color[start] != WHITE:
            continue
        stack = [(start, iter(children.get(start, ())))]
        color[start] = GRAY
        path = [start]
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if color[nxt] == GRAY:
                    cycle = path[path.index(nxt):] + [nxt]
                    return CycleReport(ok=False, cycle=cycle[:-1])
                if color[nxt] == WHITE:
                    color[nxt] = GRAY
                    path.append(nxt)
                    stack.append((nxt, iter(children.get(nxt, ()))))
                    advanced = True
                    break
            if not advanced:
                color[node] = BLACK
                path.pop()
                stack.pop()
    return CycleReport(ok=True, cycle=[])
