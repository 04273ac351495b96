"""OWL emission: turn pipeline artifacts into an RDF graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence

from ..rdf.model import (
    OWL_CLASS,
    OWL_DATATYPE_PROPERTY,
    OWL_NAMED_INDIVIDUAL,
    OWL_NS,
    OWL_OBJECT_PROPERTY,
    OWL_ONTOLOGY,
    RDF_NS,
    RDF_TYPE,
    RDFS_DOMAIN,
    RDFS_LABEL,
    RDFS_NS,
    RDFS_RANGE,
    XSD_BY_DATATYPE,
    XSD_NS,
    Graph,
    Iri,
    Literal,
    Triple,
)
from .glossary import GlossaryTerm
from .keys import pascal_case
from .relations import AdHocRelation
from .taxonomy import TaxonomyEdge


@dataclass
class IndividualSpec:
    label: str
    types: set = field(default_factory=set)  # class keys


class TaxonomyCycleError(ValueError):
    pass


def emit_owl(
    glossary: Sequence[GlossaryTerm],
    taxonomy: Sequence[TaxonomyEdge],
    relations: Sequence[AdHocRelation],
    individuals: Dict[str, IndividualSpec],
    base_iri: str,
    prefix_label: str = "onto",
) -> Graph:
    """Emit classes, subclass edges, properties, and typed individuals.

    IRIs are ``base_iri + '#' + PascalCase(key)`` for classes and
    individuals and lowerCamel names for properties. An rdfs:label is
    emitted only when the original label differs from the derived local
    name. The taxonomy must already be acyclic.
    """
    if _has_cycle(taxonomy):
        raise TaxonomyCycleError("taxonomy contains a cycle; break cycles upstream")

    ns = base_iri + "#"
    class_iri = {t.key: Iri(ns + pascal_case(t.key)) for t in glossary}
    triples = [Triple(Iri(base_iri), RDF_TYPE, OWL_ONTOLOGY)]

    for term in glossary:
        iri = class_iri[term.key]
        triples.append(Triple(iri, RDF_TYPE, OWL_CLASS))
        if term.label != iri.local_name:
            triples.append(Triple(iri, RDFS_LABEL, Literal(term.label)))

    for edge in taxonomy:
        child = class_iri.get(edge.child)
        parent = class_iri.get(edge.parent)
        if child is not None and parent is not None:
            triples.append(Triple(child, Iri(RDFS_NS + "subClassOf"), parent))

    for relation in relations:
        prop = Iri(ns + relation.name)
        if relation.kind == "attribute":
            triples.append(Triple(prop, RDF_TYPE, OWL_DATATYPE_PROPERTY))
            domain = class_iri.get(relation.domain)
            if domain is not None:
                triples.append(Triple(prop, RDFS_DOMAIN, domain))
            triples.append(
                Triple(prop, RDFS_RANGE, Iri(XSD_BY_DATATYPE[relation.range]))
            )
        else:
            triples.append(Triple(prop, RDF_TYPE, OWL_OBJECT_PROPERTY))
            domain = class_iri.get(relation.domain)
            rng = class_iri.get(relation.range)
            if domain is not None:
                triples.append(Triple(prop, RDFS_DOMAIN, domain))
            if rng is not None:
                triples.append(Triple(prop, RDFS_RANGE, rng))

    for key in sorted(individuals):
        spec = individuals[key]
        iri = Iri(ns + pascal_case(key))
        triples.append(Triple(iri, RDF_TYPE, OWL_NAMED_INDIVIDUAL))
        for type_key in sorted(spec.types):
            type_iri = class_iri.get(type_key)
            if type_iri is not None:
                triples.append(Triple(iri, RDF_TYPE, type_iri))
        if spec.label != iri.local_name:
            triples.append(Triple(iri, RDFS_LABEL, Literal(spec.label)))

    prefixes = {
        prefix_label: ns,
        "owl": OWL_NS,
        "rdf": RDF_NS,
        "rdfs": RDFS_NS,
        "xsd": XSD_NS,
    }
    return Graph(triples, prefixes)


def _has_cycle(taxonomy: Sequence[TaxonomyEdge]) -> bool:
    parents: dict = {}
    for edge in taxonomy:
        parents.setdefault(edge.child, set()).add(edge.parent)
    visited: dict = {}

    def walk(node) -> bool:
        state = visited.get(node)
        if state == 1:
            return True
        if state == 2:
            return False
        visited[node] = 1
        for nxt in parents.get(node, ()):
            if walk(nxt):
                return True
        visited[node] = 2
        return False

    return any(walk(node) for node in list(parents))
