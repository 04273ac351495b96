"""In-memory RDF triple store: terms, Turtle I/O, matching, ontology views."""

from .model import (
    DATATYPES,
    OWL_NS,
    RDF_NS,
    RDFS_NS,
    XSD_NS,
    DataProperty,
    Graph,
    Iri,
    Literal,
    ObjectProperty,
    OntologySnapshot,
    Term,
    Triple,
)
from .ontology import CycleReport, check_acyclic_subclasses, extract_ontology_view
from .store import GraphStore, PrefixConflictError, match, merge_graphs
from .turtle import TurtleParseError, parse_turtle, serialize_turtle

__all__ = [
    "DATATYPES",
    "OWL_NS",
    "RDF_NS",
    "RDFS_NS",
    "XSD_NS",
    "CycleReport",
    "DataProperty",
    "Graph",
    "GraphStore",
    "Iri",
    "Literal",
    "ObjectProperty",
    "OntologySnapshot",
    "PrefixConflictError",
    "Term",
    "Triple",
    "TurtleParseError",
    "check_acyclic_subclasses",
    "extract_ontology_view",
    "match",
    "merge_graphs",
    "parse_turtle",
    "serialize_turtle",
]
