"""Term and graph model for the in-memory triple store.

Graphs are immutable once built: the triple set is a frozenset and callers
must treat the prefix map as read-only. All list-producing operations sort
by the textual form of (subject, predicate, object) so outputs are stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Union

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"

#: Datatype tags supported by :class:`Literal`.
DATATYPES = ("string", "integer", "decimal", "boolean", "datetime")

XSD_BY_DATATYPE = {
    "string": XSD_NS + "string",
    "integer": XSD_NS + "integer",
    "decimal": XSD_NS + "decimal",
    "boolean": XSD_NS + "boolean",
    "datetime": XSD_NS + "dateTime",
}
DATATYPE_BY_XSD = {v: k for k, v in XSD_BY_DATATYPE.items()}


@dataclass(frozen=True, order=True)
class Iri:
    """An absolute IRI. Must be non-empty and contain no whitespace."""

    value: str

    def __post_init__(self) -> None:
        if not self.value:
            raise ValueError("IRI must be non-empty")
        if any(c.isspace() for c in self.value):
            raise ValueError(f"IRI may not contain whitespace: {self.value!r}")

    @property
    def local_name(self) -> str:
        """Text after the last '#' or '/' separator."""
        for sep in ("#", "/"):
            if sep in self.value:
                return self.value.rsplit(sep, 1)[1]
        return self.value

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Literal:
    """A typed literal. Language tags are only valid on strings."""

    lexical: str
    datatype: str = "string"
    language: Optional[str] = None

    def __post_init__(self) -> None:
        if self.datatype not in DATATYPES:
            raise ValueError(f"unknown literal datatype: {self.datatype!r}")
        if self.language is not None and self.datatype != "string":
            raise ValueError("language tag only allowed on string literals")
        _validate_lexical(self.lexical, self.datatype)

    def __str__(self) -> str:
        return self.lexical


def _validate_lexical(lexical: str, datatype: str) -> None:
    try:
        if datatype == "integer":
            int(lexical)
        elif datatype == "decimal":
            float(lexical)
        elif datatype == "boolean":
            if lexical not in ("true", "false"):
                raise ValueError
        elif datatype == "datetime":
            from datetime import datetime

            datetime.fromisoformat(lexical)
    except ValueError:
        raise ValueError(
            f"lexical form {lexical!r} is not valid for datatype {datatype}"
        ) from None


Term = Union[Iri, Literal]


@dataclass(frozen=True)
class Triple:
    subject: Iri
    predicate: Iri
    object: Term

    def __post_init__(self) -> None:
        if not isinstance(self.subject, Iri):
            raise TypeError("triple subject must be an Iri")
        if not isinstance(self.predicate, Iri):
            raise TypeError("triple predicate must be an Iri")
        if not isinstance(self.object, (Iri, Literal)):
            raise TypeError("triple object must be an Iri or Literal")


def term_sort_key(term: Term) -> tuple:
    """Stable ordering: IRIs before literals, then by text."""
    if isinstance(term, Iri):
        return (0, term.value, "", "")
    return (1, term.lexical, term.datatype, term.language or "")


def triple_sort_key(t: Triple) -> tuple:
    return (t.subject.value, t.predicate.value, term_sort_key(t.object))


class Graph:
    """An immutable set of triples plus a prefix map.

    Duplicate triples are silently deduplicated (set semantics).
    """

    __slots__ = ("_triples", "_prefixes")

    def __init__(
        self,
        triples: Iterable[Triple] = (),
        prefixes: Optional[Mapping[str, str]] = None,
    ) -> None:
        self._triples = frozenset(triples)
        self._prefixes = dict(prefixes or {})

    @property
    def triples(self) -> frozenset:
        return self._triples

    @property
    def prefixes(self) -> dict:
        return dict(self._prefixes)

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self):
        return iter(sorted(self._triples, key=triple_sort_key))

    def __contains__(self, triple: Triple) -> bool:
        return triple in self._triples

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    def __hash__(self) -> int:
        return hash(self._triples)

    def __repr__(self) -> str:
        return f"Graph({len(self._triples)} triples, {len(self._prefixes)} prefixes)"

    def subjects(self, predicate: Optional[Iri] = None, obj: Optional[Term] = None):
        """Distinct subjects of triples matching the given predicate/object."""
        seen = set()
        for t in self._triples:
            if predicate is not None and t.predicate != predicate:
                continue
            if obj is not None and t.object != obj:
                continue
            seen.add(t.subject)
        return sorted(seen, key=term_sort_key)

    def objects(self, subject: Optional[Iri] = None, predicate: Optional[Iri] = None):
        """Distinct objects of triples matching the given subject/predicate."""
        seen = set()
        for t in self._triples:
            if subject is not None and t.subject != subject:
                continue
            if predicate is not None and t.predicate != predicate:
                continue
            seen.add(t.object)
        return sorted(seen, key=term_sort_key)


@dataclass
class OntologySnapshot:
    """Extracted ontology view: classes, hierarchy, properties, individuals.

    ``subclass_edges`` holds (child, parent) pairs whose endpoints are both
    declared classes; edges with untyped endpoints are listed in ``warnings``
    instead of failing the extraction.
    """

    classes: set = field(default_factory=set)
    subclass_edges: set = field(default_factory=set)
    object_properties: list = field(default_factory=list)
    data_properties: list = field(default_factory=list)
    individuals: dict = field(default_factory=dict)
    labels: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)


@dataclass(frozen=True)
class ObjectProperty:
    iri: Iri
    domain: Optional[Iri] = None
    range: Optional[Iri] = None
    functional: bool = False


@dataclass(frozen=True)
class DataProperty:
    iri: Iri
    domain: Optional[Iri] = None
    range: Optional[str] = None  # datatype tag


# Frequently used vocabulary terms.
RDF_TYPE = Iri(RDF_NS + "type")
RDFS_SUBCLASSOF = Iri(RDFS_NS + "subClassOf")
RDFS_LABEL = Iri(RDFS_NS + "label")
RDFS_DOMAIN = Iri(RDFS_NS + "domain")
RDFS_RANGE = Iri(RDFS_NS + "range")
OWL_CLASS = Iri(OWL_NS + "Class")
OWL_OBJECT_PROPERTY = Iri(OWL_NS + "ObjectProperty")
OWL_DATATYPE_PROPERTY = Iri(OWL_NS + "DatatypeProperty")
OWL_FUNCTIONAL_PROPERTY = Iri(OWL_NS + "FunctionalProperty")
OWL_NAMED_INDIVIDUAL = Iri(OWL_NS + "NamedIndividual")
OWL_ONTOLOGY = Iri(OWL_NS + "Ontology")
