"""Ad-hoc (non-hierarchical) relation definition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..rdf.model import DATATYPES
from .core import ReasoningCore
from .glossary import GlossaryTerm
from .keys import lower_camel, normalize_key
from .taxonomy import TaxonomyEdge


@dataclass(frozen=True)
class AdHocRelation:
    name: str  # lowerCamelCase
    domain: str  # glossary key
    range: str  # glossary key, or datatype tag for kind == "attribute"
    kind: str = "associative"  # associative | attribute | adhoc


def define_adhoc_relations(
    glossary: Sequence[GlossaryTerm],
    taxonomy: Sequence[TaxonomyEdge],
    sentences: Sequence[str],
    core: ReasoningCore,
) -> List[AdHocRelation]:
    """Normalize and filter the core's relation proposals.

    Names become lowerCamelCase; hierarchical proposals (subClassOf, or a
    pair already present as a taxonomy edge) are rejected; domain and
    range must resolve to glossary keys (or a datatype for attributes);
    duplicates are removed. Result sorted by (name, domain, range).
    """
    keys = {t.key for t in glossary}
    hierarchy = {(e.child, e.parent) for e in taxonomy}
    proposals = core.propose_relations([t.label for t in glossary], list(sentences))

    relations = []
    seen = set()
    for proposal in proposals:
        name = lower_camel(proposal.name)
        if not name or name == "subClassOf":
            continue
        kind = proposal.kind if proposal.kind in ("associative", "attribute", "adhoc") \
            else "associative"
        domain = normalize_key(proposal.domain)
        if domain not in keys:
            continue
        if kind == "attribute":
            rng = proposal.range.strip().lower()
            if rng not in DATATYPES:
                continue
        else:
            rng = normalize_key(proposal.range)
            if rng not in keys:
                continue
            if (domain, rng) in hierarchy:
                continue
        signature = (name, domain, rng)
        if signature in seen:
            continue
        seen.add(signature)
        relations.append(AdHocRelation(name=name, domain=domain, range=rng, kind=kind))
    relations.sort(key=lambda r: (r.name, r.domain, r.range))
    return relations
