"""Validation of a generated ontology against a reference domain ontology."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple

from ..rdf.model import Iri, OntologySnapshot
from .keys import normalize_key, split_words


@dataclass
class MappingReport:
    mapped: List[Tuple[str, Iri]] = field(default_factory=list)
    unmapped: List[str] = field(default_factory=list)
    conflicts: List[Tuple[str, str]] = field(default_factory=list)


def _key_words(iri: Iri) -> tuple:
    return tuple(normalize_key(iri.local_name).split())


def _keys_match(a: tuple, b: tuple) -> bool:
    """Equal keys, or one equals the other plus one extra head token."""
    if a == b:
        return True
    return a == b[:-1] or b == a[:-1]


def validate_against_domain(
    candidate: OntologySnapshot, reference: OntologySnapshot
) -> MappingReport:
    """Map candidate classes onto reference classes by normalized key.

    A conflict is recorded when a candidate's parent maps into the
    reference but the candidate's own mapping falls outside that mapped
    parent's subtree. Output ordering is deterministic (sorted by key).
    """
    report = MappingReport()
    ref_classes = sorted(reference.classes, key=lambda i: i.value)
    ref_words = [(_key_words(c), c) for c in ref_classes]

    mapping: dict = {}
    for cls in sorted(candidate.classes, key=lambda i: i.value):
        key = normalize_key(cls.local_name)
        words = tuple(key.split())
        target = None
        for rwords, ref in ref_words:
            if _keys_match(words, rwords):
                target = ref
                break
        if target is None:
            report.unmapped.append(key)
        else:
            report.mapped.append((key, target))
            mapping[cls] = target

    children: dict = {}
    for child, parent in reference.subclass_edges:
        children.setdefault(parent, set()).add(child)

    def subtree(node: Iri) -> set:
        seen = {node}
        frontier = [node]
        while frontier:
            current = frontier.pop()
            for nxt in children.get(current, ()):
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return seen

    for child, parent in sorted(
        candidate.subclass_edges, key=lambda e: (e[0].value, e[1].value)
    ):
        mapped_child = mapping.get(child)
        mapped_parent = mapping.get(parent)
        if mapped_child is None or mapped_parent is None:
            continue
        if mapped_child not in subtree(mapped_parent):
            report.conflicts.append(
                (
                    normalize_key(child.local_name),
                    f"maps to {mapped_child.value}, outside the subtree of "
                    f"{mapped_parent.value} (mapped parent of "
                    f"{normalize_key(parent.local_name)!r})",
                )
            )
    return report
