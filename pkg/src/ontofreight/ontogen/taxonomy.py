"""Taxonomy construction: core proposals, orphan attachment, cycle breaking."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .core import ReasoningCore
from .glossary import GlossaryTerm
from .keys import normalize_key


@dataclass(frozen=True)
class TaxonomyEdge:
    child: str  # term key
    parent: str  # term key


def build_taxonomy(
    glossary: Sequence[GlossaryTerm],
    core: ReasoningCore,
    root_key: str,
) -> Tuple[List[TaxonomyEdge], List[TaxonomyEdge]]:
    """Superclass edges over the glossary's class terms.

    Core proposals are filtered to valid glossary keys, cycles are broken
    deterministically (drop the cycle edge whose child key sorts last),
    and any class left without a parent is attached to the document root.
    Returns (edges, broken_edges).
    """
    class_terms = [t for t in glossary if not t.is_individual]
    by_key = {t.key: t for t in class_terms}
    proposals = core.propose_taxonomy([t.label for t in class_terms])

    edges = []
    seen = set()
    for child_label, parent_label in proposals:
        child = normalize_key(str(child_label))
        parent = normalize_key(str(parent_label))
        if child == parent or child not in by_key or parent not in by_key:
            continue
        if (child, parent) not in seen:
            seen.add((child, parent))
            edges.append((child, parent))

    edges, broken = _break_cycles(edges)

    with_parent = {child for child, _ in edges}
    for term in sorted(class_terms, key=lambda t: t.key):
        if term.key not in with_parent and term.key != root_key:
            edges.append((term.key, root_key))

    return (
        [TaxonomyEdge(c, p) for c, p in edges],
        [TaxonomyEdge(c, p) for c, p in broken],
    )


def _break_cycles(edges: List[tuple]) -> Tuple[List[tuple], List[tuple]]:
    broken = []
    edges = list(edges)
    while True:
        cycle = _find_cycle(edges)
        if cycle is None:
            return edges, broken
        victim = max(cycle, key=lambda e: (e[0], e[1]))
        edges.remove(victim)
        broken.append(victim)


def _find_cycle(edges: List[tuple]):
    """First cycle (as its edge list) by DFS over sorted adjacency, or None."""
    parents: dict = {}
    for child, parent in edges:
        parents.setdefault(child, []).append(parent)
    for lst in parents.values():
        lst.sort()

    WHITE, GRAY, BLACK = 0, 1, 2
    color = {}
    for child, parent in edges:
        color.setdefault(child, WHITE)
        color.setdefault(parent, WHITE)

    def dfs(node, path):
        color[node] = GRAY
        path.append(node)
        for nxt in parents.get(node, ()):
            if color[nxt] == GRAY:
                start = path.index(nxt)
                cycle_nodes = path[start:]
                return [
                    (cycle_nodes[i], cycle_nodes[(i + 1) % len(cycle_nodes)])
                    for i in range(len(cycle_nodes))
                ]
            if color[nxt] == WHITE:
                found = dfs(nxt, path)
                if found:
                    return found
        color[node] = BLACK
        path.pop()
        return None

    for node in sorted(color):
        if color[node] == WHITE:
            found = dfs(node, [])
            if found:
                return found
    return None
