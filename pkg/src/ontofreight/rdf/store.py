"""Pattern matching, graph merging, and a snapshot-read named-graph store."""

from __future__ import annotations

import threading
from typing import Iterable, List, Optional

from .model import Graph, Iri, Term, Triple, triple_sort_key


class PrefixConflictError(ValueError):
    """Two graphs bind the same prefix label to different namespaces."""


def match(
    graph: Graph,
    subject: Optional[Iri] = None,
    predicate: Optional[Iri] = None,
    obj: Optional[Term] = None,
) -> List[Triple]:
    """All triples consistent with the bound slots, in canonical sorted order.

    ``None`` is a wildcard; an all-wildcard pattern returns every triple.
    """
    found = [
        t
        for t in graph.triples
        if (subject is None or t.subject == subject)
        and (predicate is None or t.predicate == predicate)
        and (obj is None or t.object == obj)
    ]
    found.sort(key=triple_sort_key)
    return found


def merge_graphs(graphs: Iterable[Graph]) -> Graph:
    """Union of triple sets and prefix maps.

    Idempotent and order-independent. Raises :class:`PrefixConflictError`
    when the same prefix label is bound to different namespaces.
    """
    triples: set = set()
    prefixes: dict = {}
    for g in graphs:
        triples.update(g.triples)
        for label, ns in g.prefixes.items():
            bound = prefixes.get(label)
            if bound is not None and bound != ns:
                raise PrefixConflictError(
                    f"prefix {label!r} bound to both <{bound}> and <{ns}>"
                )
            prefixes[label] = ns
    return Graph(triples, prefixes)


class GraphStore:
    """Named-graph store with snapshot reads and serialized replacement.

    Graphs are immutable, so readers hold a consistent snapshot while a
    single writer swaps in replacements under the lock.
    """

    def __init__(self) -> None:
        self._graphs: dict = {}
        self._lock = threading.Lock()

    def put(self, name: str, graph: Graph) -> None:
        with self._lock:
            self._graphs = {**self._graphs, name: graph}

    def get(self, name: str) -> Graph:
        graph = self._graphs.get(name)
        if graph is None:
            raise KeyError(f"no graph named {name!r}")
        return graph

    def names(self) -> List[str]:
        return sorted(self._graphs)

    def __contains__(self, name: str) -> bool:
        return name in self._graphs
