"""Query evaluation: nested-loop joins, left-join OPTIONAL, zero-or-more paths."""

from __future__ import annotations

from typing import Dict, List, Optional, Union

from ..rdf.model import Graph, Iri, Literal, Term, term_sort_key
from .ast import (
    Node,
    OptionalGroup,
    Path,
    PName,
    Query,
    ResultTable,
    TriplePattern,
    Var,
)


class UnknownPrefixError(ValueError):
    pass


Binding = Dict[str, Term]


def _expand(node: Union[Node, Path], prefixes: dict) -> Union[Term, Var, Path]:
    if isinstance(node, PName):
        ns = prefixes.get(node.prefix)
        if ns is None:
            raise UnknownPrefixError(f"unknown prefix {node.prefix!r}")
        return Iri(ns + node.local)
    if isinstance(node, Path):
        inner = _expand(node.predicate, prefixes)
        return Path(inner)
    return node


def _resolve(slot, binding: Binding):
    """Concrete term for a slot under the binding, or the free Var."""
    if isinstance(slot, Var):
        return binding.get(slot.name, slot)
    return slot


def evaluate(query: Query, graph: Graph) -> ResultTable:
    """Evaluate a parsed query against a graph snapshot.

    Conjunctive patterns join left to right with binding propagation;
    OPTIONAL groups left-join; DISTINCT deduplicates; rows come back in a
    canonical sort over the projected bindings.
    """
    solutions: List[Binding] = [{}]
    for element in query.pattern:
        if isinstance(element, OptionalGroup):
            solutions = _apply_optional(element, solutions, query.prefixes, graph)
        else:
            solutions = _apply_pattern(element, solutions, query.prefixes, graph)

    columns = query.select_vars or query.pattern_variables()
    rows = [{name: sol.get(name) for name in columns} for sol in solutions]
    if query.distinct:
        seen = set()
        unique = []
        for row in rows:
            key = tuple(_cell_key(row[name]) for name in columns)
            if key not in seen:
                seen.add(key)
                unique.append(row)
        rows = unique
    rows.sort(key=lambda row: tuple(_cell_key(row[name]) for name in columns))
    return ResultTable(list(columns), rows)


def _cell_key(term: Optional[Term]):
    if term is None:
        return (2, "", "", "")
    return term_sort_key(term)


def _apply_pattern(
    pattern: TriplePattern, solutions: List[Binding], prefixes: dict, graph: Graph
) -> List[Binding]:
    out: List[Binding] = []
    s_slot = _expand(pattern.subject, prefixes)
    p_slot = _expand(pattern.predicate, prefixes)
    o_slot = _expand(pattern.object, prefixes)
    for sol in solutions:
        out.extend(_extend(sol, s_slot, p_slot, o_slot, graph))
    return out


def _apply_optional(
    group: OptionalGroup, solutions: List[Binding], prefixes: dict, graph: Graph
) -> List[Binding]:
    out: List[Binding] = []
    for sol in solutions:
        extensions = [sol]
        for pattern in group.patterns:
            s_slot = _expand(pattern.subject, prefixes)
            p_slot = _expand(pattern.predicate, prefixes)
            o_slot = _expand(pattern.object, prefixes)
            nxt: List[Binding] = []
            for ext in extensions:
                nxt.extend(_extend(ext, s_slot, p_slot, o_slot, graph))
            extensions = nxt
            if not extensions:
                break
        out.extend(extensions if extensions else [sol])
    return out


def _extend(sol: Binding, s_slot, p_slot, o_slot, graph: Graph) -> List[Binding]:
    if isinstance(p_slot, Path):
        return _extend_path(sol, s_slot, p_slot.predicate, o_slot, graph)

    results = []
    for t in graph.triples:
        ext = dict(sol)
        if (
            _bind(ext, s_slot, t.subject)
            and _bind(ext, p_slot, t.predicate)
            and _bind(ext, o_slot, t.object)
        ):
            results.append(ext)
    return results


def _bind(binding: Binding, slot, value: Term) -> bool:
    """Unify one slot with a concrete term, extending the binding in place."""
    if isinstance(slot, Var):
        bound = binding.get(slot.name)
        if bound is None:
            binding[slot.name] = value
            return True
        return bound == value
    return slot == value


def _graph_nodes(graph: Graph) -> set:
    nodes = set()
    for t in graph.triples:
        nodes.add(t.subject)
        nodes.add(t.object)
    return nodes


def _edges(graph: Graph, predicate: Iri) -> dict:
    forward: dict = {}
    for t in graph.triples:
        if t.predicate == predicate:
            forward.setdefault(t.subject, set()).add(t.object)
    return forward


def _closure(start: Term, forward: dict) -> set:
    """Transitive-reflexive closure from start over the edge map."""
    seen = {start}
    frontier = [start]
    while frontier:
        node = frontier.pop()
        for nxt in forward.get(node, ()):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def _extend_path(
    sol: Binding, s_slot, predicate: Iri, o_slot, graph: Graph
) -> List[Binding]:
    s = _resolve(s_slot, sol)
    o = _resolve(o_slot, sol)
    forward = _edges(graph, predicate)
    results = []

    if not isinstance(s, Var) and not isinstance(o, Var):
        if o in _closure(s, forward):
            results.append(dict(sol))
    elif not isinstance(s, Var):
        for target in sorted(_closure(s, forward), key=term_sort_key):
            ext = dict(sol)
            ext[o.name] = target
            results.append(ext)
    elif not isinstance(o, Var):
        backward: dict = {}
        for src, targets in forward.items():
            for dst in targets:
                backward.setdefault(dst, set()).add(src)
        for source in sorted(_closure(o, backward), key=term_sort_key):
            ext = dict(sol)
            ext[s.name] = source
            results.append(ext)
    else:
        # Both free: zero-length pairs for every graph node plus the
        # transitive pairs over the predicate's edges.
        pairs = {(n, n) for n in _graph_nodes(graph)}
        for src in forward:
            for dst in _closure(src, forward):
                pairs.add((src, dst))
        for src, dst in sorted(pairs, key=lambda p: (term_sort_key(p[0]), term_sort_key(p[1]))):
            ext = dict(sol)
            if s.name == o.name:
                if src != dst:
                    continue
                ext[s.name] = src
            else:
                ext[s.name] = src
                ext[o.name] = dst
            results.append(ext)
    return results
