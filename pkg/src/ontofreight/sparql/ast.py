"""Query AST: variables, prefixed names, patterns, result tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Union

from ..rdf.model import Iri, Literal, Term


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return f"?{self.name}"


@dataclass(frozen=True)
class PName:
    """A prefixed name left unexpanded until evaluation."""

    prefix: str
    local: str

    def __str__(self) -> str:
        return f"{self.prefix}:{self.local}"


@dataclass(frozen=True)
class Path:
    """Zero-or-more path over a concrete predicate (``pred*``)."""

    predicate: Union[Iri, PName]


Node = Union[Var, Iri, PName, Literal]


@dataclass(frozen=True)
class TriplePattern:
    subject: Node
    predicate: Union[Node, Path]
    object: Node

    def variables(self) -> List[str]:
        out = []
        for slot in (self.subject, self.predicate, self.object):
            if isinstance(slot, Var):
                out.append(slot.name)
        return out


@dataclass(frozen=True)
class OptionalGroup:
    patterns: tuple  # of TriplePattern

    def variables(self) -> List[str]:
        out = []
        for p in self.patterns:
            out.extend(p.variables())
        return out


PatternElement = Union[TriplePattern, OptionalGroup]


@dataclass
class Query:
    prefixes: dict
    select_vars: Optional[List[str]]  # None means SELECT *
    distinct: bool
    pattern: List[PatternElement]

    def pattern_variables(self) -> List[str]:
        """Variables in order of first appearance across the pattern."""
        seen: List[str] = []
        for element in self.pattern:
            for name in element.variables():
                if name not in seen:
                    seen.append(name)
        return seen


@dataclass
class ResultTable:
    columns: List[str]
    rows: List[dict] = field(default_factory=list)  # var name -> Term or None

    def __len__(self) -> int:
        return len(self.rows)

    def column(self, name: str) -> List[Optional[Term]]:
        return [row.get(name) for row in self.rows]
