"""Parser for the SPARQL subset used by the competency-question suites.

Supported: PREFIX declarations, SELECT (optionally DISTINCT) with explicit
variables or ``*``, basic graph patterns, OPTIONAL groups, ``a`` shorthand,
and the zero-or-more path modifier ``*`` on a concrete predicate.
"""

from __future__ import annotations

import re
from typing import List, Optional, Union

from ..rdf.model import Iri, Literal
from .ast import Node, OptionalGroup, Path, PName, Query, TriplePattern, Var


class QueryParseError(ValueError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<iriref><[^<>"{}|^`\\\s]*>)
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<var>\?[A-Za-z_][A-Za-z0-9_]*)
  | (?P<langtag>@[A-Za-z][A-Za-z0-9-]*)
  | (?P<dtmarker>\^\^)
  | (?P<number>[+-]?(?:\d+\.\d+|\.\d+|\d+))
  | (?P<punct>[.{}*;,])
  | (?P<pname>[A-Za-z_][A-Za-z0-9_.-]*)?:(?P<plocal>[A-Za-z0-9_]
        (?:[A-Za-z0-9_.-]*[A-Za-z0-9_-])?)?
  | (?P<word>[A-Za-z][A-Za-z0-9_-]*)
    """,
    re.VERBOSE,
)


class _Token:
    __slots__ = ("kind", "value", "line", "column")

    def __init__(self, kind: str, value, line: int, column: int) -> None:
        self.kind = kind
        self.value = value
        self.line = line
        self.column = column


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise QueryParseError(
                f"unexpected character {text[pos]!r}", line, pos - line_start + 1
            )
        col = pos - line_start + 1
        kind = m.lastgroup
        raw = m.group(0)
        if kind not in ("ws", "comment"):
            if kind == "iriref":
                tokens.append(_Token("iri", raw[1:-1], line, col))
            elif kind == "string":
                tokens.append(_Token("string", raw[1:-1], line, col))
            elif kind == "var":
                tokens.append(_Token("var", raw[1:], line, col))
            elif kind == "langtag":
                tokens.append(_Token("langtag", raw[1:], line, col))
            elif kind == "punct":
                tokens.append(_Token(raw, raw, line, col))
            elif kind in ("number", "word"):
                tokens.append(_Token(kind, raw, line, col))
            else:  # prefixed name (the local-part group may win lastgroup)
                tokens.append(
                    _Token("pname", (m.group("pname") or "", m.group("plocal") or ""),
                           line, col)
                )
        if "\n" in raw:
            line += raw.count("\n")
            line_start = pos + raw.rindex("\n") + 1
        pos = m.end()
    return tokens


class _QueryParser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self) -> Optional[_Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self, expected: str) -> _Token:
        tok = self._peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else _Token("", "", 1, 1)
            raise QueryParseError(
                f"expected {expected}, found end of input", last.line, last.column
            )
        self.pos += 1
        return tok

    def _keyword(self, tok: _Token) -> str:
        return tok.value.upper() if tok.kind == "word" else ""

    def parse(self) -> Query:
        prefixes: dict = {}
        tok = self._peek()
        while tok is not None and self._keyword(tok) == "PREFIX":
            self.pos += 1
            label_tok = self._next("prefix label")
            if label_tok.kind != "pname" or label_tok.value[1]:
                raise QueryParseError(
                    "expected prefix label ending in ':'",
                    label_tok.line, label_tok.column,
                )
            iri_tok = self._next("namespace IRI")
            if iri_tok.kind != "iri":
                raise QueryParseError(
                    "expected namespace IRI", iri_tok.line, iri_tok.column
                )
            prefixes[label_tok.value[0]] = iri_tok.value
            tok = self._peek()

        sel = self._next("SELECT")
        if self._keyword(sel) != "SELECT":
            raise QueryParseError("expected SELECT", sel.line, sel.column)

        distinct = False
        tok = self._peek()
        if tok is not None and self._keyword(tok) == "DISTINCT":
            distinct = True
            self.pos += 1

        select_vars: Optional[List[str]] = None
        tok = self._peek()
        if tok is not None and tok.kind == "*":
            self.pos += 1
        else:
            select_vars = []
            while True:
                tok = self._peek()
                if tok is None or tok.kind != "var":
                    break
                select_vars.append(tok.value)
                self.pos += 1
            if not select_vars:
                raise QueryParseError(
                    "expected projection variables or '*'",
                    sel.line, sel.column,
                )

        where = self._next("WHERE")
        if self._keyword(where) != "WHERE":
            raise QueryParseError("expected WHERE", where.line, where.column)
        brace = self._next("'{'")
        if brace.kind != "{":
            raise QueryParseError("expected '{'", brace.line, brace.column)

        pattern = self._parse_group(allow_optional=True)
        if not pattern:
            raise QueryParseError(
                "pattern must contain at least one element", brace.line, brace.column
            )

        query = Query(prefixes, select_vars, distinct, pattern)
        if select_vars is not None:
            available = set(query.pattern_variables())
            for name in select_vars:
                if name not in available:
                    raise QueryParseError(
                        f"projected variable ?{name} does not appear in the pattern",
                        sel.line, sel.column,
                    )
        return query

    def _parse_group(self, allow_optional: bool) -> list:
        elements: list = []
        while True:
            tok = self._peek()
            if tok is None:
                raise QueryParseError(
                    "unterminated group: expected '}'",
                    self.tokens[-1].line, self.tokens[-1].column,
                )
            if tok.kind == "}":
                self.pos += 1
                return elements
            if self._keyword(tok) == "OPTIONAL":
                if not allow_optional:
                    raise QueryParseError(
                        "nested OPTIONAL is not supported", tok.line, tok.column
                    )
                self.pos += 1
                brace = self._next("'{'")
                if brace.kind != "{":
                    raise QueryParseError(
                        "expected '{' after OPTIONAL", brace.line, brace.column
                    )
                inner = self._parse_group(allow_optional=False)
                if not inner:
                    raise QueryParseError(
                        "OPTIONAL group may not be empty", brace.line, brace.column
                    )
                elements.append(OptionalGroup(tuple(inner)))
                continue
            elements.append(self._parse_triple_pattern())

    def _parse_triple_pattern(self) -> TriplePattern:
        subject = self._parse_node("subject", allow_literal=False)
        predicate = self._parse_predicate()
        obj = self._parse_node("object", allow_literal=True)
        tok = self._peek()
        if tok is not None and tok.kind == ".":
            self.pos += 1
        return TriplePattern(subject, predicate, obj)

    def _parse_predicate(self) -> Union[Node, Path]:
        tok = self._next("predicate")
        if tok.kind == "word" and tok.value == "a":
            from ..rdf.model import RDF_TYPE

            return RDF_TYPE
        if tok.kind == "var":
            nxt = self._peek()
            if nxt is not None and nxt.kind == "*":
                raise QueryParseError(
                    "path modifier '*' requires a concrete predicate IRI",
                    nxt.line, nxt.column,
                )
            return Var(tok.value)
        if tok.kind in ("iri", "pname"):
            base = self._node_from(tok)
            nxt = self._peek()
            if nxt is not None and nxt.kind == "*":
                self.pos += 1
                return Path(base)
            return base
        raise QueryParseError(
            f"expected predicate, found {tok.value!r}", tok.line, tok.column
        )

    def _parse_node(self, role: str, allow_literal: bool) -> Node:
        tok = self._next(role)
        if tok.kind == "var":
            return Var(tok.value)
        if tok.kind in ("iri", "pname"):
            return self._node_from(tok)
        if allow_literal:
            if tok.kind == "number":
                datatype = "decimal" if "." in tok.value else "integer"
                return Literal(tok.value, datatype)
            if tok.kind == "word" and tok.value in ("true", "false"):
                return Literal(tok.value, "boolean")
            if tok.kind == "string":
                nxt = self._peek()
                if nxt is not None and nxt.kind == "langtag":
                    self.pos += 1
                    return Literal(tok.value, "string", nxt.value)
                if nxt is not None and nxt.kind == "dtmarker":
                    self.pos += 1
                    dt = self._next("datatype IRI")
                    from ..rdf.model import DATATYPE_BY_XSD

                    if dt.kind == "iri" and dt.value in DATATYPE_BY_XSD:
                        return Literal(tok.value, DATATYPE_BY_XSD[dt.value])
                    return Literal(tok.value, "string")
                return Literal(tok.value, "string")
        raise QueryParseError(
            f"expected {role} term, found {tok.value!r}", tok.line, tok.column
        )

    def _node_from(self, tok: _Token) -> Node:
        if tok.kind == "iri":
            try:
                return Iri(tok.value)
            except ValueError as exc:
                raise QueryParseError(str(exc), tok.line, tok.column) from None
        return PName(*tok.value)


def parse_query(text: str) -> Query:
    """Parse SPARQL text into a :class:`Query`.

    Prefix expansion is deferred to evaluation so the same parsed query can
    run against graphs with differing namespaces.
    """
    return _QueryParser(text).parse()
