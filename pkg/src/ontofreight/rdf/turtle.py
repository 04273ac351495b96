"""Turtle subset parser and serializer.

Supported grammar: ``@prefix`` declarations, IRIs in ``<...>`` or prefixed
form, ``a`` as rdf:type shorthand, ``;`` predicate lists, ``,`` object
lists, string literals with optional ``^^`` datatype or ``@`` language tag,
bare integer/decimal/boolean literals, ``#`` comments, statements ending
with ``.``. Blank nodes, collections and multi-line strings are out of
scope.
"""

from __future__ import annotations

import re
from typing import Iterator, List, Optional, Tuple

from .model import (
    DATATYPE_BY_XSD,
    RDF_NS,
    XSD_BY_DATATYPE,
    Graph,
    Iri,
    Literal,
    Term,
    Triple,
    triple_sort_key,
)


class TurtleParseError(ValueError):
    """Raised on malformed Turtle input; carries 1-based line/column."""

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
  | (?P<langtag>@[A-Za-z][A-Za-z0-9-]*)
  | (?P<dtmarker>\^\^)
  | (?P<number>[+-]?(?:\d+\.\d+|\.\d+|\d+))
  | (?P<punct>[.;,])
  | (?P<pname>[A-Za-z_][A-Za-z0-9_.-]*)?:(?P<plocal>[A-Za-z0-9_]
        (?:[A-Za-z0-9_.-]*[A-Za-z0-9_-])?)?
  | (?P<bare>[A-Za-z][A-Za-z0-9_-]*)
    """,
    re.VERBOSE,
)

_ESCAPES = {
    "t": "\t",
    "n": "\n",
    "r": "\r",
    '"': '"',
    "\\": "\\",
}


class _Token:
    __slots__ = ("kind", "value", "line", "column")

    def __init__(self, kind: str, value, line: int, column: int) -> None:
        self.kind = kind
        self.value = value
        self.line = line
        self.column = column

    def __repr__(self) -> str:
        return f"_Token({self.kind!r}, {self.value!r}, {self.line}:{self.column})"


def _tokenize(text: str) -> Iterator[_Token]:
    pos = 0
    line = 1
    line_start = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise TurtleParseError(
                f"unexpected character {text[pos]!r}", line, pos - line_start + 1
            )
        col = pos - line_start + 1
        kind = m.lastgroup
        raw = m.group(0)
        if kind in ("ws", "comment"):
            pass
        elif kind == "iriref":
            yield _Token("iri", raw[1:-1], line, col)
        elif kind == "string":
            yield _Token("string", _unescape(raw[1:-1], line, col), line, col)
        elif kind == "langtag":
            yield _Token("langtag", raw[1:], line, col)
        elif kind == "dtmarker":
            yield _Token("dtmarker", raw, line, col)
        elif kind == "number":
            yield _Token("number", raw, line, col)
        elif kind == "punct":
            yield _Token(raw, raw, line, col)
        elif kind == "bare":
            yield _Token("bare", raw, line, col)
        else:  # prefixed name (pname group may be empty for default prefix)
            yield _Token(
                "pname", (m.group("pname") or "", m.group("plocal") or ""), line, col
            )
        newlines = raw.count("\n")
        if newlines:
            line += newlines
            line_start = pos + raw.rindex("\n") + 1
        pos = m.end()


def _unescape(raw: str, line: int, col: int) -> str:
    out = []
    i = 0
    while i < len(raw):
        c = raw[i]
        if c == "\\":
            if i + 1 >= len(raw):
                raise TurtleParseError("dangling escape in string", line, col)
            nxt = raw[i + 1]
            if nxt == "u":
                out.append(chr(int(raw[i + 2 : i + 6], 16)))
                i += 6
                continue
            if nxt not in _ESCAPES:
                raise TurtleParseError(f"unknown escape \\{nxt}", line, col)
            out.append(_ESCAPES[nxt])
            i += 2
        else:
            out.append(c)
            i += 1
    return "".join(out)


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens: List[_Token] = list(_tokenize(text))
        self.pos = 0
        self.prefixes: dict = {}
        self.triples: List[Triple] = []

    def _peek(self) -> Optional[_Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self, expected: str) -> _Token:
        tok = self._peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else _Token("", "", 1, 1)
            raise TurtleParseError(f"expected {expected}, found end of input",
                                   last.line, last.column)
        self.pos += 1
        return tok

    def parse(self) -> Graph:
        while self._peek() is not None:
            tok = self._peek()
            if tok.kind == "bare" and tok.value == "@prefix":  # pragma: no cover
                self._parse_prefix()
            elif tok.kind == "langtag" and tok.value == "prefix":
                # '@prefix' lexes as langtag 'prefix'
                self.pos += 1
                self._parse_prefix()
            else:
                self._parse_statement()
        return Graph(self.triples, self.prefixes)

    def _parse_prefix(self) -> None:
        tok = self._next("prefix label")
        if tok.kind != "pname" or tok.value[1]:
            raise TurtleParseError("expected prefix label ending in ':'",
                                   tok.line, tok.column)
        label = tok.value[0]
        ns = self._next("namespace IRI")
        if ns.kind != "iri":
            raise TurtleParseError("expected namespace IRI", ns.line, ns.column)
        dot = self._next("'.'")
        if dot.kind != ".":
            raise TurtleParseError("expected '.' after @prefix", dot.line, dot.column)
        self.prefixes[label] = ns.value

    def _parse_statement(self) -> None:
        subject = self._parse_iri_term("subject")
        while True:
            predicate = self._parse_predicate()
            while True:
                obj = self._parse_object()
                self.triples.append(Triple(subject, predicate, obj))
                nxt = self._next("',', ';' or '.'")
                if nxt.kind == ",":
                    continue
                if nxt.kind in (";", "."):
                    break
                raise TurtleParseError(
                    f"expected ',', ';' or '.', found {nxt.value!r}",
                    nxt.line, nxt.column,
                )
            if nxt.kind == ".":
                return
            # After ';' either a new predicate or a closing '.' (trailing ';').
            tok = self._peek()
            if tok is not None and tok.kind == ".":
                self.pos += 1
                return

    def _parse_predicate(self) -> Iri:
        tok = self._peek()
        if tok is not None and tok.kind == "bare" and tok.value == "a":
            self.pos += 1
            return Iri(RDF_NS + "type")
        return self._parse_iri_term("predicate")

    def _parse_iri_term(self, role: str) -> Iri:
        tok = self._next(f"{role} IRI")
        if tok.kind == "iri":
            try:
                return Iri(tok.value)
            except ValueError as exc:
                raise TurtleParseError(str(exc), tok.line, tok.column) from None
        if tok.kind == "pname":
            return self._expand(tok)
        raise TurtleParseError(
            f"expected IRI or prefixed name for {role}, found {tok.value!r}",
            tok.line, tok.column,
        )

    def _expand(self, tok: _Token) -> Iri:
        label, local = tok.value
        if label not in self.prefixes:
            raise TurtleParseError(f"unknown prefix {label!r}", tok.line, tok.column)
        return Iri(self.prefixes[label] + local)

    def _parse_object(self) -> Term:
        tok = self._next("object term")
        if tok.kind == "iri":
            try:
                return Iri(tok.value)
            except ValueError as exc:
                raise TurtleParseError(str(exc), tok.line, tok.column) from None
        if tok.kind == "pname":
            return self._expand(tok)
        if tok.kind == "number":
            datatype = "decimal" if "." in tok.value else "integer"
            return Literal(tok.value, datatype)
        if tok.kind == "bare" and tok.value in ("true", "false"):
            return Literal(tok.value, "boolean")
        if tok.kind == "string":
            return self._parse_literal_suffix(tok.value)
        raise TurtleParseError(
            f"expected object term, found {tok.value!r}", tok.line, tok.column
        )

    def _parse_literal_suffix(self, lexical: str) -> Literal:
        nxt = self._peek()
        if nxt is not None and nxt.kind == "langtag":
            self.pos += 1
            return Literal(lexical, "string", nxt.value)
        if nxt is not None and nxt.kind == "dtmarker":
            self.pos += 1
            dt_tok = self._next("datatype IRI")
            if dt_tok.kind == "iri":
                dt_iri = dt_tok.value
            elif dt_tok.kind == "pname":
                dt_iri = self._expand(dt_tok).value
            else:
                raise TurtleParseError("expected datatype IRI after '^^'",
                                       dt_tok.line, dt_tok.column)
            datatype = DATATYPE_BY_XSD.get(dt_iri)
            if datatype is None:
                # Unknown datatypes degrade to string rather than failing.
                import warnings

                warnings.warn(f"unknown datatype {dt_iri}; treating as string")
                datatype = "string"
            try:
                return Literal(lexical, datatype)
            except ValueError as exc:
                raise TurtleParseError(str(exc), dt_tok.line, dt_tok.column) from None
        return Literal(lexical, "string")


def parse_turtle(text: str) -> Graph:
    """Parse a Turtle document into a :class:`Graph`.

    Raises :class:`TurtleParseError` with line/column on malformed input.
    """
    return _Parser(text).parse()


def _escape(text: str) -> str:
    return (
        text.replace("\\", "\\\\")
        .replace('"', '\\"')
        .replace("\n", "\\n")
        .replace("\r", "\\r")
        .replace("\t", "\\t")
    )


def _abbreviate(iri: Iri, by_namespace: List[Tuple[str, str]]) -> Optional[str]:
    for ns, label in by_namespace:
        if iri.value.startswith(ns):
            local = iri.value[len(ns):]
            if _is_pname_local(local):
                return f"{label}:{local}"
    return None


_PNAME_LOCAL_RE = re.compile(r"[A-Za-z0-9_](?:[A-Za-z0-9_.-]*[A-Za-z0-9_-])?$")


def _is_pname_local(local: str) -> bool:
    return local != "" and bool(_PNAME_LOCAL_RE.match(local)) and not local.endswith(".")


def _render_term(term: Term, by_namespace: List[Tuple[str, str]]) -> str:
    if isinstance(term, Iri):
        short = _abbreviate(term, by_namespace)
        return short if short is not None else f"<{term.value}>"
    if term.language is not None:
        return f'"{_escape(term.lexical)}"@{term.language}'
    if term.datatype == "string":
        return f'"{_escape(term.lexical)}"'
    if term.datatype in ("integer", "decimal"):
        return term.lexical
    if term.datatype == "boolean":
        return term.lexical
    return f'"{_escape(term.lexical)}"^^<{XSD_BY_DATATYPE[term.datatype]}>'


def serialize_turtle(graph: Graph, prefixes: Optional[dict] = None) -> str:
    """Serialize a graph to Turtle text that re-parses to the same triple set.

    Triples are grouped by subject with ``;``/``,`` continuation lists and
    emitted in canonical sorted order.
    """
    prefix_map = dict(graph.prefixes)
    if prefixes:
        prefix_map.update(prefixes)
    # Longest namespaces first so the most specific prefix wins.
    by_namespace = sorted(
        ((ns, label) for label, ns in prefix_map.items()),
        key=lambda pair: (-len(pair[0]), pair[1]),
    )
    lines = [f"@prefix {label}: <{ns}> ." for label, ns in sorted(prefix_map.items())]
    if lines:
        lines.append("")

    rdf_type = Iri(RDF_NS + "type")
    triples = sorted(graph.triples, key=triple_sort_key)
    i = 0
    while i < len(triples):
        subject = triples[i].subject
        group = []
        while i < len(triples) and triples[i].subject == subject:
            group.append(triples[i])
            i += 1
        subj_text = _render_term(subject, by_namespace)
        parts = []
        j = 0
        while j < len(group):
            predicate = group[j].predicate
            objs = []
            while j < len(group) and group[j].predicate == predicate:
                objs.append(_render_term(group[j].object, by_namespace))
                j += 1
            pred_text = "a" if predicate == rdf_type else _render_term(
                predicate, by_namespace
            )
            parts.append(f"{pred_text} {', '.join(objs)}")
        body = " ;\n    ".join(parts)
        lines.append(f"{subj_text} {body} .")
    return "\n".join(lines) + "\n"
