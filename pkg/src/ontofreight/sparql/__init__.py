"""SPARQL subset: parser, evaluator, and table renderers."""

from .ast import OptionalGroup, Path, PName, Query, ResultTable, TriplePattern, Var
from .eval import UnknownPrefixError, evaluate
from .parser import QueryParseError, parse_query
from .render import render_table, render_term, table_to_dict

__all__ = [
    "OptionalGroup",
    "Path",
    "PName",
    "Query",
    "QueryParseError",
    "ResultTable",
    "TriplePattern",
    "UnknownPrefixError",
    "Var",
    "evaluate",
    "parse_query",
    "render_table",
    "render_term",
    "table_to_dict",
]
