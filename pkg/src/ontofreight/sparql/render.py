"""Stable textual renderings of result tables (TSV and JSON)."""

from __future__ import annotations

import json
from typing import Optional

from ..rdf.model import Iri, Literal, Term
from .ast import ResultTable


def render_term(term: Optional[Term]) -> Optional[str]:
    """IRI text for IRIs, lexical form for literals, None when unbound."""
    if term is None:
        return None
    if isinstance(term, Iri):
        return term.value
    return term.lexical


def render_table(result: ResultTable, format: str = "tsv") -> str:
    if format == "tsv":
        lines = ["\t".join(result.columns)]
        for row in result.rows:
            lines.append(
                "\t".join(render_term(row.get(c)) or "" for c in result.columns)
            )
        return "\n".join(lines) + "\n"
    if format == "json":
        return json.dumps(table_to_dict(result), indent=2, sort_keys=False) + "\n"
    raise ValueError(f"unknown render format: {format!r}")


def table_to_dict(result: ResultTable) -> dict:
    return {
        "columns": list(result.columns),
        "rows": [
            {c: render_term(row.get(c)) for c in result.columns}
            for row in result.rows
        ],
    }
