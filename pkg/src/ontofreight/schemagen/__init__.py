"""Relational schema and property-graph derivation from ontologies."""

from .ddl import (
    DdlParseError,
    emit_ddl,
    fk_targets_resolve,
    parse_ddl,
    same_structure,
    seed_inserts,
)
from .propertygraph import (
    EDGE_ATTR_WHITELIST,
    NODE_ATTR_WHITELIST,
    EdgeRecord,
    NodeRecord,
    PropertyGraphExport,
    export_property_graph,
    render_property_graph_csv,
    write_property_graph,
)
from .schema import (
    Column,
    CyclicHierarchyError,
    RelationalSchema,
    Table,
    derive_schema,
    snake_case,
)

__all__ = [
    "Column",
    "CyclicHierarchyError",
    "DdlParseError",
    "EDGE_ATTR_WHITELIST",
    "EdgeRecord",
    "NODE_ATTR_WHITELIST",
    "NodeRecord",
    "PropertyGraphExport",
    "RelationalSchema",
    "Table",
    "derive_schema",
    "emit_ddl",
    "export_property_graph",
    "fk_targets_resolve",
    "parse_ddl",
    "render_property_graph_csv",
    "same_structure",
    "seed_inserts",
    "snake_case",
]
