"""Relational schema derivation from an ontology snapshot.

Mapping rules: every class becomes a table with a synthetic integer ``id``
primary key; data properties become nullable columns on their domain's
table; non-functional object properties become join tables; functional
ones become foreign-key columns; subclassing uses class-table inheritance
(child carries ``parent_id``). A ``label`` column is added to tables whose
class has individuals so seed rows have somewhere to put their names.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..rdf.model import Iri, OntologySnapshot
from ..rdf.ontology import check_acyclic_subclasses

TYPE_TAGS = {
    "string": "TEXT",
    "integer": "INTEGER",
    "decimal": "DECIMAL",
    "boolean": "BOOLEAN",
    "datetime": "TIMESTAMP",
}


@dataclass
class Column:
    name: str
    type: str  # TEXT | INTEGER | DECIMAL | BOOLEAN | TIMESTAMP
    nullable: bool = True


@dataclass
class Table:
    name: str
    columns: List[Column] = field(default_factory=list)
    primary_key: str = "id"
    foreign_keys: List[Tuple[str, str]] = field(default_factory=list)
    origin: Optional[Iri] = None

    def column_names(self) -> List[str]:
        return [c.name for c in self.columns]


@dataclass
class RelationalSchema:
    tables: List[Table] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    def table(self, name: str) -> Table:
        for t in self.tables:
            if t.name == name:
                return t
        raise KeyError(name)

    def table_names(self) -> List[str]:
        return [t.name for t in self.tables]


class CyclicHierarchyError(ValueError):
    pass


def snake_case(text: str) -> str:
    text = re.sub(r"(?<=[a-z0-9])(?=[A-Z])", "_", text)
    text = re.sub(r"(?<=[A-Z])(?=[A-Z][a-z])", "_", text)
    text = re.sub(r"[^A-Za-z0-9]+", "_", text)
    text = re.sub(r"_+", "_", text).strip("_").lower()
    if not text:
        return "unnamed"
    if text[0].isdigit():
        text = "t_" + text
    return text


class _Namer:
    """Deterministic collision handling: foo, foo_2, foo_3, ..."""

    def __init__(self) -> None:
        self._used: Dict[str, int] = {}

    def claim(self, base: str) -> str:
        count = self._used.get(base, 0) + 1
        self._used[base] = count
        return base if count == 1 else f"{base}_{count}"


def derive_schema(snapshot: OntologySnapshot) -> RelationalSchema:
    """Deterministic schema for an acyclic snapshot.

    Table count equals class count plus the number of non-functional
    object properties. Properties lacking a usable domain (or range, for
    object properties) are skipped with a warning instead of failing.
    """
    report = check_acyclic_subclasses(snapshot)
    if not report.ok:
        raise CyclicHierarchyError(
            "subclass cycle: " + " -> ".join(i.value for i in report.cycle)
        )

    schema = RelationalSchema()
    namer = _Namer()
    classes = sorted(snapshot.classes, key=lambda i: i.value)
    table_by_class: Dict[Iri, Table] = {}
    has_individuals = {cls: False for cls in classes}
    for types in snapshot.individuals.values():
        for cls in types:
            if cls in has_individuals:
                has_individuals[cls] = True

    for cls in classes:
        table = Table(
            name=namer.claim(snake_case(cls.local_name)),
            columns=[Column("id", "INTEGER", nullable=False)],
            primary_key="id",
            origin=cls,
        )
        table_by_class[cls] = table
        schema.tables.append(table)

    parents: Dict[Iri, List[Iri]] = {}
    for child, parent in sorted(
        snapshot.subclass_edges, key=lambda e: (e[0].value, e[1].value)
    ):
        parents.setdefault(child, []).append(parent)

    for cls in classes:
        table = table_by_class[cls]
        used = _Namer()
        used.claim("id")
        if has_individuals[cls]:
            table.columns.append(Column(used.claim("label"), "TEXT"))
        for parent in parents.get(cls, []):
            column = used.claim("parent_id")
            table.columns.append(Column(column, "INTEGER"))
            table.foreign_keys.append((column, table_by_class[parent].name))

    for prop in sorted(snapshot.data_properties, key=lambda p: p.iri.value):
        if prop.domain is None or prop.domain not in table_by_class:
            schema.warnings.append(
                f"data property {prop.iri.value} has no usable domain; skipped"
            )
            continue
        table = table_by_class[prop.domain]
        base = snake_case(prop.iri.local_name)
        name = base
        suffix = 2
        while name in table.column_names():
            name = f"{base}_{suffix}"
            suffix += 1
        sql_type = TYPE_TAGS.get(prop.range or "string", "TEXT")
        table.columns.append(Column(name, sql_type))

    functional_fk: List = []
    join_props: List = []
    for prop in sorted(snapshot.object_properties, key=lambda p: p.iri.value):
        if prop.domain is None or prop.domain not in table_by_class:
            schema.warnings.append(
                f"object property {prop.iri.value} has no usable domain; skipped"
            )
            continue
        if prop.range is None or prop.range not in table_by_class:
            schema.warnings.append(
                f"object property {prop.iri.value} has no usable range; skipped"
            )
            continue
        (functional_fk if prop.functional else join_props).append(prop)

    for prop in functional_fk:
        table = table_by_class[prop.domain]
        base = snake_case(prop.iri.local_name) + "_id"
        name = base
        suffix = 2
        while name in table.column_names():
            name = f"{base}_{suffix}"
            suffix += 1
        table.columns.append(Column(name, "INTEGER"))
        table.foreign_keys.append((name, table_by_class[prop.range].name))

    for prop in join_props:
        domain_table = table_by_class[prop.domain]
        range_table = table_by_class[prop.range]
        used = _Namer()
        used.claim("id")
        domain_col = used.claim(f"{domain_table.name}_id")
        range_col = used.claim(f"{range_table.name}_id")
        join = Table(
            name=namer.claim(snake_case(prop.iri.local_name)),
            columns=[
                Column("id", "INTEGER", nullable=False),
                Column(domain_col, "INTEGER", nullable=False),
                Column(range_col, "INTEGER", nullable=False),
            ],
            primary_key="id",
            foreign_keys=[
                (domain_col, domain_table.name),
                (range_col, range_table.name),
            ],
            origin=prop.iri,
        )
        schema.tables.append(join)
    return schema
