"""DDL emission, seed inserts, and the parse-back structural checker."""

from __future__ import annotations

import re
from typing import Dict, List, Tuple

from ..rdf.model import OntologySnapshot
from .schema import Column, RelationalSchema, Table, snake_case


def _topological_order(schema: RelationalSchema) -> List[Table]:
    """Referenced tables before referencing ones; name-sorted tie-break."""
    by_name = {t.name: t for t in schema.tables}
    depends: Dict[str, set] = {
        t.name: {target for _, target in t.foreign_keys if target != t.name}
        for t in schema.tables
    }
    emitted: List[Table] = []
    done: set = set()
    pending = sorted(depends)
    while pending:
        progress = False
        for name in list(pending):
            if depends[name] <= done:
                emitted.append(by_name[name])
                done.add(name)
                pending.remove(name)
                progress = True
        if not progress:  # FK cycle: emit remaining in name order
            for name in pending:
                emitted.append(by_name[name])
            break
    return emitted


def emit_ddl(schema: RelationalSchema) -> str:
    """Standard-SQL CREATE TABLE statements in dependency order."""
    statements = []
    for table in _topological_order(schema):
        lines = [f"CREATE TABLE {table.name} ("]
        parts = []
        for column in table.columns:
            null_sql = "" if column.nullable else " NOT NULL"
            parts.append(f"    {column.name} {column.type}{null_sql}")
        parts.append(f"    PRIMARY KEY ({table.primary_key})")
        for column, target in table.foreign_keys:
            parts.append(
                f"    FOREIGN KEY ({column}) REFERENCES {target} (id)"
            )
        lines.append(",\n".join(parts))
        lines.append(");")
        statements.append("\n".join(lines))
    return "\n\n".join(statements) + ("\n" if statements else "")


_CREATE_RE = re.compile(
    r"CREATE TABLE\s+(\w+)\s*\((.*?)\);", re.DOTALL | re.IGNORECASE
)
_FK_RE = re.compile(
    r"FOREIGN KEY\s*\((\w+)\)\s*REFERENCES\s+(\w+)\s*\((\w+)\)", re.IGNORECASE
)
_PK_RE = re.compile(r"PRIMARY KEY\s*\((\w+)\)", re.IGNORECASE)


class DdlParseError(ValueError):
    pass


def parse_ddl(ddl: str) -> RelationalSchema:
    """Parse emitted DDL back into schema structure (checker for tests).

    Understands exactly the statement shape :func:`emit_ddl` produces:
    column definitions, one PRIMARY KEY clause, FOREIGN KEY clauses.
    """
    schema = RelationalSchema()
    for match in _CREATE_RE.finditer(ddl):
        name, body = match.group(1), match.group(2)
        table = Table(name=name, columns=[], primary_key="", foreign_keys=[])
        for part in _split_parts(body):
            fk = _FK_RE.match(part)
            pk = _PK_RE.match(part)
            if fk:
                table.foreign_keys.append((fk.group(1), fk.group(2)))
            elif pk:
                table.primary_key = pk.group(1)
            else:
                tokens = part.split()
                if len(tokens) < 2:
                    raise DdlParseError(f"cannot parse column: {part!r}")
                nullable = "NOT NULL" not in part.upper()
                table.columns.append(Column(tokens[0], tokens[1], nullable))
        if not table.primary_key:
            raise DdlParseError(f"table {name} lacks a PRIMARY KEY clause")
        schema.tables.append(table)
    covered = sum(len(m.group(0)) for m in _CREATE_RE.finditer(ddl))
    residue = _CREATE_RE.sub("", ddl).strip()
    if residue:
        raise DdlParseError(f"unparsed DDL content: {residue[:60]!r}")
    if covered == 0 and ddl.strip():
        raise DdlParseError("no CREATE TABLE statements found")
    return schema


def _split_parts(body: str) -> List[str]:
    return [p.strip() for p in body.split(",\n") if p.strip()]


def same_structure(a: RelationalSchema, b: RelationalSchema) -> bool:
    """Structural equality: tables, columns, types, nullability, PKs, FKs."""
    def shape(schema: RelationalSchema):
        return {
            t.name: (
                [(c.name, c.type, c.nullable) for c in t.columns],
                t.primary_key,
                sorted(t.foreign_keys),
            )
            for t in schema.tables
        }

    return shape(a) == shape(b)


def fk_targets_resolve(schema: RelationalSchema) -> bool:
    names = set(schema.table_names())
    return all(
        target in names for t in schema.tables for _, target in t.foreign_keys
    )


def _sql_quote(text: str) -> str:
    return "'" + text.replace("'", "''") + "'"


def seed_inserts(
    snapshot: OntologySnapshot, schema: RelationalSchema
) -> Tuple[str, List[str]]:
    """One INSERT per individual per asserted class, ids by sorted IRI.

    Returns (sql, warnings); individuals typed by classes missing from the
    schema are reported, not fatal.
    """
    warnings: List[str] = []
    table_by_class = {
        t.origin: t for t in schema.tables if t.origin is not None
    }
    rows_by_table: Dict[str, List[str]] = {}
    for cls in sorted({c for types in snapshot.individuals.values() for c in types},
                      key=lambda i: i.value):
        table = table_by_class.get(cls)
        members = sorted(
            (ind for ind, types in snapshot.individuals.items() if cls in types),
            key=lambda i: i.value,
        )
        if table is None:
            warnings.append(
                f"{len(members)} individual(s) typed by {cls.value} which has "
                "no table; skipped"
            )
            continue
        statements = []
        for row_id, individual in enumerate(members, start=1):
            label = snapshot.labels.get(individual, individual.local_name)
            statements.append(
                f"INSERT INTO {table.name} (id, label) "
                f"VALUES ({row_id}, {_sql_quote(label)});"
            )
        if statements:
            rows_by_table[table.name] = statements
    sql = "\n".join(
        line for name in sorted(rows_by_table) for line in rows_by_table[name]
    )
    return (sql + "\n" if sql else ""), warnings
