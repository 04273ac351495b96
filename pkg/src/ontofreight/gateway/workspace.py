"""File-backed workspace: registries for ontologies, documents, networks,
scenarios, and derived schemas.

Every mutation writes data files first and the index last, each via
write-temp-then-rename, so a crash never leaves a partially written entry
and reopening a workspace reproduces identical state byte for byte.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import threading
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Union

from ..docprep.document import SourceDocument, document_from_dict
from ..freightnet.io import load_factors, load_network
from ..freightnet.model import MetricFactors, TransportNetwork
from ..rdf.model import Graph
from ..rdf.turtle import parse_turtle

_ID_RE = re.compile(r"^[a-z0-9][a-z0-9._-]*$")

REGISTRIES = ("ontologies", "documents", "networks", "scenarios", "schemas")


class WorkspaceError(ValueError):
    pass


class UnknownIdError(KeyError):
    pass


def content_id(*parts: str) -> str:
    digest = hashlib.sha256()
    for part in parts:
        digest.update(part.encode("utf-8"))
    return digest.hexdigest()[:12]


def _atomic_write(path: Path, data: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(data, encoding="utf-8")
    os.replace(tmp, path)


def default_factors() -> MetricFactors:
    base = resources.files("ontofreight.data").joinpath("network")
    return load_factors(
        base.joinpath("factors.csv").read_text(encoding="utf-8"),
        base.joinpath("transfer_penalties.json").read_text(encoding="utf-8"),
    )


class Workspace:
    """Registry of named artifacts under one root directory."""

    def __init__(self, root: Union[str, Path]) -> None:
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        for registry in REGISTRIES:
            (self.root / registry).mkdir(exist_ok=True)
        self._lock = threading.RLock()
        self._index_path = self.root / "index.json"
        if self._index_path.exists():
            self._index = json.loads(self._index_path.read_text(encoding="utf-8"))
        else:
            self._index = {registry: {} for registry in REGISTRIES}

    def _save_index(self) -> None:
        _atomic_write(
            self._index_path,
            json.dumps(self._index, indent=2, sort_keys=True) + "\n",
        )

    def _claim(self, registry: str, requested: Optional[str], fallback: str) -> str:
        entry_id = requested or fallback
        if not _ID_RE.match(entry_id):
            raise WorkspaceError(
                f"invalid id {entry_id!r}: use lowercase slugs "
                "(letters, digits, '.', '_', '-')"
            )
        return entry_id

    def ids(self, registry: str) -> List[str]:
        return sorted(self._index.get(registry, {}))

    def has(self, registry: str, entry_id: str) -> bool:
        return entry_id in self._index.get(registry, {})

    # -- ontologies ---------------------------------------------------------

    def add_ontology(self, turtle_text: str,
                     ontology_id: Optional[str] = None,
                     meta: Optional[dict] = None) -> str:
        parse_turtle(turtle_text)  # reject malformed uploads with position info
        entry_id = self._claim("ontologies", ontology_id, content_id(turtle_text))
        with self._lock:
            _atomic_write(self.root / "ontologies" / f"{entry_id}.ttl", turtle_text)
            self._index["ontologies"][entry_id] = meta or {}
            self._save_index()
        return entry_id

    def ontology_text(self, entry_id: str) -> str:
        self._require("ontologies", entry_id)
        return (self.root / "ontologies" / f"{entry_id}.ttl").read_text(
            encoding="utf-8"
        )

    def ontology_graph(self, entry_id: str) -> Graph:
        return parse_turtle(self.ontology_text(entry_id))

    # -- documents ----------------------------------------------------------

    def add_document(self, document: dict,
                     document_id: Optional[str] = None) -> str:
        document_from_dict(document)  # validate before persisting
        text = json.dumps(document, indent=2, sort_keys=True) + "\n"
        entry_id = self._claim("documents", document_id, content_id(text))
        with self._lock:
            _atomic_write(self.root / "documents" / f"{entry_id}.json", text)
            self._index["documents"][entry_id] = {}
            self._save_index()
        return entry_id

    def document(self, entry_id: str) -> SourceDocument:
        self._require("documents", entry_id)
        data = json.loads(
            (self.root / "documents" / f"{entry_id}.json").read_text(
                encoding="utf-8"
            )
        )
        return document_from_dict(data)

    # -- networks -----------------------------------------------------------

    def add_network(self, hubs_csv: str, segments_csv: str,
                    network_id: Optional[str] = None,
                    factors_csv: Optional[str] = None,
                    transfer_json: Optional[str] = None) -> str:
        load_network(hubs_csv, segments_csv)  # validate
        if factors_csv is not None:
            load_factors(factors_csv, transfer_json or "")
        entry_id = self._claim(
            "networks", network_id, content_id(hubs_csv, segments_csv)
        )
        with self._lock:
            directory = self.root / "networks" / entry_id
            directory.mkdir(parents=True, exist_ok=True)
            _atomic_write(directory / "hubs.csv", hubs_csv)
            _atomic_write(directory / "segments.csv", segments_csv)
            if factors_csv is not None:
                _atomic_write(directory / "factors.csv", factors_csv)
            if transfer_json is not None:
                _atomic_write(directory / "transfer_penalties.json", transfer_json)
            self._index["networks"][entry_id] = {}
            self._save_index()
        return entry_id

    def network(self, entry_id: str) -> TransportNetwork:
        self._require("networks", entry_id)
        directory = self.root / "networks" / entry_id
        return load_network(
            (directory / "hubs.csv").read_text(encoding="utf-8"),
            (directory / "segments.csv").read_text(encoding="utf-8"),
        )

    def factors(self, entry_id: str) -> MetricFactors:
        """Network-specific factor table when present, bundled defaults otherwise."""
        self._require("networks", entry_id)
        directory = self.root / "networks" / entry_id
        factors_path = directory / "factors.csv"
        if factors_path.exists():
            transfer_path = directory / "transfer_penalties.json"
            return load_factors(
                factors_path.read_text(encoding="utf-8"),
                transfer_path.read_text(encoding="utf-8")
                if transfer_path.exists() else "",
            )
        return default_factors()

    # -- scenarios ----------------------------------------------------------

    def add_scenario(self, record: dict,
                     scenario_id: Optional[str] = None) -> str:
        text = json.dumps(record, indent=2, sort_keys=True) + "\n"
        entry_id = self._claim("scenarios", scenario_id, content_id(text))
        with self._lock:
            _atomic_write(self.root / "scenarios" / f"{entry_id}.json", text)
            self._index["scenarios"][entry_id] = {}
            self._save_index()
        return entry_id

    def scenario(self, entry_id: str) -> dict:
        self._require("scenarios", entry_id)
        return json.loads(
            (self.root / "scenarios" / f"{entry_id}.json").read_text(
                encoding="utf-8"
            )
        )

    # -- derived schemas ----------------------------------------------------

    def store_schema(self, ontology_id: str, ddl: str, erd: dict,
                     inserts: str) -> str:
        entry_id = ontology_id
        with self._lock:
            _atomic_write(self.root / "schemas" / f"{entry_id}.sql", ddl)
            _atomic_write(
                self.root / "schemas" / f"{entry_id}.erd.json",
                json.dumps(erd, indent=2, sort_keys=True) + "\n",
            )
            _atomic_write(self.root / "schemas" / f"{entry_id}.inserts.sql", inserts)
            self._index["schemas"][entry_id] = {"ontology": ontology_id}
            self._save_index()
        return entry_id

    def _require(self, registry: str, entry_id: str) -> None:
        if not self.has(registry, entry_id):
            raise UnknownIdError(f"{registry[:-1]} {entry_id!r} not found")
