"""Property-graph export of a transport network (topology only).

Mirrors the attribute partitioning of the data-provisioning design: node
records carry only identity, name, and mode-capability flags; edge records
carry mode, distance, and slope. Decision metrics (cost, emissions, time)
stay out of the graph entirely.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Union

from ..freightnet.model import MODES, TransportNetwork

NODE_ATTR_WHITELIST = frozenset({"name", "intermodal", "road", "rail", "water"})
EDGE_ATTR_WHITELIST = frozenset({"mode", "distance_km", "slope"})


@dataclass
class NodeRecord:
    id: str
    labels: List[str]
    attributes: dict = field(default_factory=dict)


@dataclass
class EdgeRecord:
    id: str
    source: str
    target: str
    label: str
    attributes: dict = field(default_factory=dict)


@dataclass
class PropertyGraphExport:
    nodes: List[NodeRecord] = field(default_factory=list)
    edges: List[EdgeRecord] = field(default_factory=list)


def export_property_graph(network: TransportNetwork) -> PropertyGraphExport:
    export = PropertyGraphExport()
    for hub_id in sorted(network.hubs):
        hub = network.hubs[hub_id]
        incident = set(network.hub_modes(hub_id))
        attributes = {"name": hub.name, "intermodal": hub.intermodal}
        for mode in MODES:
            attributes[mode] = mode in incident
        export.nodes.append(
            NodeRecord(id=hub_id, labels=["Hub"], attributes=attributes)
        )
    for seg_id in sorted(network.segments):
        seg = network.segments[seg_id]
        attributes = {"mode": seg.mode, "distance_km": seg.distance_km}
        if seg.slope is not None:
            attributes["slope"] = seg.slope
        export.edges.append(
            EdgeRecord(
                id=seg_id,
                source=seg.from_hub,
                target=seg.to_hub,
                label=seg.mode,
                attributes=attributes,
            )
        )
    return export


def render_property_graph_csv(export: PropertyGraphExport) -> tuple:
    """(nodes_csv, edges_csv) text per the documented file schema."""
    nodes_out = io.StringIO()
    writer = csv.writer(nodes_out, lineterminator="\n")
    writer.writerow(["id", "labels", "attr_json"])
    for node in export.nodes:
        writer.writerow(
            [node.id, ";".join(node.labels),
             json.dumps(node.attributes, sort_keys=True)]
        )
    edges_out = io.StringIO()
    writer = csv.writer(edges_out, lineterminator="\n")
    writer.writerow(["id", "from", "to", "label", "attr_json"])
    for edge in export.edges:
        writer.writerow(
            [edge.id, edge.source, edge.target, edge.label,
             json.dumps(edge.attributes, sort_keys=True)]
        )
    return nodes_out.getvalue(), edges_out.getvalue()


def write_property_graph(
    export: PropertyGraphExport, directory: Union[str, Path]
) -> tuple:
    """Write nodes.csv/edges.csv into the directory; returns the paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    nodes_csv, edges_csv = render_property_graph_csv(export)
    nodes_path = directory / "nodes.csv"
    edges_path = directory / "edges.csv"
    nodes_path.write_text(nodes_csv, encoding="utf-8")
    edges_path.write_text(edges_csv, encoding="utf-8")
    return nodes_path, edges_path
