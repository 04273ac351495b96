"""CSV/JSON loaders for networks, factor tables, and transfer penalties."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Union

from .model import (
    FactorRow,
    Hub,
    MetricFactors,
    NetworkValidationError,
    Segment,
    TransferPenalty,
    TransportNetwork,
)

HUB_COLUMNS = ["id", "name", "region", "intermodal", "lon", "lat"]
SEGMENT_COLUMNS = ["id", "from", "to", "mode", "distance_km", "slope", "one_way"]
FACTOR_COLUMNS = [
    "mode", "fuel", "emission_kg_per_tkm", "cost_per_tkm", "speed_kmh",
    "fuel_l_per_tkm",
]

_TRUE = {"true", "1", "yes"}
_FALSE = {"false", "0", "no", ""}


def _parse_flag(value: str, context: str) -> bool:
    norm = value.strip().lower()
    if norm in _TRUE:
        return True
    if norm in _FALSE:
        return False
    raise ValueError(f"{context}: cannot parse boolean {value!r}")


def _reader(text: str, expected: list, kind: str) -> csv.DictReader:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != expected:
        raise NetworkValidationError(
            [f"{kind} header must be {','.join(expected)}"]
        )
    return reader


def load_network(hubs_csv: str, segments_csv: str) -> TransportNetwork:
    """Build a validated network from hubs.csv and segments.csv content.

    All referential errors (duplicate ids, dangling endpoints, bad
    distances, unknown modes) are collected and reported together.
    """
    problems = []
    hubs = []
    for line, row in enumerate(_reader(hubs_csv, HUB_COLUMNS, "hubs.csv"), start=2):
        try:
            hubs.append(
                Hub(
                    id=row["id"].strip(),
                    name=row["name"].strip(),
                    region=row["region"].strip(),
                    intermodal=_parse_flag(row["intermodal"], f"hubs.csv line {line}"),
                    lon=float(row["lon"]),
                    lat=float(row["lat"]),
                )
            )
        except (ValueError, AttributeError) as exc:
            problems.append(f"hubs.csv line {line}: {exc}")
    segments = []
    for line, row in enumerate(
        _reader(segments_csv, SEGMENT_COLUMNS, "segments.csv"), start=2
    ):
        try:
            slope_text = (row["slope"] or "").strip()
            segments.append(
                Segment(
                    id=row["id"].strip(),
                    from_hub=row["from"].strip(),
                    to_hub=row["to"].strip(),
                    mode=row["mode"].strip(),
                    distance_km=float(row["distance_km"]),
                    slope=float(slope_text) if slope_text else None,
                    one_way=_parse_flag(row["one_way"], f"segments.csv line {line}"),
                )
            )
        except (ValueError, AttributeError) as exc:
            problems.append(f"segments.csv line {line}: {exc}")
    try:
        network = TransportNetwork(hubs, segments)
    except NetworkValidationError as exc:
        raise NetworkValidationError(problems + exc.problems) from None
    if problems:
        raise NetworkValidationError(problems)
    return network


def load_network_dir(directory: Union[str, Path]) -> TransportNetwork:
    directory = Path(directory)
    return load_network(
        (directory / "hubs.csv").read_text(encoding="utf-8"),
        (directory / "segments.csv").read_text(encoding="utf-8"),
    )


def load_factors(
    factors_csv: str, transfer_json: str = ""
) -> MetricFactors:
    """Parse the factor table plus optional transfer-penalty JSON."""
    rows = []
    for line, row in enumerate(
        _reader(factors_csv, FACTOR_COLUMNS, "factors.csv"), start=2
    ):
        rows.append(
            FactorRow(
                mode=row["mode"].strip(),
                fuel=row["fuel"].strip(),
                emission_kg_per_tkm=float(row["emission_kg_per_tkm"]),
                cost_per_tkm=float(row["cost_per_tkm"]),
                speed_kmh=float(row["speed_kmh"]),
                fuel_l_per_tkm=float(row["fuel_l_per_tkm"]),
            )
        )
    transfer = TransferPenalty()
    if transfer_json.strip():
        payload = json.loads(transfer_json)
        transfer = TransferPenalty(
            hours=float(payload.get("hours", 0.0)),
            cost=float(payload.get("cost", 0.0)),
            ghg_kg=float(payload.get("ghg_kg", 0.0)),
        )
    return MetricFactors(rows, transfer)


def load_factors_dir(directory: Union[str, Path]) -> MetricFactors:
    directory = Path(directory)
    transfer_path = directory / "transfer_penalties.json"
    return load_factors(
        (directory / "factors.csv").read_text(encoding="utf-8"),
        transfer_path.read_text(encoding="utf-8") if transfer_path.exists() else "",
    )
