"""Shortest distances and exhaustive route/mode enumeration."""

from __future__ import annotations

import heapq
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .._kernels import enumerate_paths
from .model import (
    MODES,
    EnumerationConstraints,
    RouteCombination,
    TransportNetwork,
)


class UnknownHubError(KeyError):
    pass


def _check_hub(network: TransportNetwork, hub_id: str) -> None:
    if hub_id not in network.hubs:
        raise UnknownHubError(hub_id)


def shortest_distance(
    network: TransportNetwork,
    origin: str,
    destination: str,
    allowed_modes: Sequence[str] = MODES,
) -> Optional[float]:
    """Minimal total distance over allowed-mode segments, or None.

    Ignores disruption closures: the value anchors detour pruning, so
    closing segments must never loosen the budget.
    """
    _check_hub(network, origin)
    _check_hub(network, destination)
    allowed = set(allowed_modes)
    if origin == destination:
        return 0.0
    dist = {origin: 0.0}
    heap = [(0.0, origin)]
    done = set()
    while heap:
        d, node = heapq.heappop(heap)
        if node in done:
            continue
        if node == destination:
            return d
        done.add(node)
        for seg_id, neighbor in network.adjacency[node]:
            seg = network.segments[seg_id]
            if seg.mode not in allowed or neighbor in done:
                continue
            candidate = d + seg.distance_km
            if candidate < dist.get(neighbor, float("inf")):
                dist[neighbor] = candidate
                heapq.heappush(heap, (candidate, neighbor))
    return None


def enumerate_combinations(
    network: TransportNetwork,
    origin: str,
    destination: str,
    constraints: EnumerationConstraints = EnumerationConstraints(),
) -> List[RouteCombination]:
    """Every simple path satisfying the constraints, canonically ordered.

    One combination per distinct (node sequence, mode sequence): parallel
    segments of different modes yield distinct combinations. Transfers are
    only allowed at intermodal hubs; closed segments are skipped; paths
    longer than detour_factor times the open-network shortest distance are
    pruned. An unreachable pair returns an empty list.
    """
    _check_hub(network, origin)
    _check_hub(network, destination)
    if origin == destination:
        raise ValueError("origin and destination must differ")

    shortest = shortest_distance(network, origin, destination,
                                 constraints.allowed_modes)
    if shortest is None:
        return []
    budget = constraints.detour_factor * shortest

    allowed = set(constraints.allowed_modes)
    closed = constraints.closed_segments()
    node_ids = sorted(network.hubs)
    index = {hub_id: i for i, hub_id in enumerate(node_ids)}
    seg_ids = sorted(network.segments)
    seg_index = {seg_id: i for i, seg_id in enumerate(seg_ids)}
    mode_code = {mode: i for i, mode in enumerate(MODES)}

    arc_to, arc_mode, arc_dist, arc_seg, arc_from = [], [], [], [], []
    for hub_id in node_ids:
        for seg_id, neighbor in network.adjacency[hub_id]:
            seg = network.segments[seg_id]
            if seg.mode not in allowed or seg_id in closed:
                continue
            arc_from.append(index[hub_id])
            arc_to.append(index[neighbor])
            arc_mode.append(mode_code[seg.mode])
            arc_dist.append(seg.distance_km)
            arc_seg.append(seg_index[seg_id])

    n = len(node_ids)
    order = sorted(range(len(arc_from)), key=lambda k: (arc_from[k], arc_seg[k]))
    starts = np.zeros(n + 1, dtype=np.intc)
    for k in order:
        starts[arc_from[k] + 1] += 1
    starts = np.cumsum(starts).astype(np.intc)
    intermodal = np.array(
        [1 if network.hubs[h].intermodal else 0 for h in node_ids], dtype=np.uint8
    )

    raw_paths = enumerate_paths(
        n,
        np.array([arc_to[k] for k in order], dtype=np.intc),
        np.array([arc_mode[k] for k in order], dtype=np.intc),
        np.array([arc_dist[k] for k in order], dtype=np.float64),
        np.array([arc_seg[k] for k in order], dtype=np.intc),
        starts,
        np.arange(len(order), dtype=np.intc),
        intermodal,
        index[origin],
        index[destination],
        constraints.max_hops,
        constraints.max_transfers,
        budget,
    )

    combinations = []
    for seg_indices in raw_paths:
        nodes = [origin]
        edges = []
        modes = []
        current = origin
        for si in seg_indices:
            seg = network.segments[seg_ids[si]]
            nxt = seg.to_hub if seg.from_hub == current else seg.from_hub
            edges.append(seg.id)
            modes.append(seg.mode)
            nodes.append(nxt)
            current = nxt
        combinations.append(
            RouteCombination(tuple(nodes), tuple(edges), tuple(modes))
        )
    combinations.sort(key=lambda c: c.canonical_key)
    return combinations
