"""Pure-Python implementations of the hot kernels.

Used when the compiled extension is unavailable (or forced via the
ONTOFREIGHT_PURE_PYTHON environment variable). Signatures mirror
``_speedups`` exactly; both back ends must produce identical results.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

import numpy as np


def enumerate_paths(
    n_nodes: int,
    arc_to: Sequence[int],
    arc_mode: Sequence[int],
    arc_dist: Sequence[float],
    arc_seg: Sequence[int],
    node_arc_start: Sequence[int],
    node_arc_index: Sequence[int],
    node_intermodal: Sequence[int],
    origin: int,
    dest: int,
    max_hops: int,
    max_transfers: int,
    dist_budget: float,
) -> List[Tuple[int, ...]]:
    """Enumerate all constrained simple paths from origin to dest.

    The graph is a directed-arc CSR structure: ``node_arc_index`` slices
    ``[node_arc_start[v] : node_arc_start[v + 1]]`` list the arcs leaving
    node ``v``. A mode change between consecutive arcs is only allowed at
    nodes flagged intermodal and counts against ``max_transfers``; paths
    longer than ``dist_budget`` (with a small absolute tolerance) are
    pruned. Returns tuples of segment indices, one per accepted path.
    """
    budget = dist_budget + 1e-9
    results: List[Tuple[int, ...]] = []
    visited = [False] * n_nodes
    visited[origin] = True
    path_segs: List[int] = []

    def walk(node: int, hops: int, transfers: int, dist: float, last_mode: int) -> None:
        for k in range(node_arc_start[node], node_arc_start[node + 1]):
            arc = node_arc_index[k]
            nxt = arc_to[arc]
            if visited[nxt]:
                continue
            mode = arc_mode[arc]
            t = transfers
            if last_mode >= 0 and mode != last_mode:
                if not node_intermodal[node]:
                    continue
                t += 1
                if t > max_transfers:
                    continue
            d = dist + arc_dist[arc]
            if d > budget or hops + 1 > max_hops:
                continue
            path_segs.append(arc_seg[arc])
            if nxt == dest:
                results.append(tuple(path_segs))
            else:
                visited[nxt] = True
                walk(nxt, hops + 1, t, d, mode)
                visited[nxt] = False
            path_segs.pop()

    walk(origin, 0, 0, 0.0, -1)
    return results


def pareto_mask(values: np.ndarray) -> np.ndarray:
    """Boolean mask of non-dominated rows (all criteria are costs).

    Row j is dominated when some row has every criterion <= row j's with at
    least one strictly smaller.
    """
    values = np.asarray(values, dtype=float)
    n = values.shape[0]
    mask = np.ones(n, dtype=bool)
    for i in range(n):
        if not mask[i]:
            continue
        v = values[i]
        dominated = np.all(values >= v, axis=1) & np.any(values > v, axis=1)
        mask &= ~dominated
    return mask
