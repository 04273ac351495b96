# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels.

Same contracts as ``py_kernels``: constrained simple-path enumeration over
a CSR arc structure, and the Pareto non-domination mask. The DFS is
iterative so deep paths cannot hit the recursion limit.
"""

import numpy as np


def enumerate_paths(
    int n_nodes,
    int[::1] arc_to,
    int[::1] arc_mode,
    double[::1] arc_dist,
    int[::1] arc_seg,
    int[::1] node_arc_start,
    int[::1] node_arc_index,
    unsigned char[::1] node_intermodal,
    int origin,
    int dest,
    int max_hops,
    int max_transfers,
    double dist_budget,
):
    cdef double budget = dist_budget + 1e-9
    cdef list results = []
    cdef unsigned char[::1] visited = np.zeros(n_nodes, dtype=np.uint8)
    # Per-depth DFS frames (depth is bounded by max_hops).
    cdef int[::1] frame_node = np.zeros(max_hops + 1, dtype=np.intc)
    cdef int[::1] frame_cursor = np.zeros(max_hops + 1, dtype=np.intc)
    cdef int[::1] frame_transfers = np.zeros(max_hops + 1, dtype=np.intc)
    cdef int[::1] frame_mode = np.zeros(max_hops + 1, dtype=np.intc)
    cdef double[::1] frame_dist = np.zeros(max_hops + 1, dtype=np.float64)
    cdef int[::1] path_segs = np.zeros(max_hops + 1, dtype=np.intc)

    cdef int depth = 0
    cdef int node, cursor, arc, nxt, mode, t, i
    cdef double d

    if max_hops < 1:
        return results

    visited[origin] = 1
    frame_node[0] = origin
    frame_cursor[0] = node_arc_start[origin]
    frame_transfers[0] = 0
    frame_mode[0] = -1
    frame_dist[0] = 0.0

    while depth >= 0:
        node = frame_node[depth]
        cursor = frame_cursor[depth]
        if cursor >= node_arc_start[node + 1]:
            visited[node] = 0
            depth -= 1
            continue
        frame_cursor[depth] = cursor + 1
        arc = node_arc_index[cursor]
        nxt = arc_to[arc]
        if visited[nxt]:
            continue
        mode = arc_mode[arc]
        t = frame_transfers[depth]
        if frame_mode[depth] >= 0 and mode != frame_mode[depth]:
            if not node_intermodal[node]:
                continue
            t += 1
            if t > max_transfers:
                continue
        d = frame_dist[depth] + arc_dist[arc]
        if d > budget or depth + 1 > max_hops:
            continue
        path_segs[depth] = arc_seg[arc]
        if nxt == dest:
            results.append(tuple([path_segs[i] for i in range(depth + 1)]))
            continue
        depth += 1
        visited[nxt] = 1
        frame_node[depth] = nxt
        frame_cursor[depth] = node_arc_start[nxt]
        frame_transfers[depth] = t
        frame_mode[depth] = mode
        frame_dist[depth] = d
    return results


def pareto_mask(double[:, ::1] values):
    cdef Py_ssize_t n = values.shape[0]
    cdef Py_ssize_t k = values.shape[1]
    mask_arr = np.ones(n, dtype=bool)
    cdef unsigned char[::1] mask = mask_arr.view(np.uint8)
    cdef Py_ssize_t i, j, c
    cdef bint all_le, any_lt
    for i in range(n):
        for j in range(n):
            if j == i or not mask[j]:
                continue
            all_le = True
            any_lt = False
            for c in range(k):
                if values[j, c] > values[i, c]:
                    all_le = False
                    break
                if values[j, c] < values[i, c]:
                    any_lt = True
            if all_le and any_lt:
                mask[i] = 0
                break
    return mask_arr
