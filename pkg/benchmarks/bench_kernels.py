#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times constrained path enumeration on progressively denser random networks
and the Pareto mask on random cost tables. Run from the repo root:

    python benchmarks/bench_kernels.py
"""

import random
import time

import numpy as np

from ontofreight._kernels import py_kernels

try:
    from ontofreight._kernels import _speedups
except ImportError:
    _speedups = None

from ontofreight.freightnet import (
    EnumerationConstraints,
    Hub,
    Segment,
    TransportNetwork,
    enumerate_combinations,
)


def build_network(n_nodes: int, n_edges: int, seed: int) -> TransportNetwork:
    rng = random.Random(seed)
    hubs = [Hub(id=f"h{i}", name=f"H{i}", intermodal=rng.random() < 0.7)
            for i in range(n_nodes)]
    segments = []
    for e in range(n_edges):
        a, b = rng.sample(range(n_nodes), 2)
        segments.append(Segment(
            id=f"e{e}", from_hub=f"h{a}", to_hub=f"h{b}",
            mode=rng.choice(("road", "rail", "water")),
            distance_km=rng.uniform(5.0, 80.0),
        ))
    return TransportNetwork(hubs, segments)


def time_enumeration(backend_name: str, kernels, network, constraints) -> tuple:
    # enumerate_combinations resolves the kernel at import time, so swap it
    # in the paths module for the duration of the measurement.
    import ontofreight.freightnet.paths as paths

    original = paths.enumerate_paths
    paths.enumerate_paths = kernels.enumerate_paths
    try:
        started = time.perf_counter()
        combos = enumerate_combinations(network, "h0", "h1", constraints)
        elapsed = time.perf_counter() - started
    finally:
        paths.enumerate_paths = original
    return elapsed, len(combos)


def time_pareto(kernels, values: np.ndarray) -> tuple:
    started = time.perf_counter()
    mask = kernels.pareto_mask(values)
    elapsed = time.perf_counter() - started
    return elapsed, int(np.asarray(mask).sum())


def main() -> None:
    backends = [("python", py_kernels)]
    if _speedups is not None:
        backends.append(("compiled", _speedups))
    else:
        print("compiled extension unavailable; benchmarking fallback only")

    print("== constrained path enumeration ==")
    print(f"{'nodes':>6} {'edges':>6} {'hops':>5} {'paths':>8} "
          + "".join(f"{name:>12}" for name, _ in backends) + "  speedup")
    for n_nodes, n_edges, max_hops in (
        (20, 60, 6), (30, 120, 7), (40, 200, 7), (50, 300, 8),
    ):
        network = build_network(n_nodes, n_edges, seed=n_nodes)
        constraints = EnumerationConstraints(
            max_hops=max_hops, detour_factor=2.5, max_transfers=3
        )
        times = {}
        count = None
        for name, kernels in backends:
            elapsed, count = time_enumeration(name, kernels, network, constraints)
            times[name] = elapsed
        speedup = (times["python"] / times["compiled"]) if "compiled" in times else 1.0
        print(f"{n_nodes:>6} {n_edges:>6} {max_hops:>5} {count:>8} "
              + "".join(f"{times[name]:>11.4f}s" for name, _ in backends)
              + f"  {speedup:6.1f}x")

    print("\n== pareto mask ==")
    print(f"{'rows':>6} {'front':>6} "
          + "".join(f"{name:>12}" for name, _ in backends) + "  speedup")
    rng = np.random.default_rng(7)
    for rows in (500, 2000, 5000, 10000):
        values = np.ascontiguousarray(rng.uniform(0, 100, size=(rows, 5)))
        times = {}
        front = None
        for name, kernels in backends:
            elapsed, front = time_pareto(kernels, values)
            times[name] = elapsed
        speedup = (times["python"] / times["compiled"]) if "compiled" in times else 1.0
        print(f"{rows:>6} {front:>6} "
              + "".join(f"{times[name]:>11.4f}s" for name, _ in backends)
              + f"  {speedup:6.1f}x")


if __name__ == "__main__":
    main()
