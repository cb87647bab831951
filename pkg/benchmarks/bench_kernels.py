"""Time the numba kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Each workload is run once per backend to compile and fill caches, then timed
``--repeat`` times with the lru caches cleared; the best time is reported.
"""

import argparse
import time

from ramseydeg import _accel, kernels
from ramseydeg.arrows import ArrowQuery, arrow_check
from ramseydeg.canonical import _aut_chain, _canon, automorphism_order, certificate
from ramseydeg.classes import enumerate_graphs
from ramseydeg.degrees import sigma
from ramseydeg.structures import complete_graph, complete_multipartite, cycle_graph, empty_graph

SIX = [g for g in enumerate_graphs(6) if g.vertex_count == 6]


def colorings():
    for g in (cycle_graph(10), empty_graph(9), complete_multipartite([3, 3, 3])):
        sigma(g, 4)


def canonical():
    for g in SIX:
        certificate(g)


def automorphisms():
    for g in SIX + [cycle_graph(10), empty_graph(8)]:
        automorphism_order(g)


def arrows():
    k2, k3 = complete_graph(2), complete_graph(3)
    arrow_check(ArrowQuery(complete_graph(6), k3, k2, 2))
    arrow_check(ArrowQuery(complete_graph(5), k3, k2, 2))


WORKLOADS = {
    "proper colorings": colorings,
    "canonical labels (156 graphs)": canonical,
    "automorphism orders": automorphisms,
    "arrow K6/K5 -> K3": arrows,
}


def best_time(fn, repeat):
    times = []
    for _ in range(repeat):
        _canon.cache_clear()
        _aut_chain.cache_clear()
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = ["numba", "numpy"] if _accel.HAVE_NUMBA else ["numpy"]
    print(f"{'workload':32s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for name, fn in WORKLOADS.items():
        row = []
        for b in backends:
            with kernels.use_backend(b):
                fn()
                row.append(best_time(fn, args.repeat))
        line = f"{name:32s}" + "".join(f"{t * 1e3:10.2f}ms" for t in row)
        if len(row) == 2:
            line += f"{row[1] / row[0]:11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
