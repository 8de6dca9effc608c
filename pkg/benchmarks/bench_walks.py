"""Benchmark the closed-walk enumeration kernels (compiled vs pure).

Runs the raw DFS over all start darts for each configured case and
reports nodes visited, wall time, and throughput for both kernels.

    python3 benchmarks/bench_walks.py
    python3 benchmarks/bench_walks.py --preset genus --g 4 --trace-max 44 --repeat 5
"""

import argparse
import array
import statistics
import time

from zeroshear import _walkpure, preset

try:
    from zeroshear import _walkcore
except ImportError:
    _walkcore = None


def run_kernel(kernel, nl, nr, n_darts, trace_max):
    paths = 0
    nodes = 0
    t0 = time.perf_counter()
    for start in range(n_darts):
        p, n, _ = kernel.explore_from(nl, nr, start, trace_max, -1, True, 0)
        paths += len(p)
        nodes += n
    return time.perf_counter() - t0, nodes, paths


def bench_case(name, graph, trace_max, repeat):
    nl_arr = array.array("i", graph.next_left)
    nr_arr = array.array("i", graph.next_right)
    rows = []
    kernels = [("pure", _walkpure, graph.next_left, graph.next_right)]
    if _walkcore is not None:
        kernels.append(("compiled", _walkcore, nl_arr, nr_arr))
    baseline = None
    for kname, kernel, nl, nr in kernels:
        times = []
        for _ in range(repeat):
            dt, nodes, paths = run_kernel(kernel, nl, nr, graph.n_darts, trace_max)
            times.append(dt)
        best = min(times)
        med = statistics.median(times)
        if kname == "pure":
            baseline = best
        rows.append((kname, best, med, nodes, paths))
    print(f"\n{name}  (darts={graph.n_darts}, trace_max={trace_max})")
    for kname, best, med, nodes, paths in rows:
        speed = nodes / best / 1e6
        rel = f"  {baseline / best:5.1f}x" if kname == "compiled" else "       "
        print(
            f"  {kname:9s} best {best * 1e3:9.2f} ms   median {med * 1e3:9.2f} ms   "
            f"{nodes:>9d} nodes   {speed:7.2f} Mnodes/s{rel}   {paths} closed paths"
        )


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--preset", default=None)
    ap.add_argument("--g", type=int, default=None)
    ap.add_argument("--trace-max", type=int, default=None)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if _walkcore is None:
        print("note: compiled kernel unavailable; benchmarking the pure kernel only")

    if args.preset:
        surface = preset(args.preset, args.g)
        tm = args.trace_max or 40
        label = args.preset if args.g is None else f"{args.preset}(g={args.g})"
        bench_case(label, surface.dual, tm, args.repeat)
        return

    cases = [
        ("sphere4", preset("sphere4"), 40),
        ("torus16", preset("torus16"), 34),
        ("torus16", preset("torus16"), 44),
        ("genus(g=2)", preset("genus", 2), 38),
        ("genus(g=3)", preset("genus", 3), 38),
        ("genus(g=5)", preset("genus", 5), 38),
    ]
    for name, surface, tm in cases:
        bench_case(name, surface.dual, tm, args.repeat)


if __name__ == "__main__":
    main()
