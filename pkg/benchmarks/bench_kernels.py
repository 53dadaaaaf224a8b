"""Benchmark the compiled search kernels against the pure-Python fallback.

Runs the automorphism enumeration and regular-subgroup search on a fixed
set of graphs with both backends, cross-checks that the outputs are
identical, and prints a timing comparison.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import sys
import time

from groupgraphs import _kernels_py, cayley, graphs, groups, powergraph

try:
    from groupgraphs import _kernels
except ImportError:
    _kernels = None


def petersen() -> graphs.SimpleGraph:
    edges = (
        [(i, (i + 1) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    )
    return graphs.SimpleGraph.from_edges(10, edges)


def cases() -> list[tuple[str, graphs.SimpleGraph | graphs.Digraph]]:
    z16 = groups.cyclic(16)
    return [
        ("K_8", graphs.SimpleGraph.complete(8)),
        ("Petersen", petersen()),
        ("star K_{1,8}", graphs.SimpleGraph.from_edges(9, [(0, i) for i in range(1, 9)])),
        ("pg(Z12)", powergraph.undirected_power_graph(groups.cyclic(12))),
        ("pg(D6)", powergraph.undirected_power_graph(groups.dihedral(6))),
        ("dpg(Q8)", powergraph.directed_power_graph(groups.quaternion())),
        ("C16", cayley.undirected_cayley(z16, cayley.ConnectionSet(16, (1, 15)))),
        ("Cay(Q8,{1,2,3})",
         cayley.undirected_cayley(groups.quaternion(), cayley.ConnectionSet(8, (1, 2, 3)))),
    ]


def time_backend(kernel, n: int, rows: list[int], repeat: int):
    best_aut = best_reg = float("inf")
    auts = subgroup = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        auts = kernel.search_automorphisms(n, rows)
        t1 = time.perf_counter()
        subgroup = kernel.search_regular_subgroup(n, auts)
        t2 = time.perf_counter()
        best_aut = min(best_aut, t1 - t0)
        best_reg = min(best_reg, t2 - t1)
    return auts, subgroup, best_aut, best_reg


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions per case; best time is reported (default 3)")
    args = parser.parse_args(argv)

    if _kernels is None:
        print("compiled kernel not available; showing pure-Python timings only")

    header = f"{'graph':<18} {'n':>3} {'auts':>6} {'regsub':>6} " \
             f"{'pure aut':>10} {'pure reg':>10}"
    if _kernels is not None:
        header += f" {'cmp aut':>10} {'cmp reg':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for name, graph in cases():
        n, rows = graph.order, list(graph.rows)
        auts_p, sub_p, aut_p, reg_p = time_backend(_kernels_py, n, rows, args.repeat)
        line = f"{name:<18} {n:>3} {len(auts_p):>6} " \
               f"{(len(sub_p) if sub_p else 0):>6} {aut_p:>9.4f}s {reg_p:>9.4f}s"
        if _kernels is not None:
            auts_c, sub_c, aut_c, reg_c = time_backend(_kernels, n, rows, args.repeat)
            if auts_c != auts_p or sub_c != sub_p:
                print(f"MISMATCH on {name}: backends disagree", file=sys.stderr)
                return 1
            total_p, total_c = aut_p + reg_p, aut_c + reg_c
            speedup = total_p / total_c if total_c > 0 else float("inf")
            line += f" {aut_c:>9.4f}s {reg_c:>9.4f}s {speedup:>7.1f}x"
        print(line)

    if _kernels is not None:
        print("\nall outputs identical across backends")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
