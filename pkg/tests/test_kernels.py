"""Pure-Python and compiled search kernels agree and dispatch correctly."""

from __future__ import annotations

import pytest

from groupgraphs import _backend, _kernels_py, groups, powergraph, symmetry
from groupgraphs.graphs import Digraph, SimpleGraph

compiled = pytest.importorskip(
    "groupgraphs._kernels", reason="compiled kernel not built"
)


def parity_cases() -> list[SimpleGraph | Digraph]:
    petersen = SimpleGraph.from_edges(
        10,
        [(i, (i + 1) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)],
    )
    return [
        SimpleGraph.complete(1),
        SimpleGraph.complete(6),
        SimpleGraph.edgeless(5),
        SimpleGraph.from_edges(7, [(i, (i + 1) % 7) for i in range(7)]),
        petersen,
        powergraph.undirected_power_graph(groups.cyclic(12)),
        powergraph.undirected_power_graph(groups.dihedral(6)),
        powergraph.directed_power_graph(groups.quaternion()),
        powergraph.directed_power_graph(groups.symmetric(3)),
        Digraph.from_arcs(5, [(i, (i + 1) % 5) for i in range(5)]),
    ]


def test_automorphism_parity() -> None:
    for graph in parity_cases():
        n, rows = graph.order, list(graph.rows)
        pure = _kernels_py.search_automorphisms(n, rows)
        fast = compiled.search_automorphisms(n, rows)
        assert pure == fast, f"mismatch at order {n}"


def test_regular_subgroup_parity() -> None:
    for graph in parity_cases():
        n, rows = graph.order, list(graph.rows)
        auts = _kernels_py.search_automorphisms(n, rows)
        pure = _kernels_py.search_regular_subgroup(n, auts)
        fast = compiled.search_regular_subgroup(n, auts)
        assert pure == fast, f"mismatch at order {n}"


def test_compiled_rejects_unsupported_order() -> None:
    with pytest.raises(ValueError):
        compiled.search_automorphisms(65, [0] * 65)
    with pytest.raises(ValueError):
        compiled.search_automorphisms(0, [])


def test_backend_dispatch_large_order_falls_back_to_pure() -> None:
    # 70 vertices exceeds the compiled kernel's 64-bit rows; the dispatcher
    # must route to the pure implementation, which has no such limit.
    cycle = SimpleGraph.from_edges(70, [(i, (i + 1) % 70) for i in range(70)])
    auts = symmetry.automorphisms(cycle, bound=70)
    assert len(auts) == 140  # dihedral symmetries of C_70


def test_backend_name_reports_compiled() -> None:
    assert _backend.backend_name() == "compiled"


def test_dispatch_equals_direct_kernel_calls() -> None:
    graph = powergraph.undirected_power_graph(groups.dihedral(5))
    n, rows = graph.order, list(graph.rows)
    via_backend = _backend.search_automorphisms(n, rows)
    assert via_backend == compiled.search_automorphisms(n, rows)
    sub = _backend.search_regular_subgroup(n, via_backend)
    assert sub == compiled.search_regular_subgroup(n, via_backend)
