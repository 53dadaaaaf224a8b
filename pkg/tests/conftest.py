"""Shared fixtures and independent oracles for the test suite.

The oracle helpers here deliberately avoid the library's optimized code
paths: automorphisms are found by filtering all n! permutations, power
graph adjacency is recomputed from the definition with a double loop,
and group axioms are rechecked with plain triple loops.  Tests compare
the library's answers against these.
"""

from __future__ import annotations

from itertools import permutations

import pytest

from groupgraphs.catalog import CatalogEntry, catalog
from groupgraphs.graphs import Digraph, SimpleGraph
from groupgraphs.groups import FiniteGroup


def petersen_graph() -> SimpleGraph:
    """The Petersen graph: outer 5-cycle, inner 5-cycle at step 2, spokes."""
    edges = (
        [(i, (i + 1) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    )
    return SimpleGraph.from_edges(10, edges)


def brute_force_automorphisms(graph: SimpleGraph | Digraph) -> list[tuple[int, ...]]:
    """All n! permutations filtered by adjacency preservation."""
    n, rows = graph.order, graph.rows
    found = []
    for p in permutations(range(n)):
        if all(
            ((rows[u] >> v) & 1) == ((rows[p[u]] >> p[v]) & 1)
            for u in range(n)
            for v in range(n)
        ):
            found.append(p)
    return found


def naive_power_adjacency(group: FiniteGroup, x: int, y: int) -> tuple[bool, bool]:
    """(x has arc to y, x adjacent to y) recomputed from the definition.

    Powers are taken by iterated multiplication over m = 1 .. 2n, well
    past the period of any element.
    """
    if x == y:
        return False, False
    n = group.order
    powers_x = set()
    powers_y = set()
    px = py = group.identity
    for _ in range(2 * n):
        px = group.mul(px, x)
        py = group.mul(py, y)
        powers_x.add(px)
        powers_y.add(py)
    arc = y in powers_x
    return arc, arc or x in powers_y


def check_group_axioms(table: list[list[int]]) -> None:
    """Assert closure, identity, inverses, and associativity by plain loops."""
    n = len(table)
    assert all(len(row) == n for row in table)
    assert all(0 <= table[a][b] < n for a in range(n) for b in range(n))
    identities = [
        e
        for e in range(n)
        if all(table[e][g] == g and table[g][e] == g for g in range(n))
    ]
    assert len(identities) == 1
    e = identities[0]
    for g in range(n):
        assert any(table[g][h] == e and table[h][g] == e for h in range(n))
    for a in range(n):
        for b in range(n):
            for c in range(n):
                assert table[table[a][b]][c] == table[a][table[b][c]]


def sampled_connection_sets(group: FiniteGroup) -> list[tuple[int, ...]]:
    """The three standard samples: empty, smallest inverse pair, everything.

    The middle sample is the lexicographically smallest non-identity
    element together with its inverse (a single involution when the two
    coincide).  For the trivial group the samples collapse to the empty
    set alone.
    """
    non_identity = [g for g in range(group.order) if g != group.identity]
    sets: list[tuple[int, ...]] = [()]
    if non_identity:
        g = non_identity[0]
        inv = group.inverse(g)
        sets.append((g,) if inv == g else tuple(sorted((g, inv))))
        sets.append(tuple(non_identity))
    out: list[tuple[int, ...]] = []
    for members in sets:
        if members not in out:
            out.append(members)
    return out


@pytest.fixture(scope="session")
def full_catalog() -> list[CatalogEntry]:
    return catalog()
