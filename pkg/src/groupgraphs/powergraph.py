"""Power graphs of finite groups.

The directed power graph has an arc x -> y exactly when x != y and y is a
positive power of x; the undirected power graph joins distinct x, y when
either is a positive power of the other.
"""

from __future__ import annotations

from .graphs import Digraph, SimpleGraph
from .groups import FiniteGroup


def directed_power_graph(group: FiniteGroup) -> Digraph:
    """Arcs x -> y for y != x a positive power of x.

    Powers are enumerated only up to the order of x (they cycle after
    that), so construction costs the sum of element orders rather than
    O(n^3).  Every x != e gets an arc to the identity.
    """
    n = group.order
    table = group.table
    rows = [0] * n
    for x in range(n):
        row = 0
        y = int(table[x, x])
        while y != x:
            row |= 1 << y
            y = int(table[y, x])
        rows[x] = row & ~(1 << x)
    return Digraph(rows)


def undirected_power_graph(group: FiniteGroup) -> SimpleGraph:
    """Distinct x, y adjacent iff x is a power of y or y is a power of x.

    Built as the underlying undirected graph of the directed power graph,
    which is the same relation with orientation dropped.
    """
    return directed_power_graph(group).underlying_undirected()
