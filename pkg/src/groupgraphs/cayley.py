"""Cayley graphs from a group and a connection set.

The directed Cayley graph on a group has an arc (g, h) exactly when
g^-1 * h lies in the connection set; with an inverse-closed connection set
the undirected Cayley graph is the same relation with orientation dropped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import ElementOutOfRange, IdentityInConnectionSet, NotInverseClosed
from .graphs import Digraph, SimpleGraph
from .groups import FiniteGroup
from .perms import Permutation


@dataclass(frozen=True)
class ConnectionSet:
    """A subset of a group's non-identity elements, by index.

    No generation or connectivity condition is imposed: the empty set is
    legal (it yields an arcless graph) and non-generating sets simply give
    disconnected Cayley graphs.  Inverse closure is a computed predicate,
    required only by the undirected construction.
    """

    order: int
    members: frozenset[int] = field(default_factory=frozenset)

    def __init__(self, order: int, members: Iterable[int] = ()):
        object.__setattr__(self, "order", int(order))
        object.__setattr__(self, "members", frozenset(int(m) for m in members))
        for m in self.members:
            if not 0 <= m < self.order:
                raise ElementOutOfRange(
                    f"connection set member {m} not in [0, {self.order})"
                )

    def inverse_closure_violation(self, group: FiniteGroup) -> tuple[int, int] | None:
        """A member whose inverse is missing, with that inverse, or None."""
        for m in sorted(self.members):
            inv = group.inverse(m)
            if inv not in self.members:
                return m, inv
        return None

    def is_inverse_closed(self, group: FiniteGroup) -> bool:
        return self.inverse_closure_violation(group) is None

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)


def _validate(group: FiniteGroup, connection: ConnectionSet) -> None:
    if connection.order != group.order:
        raise ValueError(
            f"connection set is for order {connection.order}, group has order {group.order}"
        )
    for m in connection.members:
        if not 0 <= m < group.order:
            raise ElementOutOfRange(f"connection set member {m} not in [0, {group.order})")
    if group.identity in connection.members:
        raise IdentityInConnectionSet(
            f"identity {group.identity} may not appear in a connection set"
        )


def directed_cayley(group: FiniteGroup, connection: ConnectionSet) -> Digraph:
    """Arc (g, h) iff g^-1 * h is in the connection set.

    Every vertex has out-degree and in-degree equal to the size of the
    connection set.
    """
    _validate(group, connection)
    table = group.table
    rows = [0] * group.order
    for g in range(group.order):
        row = 0
        for c in connection.members:
            row |= 1 << int(table[g, c])
        rows[g] = row
    return Digraph(rows)


def undirected_cayley(group: FiniteGroup, connection: ConnectionSet) -> SimpleGraph:
    """The directed Cayley graph with orientation dropped.

    Requires an inverse-closed connection set, which makes the arc
    relation symmetric; the result is regular of degree |connection|.
    """
    violation = connection.inverse_closure_violation(group)
    if violation is not None:
        raise NotInverseClosed(*violation)
    return directed_cayley(group, connection).underlying_undirected()


def left_translation(group: FiniteGroup, a: int) -> Permutation:
    """The permutation v -> a * v.

    Left translations preserve the arc relation of every Cayley graph on
    the group, because (a*g)^-1 * (a*h) = g^-1 * h; together they act
    transitively and freely on the vertices.
    """
    if not 0 <= a < group.order:
        raise ElementOutOfRange(f"element {a} not in [0, {group.order})")
    return Permutation(int(x) for x in group.table[a])
