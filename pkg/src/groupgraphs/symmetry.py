"""Graph automorphism groups, vertex-transitivity, and Cayley recognition.

A graph is a Cayley graph of some group exactly when its automorphism
group contains a regular subgroup: one acting transitively with only the
identity fixing a vertex.  Recognition therefore runs cheap necessary
conditions first (every Cayley graph is vertex-transitive, every
vertex-transitive graph has constant degrees) and only then searches the
full automorphism list for a regular subgroup.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import _backend
from .cayley import ConnectionSet, directed_cayley, undirected_cayley
from .errors import SearchBoundExceeded
from .graphs import Digraph, SimpleGraph
from .groups import FiniteGroup, cyclic
from .perms import Permutation

# Full automorphism enumeration is exponential in the worst case; these
# bounds keep the default entry points at desk scale.
DEFAULT_AUT_BOUND = 16
DEFAULT_CAYLEY_BOUND = 12

Graph = SimpleGraph | Digraph


class NotCayleyReason(enum.Enum):
    NOT_REGULAR_DEGREE = "NotRegularDegree"
    NOT_VERTEX_TRANSITIVE = "NotVertexTransitive"
    NO_REGULAR_SUBGROUP = "NoRegularSubgroup"


@dataclass(frozen=True)
class NotCayley:
    """Negative answer from is_cayley, with the earliest failing reason."""

    reason: NotCayleyReason

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class CayleyWitness:
    """A group, connection set, and vertex correspondence that rebuild a graph.

    vertex_map[v] is the unique witness automorphism sending vertex 0 to
    v; the group multiplies by composing those automorphisms, so vertex
    indices double as element indices and reconstruct() reproduces the
    recognized graph arc-for-arc.
    """

    group: FiniteGroup
    connection: ConnectionSet
    vertex_map: tuple[Permutation, ...]
    directed: bool

    def __bool__(self) -> bool:
        return True

    def reconstruct(self) -> Graph:
        if self.directed:
            return directed_cayley(self.group, self.connection)
        return undirected_cayley(self.group, self.connection)

    def to_json_dict(self) -> dict:
        return {
            "cayley": True,
            "directed": self.directed,
            "group_order": self.group.order,
            "group_table": [[int(x) for x in row] for row in self.group.table],
            "connection_set": sorted(self.connection.members),
            "vertex_map": [list(p.images) for p in self.vertex_map],
        }


def _degrees_constant(graph: Graph) -> bool:
    if isinstance(graph, Digraph):
        return graph.has_constant_in_out_degrees()
    return graph.is_regular()


def _uniform(graph: Graph) -> bool:
    """Complete or edgeless: Cayley for trivial reasons, no search needed."""
    if isinstance(graph, Digraph):
        return graph.is_complete() or graph.is_arcless()
    return graph.is_complete() or graph.is_edgeless()


def automorphisms(graph: Graph, bound: int = DEFAULT_AUT_BOUND) -> list[Permutation]:
    """The full automorphism list, in lexicographic order of image arrays.

    Adjacency-preserving for undirected graphs, arc-preserving for
    digraphs.  The list always contains the identity and is closed under
    composition and inversion.
    """
    if graph.order > bound:
        raise SearchBoundExceeded(graph.order, bound)
    images = _backend.search_automorphisms(graph.order, graph.rows)
    return [Permutation(p) for p in images]


def is_vertex_transitive(graph: Graph, bound: int = DEFAULT_AUT_BOUND) -> bool:
    """True iff the automorphisms send vertex 0 to every vertex.

    Non-constant degrees reject without any search (a vertex-transitive
    graph is regular); complete and edgeless graphs accept likewise.
    """
    if not _degrees_constant(graph):
        return False
    if _uniform(graph):
        return True
    if graph.order > bound:
        raise SearchBoundExceeded(graph.order, bound)
    images = _backend.search_automorphisms(graph.order, graph.rows)
    return len({p[0] for p in images}) == graph.order


def find_regular_subgroup(auts: list[Permutation], n: int) -> list[Permutation] | None:
    """A regular subgroup of the (complete) automorphism list, or None.

    Regular means: exactly one member sends 0 to each vertex, and the set
    is closed under composition.  Candidates are tried in lexicographic
    order of image arrays, so the result is deterministic; members are
    returned ordered by their image of 0.
    """
    ordered = sorted(auts)
    result = _backend.search_regular_subgroup(n, [p.images for p in ordered])
    if result is None:
        return None
    members = [Permutation(p) for p in result]
    _check_regular(members, {p.images for p in ordered}, n)
    return members


def _check_regular(members: list[Permutation], aut_images: set, n: int) -> None:
    # guards against a non-closed input list being handed to the kernel
    if len(members) != n:
        raise ValueError("regular subgroup candidate has wrong size")
    for i, p in enumerate(members):
        if p.images not in aut_images:
            raise ValueError("kernel returned a permutation outside the input list; "
                             "was the automorphism list closed under composition?")
        if p(0) != i:
            raise ValueError("regular subgroup candidate misses a vertex")
    images = {p.images for p in members}
    for p in members:
        for q in members:
            if (p * q).images not in images:
                raise ValueError("regular subgroup candidate is not closed")


def _rotation_witness(graph: Graph) -> CayleyWitness:
    """Witness for a complete or edgeless graph: rotations of a cyclic group."""
    n = graph.order
    group = cyclic(n)
    members = () if _edge_row(graph, 0) == 0 else range(1, n)
    connection = ConnectionSet(n, members)
    vertex_map = tuple(
        Permutation((v + i) % n for i in range(n)) for v in range(n)
    )
    return CayleyWitness(group, connection, vertex_map, isinstance(graph, Digraph))


def _edge_row(graph: Graph, v: int) -> int:
    return graph.rows[v]


def _witness_from_subgroup(graph: Graph, members: list[Permutation]) -> CayleyWitness:
    n = graph.order
    # sigma_g . sigma_h = sigma_{g*h} turns the image arrays into the table
    table = [list(p.images) for p in members]
    group = FiniteGroup(table)
    row = graph.rows[0]
    connection = ConnectionSet(n, (v for v in range(n) if (row >> v) & 1))
    return CayleyWitness(group, connection, tuple(members), isinstance(graph, Digraph))


def is_cayley(graph: Graph, bound: int = DEFAULT_CAYLEY_BOUND) -> CayleyWitness | NotCayley:
    """Decide whether the graph is a Cayley graph of some group.

    Checks run cheapest-first and report the earliest failure:

    1. constant degrees (in and out separately for digraphs), else
       NotRegularDegree;
    2. complete/edgeless graphs accept immediately with a cyclic-group
       witness;
    3. vertex-transitivity over the full automorphism list, else
       NotVertexTransitive;
    4. regular-subgroup search, else NoRegularSubgroup.

    Only steps 3-4 are subject to `bound`; graphs of any order can still
    be decided by the cheap paths.
    """
    if not _degrees_constant(graph):
        return NotCayley(NotCayleyReason.NOT_REGULAR_DEGREE)
    if _uniform(graph):
        return _rotation_witness(graph)
    n = graph.order
    if n > bound:
        raise SearchBoundExceeded(n, bound)
    images = _backend.search_automorphisms(n, graph.rows)
    if len({p[0] for p in images}) != n:
        return NotCayley(NotCayleyReason.NOT_VERTEX_TRANSITIVE)
    subgroup = _backend.search_regular_subgroup(n, images)
    if subgroup is None:
        return NotCayley(NotCayleyReason.NO_REGULAR_SUBGROUP)
    members = [Permutation(p) for p in subgroup]
    _check_regular(members, set(images), n)
    return _witness_from_subgroup(graph, members)
