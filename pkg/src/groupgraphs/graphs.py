"""Loop-free graphs and digraphs on vertex indices 0..n-1.

Adjacency is stored as packed bit-rows (one Python int per vertex) so the
automorphism search kernels can test adjacency with shifts and masks.
Serialization covers the standard graph6/digraph6 formats for n <= 62 and
DOT output for human inspection.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import MalformedEncoding, UnsupportedOrder, VertexOutOfRange

GRAPH6_MAX_ORDER = 62


def _check_rows(order: int, rows: Sequence[int]) -> tuple[int, ...]:
    if order < 1:
        raise ValueError(f"graph order must be positive, got {order}")
    if len(rows) != order:
        raise ValueError(f"expected {order} bit-rows, got {len(rows)}")
    full = (1 << order) - 1
    out = []
    for v, row in enumerate(rows):
        row = int(row)
        if row & ~full:
            raise VertexOutOfRange(f"row {v} has bits set outside [0, {order})")
        if (row >> v) & 1:
            raise ValueError(f"self-loop at vertex {v}")
        out.append(row)
    return tuple(out)


class SimpleGraph:
    """An undirected loop-free graph; adjacency rows are symmetric bitmasks."""

    __slots__ = ("order", "rows")

    def __init__(self, rows: Sequence[int]):
        self.rows = _check_rows(len(rows), rows)
        self.order = len(self.rows)
        for u in range(self.order):
            for v in range(u + 1, self.order):
                if ((self.rows[u] >> v) & 1) != ((self.rows[v] >> u) & 1):
                    raise ValueError(f"adjacency not symmetric at pair ({u}, {v})")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        rows = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise VertexOutOfRange(f"edge ({u}, {v}) not inside [0, {order})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(rows)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> SimpleGraph:
        rows = [sum((1 << v) for v, x in enumerate(row) if x) for row in matrix]
        return cls(rows)

    @classmethod
    def complete(cls, order: int) -> SimpleGraph:
        full = (1 << order) - 1
        return cls([full & ~(1 << v) for v in range(order)])

    @classmethod
    def edgeless(cls, order: int) -> SimpleGraph:
        return cls([0] * order)

    def _check_vertex(self, v: int) -> int:
        if not 0 <= v < self.order:
            raise VertexOutOfRange(f"vertex {v} not in [0, {self.order})")
        return v

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        row = self.rows[self._check_vertex(v)]
        return [u for u in range(self.order) if (row >> u) & 1]

    def degree(self, v: int) -> int:
        return self.rows[self._check_vertex(v)].bit_count()

    def degree_sequence(self) -> list[int]:
        """Degrees as a descending list."""
        return sorted((r.bit_count() for r in self.rows), reverse=True)

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in range(u + 1, self.order)
                if (self.rows[u] >> v) & 1]

    def is_complete(self) -> bool:
        full = (1 << self.order) - 1
        return all(self.rows[v] == full & ~(1 << v) for v in range(self.order))

    def is_edgeless(self) -> bool:
        return all(r == 0 for r in self.rows)

    def is_regular(self) -> bool:
        degrees = {r.bit_count() for r in self.rows}
        return len(degrees) == 1

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SimpleGraph)
                and self.order == other.order and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash(("SimpleGraph", self.rows))

    def __repr__(self) -> str:
        return f"<SimpleGraph n={self.order} edges={self.edge_count()}>"


class Digraph:
    """A loop-free directed graph; rows[v] is the bitmask of out-neighbors."""

    __slots__ = ("order", "rows")

    def __init__(self, rows: Sequence[int]):
        self.rows = _check_rows(len(rows), rows)
        self.order = len(self.rows)

    @classmethod
    def from_arcs(cls, order: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
        rows = [0] * order
        for u, v in arcs:
            if not (0 <= u < order and 0 <= v < order):
                raise VertexOutOfRange(f"arc ({u}, {v}) not inside [0, {order})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
        return cls(rows)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> Digraph:
        rows = [sum((1 << v) for v, x in enumerate(row) if x) for row in matrix]
        return cls(rows)

    def _check_vertex(self, v: int) -> int:
        if not 0 <= v < self.order:
            raise VertexOutOfRange(f"vertex {v} not in [0, {self.order})")
        return v

    def has_arc(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.rows[u] >> v) & 1)

    def out_degree(self, v: int) -> int:
        return self.rows[self._check_vertex(v)].bit_count()

    def in_degree(self, v: int) -> int:
        self._check_vertex(v)
        return sum((r >> v) & 1 for r in self.rows)

    def arc_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in range(self.order)
                if (self.rows[u] >> v) & 1]

    def has_constant_in_out_degrees(self) -> bool:
        """True iff all in-degrees agree and all out-degrees agree."""
        outs = {r.bit_count() for r in self.rows}
        if len(outs) != 1:
            return False
        ins = {self.in_degree(v) for v in range(self.order)}
        return len(ins) == 1

    def is_complete(self) -> bool:
        """True iff every ordered pair of distinct vertices is an arc."""
        full = (1 << self.order) - 1
        return all(self.rows[v] == full & ~(1 << v) for v in range(self.order))

    def is_arcless(self) -> bool:
        return all(r == 0 for r in self.rows)

    def underlying_undirected(self) -> SimpleGraph:
        """Forget orientation: u and v become adjacent iff either arc exists."""
        rows = list(self.rows)
        for u in range(self.order):
            r = self.rows[u]
            v = 0
            while r:
                if r & 1:
                    rows[v] |= 1 << u
                r >>= 1
                v += 1
        return SimpleGraph(rows)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Digraph)
                and self.order == other.order and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash(("Digraph", self.rows))

    def __repr__(self) -> str:
        return f"<Digraph n={self.order} arcs={self.arc_count()}>"


# -- graph6 / digraph6 ------------------------------------------------------
#
# graph6:   byte n+63, then the upper triangle read column by column
#           (pairs (0,1), (0,2), (1,2), (0,3), ...) packed 6 bits per byte,
#           each byte offset by 63; zero padding to a byte boundary.
# digraph6: '&', byte n+63, then the full n*n matrix row by row, packed the
#           same way.

def _pack_bits(bits: list[int]) -> str:
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i: i + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return "".join(chars)


def _unpack_bits(data: str, expected: int, context: str) -> list[int]:
    need = (expected + 5) // 6
    if len(data) != need:
        raise MalformedEncoding(
            f"{context}: expected {need} data bytes for the declared order, got {len(data)}"
        )
    bits: list[int] = []
    for ch in data:
        value = ord(ch) - 63
        if not 0 <= value < 64:
            raise MalformedEncoding(f"{context}: byte {ch!r} outside the printable range")
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[expected:]):
        raise MalformedEncoding(f"{context}: nonzero padding bits")
    return bits[:expected]


def _header_order(ch: str, context: str) -> int:
    n = ord(ch) - 63
    if n > GRAPH6_MAX_ORDER:
        raise UnsupportedOrder(
            f"{context}: multi-byte order headers (n > {GRAPH6_MAX_ORDER}) are not supported"
        )
    if n < 1:
        raise MalformedEncoding(f"{context}: declared order {n} is not positive")
    return n


def to_graph6(graph: SimpleGraph) -> str:
    if graph.order > GRAPH6_MAX_ORDER:
        raise UnsupportedOrder(f"graph6 supports n <= {GRAPH6_MAX_ORDER}, got {graph.order}")
    bits = [(graph.rows[u] >> v) & 1
            for v in range(1, graph.order) for u in range(v)]
    return chr(graph.order + 63) + _pack_bits(bits)


def from_graph6(text: str) -> SimpleGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise MalformedEncoding("graph6: empty string")
    if s.startswith("&"):
        raise MalformedEncoding("graph6: '&' marks a digraph6 line; use from_digraph6")
    n = _header_order(s[0], "graph6")
    bits = _unpack_bits(s[1:], n * (n - 1) // 2, "graph6")
    rows = [0] * n
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            i += 1
    return SimpleGraph(rows)


def to_digraph6(graph: Digraph) -> str:
    if graph.order > GRAPH6_MAX_ORDER:
        raise UnsupportedOrder(f"digraph6 supports n <= {GRAPH6_MAX_ORDER}, got {graph.order}")
    bits = [(graph.rows[u] >> v) & 1
            for u in range(graph.order) for v in range(graph.order)]
    return "&" + chr(graph.order + 63) + _pack_bits(bits)


def from_digraph6(text: str) -> Digraph:
    s = text.strip()
    if s.startswith(">>digraph6<<"):
        s = s[len(">>digraph6<<"):]
    if not s.startswith("&"):
        raise MalformedEncoding("digraph6: missing '&' prefix")
    s = s[1:]
    if not s:
        raise MalformedEncoding("digraph6: empty after prefix")
    n = _header_order(s[0], "digraph6")
    bits = _unpack_bits(s[1:], n * n, "digraph6")
    rows = [0] * n
    i = 0
    for u in range(n):
        for v in range(n):
            if bits[i]:
                if u == v:
                    raise MalformedEncoding(f"digraph6: self-loop at vertex {u}")
                rows[u] |= 1 << v
            i += 1
    return Digraph(rows)


def to_dot(graph: SimpleGraph | Digraph, labels: Sequence[str] | None = None) -> str:
    """DOT text with caller-supplied vertex labels, for human inspection."""
    directed = isinstance(graph, Digraph)
    if labels is not None and len(labels) != graph.order:
        raise ValueError("need one label per vertex")
    lines = ["digraph {" if directed else "graph {"]
    for v in range(graph.order):
        label = labels[v] if labels is not None else str(v)
        lines.append(f'  {v} [label="{label}"];')
    if directed:
        lines.extend(f"  {u} -> {v};" for u, v in graph.arcs())
    else:
        lines.extend(f"  {u} -- {v};" for u, v in graph.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
