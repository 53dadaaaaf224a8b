"""Exception types shared across the package."""


class GroupGraphsError(Exception):
    """Base class for all errors raised by this package."""


# -- multiplication table validation ----------------------------------------

class InvalidOrder(GroupGraphsError):
    """A constructor parameter is outside its allowed range."""


class NotClosed(GroupGraphsError):
    """A table entry is not an element index in [0, n)."""

    def __init__(self, row: int, col: int, entry: object):
        super().__init__(f"table[{row}][{col}] = {entry!r} is not an index in [0, n)")
        self.row = row
        self.col = col
        self.entry = entry


class NoIdentity(GroupGraphsError):
    """No element acts as a two-sided identity."""


class NotInvertible(GroupGraphsError):
    """A row or column of the table is not a permutation of 0..n-1."""

    def __init__(self, axis: str, index: int):
        super().__init__(f"{axis} {index} of the table is not a permutation of 0..n-1")
        self.axis = axis
        self.index = index


class NotAssociative(GroupGraphsError):
    """The table violates associativity; carries one violating triple."""

    def __init__(self, triple: tuple[int, int, int]):
        a, b, c = triple
        super().__init__(f"(a*b)*c != a*(b*c) for (a, b, c) = ({a}, {b}, {c})")
        self.triple = triple


class ElementOutOfRange(GroupGraphsError):
    """An element index is outside [0, n)."""


# -- graphs -----------------------------------------------------------------

class VertexOutOfRange(GroupGraphsError):
    """A vertex index is outside [0, n)."""


class MalformedEncoding(GroupGraphsError):
    """A graph6/digraph6 string does not match the format."""


class UnsupportedOrder(GroupGraphsError):
    """Graph order is outside the supported serialization range (1..62)."""


# -- Cayley graphs ----------------------------------------------------------

class IdentityInConnectionSet(GroupGraphsError):
    """The connection set contains the group identity."""


class NotInverseClosed(GroupGraphsError):
    """The connection set is not closed under inverses; names a violator."""

    def __init__(self, element: int, inverse: int):
        super().__init__(
            f"connection set contains {element} but not its inverse {inverse}"
        )
        self.element = element
        self.inverse = inverse


# -- symmetry search --------------------------------------------------------

class SearchBoundExceeded(GroupGraphsError):
    """The graph is larger than the configured search bound."""

    def __init__(self, order: int, bound: int):
        super().__init__(f"graph order {order} exceeds the search bound {bound}")
        self.order = order
        self.bound = bound


# -- verification harness ---------------------------------------------------

class InconsistentRow(GroupGraphsError):
    """A verification row contradicts the expected classification.

    This signals an implementation bug: the statements being checked are
    exact finite facts, so a clean build never raises it.
    """

    def __init__(self, rows):
        names = ", ".join(r.name for r in rows)
        super().__init__(f"inconsistent verification rows: {names}")
        self.rows = list(rows)
