"""Built-in catalog of all finite groups of order at most 15.

Up to isomorphism there are 28 groups of order <= 15.  Orders 1-7, 9-11,
and 13-15 contain only cyclic groups, direct products of cyclic groups,
and dihedral groups; order 8 adds the quaternion group and order 12 adds
the alternating group ``A4`` and the dicyclic group ``Dic3``.

The catalog is deterministic: entries are sorted by order, and within an
order they appear in a fixed conventional sequence (cyclic first, then
abelian products, then the non-abelian groups).
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import (
    FiniteGroup,
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    quaternion,
    symmetric,
)

#: Number of groups of each order 1..15, up to isomorphism.
GROUP_COUNTS: dict[int, int] = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5,
    9: 2, 10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1,
}

MAX_CATALOG_ORDER = 15


@dataclass(frozen=True)
class CatalogEntry:
    """A named group from the built-in catalog."""

    name: str
    order: int
    group: FiniteGroup

    def __post_init__(self) -> None:
        if self.group.order != self.order:
            raise ValueError(
                f"catalog entry {self.name!r} declares order {self.order} "
                f"but its table has order {self.group.order}"
            )


def _named(group: FiniteGroup, name: str) -> CatalogEntry:
    group.name = name
    return CatalogEntry(name=name, order=group.order, group=group)


def catalog(max_order: int = MAX_CATALOG_ORDER) -> list[CatalogEntry]:
    """Return all groups of order <= ``max_order`` (up to isomorphism).

    ``max_order`` must lie in ``1..15``.  The result is freshly built on
    every call so callers may mutate group names without side effects.
    """
    if not 1 <= max_order <= MAX_CATALOG_ORDER:
        raise ValueError(
            f"max_order must be between 1 and {MAX_CATALOG_ORDER}, got {max_order}"
        )
    entries = [
        _named(cyclic(1), "Z1"),
        _named(cyclic(2), "Z2"),
        _named(cyclic(3), "Z3"),
        _named(cyclic(4), "Z4"),
        _named(direct_product(cyclic(2), cyclic(2)), "Z2xZ2"),
        _named(cyclic(5), "Z5"),
        _named(cyclic(6), "Z6"),
        _named(symmetric(3), "S3"),
        _named(cyclic(7), "Z7"),
        _named(cyclic(8), "Z8"),
        _named(direct_product(cyclic(2), cyclic(4)), "Z2xZ4"),
        _named(direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2))), "Z2xZ2xZ2"),
        _named(dihedral(4), "D4"),
        _named(quaternion(), "Q8"),
        _named(cyclic(9), "Z9"),
        _named(direct_product(cyclic(3), cyclic(3)), "Z3xZ3"),
        _named(cyclic(10), "Z10"),
        _named(dihedral(5), "D5"),
        _named(cyclic(11), "Z11"),
        _named(cyclic(12), "Z12"),
        _named(direct_product(cyclic(2), cyclic(6)), "Z2xZ6"),
        _named(dihedral(6), "D6"),
        _named(alternating(4), "A4"),
        _named(dicyclic(3), "Dic3"),
        _named(cyclic(13), "Z13"),
        _named(cyclic(14), "Z14"),
        _named(dihedral(7), "D7"),
        _named(cyclic(15), "Z15"),
    ]
    return [e for e in entries if e.order <= max_order]


def catalog_entry(name: str) -> CatalogEntry:
    """Look up a catalog entry by its exact name."""
    for entry in catalog():
        if entry.name == name:
            return entry
    raise KeyError(f"no catalog group named {name!r}")
