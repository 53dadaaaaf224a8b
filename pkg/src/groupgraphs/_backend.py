"""Selects the search-kernel backend at import time.

The compiled extension (groupgraphs._kernels) is preferred when it built;
otherwise the pure-Python twin is used.  The compiled kernels pack bit-rows
into one machine word, so anything past 64 vertices is routed to the pure
implementation regardless.
"""

from __future__ import annotations

from typing import Sequence

from . import _kernels_py

try:
    from . import _kernels  # type: ignore[attr-defined]
except ImportError:
    _kernels = None

COMPILED_MAX_ORDER = 64


def backend_name() -> str:
    return "compiled" if _kernels is not None else "pure-python"


def search_automorphisms(n: int, rows: Sequence[int]) -> list[tuple[int, ...]]:
    if _kernels is not None and n <= COMPILED_MAX_ORDER:
        return _kernels.search_automorphisms(n, rows)
    return _kernels_py.search_automorphisms(n, rows)


def search_regular_subgroup(
    n: int, perms: Sequence[tuple[int, ...]]
) -> list[tuple[int, ...]] | None:
    if _kernels is not None and n <= COMPILED_MAX_ORDER:
        return _kernels.search_regular_subgroup(n, perms)
    return _kernels_py.search_regular_subgroup(n, perms)
