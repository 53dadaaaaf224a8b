"""Pure-Python search kernels: automorphism enumeration and regular-subgroup
search.

This is the fallback backend; groupgraphs._kernels is the compiled twin
with the same two entry points and bit-identical output.  Both operate on
a graph given as packed bit-rows of its arc relation (symmetric rows for
undirected graphs) and on permutations given as image tuples.
"""

from __future__ import annotations

from typing import Sequence


def search_automorphisms(n: int, rows: Sequence[int]) -> list[tuple[int, ...]]:
    """All permutations preserving the relation, in lexicographic order.

    Backtracks over a degree-partition: vertex u may map only to vertices
    with the same (out-degree, in-degree) pair, and each tentative image
    is checked incrementally against all previously assigned vertices.
    """
    rows = [int(r) for r in rows]
    cols = [0] * n
    for u in range(n):
        r = rows[u]
        while r:
            low = r & -r
            cols[low.bit_length() - 1] |= 1 << u
            r &= r - 1

    keys = [(rows[v].bit_count(), cols[v].bit_count()) for v in range(n)]
    cand = [0] * n
    for u in range(n):
        mask = 0
        for v in range(n):
            if keys[v] == keys[u]:
                mask |= 1 << v
        cand[u] = mask

    img = [0] * n
    found: list[tuple[int, ...]] = []

    def extend(k: int, used: int) -> None:
        if k == n:
            found.append(tuple(img))
            return
        rk = rows[k]
        avail = cand[k] & ~used
        while avail:
            low = avail & -avail
            avail ^= low
            v = low.bit_length() - 1
            rv = rows[v]
            ok = True
            for u in range(k):
                iu = img[u]
                if ((rk >> u) & 1) != ((rv >> iu) & 1):
                    ok = False
                    break
                if ((rows[u] >> k) & 1) != ((rows[iu] >> v) & 1):
                    ok = False
                    break
            if ok:
                img[k] = v
                extend(k + 1, used | low)
        return

    extend(0, 0)
    return found


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[x] for x in q)


def search_regular_subgroup(
    n: int, perms: Sequence[tuple[int, ...]]
) -> list[tuple[int, ...]] | None:
    """A subgroup of `perms` with exactly one member sending 0 to each vertex.

    `perms` must be a full automorphism list (closed under composition).
    Backtracks over the candidates for the lowest unresolved vertex, in the
    given order, and propagates closure under composition: each forced
    product either matches an existing choice or pins down a new vertex.
    Returns the members ordered by their image of 0, or None.
    """
    perms = [tuple(p) for p in perms]
    identity = tuple(range(n))
    if identity not in perms:
        return None

    cand: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for p in perms:
        cand[p[0]].append(p)
    if any(not c for c in cand):
        return None  # not even transitive

    def close(sel: list[tuple[int, ...] | None], v: int,
              p: tuple[int, ...]) -> list[tuple[int, ...] | None] | None:
        sel = list(sel)
        sel[v] = p
        queue = [p]
        head = 0
        while head < len(queue):
            q = queue[head]
            head += 1
            for r in sel:
                if r is None:
                    continue
                for t in (_compose(q, r), _compose(r, q)):
                    w = t[0]
                    existing = sel[w]
                    if existing is None:
                        sel[w] = t
                        queue.append(t)
                    elif existing != t:
                        return None
        return sel

    def extend(sel: list[tuple[int, ...] | None]) -> list[tuple[int, ...]] | None:
        for v in range(n):
            if sel[v] is None:
                for p in cand[v]:
                    nxt = close(sel, v, p)
                    if nxt is not None:
                        result = extend(nxt)
                        if result is not None:
                            return result
                return None
        return [p for p in sel if p is not None]

    start: list[tuple[int, ...] | None] = [None] * n
    start[0] = identity
    return extend(start)
