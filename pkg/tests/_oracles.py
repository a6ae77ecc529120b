"""Brute-force oracles, independent of the library's algorithms.

Everything here is a subset scan or a combination search over raw
Cayley tables and bitmasks.  No lattice shortcuts, no pruning beyond
feasibility, so these can referee the real implementations.
"""

from __future__ import annotations

from itertools import combinations


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def brute_subgroup_masks(table) -> set[int]:
    """Every subset containing 0 closed under the table product.

    A nonempty product-closed subset of a finite group is a subgroup
    and always contains the identity, so scanning odd masks is enough.
    Exponential in the group order; callers keep it at 16 or below.
    """
    n = len(table)
    assert n <= 16, "subset scan is exponential"
    found = set()
    for mask in range(1, 1 << n, 2):
        members = bits(mask)
        ok = True
        for a in members:
            row = table[a]
            for b in members:
                if not mask >> row[b] & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.add(mask)
    return found


def brute_min_cover_size(candidate_masks, full_mask: int) -> int | None:
    """Smallest number of candidates whose union is full_mask."""
    cands = sorted(candidate_masks)
    for k in range(1, len(cands) + 1):
        for combo in combinations(cands, k):
            union = 0
            for m in combo:
                union |= m
            if union == full_mask:
                return k
    return None


def brute_irredundant_covers(
    candidate_masks, full_mask: int, size_cap: int | None = None
) -> set[frozenset[int]]:
    """All irredundant covers drawn from the candidates, as mask sets."""
    cands = sorted(candidate_masks)
    top = len(cands) if size_cap is None else min(size_cap, len(cands))
    covers: set[frozenset[int]] = set()
    for k in range(1, top + 1):
        for combo in combinations(cands, k):
            union = 0
            for m in combo:
                union |= m
            if union != full_mask:
                continue
            ok = True
            for i, m in enumerate(combo):
                rest = 0
                for j, o in enumerate(combo):
                    if j != i:
                        rest |= o
                if m & ~rest == 0:
                    ok = False
                    break
            if ok:
                covers.add(frozenset(combo))
    return covers


def brute_maximal_cyclic_masks(table) -> set[int]:
    """Masks of cyclic subgroups maximal among cyclic ones, by powers."""
    n = len(table)
    cyclics = set()
    for x in range(n):
        mask, y = 1, x
        while y != 0:
            mask |= 1 << y
            y = table[y][x]
        cyclics.add(mask)
    return {m for m in cyclics if not any(o != m and m & ~o == 0 for o in cyclics)}


def element_order(table, x: int) -> int:
    k, y = 1, x
    while y != 0:
        y = table[y][x]
        k += 1
    return k


def find_isomorphism(ta, tb) -> list[int] | None:
    """Backtracking search for an isomorphism between two tables.

    Returns the image list or None.  Prunes on element orders; fine
    for the orders used in tests (at most 16 or so).
    """
    n = len(ta)
    if len(tb) != n:
        return None
    oa = [element_order(ta, x) for x in range(n)]
    ob = [element_order(tb, x) for x in range(n)]
    if sorted(oa) != sorted(ob):
        return None
    img = [-1] * n
    used = [False] * n
    img[0] = 0
    used[0] = True

    def consistent(pos: int) -> bool:
        for a in range(pos + 1):
            row = ta[a]
            mapped_a = img[a]
            for b in range(pos + 1):
                c = row[b]
                got = tb[mapped_a][img[b]]
                if c <= pos:
                    if got != img[c]:
                        return False
                elif used[got]:
                    # target already taken by an earlier image
                    return False
        return True

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        for y in range(n):
            if used[y] or ob[y] != oa[pos]:
                continue
            img[pos] = y
            used[y] = True
            if consistent(pos) and extend(pos + 1):
                return True
            img[pos] = -1
            used[y] = False
        return False

    return img if extend(1) else None
