"""Bit-level kernels shared by the exhaustive searches.

Two levels of bitmask are in play. A *set* is an int whose bit ``i`` encodes
element ``i + 1``. A *family mask* is an int whose bit ``S`` is set exactly
when the set ``S`` belongs to the family, so a whole family over ``[6]`` fits
in one 64-bit word and intersection of families is a single ``&``.
"""

from __future__ import annotations

import sys
from functools import lru_cache
from typing import Callable, Iterator

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def canonical_members(family_mask: int) -> list[int]:
    return sorted(bits(family_mask), key=lambda m: (m.bit_count(), m))


def family_mask(sets) -> int:
    m = 0
    for s in sets:
        m |= 1 << s
    return m


@lru_cache(maxsize=None)
def union_rows(n: int, s: int) -> tuple[int, ...]:
    """``rows[S]`` is the family mask of all T with |S ∪ T| <= s."""
    size = 1 << n
    return tuple(
        family_mask(t for t in range(size) if (a | t).bit_count() <= s) for a in range(size)
    )


def relation_rows(universe: list[int], related: Callable[[int, int], bool]) -> dict[int, int]:
    rows = {}
    for a in universe:
        m = 0
        for b in universe:
            if related(a, b):
                m |= 1 << b
        rows[a] = m
    return rows


def closed_pairs(objects: list[int], rows, full: int) -> Iterator[tuple[int, int]]:
    """Every Galois-closed pair (extent, intent) of a symmetric relation.

    ``rows[o]`` is the family mask of everything related to ``o``; the
    derivation of a family is the intersection of its rows. Extents are
    enumerated by Close-by-One over ``objects`` in the given order, each
    exactly once. ``full`` is the intent of the empty extent.
    """
    order = list(objects)
    prefix = [0]
    for o in order:
        prefix.append(prefix[-1] | (1 << o))

    def derive(fam: int) -> int:
        r = full
        while fam:
            low = fam & -fam
            r &= rows[low.bit_length() - 1]
            fam ^= low
        return r

    def grow(extent: int, intent: int, start: int):
        yield extent, intent
        for j in range(start, len(order)):
            o = order[j]
            if extent >> o & 1:
                continue
            new_intent = intent & rows[o]
            new_extent = derive(new_intent)
            if (new_extent ^ extent) & prefix[j]:
                continue
            yield from grow(new_extent, new_intent, j + 1)

    yield from grow(derive(full), full, 0)


def _poset(family: int) -> tuple[list[int], list[int], list[int]]:
    """Members in canonical order with strict-superset and comparability masks over local indices."""
    els = canonical_members(family)
    m = len(els)
    up = [0] * m
    comp = [0] * m
    for i, a in enumerate(els):
        for j in range(i + 1, m):
            b = els[j]
            if a & b == a:
                up[i] |= 1 << j
                comp[i] |= 1 << j
                comp[j] |= 1 << i
    return els, up, comp


def _matching(up: list[int]) -> list[int]:
    """Maximum matching of the comparability bipartite graph; ``pred[v]`` is v's matched subset or -1."""
    m = len(up)
    pred = [-1] * m
    for u in range(m):
        c = up[u]
        placed = False
        while c:
            low = c & -c
            v = low.bit_length() - 1
            if pred[v] < 0:
                pred[v] = u
                placed = True
                break
            c ^= low
        if placed:
            continue
        seen = 0

        def augment(x: int) -> bool:
            nonlocal seen
            c = up[x] & ~seen
            while c:
                low = c & -c
                c ^= low
                if seen & low:
                    continue
                seen |= low
                v = low.bit_length() - 1
                if pred[v] < 0 or augment(pred[v]):
                    pred[v] = x
                    return True
            return False

        augment(u)
    return pred


@lru_cache(maxsize=1 << 20)
def width(family: int) -> int:
    """Size of a largest antichain in the family, via Dilworth and bipartite matching."""
    els, up, _ = _poset(family)
    pred = _matching(up)
    return len(els) - sum(1 for p in pred if p >= 0)


def chain_partition(family: int) -> list[list[int]]:
    """A minimum partition of the family into chains (each listed bottom-up)."""
    els, up, _ = _poset(family)
    pred = _matching(up)
    succ = [-1] * len(els)
    for v, u in enumerate(pred):
        if u >= 0:
            succ[u] = v
    chains = []
    for start in range(len(els)):
        if pred[start] >= 0:
            continue
        chain = []
        x = start
        while x >= 0:
            chain.append(els[x])
            x = succ[x]
        chains.append(chain)
    return chains


def max_antichains(family: int, forbid_empty_singleton: bool = False) -> list[int]:
    """Every maximum antichain of the family, as family masks in canonical order.

    A maximum antichain meets each chain of a minimum chain partition exactly
    once, so the search picks one element per chain. With
    ``forbid_empty_singleton`` the antichain {∅} is dropped and, if that
    leaves nothing, the maximum is taken over the remaining antichains.
    """
    if not family:
        return []
    chains = chain_partition(family)
    chains.sort(key=len)
    out: list[int] = []

    def rec(k: int, chosen: list[int]):
        if k == len(chains):
            out.append(family_mask(chosen))
            return
        for x in chains[k]:
            if all(x & y != x and x & y != y for y in chosen):
                chosen.append(x)
                rec(k + 1, chosen)
                chosen.pop()

    rec(0, [])
    if forbid_empty_singleton:
        out = [a for a in out if a != 1]
        if not out:
            rest = family & ~1
            return max_antichains(rest) if rest else []
    return sorted(out, key=lambda a: [(m.bit_count(), m) for m in canonical_members(a)])


def constrained_width(family: int, forbid_empty_singleton: bool) -> int | None:
    """Width, optionally ignoring the antichain {∅}; None when nothing admissible remains."""
    if forbid_empty_singleton:
        # a maximum antichain of size >= 2 never contains ∅
        family &= ~1
    return width(family) if family else None


def first_max_antichain(family: int) -> int:
    """The maximum antichain whose canonical member list is lexicographically smallest."""
    w = width(family)
    els, _, comp = _poset(family)
    chosen: list[int] = []
    blocked = 0
    for i, e in enumerate(els):
        if blocked >> i & 1:
            continue
        remaining = 0
        for j in range(i + 1, len(els)):
            if not ((blocked | comp[i]) >> j & 1):
                remaining |= 1 << els[j]
        if len(chosen) + 1 + (width(remaining) if remaining else 0) == w:
            chosen.append(e)
            blocked |= comp[i] | (1 << i)
        else:
            blocked |= 1 << i
        if len(chosen) == w:
            break
    return family_mask(chosen)


def antichains_within(family: int) -> Iterator[int]:
    """Every antichain (including the empty one) contained in the family; exponential."""
    els = canonical_members(family)

    def rec(i: int, acc: int, members: list[int]):
        if i == len(els):
            yield acc
            return
        yield from rec(i + 1, acc, members)
        x = els[i]
        if all(y & x != y for y in members):
            members.append(x)
            yield from rec(i + 1, acc | (1 << x), members)
            members.pop()

    yield from rec(0, 0, [])


def maximum_cliques(vertices: list[int], adjacent: Callable[[int, int], bool]) -> tuple[int, list[int]]:
    """Size and every maximum clique (as a vertex bitmask over ``vertices``) of a small graph.

    Branch and bound with a greedy colouring bound; cliques are grown in
    vertex order so each is produced once.
    """
    m = len(vertices)
    adj = [0] * m
    for i in range(m):
        for j in range(m):
            if i != j and adjacent(vertices[i], vertices[j]):
                adj[i] |= 1 << j
    best = 0
    found: list[int] = []

    def colour_bound(cand: int) -> int:
        colours = 0
        rest = cand
        while rest:
            colours += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                rest &= ~low
                avail &= ~low & ~adj[v]
        return colours

    def expand(clique: int, size: int, cand: int):
        nonlocal best, found
        if not cand:
            if size > best:
                best, found = size, [clique]
            elif size == best:
                found.append(clique)
            return
        if size + colour_bound(cand) < best:
            return
        rest = cand
        while rest:
            if size + rest.bit_count() < best:
                return
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            higher = ~((low << 1) - 1)
            expand(clique | low, size + 1, rest & adj[v] & higher)

    expand(0, 0, (1 << m) - 1)
    return best, found
