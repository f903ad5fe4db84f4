"""Deliberately naive enumerations used to cross-check the closed-pair searches.

These walk antichains or families directly and share no reduction with
:mod:`crossunion.search.exhaustive`; they are only usable for n <= 4 or 5.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from crossunion.errors import ScaleError
from crossunion.family import SetFamily
from crossunion.search.kernels import antichains_within, bits, width


def _cap(n: int, cap: int) -> None:
    if n > cap:
        raise ScaleError(f"naive enumeration is capped at n <= {cap}, got n={n}")


@lru_cache(maxsize=None)
def all_antichains(n: int, max_size: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Every nonempty antichain on [n] whose members have at most ``max_size`` elements."""
    _cap(n, 5)
    limit = n if max_size is None else max_size
    universe = 0
    for m in range(1 << n):
        if m.bit_count() <= limit:
            universe |= 1 << m
    return tuple(tuple(bits(a)) for a in antichains_within(universe) if a)


def _cross(a, b, s: int) -> bool:
    return all((x | y).bit_count() <= s for x in a for y in b)


def _key(fams) -> tuple:
    return tuple(sorted(tuple(sorted(f, key=lambda m: (m.bit_count(), m))) for f in fams))


def pair_antichain(n: int, s: int, forbid_empty_singleton: bool = False) -> tuple[int, set[tuple]]:
    """Best |A| + |B| over all pairs of antichains, checked pair by pair (n <= 4)."""
    _cap(n, 4)
    acs = [a for a in all_antichains(n, s) if not (forbid_empty_singleton and a == (0,))]
    best, found = 0, set()
    for i, a in enumerate(acs):
        for b in acs[i:]:
            if not _cross(a, b, s):
                continue
            v = len(a) + len(b)
            if v > best:
                best, found = v, set()
            if v == best:
                found.add(_key((a, b)))
    return best, found


def pair_antichain_by_partner(n: int, s: int, forbid_empty_singleton: bool = False) -> int:
    """Best |A| + |B|: for every antichain B, the widest antichain allowed alongside it (n <= 5)."""
    _cap(n, 5)
    best = 0
    for b in all_antichains(n, s):
        if forbid_empty_singleton and b == (0,):
            continue
        allowed = 0
        for x in range(1 << n):
            if all((x | y).bit_count() <= s for y in b):
                allowed |= 1 << x
        if forbid_empty_singleton:
            allowed &= ~1
        if allowed:
            best = max(best, len(b) + width(allowed))
    return best


def triple_antichain(n: int, s: int) -> tuple[int, set[tuple]]:
    """Best |A| + |B| + |C|: every cross pair (B, C), every antichain A allowed by it (n <= 4)."""
    _cap(n, 4)
    acs = all_antichains(n, s)
    best, found = 0, set()
    for i, b in enumerate(acs):
        for c in acs[i:]:
            unions = {x | y for x in b for y in c}
            if any(u.bit_count() > s for u in unions):
                continue
            allowed = 0
            for x in range(1 << n):
                if all((x | u).bit_count() <= s for u in unions):
                    allowed |= 1 << x
            for a in antichains_within(allowed):
                if not a:
                    continue
                a_sets = bits(a)
                v = len(a_sets) + len(b) + len(c)
                if v > best:
                    best, found = v, set()
                if v == best:
                    found.add(_key((a_sets, b, c)))
    return best, found


def pair_general(n: int, s: int) -> tuple[int, set[tuple]]:
    """Best |A| + |B| over every pair of nonempty families (n <= 3)."""
    _cap(n, 3)
    fams = []
    small = [m for m in range(1 << n) if m.bit_count() <= s]
    for r in range(1, len(small) + 1):
        fams.extend(combinations(small, r))
    best, found = 0, set()
    for i, a in enumerate(fams):
        for b in fams[i:]:
            if len(a) + len(b) < best or not _cross(a, b, s):
                continue
            v = len(a) + len(b)
            if v > best:
                best, found = v, set()
            found.add(_key((a, b)))
    return best, found


def single_family(n: int, s: int, antichain: bool) -> int:
    """Largest s-union family (antichain if asked), over every candidate family (n <= 4 / 5)."""
    if antichain:
        return max(len(a) for a in all_antichains(n, s) if _cross(a, a, s))
    _cap(n, 4)
    small = [m for m in range(1 << n) if m.bit_count() <= s]
    best = 0
    for r in range(1, len(small) + 1):
        if r <= best:
            continue
        for fam in combinations(small, r):
            if _cross(fam, fam, s):
                best = r
                break
    return best


def min_pair(n: int, s: int) -> int:
    """Largest min(|A|, |B|) over cross s-union antichain pairs (n <= 4)."""
    _cap(n, 4)
    acs = all_antichains(n, s)
    return max(min(len(a), len(b)) for a in acs for b in acs if _cross(a, b, s))


def families(key: tuple, n: int) -> tuple[SetFamily, ...]:
    return tuple(SetFamily(n, f) for f in key)
