"""Family operators: shadow, shade, top/bottom compressions, shifting, link/deletion."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from crossunion.errors import EmptyFamilyError, PreconditionError, RangeError
from crossunion.family import SetFamily, check_common_ground


def _uniform_size(f: SetFamily, op: str) -> int:
    sizes = f.sizes()
    if len(sizes) != 1:
        raise PreconditionError(f"{op} needs a nonempty uniform family, got sizes {sorted(sizes)}")
    return sizes.pop()


def shadow(f: SetFamily) -> SetFamily:
    """All (k-1)-sets contained in some member of a k-uniform family, k >= 1."""
    k = _uniform_size(f, "shadow")
    if k == 0:
        raise PreconditionError("shadow is undefined on the family {∅}")
    out = set()
    for m in f.members:
        rest = m
        while rest:
            low = rest & -rest
            out.add(m ^ low)
            rest ^= low
    return SetFamily(f.n, tuple(out))


def shade(f: SetFamily) -> SetFamily:
    """All (k+1)-sets containing some member of a k-uniform family, k < n."""
    k = _uniform_size(f, "shade")
    if k == f.n:
        raise PreconditionError("shade is undefined on the family {X}")
    full = f.full_set
    out = set()
    for m in f.members:
        rest = full ^ m
        while rest:
            low = rest & -rest
            out.add(m | low)
            rest ^= low
    return SetFamily(f.n, tuple(out))


def lower_compress(f: SetFamily) -> SetFamily:
    """Replace the top slice by its shadow."""
    if not len(f):
        raise EmptyFamilyError("cannot compress an empty family")
    t = f.top()
    if t == 0:
        raise PreconditionError("the family {∅} has no lower compression")
    kept = tuple(m for m in f.members if m.bit_count() != t)
    return SetFamily(f.n, kept + shadow(f.slice(t)).members)


def upper_compress(f: SetFamily) -> SetFamily:
    """Replace the bottom slice by its shade."""
    if not len(f):
        raise EmptyFamilyError("cannot compress an empty family")
    b = f.bottom()
    if b == f.n:
        raise PreconditionError("the family {X} has no upper compression")
    kept = tuple(m for m in f.members if m.bit_count() != b)
    return SetFamily(f.n, kept + shade(f.slice(b)).members)


def _check_shift_indices(n: int, i: int, j: int) -> None:
    if not 1 <= i < j <= n:
        raise PreconditionError(f"shift needs 1 <= i < j <= n, got i={i}, j={j}, n={n}")


def shift_ij(f: SetFamily, i: int, j: int) -> SetFamily:
    """Erdős–Ko–Rado shift moving element j to i.

    A member containing j but not i is replaced by the shifted set unless the
    shifted set is already a member, so the family size never changes.
    """
    _check_shift_indices(f.n, i, j)
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    out = []
    for m in f.members:
        if m & bj and not m & bi:
            moved = m ^ bj ^ bi
            out.append(m if moved in f else moved)
        else:
            out.append(m)
    return SetFamily(f.n, tuple(out))


def shift_families(families: Sequence[SetFamily]) -> tuple[SetFamily, ...]:
    """Shift every family with the same (i, j) in lexicographic order to a joint fixed point.

    Cross s-union pairs stay cross s-union and every family keeps its size.
    """
    n = check_common_ground(families)
    current = tuple(families)
    changed = True
    while changed:
        changed = False
        for i, j in combinations(range(1, n + 1), 2):
            shifted = tuple(shift_ij(f, i, j) for f in current)
            if shifted != current:
                current = shifted
                changed = True
    return current


def make_shifted(f: SetFamily) -> SetFamily:
    return shift_families([f])[0]


def _predecessors(m: int, n: int):
    """Sets of the same size whose sorted elements are coordinatewise <= those of m."""
    bound = [i for i in range(n) if m >> i & 1]
    k = len(bound)

    def rec(pos: int, lo: int, acc: int):
        if pos == k:
            yield acc
            return
        for x in range(lo, bound[pos] + 1):
            yield from rec(pos + 1, x + 1, acc | (1 << x))

    return rec(0, 0, 0)


def is_shifted(f: SetFamily) -> bool:
    """Every set preceding a member in the shifting partial order is a member."""
    for m in f.members:
        for g in _predecessors(m, f.n):
            if g not in f:
                return False
    return True


def link_and_delete(f: SetFamily) -> tuple[SetFamily, SetFamily]:
    """Split on the last element n: (members avoiding n, members containing n with n removed).

    Both parts live on the ground set [n - 1].
    """
    if f.n < 2:
        raise RangeError("link/deletion needs n >= 2")
    bn = 1 << (f.n - 1)
    avoid = tuple(m for m in f.members if not m & bn)
    link = tuple(m ^ bn for m in f.members if m & bn)
    return SetFamily(f.n - 1, avoid), SetFamily(f.n - 1, link)
