"""Set families over the ground set X = {1, ..., n}.

A member set is a plain ``int`` bitmask: bit ``i - 1`` encodes element ``i``.
Families are immutable, duplicate-free and always kept in canonical order,
sorted by (cardinality, numeric value), so two families built from the same
sets compare equal and serialize identically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from crossunion.errors import EmptyFamilyError, FamilyFormatError, RangeError

MAX_N = 20


def check_ground(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= MAX_N:
        raise RangeError(f"ground set size must be an integer in [1, {MAX_N}], got {n!r}")
    return n


def set_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


def set_from_elements(elements: Iterable[int], n: int) -> int:
    mask = 0
    for x in elements:
        if not 1 <= x <= n:
            raise RangeError(f"element {x} outside ground set [1, {n}]")
        mask |= 1 << (x - 1)
    return mask


def elements(mask: int) -> list[int]:
    """Ascending 1-based elements of a bitmask set."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def format_set(mask: int) -> str:
    if not mask:
        return "∅"
    return "{" + ",".join(map(str, elements(mask))) + "}"


@dataclass(frozen=True)
class SetFamily:
    n: int
    members: tuple[int, ...] = ()
    _index: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        check_ground(self.n)
        full = (1 << self.n) - 1
        unique = set(self.members)
        for m in unique:
            if not isinstance(m, int) or m < 0 or m & ~full:
                raise RangeError(f"set {m!r} is not a subset of [1, {self.n}]")
        object.__setattr__(self, "members", tuple(sorted(unique, key=set_key)))
        object.__setattr__(self, "_index", frozenset(unique))

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> SetFamily:
        return cls(n, tuple(set_from_elements(s, n) for s in sets))

    @classmethod
    def from_mask(cls, n: int, family_mask: int) -> SetFamily:
        """Inverse of :meth:`as_mask`."""
        out = []
        while family_mask:
            low = family_mask & -family_mask
            out.append(low.bit_length() - 1)
            family_mask ^= low
        return cls(n, tuple(out))

    def as_mask(self) -> int:
        """The family as one integer with bit ``S`` set for every member ``S``."""
        m = 0
        for s in self.members:
            m |= 1 << s
        return m

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, mask: object) -> bool:
        return mask in self._index

    def __str__(self) -> str:
        return "{" + ", ".join(format_set(m) for m in self.members) + "}"

    @property
    def sort_key(self) -> tuple[tuple[int, int], ...]:
        return tuple(set_key(m) for m in self.members)

    @property
    def full_set(self) -> int:
        return (1 << self.n) - 1

    def top(self) -> int:
        if not self.members:
            raise EmptyFamilyError("top size of an empty family is undefined")
        return self.members[-1].bit_count()

    def bottom(self) -> int:
        if not self.members:
            raise EmptyFamilyError("bottom size of an empty family is undefined")
        return self.members[0].bit_count()

    def slice(self, k: int) -> SetFamily:
        return SetFamily(self.n, tuple(m for m in self.members if m.bit_count() == k))

    def sizes(self) -> set[int]:
        return {m.bit_count() for m in self.members}

    def is_uniform(self) -> bool:
        return len(self.sizes()) <= 1

    def to_json_obj(self) -> dict:
        return {"n": self.n, "sets": [elements(m) for m in self.members]}

    @classmethod
    def from_json_obj(cls, obj: object) -> SetFamily:
        if not isinstance(obj, dict) or set(obj) != {"n", "sets"}:
            raise FamilyFormatError('family must be an object with exactly the keys "n" and "sets"')
        n, sets = obj["n"], obj["sets"]
        if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= MAX_N:
            raise FamilyFormatError(f"n must be an integer in [1, {MAX_N}], got {n!r}")
        if not isinstance(sets, list):
            raise FamilyFormatError('"sets" must be an array')
        seen = set()
        for raw in sets:
            if not isinstance(raw, list) or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in raw
            ):
                raise FamilyFormatError(f"set {raw!r} must be an array of integers")
            if any(not 1 <= x <= n for x in raw):
                raise FamilyFormatError(f"set {raw!r} has elements outside [1, {n}]")
            if len(set(raw)) != len(raw):
                raise FamilyFormatError(f"set {raw!r} repeats an element")
            mask = set_from_elements(raw, n)
            if mask in seen:
                raise FamilyFormatError(f"duplicate set {sorted(raw)!r}")
            seen.add(mask)
        return cls(n, tuple(seen))

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def loads(cls, text: str) -> SetFamily:
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FamilyFormatError(f"invalid JSON: {exc}") from exc
        return cls.from_json_obj(obj)


def top(f: SetFamily) -> int:
    return f.top()


def bottom(f: SetFamily) -> int:
    return f.bottom()


def slice_family(f: SetFamily, k: int) -> SetFamily:
    return f.slice(k)


def level(n: int, k: int) -> SetFamily:
    """All k-subsets of [n]; empty when k is out of range."""
    check_ground(n)
    if not 0 <= k <= n:
        return SetFamily(n)
    return SetFamily(n, tuple(sum(1 << i for i in c) for c in combinations(range(n), k)))


def level_pair(n: int, a: int, b: int) -> tuple[SetFamily, SetFamily]:
    """The uniform pair (C([n], a), C([n], b)); cross s-union whenever a + b <= s."""
    return level(n, a), level(n, b)


def up_to_level(n: int, s: int) -> SetFamily:
    check_ground(n)
    return SetFamily(n, tuple(m for m in range(1 << n) if m.bit_count() <= s))


def power_set(n: int) -> SetFamily:
    check_ground(n)
    return SetFamily(n, tuple(range(1 << n)))


def check_common_ground(families: Sequence[SetFamily]) -> int:
    if not families:
        raise RangeError("need at least one family")
    n = families[0].n
    for f in families[1:]:
        if f.n != n:
            raise RangeError(f"families live on different ground sets ({n} vs {f.n})")
    return n


def _check_threshold(name: str, value: int, n: int) -> None:
    if not isinstance(value, int) or not 0 <= value <= n:
        raise RangeError(f"{name} must lie in [0, {n}], got {value!r}")


def is_antichain(f: SetFamily) -> bool:
    ms = f.members
    # canonical order puts every potential subset before its supersets
    for j, big in enumerate(ms):
        for small in ms[:j]:
            if small & big == small:
                return False
    return True


def is_s_union(f: SetFamily, s: int) -> bool:
    _check_threshold("s", s, f.n)
    ms = f.members
    for i, a in enumerate(ms):
        for b in ms[i:]:
            if (a | b).bit_count() > s:
                return False
    return True


def is_cross_s_union(families: Sequence[SetFamily], s: int) -> bool:
    """Cross s-union test for a pair or a triple of families.

    For a triple the condition is on the union of one set from each family.
    """
    n = check_common_ground(families)
    _check_threshold("s", s, n)
    if len(families) not in (2, 3):
        raise RangeError(f"expected a pair or triple of families, got {len(families)}")
    if any(not len(f) for f in families):
        return True
    unions = {0}
    for f in families:
        unions = {u | m for u in unions for m in f.members}
        if any(u.bit_count() > s for u in unions):
            return False
    return True


def is_cross_t_intersecting(pair: Sequence[SetFamily], t: int) -> bool:
    n = check_common_ground(pair)
    _check_threshold("t", t, n)
    a, b = pair
    return all((x & y).bit_count() >= t for x in a.members for y in b.members)


def dual(f: SetFamily) -> SetFamily:
    full = f.full_set
    return SetFamily(f.n, tuple(full ^ m for m in f.members))


def is_down_closed(f: SetFamily) -> bool:
    for m in f.members:
        rest = m
        while rest:
            low = rest & -rest
            if m ^ low not in f:
                return False
            rest ^= low
    return True


def down_closure(f: SetFamily) -> SetFamily:
    out = set()
    for m in f.members:
        if m in out:
            continue
        sub = m
        while True:
            out.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & m
    return SetFamily(f.n, tuple(out))
