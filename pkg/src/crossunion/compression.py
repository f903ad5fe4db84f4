"""Iterative compression of a cross s-union antichain pair down to uniform levels.

:func:`compress_pair` follows the classical argument step by step and records
every replacement, so each move can be replayed and checked on its own.

The run has three phases. While the two top sizes sum to at least ``s + 2``
the top slices are cross 2-intersecting, and one of the two lower
compressions grows its family; we take the larger gain. At exactly ``s + 1``
a growing lower compression is still taken if one exists. Otherwise both
lower compressions keep their size, and the family with the smaller top
(``small``) is either raised (if it is not uniform) or filled up to its full
level (if it is), while the other family is lowered. Once the tops sum to at
most ``s``, the families are filled to full levels, and a top above
``(n + 1) / 2`` is lowered first.
"""

from __future__ import annotations

import enum
import json
from dataclasses import asdict, dataclass

from crossunion.errors import PreconditionError
from crossunion.family import (
    SetFamily,
    check_common_ground,
    is_antichain,
    is_cross_s_union,
    is_cross_t_intersecting,
    level,
)
from crossunion.transforms import lower_compress, upper_compress

STEP_KINDS = (
    "lower_A",
    "lower_B",
    "upper_A_lower_B",
    "upper_B_lower_A",
    "fill_A_lower_B",
    "fill_B_lower_A",
    "fill_A",
    "fill_B",
)


@dataclass(frozen=True)
class TraceStep:
    kind: str
    sizes_before: tuple[int, int]
    sizes_after: tuple[int, int]
    tops_after: tuple[int, int]

    def to_json_obj(self) -> dict:
        return asdict(self) | {
            "sizes_before": list(self.sizes_before),
            "sizes_after": list(self.sizes_after),
            "tops_after": list(self.tops_after),
        }


@dataclass(frozen=True)
class CompressionTrace:
    steps: tuple[TraceStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def to_json_obj(self) -> list[dict]:
        return [s.to_json_obj() for s in self.steps]

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)


def _sizes(a: SetFamily, b: SetFamily) -> tuple[int, int]:
    return (len(a), len(b))


def _tops(a: SetFamily, b: SetFamily) -> tuple[int, int]:
    return (a.top(), b.top())


def _check_pair(a: SetFamily, b: SetFamily, s: int) -> int:
    n = check_common_ground([a, b])
    if not 0 < s < n:
        raise PreconditionError(f"need 0 < s < n, got s={s}, n={n}")
    if not len(a) or not len(b):
        raise PreconditionError("both families must be nonempty")
    if not (is_antichain(a) and is_antichain(b)):
        raise PreconditionError("both families must be antichains")
    if not is_cross_s_union([a, b], s):
        raise PreconditionError(f"the pair is not cross {s}-union")
    return n


def _pick_lower(a: SetFamily, b: SetFamily, strict: bool) -> tuple[str, SetFamily, SetFamily] | None:
    """The best single lower compression, or None when no option qualifies.

    Candidates must not shrink their family (grow strictly if ``strict``).
    Larger gain wins, then larger top, then B.
    """
    options = []
    for label, fam in (("A", a), ("B", b)):
        if fam.top() == 0:
            continue
        low = lower_compress(fam)
        gain = len(low) - len(fam)
        if gain > 0 or (gain == 0 and not strict):
            options.append((gain, fam.top(), label == "B", label, low))
    if not options:
        return None
    *_, label, low = max(options, key=lambda o: o[:3])
    if label == "A":
        return "lower_A", low, b
    return "lower_B", a, low


def compress_pair(
    pair: tuple[SetFamily, SetFamily], s: int
) -> tuple[tuple[SetFamily, SetFamily], CompressionTrace]:
    """Compress a nonempty cross s-union antichain pair until the tops sum to at most s.

    The result dominates the input in both sizes, never raises a top, and is
    made of full levels unless one family's top exceeds ``(n + 1) / 2``.
    Whenever the input is not already a pair of full levels the total size
    strictly grows.
    """
    a, b = pair
    n = _check_pair(a, b, s)
    steps: list[TraceStep] = []

    def record(kind: str, new_a: SetFamily, new_b: SetFamily) -> None:
        steps.append(TraceStep(kind, _sizes(a, b), _sizes(new_a, new_b), _tops(new_a, new_b)))

    while a.top() + b.top() >= s + 1:
        excess = a.top() + b.top() - s
        choice = _pick_lower(a, b, strict=excess == 1)
        if choice is None and excess >= 2:
            raise RuntimeError(
                "neither lower compression keeps its size although the top slices "
                "are cross 2-intersecting"
            )
        if choice is not None:
            kind, new_a, new_b = choice
            record(kind, new_a, new_b)
            a, b = new_a, new_b
            continue
        # tops sum to s + 1 and no lower compression grows
        if len(lower_compress(a)) != len(a) or len(lower_compress(b)) != len(b):
            raise RuntimeError("a lower compression shrank with cross 1-intersecting top slices")
        small_is_a = a.top() <= b.top()
        small, big = (a, b) if small_is_a else (b, a)
        if small.is_uniform():
            new_small, tag = level(n, small.top()), "fill"
        else:
            new_small, tag = upper_compress(small), "upper"
        new_big = lower_compress(big)
        if small_is_a:
            record(f"{tag}_A_lower_B", new_small, new_big)
            a, b = new_small, new_big
        else:
            record(f"{tag}_B_lower_A", new_big, new_small)
            a, b = new_big, new_small

    while True:
        small_is_a = a.top() <= b.top()
        small, big = (a, b) if small_is_a else (b, a)
        small_level = level(n, small.top())
        big_level = level(n, big.top())
        if small != small_level:
            new_small, new_big, kind = small_level, big, "fill_" + ("A" if small_is_a else "B")
        elif 2 * big.top() > n + 1:
            new_small, new_big, kind = small, lower_compress(big), "lower_" + ("B" if small_is_a else "A")
        elif big != big_level:
            new_small, new_big, kind = small, big_level, "fill_" + ("B" if small_is_a else "A")
        else:
            break
        new_a, new_b = (new_small, new_big) if small_is_a else (new_big, new_small)
        record(kind, new_a, new_b)
        a, b = new_a, new_b

    return (a, b), CompressionTrace(tuple(steps))


class ShadowGrowth(enum.Enum):
    FIRST_GROWS = "first_grows"
    SECOND_GROWS = "second_grows"
    BOTH_EQUAL_R1 = "both_equal_r1"
    NEITHER = "neither"


def check_shadow_growth(pair: tuple[SetFamily, SetFamily], r: int) -> ShadowGrowth:
    """Measure which lower compression of an antichain pair grows.

    The top slices must be cross r-intersecting with r >= 1. The classical
    claim is that one of the two grows, or r = 1 and both keep their size;
    ``NEITHER`` reports a measurement that contradicts it.
    """
    a, b = pair
    check_common_ground([a, b])
    if r < 1:
        raise PreconditionError(f"r must be at least 1, got {r}")
    if not len(a) or not len(b) or not (is_antichain(a) and is_antichain(b)):
        raise PreconditionError("both families must be nonempty antichains")
    ta, tb = a.slice(a.top()), b.slice(b.top())
    if r > a.n or not is_cross_t_intersecting([ta, tb], r):
        raise PreconditionError(f"top slices are not cross {r}-intersecting")
    da = len(lower_compress(a)) - len(a)
    db = len(lower_compress(b)) - len(b)
    if da > 0:
        return ShadowGrowth.FIRST_GROWS
    if db > 0:
        return ShadowGrowth.SECOND_GROWS
    if r == 1 and da == 0 and db == 0:
        return ShadowGrowth.BOTH_EQUAL_R1
    return ShadowGrowth.NEITHER
