"""Exact closed-form bounds and the inequality registry.

Every quantity is an exact Python integer (or :class:`fractions.Fraction` when
a side is a ratio such as n^2 / 2). Nothing here touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from crossunion.errors import HypothesisError, RangeError

BoundValue = int


def binom(n: int, k: int) -> BoundValue:
    if n < 0:
        raise RangeError(f"binom needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _check_s(n: int, s: int) -> None:
    if not 0 < s < n:
        raise RangeError(f"need 0 < s < n, got n={n}, s={s}")


def g(n: int, r: int) -> BoundValue:
    """Successive binomial difference C(n, r) - C(n, r - 1), for 1 <= r <= n/2."""
    if not (1 <= r and 2 * r <= n):
        raise RangeError(f"g(n, r) needs 1 <= r <= n/2, got n={n}, r={r}")
    return binom(n, r) - binom(n, r - 1)


def katona_f(n: int, s: int) -> BoundValue:
    """Maximum size of an s-union family on n points."""
    _check_s(n, s)
    r = s // 2
    if s % 2 == 0:
        return sum(binom(n, i) for i in range(r + 1))
    return 2 * sum(binom(n - 1, i) for i in range(r + 1))


def general_pair_bound(n: int, s: int) -> BoundValue:
    """1 + sum_{i <= s} C(n, i): the largest |A| + |B| for nonempty cross s-union families."""
    _check_s(n, s)
    return 1 + sum(binom(n, i) for i in range(s + 1))


@dataclass(frozen=True)
class MaximalPairReport:
    n: int
    s: int
    pairs: tuple[tuple[int, int], ...]
    value: BoundValue

    def format_pairs(self) -> str:
        return ";".join(f"{i},{j}" for i, j in self.pairs)


def maximal_pairs(n: int, s: int) -> MaximalPairReport:
    """All (i, s - i), 0 <= i <= s/2, maximising C(n, i) + C(n, s - i), by direct argmax."""
    _check_s(n, s)
    values = {i: binom(n, i) + binom(n, s - i) for i in range(s // 2 + 1)}
    best = max(values.values())
    pairs = tuple((i, s - i) for i, v in values.items() if v == best)
    return MaximalPairReport(n, s, pairs, best)


@dataclass(frozen=True)
class InequalityCheck:
    name: str
    params: dict
    relation: str
    lhs: int | Fraction
    rhs: int | Fraction
    holds: bool


@dataclass(frozen=True)
class _Entry:
    params: tuple[str, ...]
    relation: str
    hypothesis: Callable[..., bool]
    hypothesis_text: str
    sides: Callable[..., tuple[int | Fraction, int | Fraction]]
    description: str


def _floor_half(x: int) -> int:
    return x // 2


INEQUALITIES: dict[str, _Entry] = {
    "binom3_vs_square": _Entry(
        ("n",), ">",
        lambda n: n >= 12, "n >= 12",
        lambda n: (binom(n, 3), Fraction(n * n, 2)),
        "C(n,3) > n^2/2",
    ),
    "binom5_vs_cube": _Entry(
        ("n",), ">",
        lambda n: n >= 12, "n >= 12",
        lambda n: (binom(n, 5), Fraction(n ** 3, 3)),
        "C(n,5) > n^3/3",
    ),
    "odd_middle_dominance": _Entry(
        ("s",), "<",
        lambda s: s >= 4, "s >= 4",
        lambda s: (binom(2 * s - 1, 1) + binom(2 * s - 1, s - 2), binom(2 * s - 1, s - 1)),
        "C(2s-1,1) + C(2s-1,s-2) < C(2s-1,s-1)",
    ),
    "g_step_sign": _Entry(
        ("n", "r"), "sign=",
        lambda n, r: r >= 1 and 2 * (r + 1) <= n, "1 <= r, r + 1 <= n/2",
        lambda n, r: (g(n, r + 1) - g(n, r), (n - 2 * r) ** 2 - (n + 2)),
        "sign(g(n,r+1) - g(n,r)) = sign((n-2r)^2 - (n+2))",
    ),
    "inner_pair_below_first": _Entry(
        ("n", "s", "i"), "<",
        lambda n, s, i: n >= 2 * s and 1 < i and 2 * i <= s, "n >= 2s, 1 < i <= s/2",
        lambda n, s, i: (binom(n, i) + binom(n, s - i), binom(n, 1) + binom(n, s - 1)),
        "C(n,i) + C(n,s-i) < C(n,1) + C(n,s-1)",
    ),
    "first_pair_below_trivial": _Entry(
        ("n", "s"), "<",
        lambda n, s: n >= 2 * s and s >= 2 and (n, s) not in ((4, 2), (6, 3)),
        "n >= 2s, s >= 2, (n,s) not in {(4,2),(6,3)}",
        lambda n, s: (binom(n, 1) + binom(n, s - 1), binom(n, 0) + binom(n, s)),
        "C(n,1) + C(n,s-1) < C(n,0) + C(n,s)",
    ),
    "triple_inside_union": _Entry(
        ("n", "s"), "<",
        lambda n, s: s >= 1 and n >= 2 * s, "n >= 2s >= 2",
        lambda n, s: (3 * binom(s, _floor_half(s)), 2 + binom(n, s)),
        "3 C(s,floor(s/2)) < 2 + C(n,s)",
    ),
    "triple_one_saturated": _Entry(
        ("n", "s"), "<",
        lambda n, s: s >= 1 and n >= 2 * s, "n >= 2s >= 2",
        lambda n, s: (1 + binom(s, _floor_half(s)) + binom(n, s - 1), 2 + binom(n, s)),
        "1 + C(s,floor(s/2)) + C(n,s-1) < 2 + C(n,s)",
    ),
    "triple_all_below": _Entry(
        ("n", "s"), "<",
        lambda n, s: s >= 3 and n >= 2 * s, "n >= 2s, s >= 3",
        lambda n, s: (
            binom(n, 1) + binom(n, s - 2) + binom(n, _floor_half(s - 1)),
            2 + binom(n, s),
        ),
        "C(n,1) + C(n,s-2) + C(n,floor((s-1)/2)) < 2 + C(n,s)",
    ),
    "vandermonde_middle": _Entry(
        ("s",), "=",
        lambda s: s >= 0, "s >= 0",
        lambda s: (sum(binom(s, i) * binom(s, s - i) for i in range(s + 1)), binom(2 * s, s)),
        "sum_i C(s,i) C(s,s-i) = C(2s,s)",
    ),
}


def _sign(x: int | Fraction) -> int:
    return (x > 0) - (x < 0)


_RELATIONS: dict[str, Callable[[int | Fraction, int | Fraction], bool]] = {
    "<": lambda a, b: a < b,
    ">": lambda a, b: a > b,
    "=": lambda a, b: a == b,
    "sign=": lambda a, b: _sign(a) == _sign(b),
}


def check_inequality(name: str, **params: int) -> InequalityCheck:
    """Evaluate one registered inequality exactly.

    Raises :class:`HypothesisError` when the parameters are outside the range
    on which the inequality is claimed; ``holds=False`` means a genuine
    counterexample inside that range.
    """
    try:
        entry = INEQUALITIES[name]
    except KeyError:
        raise KeyError(f"unknown inequality {name!r}; known: {sorted(INEQUALITIES)}") from None
    if set(params) != set(entry.params):
        raise RangeError(f"{name} takes parameters {entry.params}, got {tuple(params)}")
    args = [params[p] for p in entry.params]
    if not entry.hypothesis(*args):
        raise HypothesisError(f"{name} is only claimed for {entry.hypothesis_text}; got {params}")
    lhs, rhs = entry.sides(*args)
    return InequalityCheck(name, dict(params), entry.relation, lhs, rhs, _RELATIONS[entry.relation](lhs, rhs))


def hypothesis_range(name: str, n_max: int = 40, s_max: int = 20):
    """Every parameter assignment inside the hypothesis of ``name`` up to the given caps."""
    entry = INEQUALITIES[name]
    grids = {"n": range(1, n_max + 1), "s": range(0, s_max + 1), "r": range(0, n_max + 1), "i": range(0, s_max + 1)}

    def rec(idx: int, acc: dict):
        if idx == len(entry.params):
            if entry.hypothesis(*(acc[p] for p in entry.params)):
                yield dict(acc)
            return
        p = entry.params[idx]
        for v in grids[p]:
            acc[p] = v
            yield from rec(idx + 1, acc)
        del acc[p]

    yield from rec(0, {})
