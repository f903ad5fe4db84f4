"""Exhaustive and seeded-random property checks for the family operators.

Each checker takes one case and returns a list of failure messages (empty
when the case passes). :func:`run_property_suite` drives every checker over
all small cases and a seeded random sample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterator

from crossunion.compression import STEP_KINDS, compress_pair
from crossunion.family import (
    SetFamily,
    is_antichain,
    is_cross_s_union,
    level,
)
from crossunion.search.exhaustive import allowed_partners
from crossunion.search.kernels import antichains_within, bits
from crossunion.transforms import (
    is_shifted,
    lower_compress,
    shade,
    shadow,
    shift_families,
    upper_compress,
)

DEFAULT_SEED = 20240917
RANDOM_N_MAX = 8


def check_sperner_ratios(f: SetFamily) -> list[str]:
    n, k = f.n, f.top()
    full = f == level(n, k)
    errs = []
    if k >= 1:
        lhs, rhs = len(shadow(f)) * (n - k + 1), len(f) * k
        if lhs < rhs or (lhs == rhs) != full:
            errs.append(f"shadow ratio: |∂F|(n-k+1)={lhs} vs |F|k={rhs}, full={full}")
    if k < n:
        lhs, rhs = len(shade(f)) * (k + 1), len(f) * (n - k)
        if lhs < rhs or (lhs == rhs) != full:
            errs.append(f"shade ratio: |σF|(k+1)={lhs} vs |F|(n-k)={rhs}, full={full}")
    return errs


def check_compressions(f: SetFamily) -> list[str]:
    """Both compressions of an antichain other than {∅} and {X} are antichains one level in."""
    errs = []
    low, up = lower_compress(f), upper_compress(f)
    if not is_antichain(low):
        errs.append("lower compression is not an antichain")
    if low.top() != f.top() - 1:
        errs.append(f"lower compression top {low.top()} != {f.top() - 1}")
    if not is_antichain(up):
        errs.append("upper compression is not an antichain")
    if up.bottom() != f.bottom() + 1:
        errs.append(f"upper compression bottom {up.bottom()} != {f.bottom() + 1}")
    return errs


def check_adjunction(n: int, big: int, small: int) -> list[str]:
    f = SetFamily(n, (big,))
    g = SetFamily(n, (small,))
    if (small in shadow(f)) != (big in shade(g)):
        return [f"shadow/shade disagree on {small} ⊂ {big}"]
    return []


def check_compress_pair(a: SetFamily, b: SetFamily, s: int) -> list[str]:
    (ra, rb), trace = compress_pair((a, b), s)
    errs = []
    if len(ra) < len(a) or len(rb) < len(b):
        errs.append("(i) a family shrank")
    if ra.top() > a.top() or rb.top() > b.top():
        errs.append("(ii) a top grew")
    if ra.top() + rb.top() > s:
        errs.append("(iii) tops sum above s")
    both_full = a == level(a.n, a.top()) and b == level(b.n, b.top())
    total_before, total_after = len(a) + len(b), len(ra) + len(rb)
    if total_after < total_before or (not both_full and total_after == total_before):
        errs.append(f"(iv) total {total_before} -> {total_after}, full levels={both_full}")
    if not (is_antichain(ra) and is_antichain(rb)):
        errs.append("result is not a pair of antichains")
    if not is_cross_s_union([ra, rb], s):
        errs.append("result is not cross s-union")
    sizes = (len(a), len(b))
    for step in trace.steps:
        if step.kind not in STEP_KINDS:
            errs.append(f"unknown step kind {step.kind}")
        if step.sizes_before != sizes:
            errs.append("trace does not chain")
        if step.sizes_after[0] < step.sizes_before[0] or step.sizes_after[1] < step.sizes_before[1]:
            errs.append(f"step {step.kind} shrank a family")
        sizes = step.sizes_after
    if sizes != (len(ra), len(rb)):
        errs.append("trace end does not match result")
    if trace.steps and trace.steps[-1].tops_after != (ra.top(), rb.top()):
        errs.append("trace tops do not match result")
    return errs


def check_joint_shift(a: SetFamily, b: SetFamily, s: int) -> list[str]:
    sa, sb = shift_families([a, b])
    errs = []
    if (len(sa), len(sb)) != (len(a), len(b)):
        errs.append("shifting changed a size")
    if not is_cross_s_union([sa, sb], s):
        errs.append("shifting broke cross s-union")
    if not (is_shifted(sa) and is_shifted(sb)):
        errs.append("fixed point is not shifted")
    return errs


# -- case generators ---------------------------------------------------------


def _antichains(n: int, s: int) -> list[SetFamily]:
    universe = 0
    for m in range(1 << n):
        if m.bit_count() <= s:
            universe |= 1 << m
    return [SetFamily(n, tuple(bits(a))) for a in antichains_within(universe) if a]


def exhaustive_uniform(n: int) -> Iterator[SetFamily]:
    for k in range(n + 1):
        lvl = level(n, k).members
        for mask in range(1, 1 << len(lvl)):
            yield SetFamily(n, tuple(lvl[i] for i in bits(mask)))


def _relabel_maps(n: int) -> list[list[int]]:
    return [
        [sum(1 << p[i] for i in range(n) if m >> i & 1) for m in range(1 << n)]
        for p in permutations(range(n))
    ]


def cross_antichain_pairs(
    n: int, s: int, up_to_relabelling: bool = False
) -> Iterator[tuple[SetFamily, SetFamily]]:
    """Every cross s-union pair of nonempty antichains on [n], once up to swap.

    With ``up_to_relabelling`` the first family runs over one representative
    per orbit of the symmetric group while the second still runs over every
    admissible antichain, so the list covers every pair up to relabelling
    the ground set.
    """
    acs = _antichains(n, s)
    if up_to_relabelling:
        maps = _relabel_maps(n)
        reps: dict[tuple, SetFamily] = {}
        for a in acs:
            key = min(tuple(sorted(mp[x] for x in a.members)) for mp in maps)
            reps.setdefault(key, a)
        acs = list(reps.values())
    for a in acs:
        for b in antichains_within(allowed_partners(a, s).as_mask()):
            if not b:
                continue
            bf = SetFamily(n, tuple(bits(b)))
            if not up_to_relabelling and bf.sort_key < a.sort_key:
                continue
            yield a, bf


def exhaustive_cross_pairs(
    n: int, up_to_relabelling: bool = False
) -> Iterator[tuple[SetFamily, SetFamily, int]]:
    for s in range(1, n):
        for a, b in cross_antichain_pairs(n, s, up_to_relabelling):
            yield a, b, s


def _random_antichain(rng: random.Random, n: int, pool: list[int], target: int) -> SetFamily:
    pool = pool[:]
    rng.shuffle(pool)
    chosen: list[int] = []
    for x in pool:
        if len(chosen) >= target:
            break
        if all(x & y != x and x & y != y for y in chosen):
            chosen.append(x)
    return SetFamily(n, tuple(chosen))


def _random_pool(rng: random.Random, n: int, s: int) -> list[int]:
    if rng.random() < 0.5:
        core = rng.sample(range(n), rng.randint(1, s))
        cmask = sum(1 << i for i in core)
        return [m for m in range(1 << n) if m & cmask == m]
    return [m for m in range(1 << n) if m.bit_count() <= s]


def random_cross_antichain_pair(rng: random.Random, n: int, s: int) -> tuple[SetFamily, SetFamily]:
    pool = _random_pool(rng, n, s)
    b = _random_antichain(rng, n, pool, rng.randint(1, 12))
    allowed = [x for x in range(1 << n) if all((x | y).bit_count() <= s for y in b.members)]
    if rng.random() < 0.5:
        # bias A towards large sets so the compression has work to do
        top = max(x.bit_count() for x in allowed)
        allowed = [x for x in allowed if x.bit_count() >= top - 1] or allowed
    a = _random_antichain(rng, n, allowed, rng.randint(1, 12))
    return a, b


def random_cross_family_pair(rng: random.Random, n: int, s: int) -> tuple[SetFamily, SetFamily]:
    pool = _random_pool(rng, n, s)
    p = rng.random()
    b = [x for x in pool if rng.random() < p] or [rng.choice(pool)]
    allowed = [x for x in range(1 << n) if all((x | y).bit_count() <= s for y in b)]
    q = rng.random()
    a = [x for x in allowed if rng.random() < q] or [rng.choice(allowed)]
    return SetFamily(n, tuple(a)), SetFamily(n, tuple(b))


def random_uniform(rng: random.Random, n: int) -> SetFamily:
    k = rng.randint(0, n)
    lvl = level(n, k).members
    if rng.random() < 0.1:
        return SetFamily(n, lvl)
    p = rng.random()
    chosen = [x for x in lvl if rng.random() < p] or [rng.choice(lvl)]
    return SetFamily(n, tuple(chosen))


# -- driver ------------------------------------------------------------------


@dataclass
class PropertyTally:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures

    def run(self, errs: list[str], case: str) -> None:
        self.checked += 1
        if errs:
            self.failures.append(f"{case}: {'; '.join(errs)}")


PROPERTY_NAMES = ("sperner_ratios", "compressions", "adjunction", "compress_pair", "joint_shift")


def run_property_suite(
    seed: int = DEFAULT_SEED,
    random_cases: int = 10_000,
    exhaustive_n: int = 5,
    pair_full_n: int = 4,
    random_n_max: int = RANDOM_N_MAX,
) -> dict[str, PropertyTally]:
    """Run every operator property over all small cases plus ``random_cases`` seeded random ones.

    Single-family properties are exhaustive for n <= ``exhaustive_n``. The
    pair properties list every pair for n <= ``pair_full_n`` and every pair
    up to relabelling beyond that (7.8 million pairs at n=5, s=4 otherwise).
    Random cases are dealt round-robin to the five properties with n drawn
    up to ``random_n_max``.
    """
    tallies = {name: PropertyTally(name) for name in PROPERTY_NAMES}
    for n in range(1, exhaustive_n + 1):
        for f in exhaustive_uniform(n):
            tallies["sperner_ratios"].run(check_sperner_ratios(f), str(f))
        for f in _antichains(n, n):
            if f.members in ((0,), ((1 << n) - 1,)):
                continue
            tallies["compressions"].run(check_compressions(f), str(f))
        for big in range(1, 1 << n):
            rest = big
            while rest:
                low = rest & -rest
                rest ^= low
                tallies["adjunction"].run(check_adjunction(n, big, big ^ low), f"n={n}")
            for small in range(1 << n):
                if small.bit_count() == big.bit_count() - 1 and small & big != small:
                    tallies["adjunction"].run(check_adjunction(n, big, small), f"n={n}")
    for n in range(2, exhaustive_n + 1):
        for a, b, s in exhaustive_cross_pairs(n, up_to_relabelling=n > pair_full_n):
            case = f"n={n} s={s} A={a} B={b}"
            tallies["compress_pair"].run(check_compress_pair(a, b, s), case)
            tallies["joint_shift"].run(check_joint_shift(a, b, s), case)

    rng = random.Random(seed)

    def sperner_case():
        f = random_uniform(rng, rng.randint(1, random_n_max))
        return check_sperner_ratios(f), str(f)

    def compressions_case():
        n = rng.randint(2, random_n_max)
        while True:
            f = _random_antichain(rng, n, list(range(1 << n)), rng.randint(1, 20))
            if f.members not in ((0,), ((1 << n) - 1,)):
                return check_compressions(f), str(f)

    def adjunction_case():
        n = rng.randint(1, random_n_max)
        big = rng.randrange(1, 1 << n)
        k = big.bit_count()
        small = rng.choice([m for m in range(1 << n) if m.bit_count() == k - 1])
        return check_adjunction(n, big, small), f"n={n} {big} {small}"

    def compress_case():
        n = rng.randint(2, random_n_max)
        s = rng.randint(1, n - 1)
        a, b = random_cross_antichain_pair(rng, n, s)
        return check_compress_pair(a, b, s), f"n={n} s={s} A={a} B={b}"

    def shift_case():
        n = rng.randint(2, random_n_max)
        s = rng.randint(1, n - 1)
        a, b = random_cross_family_pair(rng, n, s)
        return check_joint_shift(a, b, s), f"n={n} s={s} A={a} B={b}"

    checkers: list[tuple[str, Callable[[], tuple[list[str], str]]]] = [
        ("sperner_ratios", sperner_case),
        ("compressions", compressions_case),
        ("adjunction", adjunction_case),
        ("compress_pair", compress_case),
        ("joint_shift", shift_case),
    ]
    for i in range(random_cases):
        name, make = checkers[i % len(checkers)]
        errs, case = make()
        tallies[name].run(errs, case)
    return tallies
