"""Exhaustive extremal searches over cross s-union families at desk scale.

None of these searches consults a closed-form bound: each one enumerates its
whole search space (modulo reductions proved below) and reports the exact
maximum together with every extremal configuration.

Reductions used
---------------
Write ``D(F) = {S : |S ∪ F| <= s for all F in F}``. ``D`` reverses
inclusion, ``F ⊆ D(D(F))`` and ``D(D(D(F))) = D(F)``, so ``D`` is a Galois
connection and its closed families are down-sets.

* Any cross s-union pair (A, B) sits inside the closed pair
  ``(P, Q) = (D(B), D(D(B)))``, because ``A ⊆ D(B)`` and ``B ⊆ D(D(B))``.
  The best antichain pair therefore has value ``max width(P) + width(Q)``
  over closed pairs, and every optimal pair is a pair of maximum antichains
  of an optimal closed pair.
* Taking subsets only shrinks unions, so replacing both families of a
  cross s-union pair by their down-closures keeps the pair cross s-union
  and does not decrease either size. Without the antichain condition an
  optimal pair is thus exactly an optimal closed pair.
* For triples, with the largest family labelled A, the pair (B, C) must
  have every union ``B ∪ C`` inside ``U = D(P)`` where ``P`` is the closed
  family containing A. For fixed ``U`` that is again a symmetric Galois
  connection, ``D_U(F) = {S : S ∪ F in U for all F in F}``.

Closed pairs are listed by Close-by-One on family bitmasks, which is far
smaller than the list of antichains (863 closed pairs for n=6, s=3).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable

from crossunion.errors import PreconditionError, RangeError, ScaleError
from crossunion.family import SetFamily, is_down_closed
from crossunion.search import parallel
from crossunion.search.kernels import (
    bits,
    canonical_members,
    closed_pairs,
    constrained_width,
    first_max_antichain,
    max_antichains,
    maximum_cliques,
    union_rows,
    width,
)

PAIR_ANTICHAIN_MAX_N = 6
TRIPLE_MAX_N = 6
GENERAL_PAIR_MAX_N = 5
MILNER_MAX_N = 6
KATONA_MAX_N = 5
WONG_TAY_MAX_N = 5
# about 7.8 million closed pairs at n=6, s=5; s <= 4 stays under 40k
CLOSED_PAIR_MAX_S = {6: 4}


@dataclass(frozen=True)
class SearchResult:
    max_value: int
    witnesses: tuple[tuple[SetFamily, ...], ...]
    nodes_explored: int
    wall_time: float

    def to_json_obj(self) -> dict:
        return {
            "max": self.max_value,
            "witnesses": [[f.to_json_obj() for f in w] for w in self.witnesses],
            "nodes": self.nodes_explored,
            "ms": int(round(self.wall_time * 1000)),
        }

    def witness_set(self) -> set[tuple[SetFamily, ...]]:
        return set(self.witnesses)


def _check(n: int, s: int, cap: int) -> None:
    if not isinstance(n, int) or not isinstance(s, int) or not 0 < s < n:
        raise RangeError(f"need integers 0 < s < n, got n={n}, s={s}")
    if n > cap:
        raise ScaleError(f"exhaustive search is capped at n <= {cap}, got n={n}")


def _canonical(families: Iterable[SetFamily]) -> tuple[SetFamily, ...]:
    return tuple(sorted(families, key=lambda f: f.sort_key))


def _to_family(n: int, fam_mask: int) -> SetFamily:
    return SetFamily(n, tuple(bits(fam_mask)))


def _small_sets(n: int, s: int) -> list[int]:
    return sorted((m for m in range(1 << n) if m.bit_count() <= s), key=lambda m: (m.bit_count(), m))


def _union_closed_pairs(n: int, s: int) -> tuple[list[tuple[int, int]], int]:
    """Closed pairs of the s-union relation with both sides nonempty, and the total enumerated."""
    if s > CLOSED_PAIR_MAX_S.get(n, n):
        raise ScaleError(f"closed-pair enumeration at n={n} is capped at s <= {CLOSED_PAIR_MAX_S[n]}, got s={s}")
    rows = union_rows(n, s)
    full = (1 << (1 << n)) - 1
    out = []
    total = 0
    for extent, intent in closed_pairs(_small_sets(n, s), rows, full):
        total += 1
        if extent and intent:
            out.append((extent, intent))
    return out, total


def allowed_partners(f: SetFamily, s: int) -> SetFamily:
    """All S with |S ∪ F| <= s for every member F; a down-set."""
    rows = union_rows(f.n, s) if f.n <= 8 else None
    if rows is not None:
        m = (1 << (1 << f.n)) - 1
        for x in f.members:
            m &= rows[x]
        return _to_family(f.n, m)
    return SetFamily(f.n, tuple(x for x in range(1 << f.n) if all((x | y).bit_count() <= s for y in f.members)))


def max_antichain_in_downset(allowed: SetFamily) -> tuple[int, SetFamily]:
    """Width of a down-closed family and its canonically first maximum antichain."""
    if not is_down_closed(allowed):
        raise PreconditionError("allowed family must be down-closed")
    if not len(allowed):
        return 0, SetFamily(allowed.n)
    m = allowed.as_mask()
    return width(m), _to_family(allowed.n, first_max_antichain(m))


# -- pairs of antichains -----------------------------------------------------


def _pair_values(task: tuple[list[tuple[int, int]], bool]) -> list[int | None]:
    pairs, forbid = task
    out = []
    for extent, intent in pairs:
        wa = constrained_width(extent, forbid)
        wb = constrained_width(intent, forbid)
        out.append(None if wa is None or wb is None else wa + wb)
    return out


def search_max_pair_antichain(
    n: int, s: int, forbid_empty_singleton: bool = False, workers: int | None = None
) -> SearchResult:
    """Largest |A| + |B| over nonempty cross s-union antichains, with all optimal pairs.

    With ``forbid_empty_singleton`` neither family may be {∅}. Pairs are
    reported once up to swapping A and B.
    """
    _check(n, s, PAIR_ANTICHAIN_MAX_N)
    workers = parallel.resolve_workers(workers)
    t0 = time.perf_counter()
    pairs, nodes = _union_closed_pairs(n, s)
    # the relation is symmetric, so (P, Q) closed implies (Q, P) closed
    pairs = [(e, i) for e, i in pairs if e <= i]
    chunks = parallel.split(pairs, workers)
    values = [v for part in parallel.run_tasks(_pair_values, [(c, forbid_empty_singleton) for c in chunks], workers) for v in part]
    ordered = [p for c in chunks for p in c]
    scored = [(v, p) for v, p in zip(values, ordered) if v is not None]
    best = max(v for v, _ in scored)
    witnesses = set()
    for v, (extent, intent) in scored:
        if v != best:
            continue
        for a in max_antichains(extent, forbid_empty_singleton):
            for b in max_antichains(intent, forbid_empty_singleton):
                witnesses.add(_canonical((_to_family(n, a), _to_family(n, b))))
    return _result(best, witnesses, nodes, t0)


def _result(best: int, witnesses, nodes: int, t0: float) -> SearchResult:
    ordered = tuple(sorted(witnesses, key=lambda w: tuple(f.sort_key for f in w)))
    return SearchResult(best, ordered, nodes, time.perf_counter() - t0)


def search_wong_tay(n: int, workers: int | None = None) -> SearchResult:
    """The antichain pair search at s = n - 1."""
    if n > WONG_TAY_MAX_N:
        raise ScaleError(f"the s = n - 1 search is capped at n <= {WONG_TAY_MAX_N}, got n={n}")
    if n < 2:
        raise RangeError(f"need n >= 2, got {n}")
    return search_max_pair_antichain(n, n - 1, workers=workers)


def search_min_pair(n: int, s: int, workers: int | None = None) -> int:
    """Largest min(|A|, |B|) over nonempty cross s-union antichains."""
    _check(n, s, PAIR_ANTICHAIN_MAX_N)
    pairs, _ = _union_closed_pairs(n, s)
    return max(min(width(e), width(i)) for e, i in pairs)


# -- triples of antichains ---------------------------------------------------


def _inner_rows(u: int) -> dict[int, int]:
    members = bits(u)
    rows = {}
    for a in members:
        m = 0
        for b in members:
            if u >> (a | b) & 1:
                m |= 1 << b
        rows[a] = m
    return rows


def _triple_task(task: list[tuple[int, int, int, int]]) -> tuple[int, list[tuple[int, int, int]], int]:
    best = 0
    found: list[tuple[int, int, int]] = []
    nodes = 0
    for outer, u, w_outer, w_u in task:
        shared = parallel.best_so_far()
        # A is the largest family, and B, C each fit in U
        if 3 * w_outer < shared or w_outer + 2 * w_u < shared:
            continue
        rows = _inner_rows(u)
        order = canonical_members(u)
        for b, c in closed_pairs(order, rows, u):
            nodes += 1
            if not b or not c or b > c:
                continue
            v = w_outer + width(b) + width(c)
            if v > best:
                best, found = v, []
                parallel.offer(v)
            if v == best:
                found.append((outer, b, c))
    return best, found, nodes


def search_max_triple_antichain(n: int, s: int, workers: int | None = None) -> SearchResult:
    """Largest |A| + |B| + |C| over nonempty antichains with every |A ∪ B ∪ C| <= s.

    Triples are reported once up to permutation of the three families.
    """
    _check(n, s, TRIPLE_MAX_N)
    workers = parallel.resolve_workers(workers)
    t0 = time.perf_counter()
    pairs, nodes = _union_closed_pairs(n, s)
    outer = sorted(
        ((e, i, width(e), width(i)) for e, i in pairs),
        key=lambda t: (-t[2], -t[3], t[0]),
    )
    results = parallel.run_tasks(_triple_task, parallel.split(outer, workers), workers)
    best = max(r[0] for r in results)
    witnesses = set()
    for value, found, inner_nodes in results:
        nodes += inner_nodes
        if value != best:
            continue
        for a_side, b_side, c_side in found:
            for a in max_antichains(a_side):
                for b in max_antichains(b_side):
                    for c in max_antichains(c_side):
                        witnesses.add(_canonical(_to_family(n, x) for x in (a, b, c)))
    return _result(best, witnesses, nodes, t0)


# -- pairs without the antichain condition -----------------------------------


def search_max_pair_general(n: int, s: int, workers: int | None = None) -> SearchResult:
    """Largest |A| + |B| over nonempty cross s-union families.

    Optimal pairs are down-closed and closed under the Galois connection, so
    the witnesses listed are exactly the optimal pairs.
    """
    _check(n, s, GENERAL_PAIR_MAX_N)
    parallel.resolve_workers(workers)
    t0 = time.perf_counter()
    pairs, nodes = _union_closed_pairs(n, s)
    best = max(e.bit_count() + i.bit_count() for e, i in pairs)
    witnesses = {
        _canonical((_to_family(n, e), _to_family(n, i)))
        for e, i in pairs
        if e.bit_count() + i.bit_count() == best
    }
    return _result(best, witnesses, nodes, t0)


# -- single families ---------------------------------------------------------


def _clique_search(n: int, s: int, antichain: bool) -> SearchResult:
    t0 = time.perf_counter()
    vertices = _small_sets(n, s)

    def adjacent(a: int, b: int) -> bool:
        if (a | b).bit_count() > s:
            return False
        return not antichain or (a & b != a and a & b != b)

    best, cliques = maximum_cliques(vertices, adjacent)
    witnesses = {(SetFamily(n, tuple(vertices[i] for i in bits(c))),) for c in cliques}
    return _result(best, witnesses, len(vertices), t0)


def search_milner(n: int, s: int) -> SearchResult:
    """Largest s-union antichain, with every optimal one."""
    _check(n, s, MILNER_MAX_N)
    return _clique_search(n, s, antichain=True)


def search_katona(n: int, s: int) -> SearchResult:
    """Largest s-union family (no antichain condition), with every optimal one."""
    _check(n, s, KATONA_MAX_N)
    return _clique_search(n, s, antichain=False)
