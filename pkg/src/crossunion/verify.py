"""Batch verification: closed forms from :mod:`crossunion.bounds` against the exhaustive oracles."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from crossunion.bounds import (
    INEQUALITIES,
    binom,
    check_inequality,
    general_pair_bound,
    hypothesis_range,
    katona_f,
    maximal_pairs,
)
from crossunion.errors import RangeError, ScaleError
from crossunion.family import SetFamily, down_closure, level, power_set, up_to_level
from crossunion.properties import (
    DEFAULT_SEED,
    check_compress_pair,
    check_sperner_ratios,
    cross_antichain_pairs,
    exhaustive_uniform,
    random_cross_antichain_pair,
    random_uniform,
)
from crossunion.search import (
    search_katona,
    search_max_pair_antichain,
    search_max_pair_general,
    search_max_triple_antichain,
    search_milner,
    search_min_pair,
    search_wong_tay,
)
from crossunion.search.kernels import antichains_within, bits

CONFIRMED = "confirmed"
MISMATCH = "mismatch"
SKIPPED_SCALE = "skipped-scale"
SKIPPED_HYPOTHESIS = "skipped-hypothesis"

# sampled instead of enumerated beyond these
EXHAUSTIVE_PAIR_N = 5
EXHAUSTIVE_UNIFORM_N = 5
SAMPLE_N_MAX = 8
SAMPLE_SIZE = 500


@dataclass(frozen=True)
class VerificationReport:
    theorem_id: str
    n: int
    s: int | None
    formula_value: int | None
    oracle_value: int | None
    witnesses_expected: int | None
    witnesses_found: int | None
    status: str
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != MISMATCH

    def to_json_obj(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "n": self.n,
            "s": self.s,
            "formula_value": self.formula_value,
            "oracle_value": self.oracle_value,
            "witnesses_expected": self.witnesses_expected,
            "witnesses_found": self.witnesses_found,
            "status": self.status,
            "detail": self.detail,
        }


CSV_HEADER = "theorem_id,n,s,formula_value,oracle_value,witnesses_expected,witnesses_found,status"


def report_csv_row(r: VerificationReport) -> str:
    cells = (r.theorem_id, r.n, r.s, r.formula_value, r.oracle_value, r.witnesses_expected, r.witnesses_found, r.status)
    return ",".join("" if c is None else str(c) for c in cells)


def _skip(tid: str, n: int, s: int | None, status: str, why: str) -> VerificationReport:
    return VerificationReport(tid, n, s, None, None, None, None, status, why)


def _canonical(*families: SetFamily) -> tuple[SetFamily, ...]:
    return tuple(sorted(families, key=lambda f: f.sort_key))


def _compare(
    tid: str,
    n: int,
    s: int | None,
    formula: int,
    oracle: int,
    expected: set | None,
    found: set | None,
    detail: str = "",
) -> VerificationReport:
    ok = formula == oracle and (expected is None or expected == found)
    return VerificationReport(
        tid,
        n,
        s,
        formula,
        oracle,
        None if expected is None else len(expected),
        None if found is None else len(found),
        CONFIRMED if ok else MISMATCH,
        detail,
    )


def _tally(tid: str, n: int, s: int | None, checked: int, failures: list[str], how: str) -> VerificationReport:
    detail = how if not failures else f"{how}; first failure: {failures[0]}"
    return VerificationReport(
        tid, n, s, checked, checked - len(failures), None, None,
        CONFIRMED if not failures else MISMATCH, detail,
    )


# -- one checker per statement -------------------------------------------------


def _thm1_2(n, s, seed, workers):
    failures: list[str] = []
    checked = 0
    if n <= EXHAUSTIVE_PAIR_N:
        relabel = n == EXHAUSTIVE_PAIR_N
        for a, b in cross_antichain_pairs(n, s, up_to_relabelling=relabel):
            checked += 1
            failures += [f"A={a} B={b}: {e}" for e in check_compress_pair(a, b, s)]
        how = "every pair up to relabelling" if relabel else "every pair"
    elif n <= SAMPLE_N_MAX:
        rng = random.Random(seed)
        for _ in range(SAMPLE_SIZE):
            a, b = random_cross_antichain_pair(rng, n, s)
            checked += 1
            failures += [f"A={a} B={b}: {e}" for e in check_compress_pair(a, b, s)]
        how = f"{SAMPLE_SIZE} random pairs, seed {seed}"
    else:
        return _skip("thm1.2", n, s, SKIPPED_SCALE, f"compression check capped at n <= {SAMPLE_N_MAX}")
    return _tally("thm1.2", n, s, checked, failures, how)


def _cor1_3i(n, s, seed, workers):
    report = maximal_pairs(n, s)
    res = search_max_pair_antichain(n, s, workers=workers)
    expected = {_canonical(level(n, i), level(n, j)) for i, j in report.pairs}
    return _compare("cor1.3i", n, s, report.value, res.max_value, expected, res.witness_set(),
                    f"maximal pairs {report.format_pairs()}")


def _cor1_3ii(n, s, seed, workers):
    if n < 2 * s:
        return _skip("cor1.3ii", n, s, SKIPPED_HYPOTHESIS, "needs n >= 2s")
    bound = binom(n, 1) + binom(n, s - 1)
    res = search_max_pair_antichain(n, s, forbid_empty_singleton=True, workers=workers)
    # an upper bound only: attained for some (n, s), strict for others
    return VerificationReport(
        "cor1.3ii", n, s, bound, res.max_value, None, len(res.witnesses),
        CONFIRMED if res.max_value <= bound else MISMATCH,
        "attained" if res.max_value == bound else "strict",
    )


def predicted_maximal_pairs(n: int, s: int) -> tuple[tuple[int, int], ...]:
    """The maximal pairs claimed for n >= 2s."""
    if (n, s) == (4, 2):
        return ((1, 1),)
    if (n, s) == (6, 3):
        return ((0, 3), (1, 2))
    return ((0, s),)


def _prop1_4(n, s, seed, workers):
    if n < 2 * s:
        return _skip("prop1.4", n, s, SKIPPED_HYPOTHESIS, "needs n >= 2s")
    predicted = predicted_maximal_pairs(n, s)
    report = maximal_pairs(n, s)
    i, j = predicted[0]
    return _compare("prop1.4", n, s, binom(n, i) + binom(n, j), report.value,
                    set(predicted), set(report.pairs), f"pairs {report.format_pairs()}")


def _thm1_5(n, s, seed, workers):
    if n < 2 * s:
        return _skip("thm1.5", n, s, SKIPPED_HYPOTHESIS, "needs n >= 2s")
    empty = SetFamily(n, (0,))
    if (n, s) == (4, 2):
        formula = 9
        expected = {_canonical(level(n, 1), level(n, 1), empty)}
    else:
        formula = 2 + binom(n, s)
        expected = {_canonical(level(n, s), empty, empty)}
        if (n, s) == (6, 3):
            expected.add(_canonical(level(n, 2), level(n, 1), empty))
    res = search_max_triple_antichain(n, s, workers=workers)
    return _compare("thm1.5", n, s, formula, res.max_value, expected, res.witness_set())


def _complements_removed(a: SetFamily) -> SetFamily:
    full = a.full_set
    dual = {full ^ m for m in a.members}
    return SetFamily(a.n, tuple(m for m in range(1 << a.n) if m not in dual))


def complex_pairs(n: int) -> set[tuple[SetFamily, SetFamily]]:
    """Every {A, 2^X minus the complements of A} for A a complex other than {} and 2^X."""
    full_family = power_set(n).as_mask()
    out = set()
    for ac in antichains_within(full_family):
        if not ac:
            continue
        a = down_closure(SetFamily(n, tuple(bits(ac))))
        if len(a) == 1 << n:
            continue
        out.add(_canonical(a, _complements_removed(a)))
    return out


def _thm1_6(n, s, seed, workers):
    res = search_max_pair_general(n, s, workers=workers)
    if s < n - 1:
        expected = {_canonical(SetFamily(n, (0,)), up_to_level(n, s))}
    else:
        expected = complex_pairs(n)
    return _compare("thm1.6", n, s, general_pair_bound(n, s), res.max_value, expected, res.witness_set())


def _milner(n, s, seed, workers):
    res = search_milner(n, s)
    return _compare("milner", n, s, binom(n, s // 2), res.max_value, None, None,
                    f"{len(res.witnesses)} optimal antichains")


def _frankl(n, s, seed, workers):
    return _compare("frankl1.9", n, s, binom(n, s // 2), search_min_pair(n, s, workers=workers), None, None)


def _wongtay(n, s, seed, workers):
    res = search_wong_tay(n, workers=workers)
    lo, hi = (n - 1) // 2, n // 2
    expected = {_canonical(level(n, lo), level(n, hi))}
    return _compare("wongtay", n, n - 1, binom(n, lo) + binom(n, hi), res.max_value, expected, res.witness_set())


def _katona(n, s, seed, workers):
    res = search_katona(n, s)
    return _compare("katona", n, s, katona_f(n, s), res.max_value, None, None,
                    f"{len(res.witnesses)} optimal families")


def _sperner(n, s, seed, workers):
    failures: list[str] = []
    checked = 0
    if n <= EXHAUSTIVE_UNIFORM_N:
        cases = exhaustive_uniform(n)
        how = "every uniform family"
    elif n <= SAMPLE_N_MAX:
        rng = random.Random(seed)
        cases = (random_uniform(rng, n) for _ in range(SAMPLE_SIZE))
        how = f"{SAMPLE_SIZE} random uniform families, seed {seed}"
    else:
        return _skip("sperner-ratios", n, None, SKIPPED_SCALE, f"capped at n <= {SAMPLE_N_MAX}")
    for f in cases:
        checked += 1
        failures += [f"{f}: {e}" for e in check_sperner_ratios(f)]
    return _tally("sperner-ratios", n, None, checked, failures, how)


def _lemmas(n, s, seed, workers):
    s_max = 20 if s is None else s
    failures, checked = [], 0
    for name in INEQUALITIES:
        for params in hypothesis_range(name, n_max=n, s_max=s_max):
            checked += 1
            if not check_inequality(name, **params).holds:
                failures.append(f"{name} {params}")
    return _tally("lemmas", n, s, checked, failures, f"{len(INEQUALITIES)} inequalities, n <= {n}, s <= {s_max}")


_CHECKERS: dict[str, tuple[Callable, bool]] = {
    # id -> (checker, needs s)
    "thm1.2": (_thm1_2, True),
    "cor1.3i": (_cor1_3i, True),
    "cor1.3ii": (_cor1_3ii, True),
    "prop1.4": (_prop1_4, True),
    "thm1.5": (_thm1_5, True),
    "thm1.6": (_thm1_6, True),
    "milner": (_milner, True),
    "frankl1.9": (_frankl, True),
    "wongtay": (_wongtay, False),
    "katona": (_katona, True),
    "sperner-ratios": (_sperner, False),
    "lemmas": (_lemmas, False),
}

THEOREM_IDS = tuple(_CHECKERS)


def needs_s(theorem_id: str) -> bool:
    return _CHECKERS[theorem_id][1]


def cmd_verify(
    theorem_id: str,
    n: int,
    s: int | None = None,
    seed: int = DEFAULT_SEED,
    workers: int | None = None,
) -> VerificationReport:
    """Check one statement at (n, s); searches beyond their scale cap come back as skipped-scale."""
    try:
        checker, with_s = _CHECKERS[theorem_id]
    except KeyError:
        raise KeyError(f"unknown theorem id {theorem_id!r}; known: {', '.join(THEOREM_IDS)}") from None
    if with_s:
        if s is None:
            raise RangeError(f"{theorem_id} needs --s")
        if not 0 < s < n:
            raise RangeError(f"need 0 < s < n, got n={n}, s={s}")
    elif theorem_id == "wongtay" and n < 2:
        raise RangeError(f"need n >= 2, got {n}")
    elif n < 1:
        raise RangeError(f"need n >= 1, got {n}")
    try:
        return checker(n, s, seed, workers)
    except ScaleError as exc:
        return _skip(theorem_id, n, s if with_s else None, SKIPPED_SCALE, str(exc))


def verify_all(
    n_max: int,
    seed: int = DEFAULT_SEED,
    workers: int | None = None,
    lemma_n_max: int = 40,
) -> list[VerificationReport]:
    """Every statement at every admissible (n, s) with 2 <= n <= n_max, plus the lemma registry once."""
    reports = []
    for tid in THEOREM_IDS:
        if tid == "lemmas":
            reports.append(cmd_verify(tid, lemma_n_max, seed=seed))
            continue
        for n in range(2, n_max + 1):
            if needs_s(tid):
                for s in range(1, n):
                    reports.append(cmd_verify(tid, n, s, seed, workers))
            else:
                reports.append(cmd_verify(tid, n, seed=seed, workers=workers))
    return reports
