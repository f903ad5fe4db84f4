import random
from itertools import combinations, permutations

import crossunion.properties as props
from crossunion.family import SetFamily, is_antichain, is_cross_s_union, level
from crossunion.properties import (
    check_compress_pair,
    check_compressions,
    check_joint_shift,
    check_sperner_ratios,
    cross_antichain_pairs,
    random_cross_antichain_pair,
    random_cross_family_pair,
    run_property_suite,
)


def _all_pairs_brute(n, s):
    acs = []
    sets = range(1 << n)
    for r in range(1, 1 << n):
        for c in combinations(sets, r):
            f = SetFamily(n, c)
            if is_antichain(f):
                acs.append(f)
    out = set()
    for a in acs:
        for b in acs:
            if is_cross_s_union([a, b], s):
                out.add(tuple(sorted((a, b), key=lambda f: f.sort_key)))
    return out


def _relabel(f, p):
    return SetFamily(f.n, tuple(sum(1 << p[i] for i in range(f.n) if m >> i & 1) for m in f.members))


def test_cross_pairs_are_complete():
    for n, s in [(2, 1), (3, 1), (3, 2)]:
        listed = {tuple(sorted(p, key=lambda f: f.sort_key)) for p in cross_antichain_pairs(n, s)}
        assert listed == _all_pairs_brute(n, s)
        assert len(listed) == sum(1 for _ in cross_antichain_pairs(n, s))


def test_relabelled_pairs_cover_every_orbit():
    n, s = 3, 2
    reduced = {tuple(sorted(p, key=lambda f: f.sort_key)) for p in cross_antichain_pairs(n, s, True)}
    for a, b in _all_pairs_brute(n, s):
        images = {
            tuple(sorted((_relabel(a, p), _relabel(b, p)), key=lambda f: f.sort_key))
            for p in permutations(range(n))
        }
        assert images & reduced


def test_random_generators_respect_constraints():
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randint(2, 8)
        s = rng.randint(1, n - 1)
        a, b = random_cross_antichain_pair(rng, n, s)
        assert is_antichain(a) and is_antichain(b) and is_cross_s_union([a, b], s)
        a, b = random_cross_family_pair(rng, n, s)
        assert is_cross_s_union([a, b], s)


def test_checkers_pass_on_good_inputs():
    assert check_sperner_ratios(level(5, 2)) == []
    assert check_sperner_ratios(SetFamily.from_sets(5, [[1, 2], [3, 4]])) == []
    assert check_compressions(level(4, 2)) == []
    assert check_compress_pair(level(4, 1), level(4, 1), 2) == []
    assert check_joint_shift(SetFamily.from_sets(4, [[3, 4]]), SetFamily.from_sets(4, [[4]]), 3) == []


def test_checkers_catch_faults(monkeypatch):
    a = SetFamily.from_sets(4, [[1, 2, 3]])
    # identity "compression" leaves the tops summing above s
    monkeypatch.setattr(props, "compress_pair", lambda pair, s: (pair, type("T", (), {"steps": []})()))
    errs = check_compress_pair(a, a, 3)
    assert any(e.startswith("(iii)") for e in errs)
    assert any(e.startswith("(iv)") for e in errs)

    monkeypatch.setattr(props, "shift_families", lambda fams: list(fams))
    errs = check_joint_shift(SetFamily.from_sets(4, [[3, 4]]), SetFamily.from_sets(4, [[4]]), 3)
    assert errs == ["fixed point is not shifted"]

    monkeypatch.setattr(props, "shadow", lambda f: SetFamily(f.n))
    assert check_sperner_ratios(level(4, 2))


def test_suite_is_deterministic_and_green():
    one = run_property_suite(seed=9, random_cases=200, exhaustive_n=3)
    two = run_property_suite(seed=9, random_cases=200, exhaustive_n=3)
    assert {k: (t.checked, t.failures) for k, t in one.items()} == {
        k: (t.checked, t.failures) for k, t in two.items()
    }
    assert all(t.passed for t in one.values())
