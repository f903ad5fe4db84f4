import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import families
from crossunion.compression import ShadowGrowth, check_shadow_growth
from crossunion.errors import EmptyFamilyError, PreconditionError, RangeError
from crossunion.family import SetFamily, is_antichain, is_cross_s_union, is_cross_t_intersecting, level
from crossunion.properties import _antichains, random_cross_family_pair
from crossunion.transforms import (
    is_shifted,
    link_and_delete,
    lower_compress,
    make_shifted,
    shade,
    shadow,
    shift_families,
    shift_ij,
    upper_compress,
)


def test_shadow_examples(fam):
    assert shadow(fam(3, [1, 2])) == fam(3, [1], [2])
    assert shadow(level(4, 2)) == level(4, 1)
    assert shadow(fam(4, [1, 2], [3, 4])) == level(4, 1)


def test_shadow_preconditions(fam):
    with pytest.raises(PreconditionError):
        shadow(fam(3, [1], [1, 2]))
    with pytest.raises(PreconditionError):
        shadow(fam(3, []))
    with pytest.raises(PreconditionError):
        shadow(SetFamily(3))


def test_shade_examples(fam):
    assert shade(fam(3, [1])) == fam(3, [1, 2], [1, 3])
    assert shade(fam(4, [])) == level(4, 1)
    assert shade(level(4, 1)) == level(4, 2)
    with pytest.raises(PreconditionError):
        shade(fam(3, [1, 2, 3]))
    with pytest.raises(PreconditionError):
        shade(fam(3, [1], [1, 2]))


def test_lower_compress_examples(fam):
    assert lower_compress(level(4, 2)) == level(4, 1)
    out = lower_compress(fam(5, [1, 2, 3], [4, 5]))
    assert out == fam(5, [4, 5], [1, 2], [1, 3], [2, 3])
    assert is_antichain(out)
    assert lower_compress(fam(3, [1], [2, 3])) == fam(3, [1], [2], [3])
    with pytest.raises(PreconditionError):
        lower_compress(fam(3, []))
    with pytest.raises(EmptyFamilyError):
        lower_compress(SetFamily(3))


def test_upper_compress_examples(fam):
    assert upper_compress(fam(3, [])) == level(3, 1)
    assert upper_compress(fam(3, [1], [2, 3])) == fam(3, [2, 3], [1, 2], [1, 3])
    assert upper_compress(level(4, 1)) == level(4, 2)
    with pytest.raises(PreconditionError):
        upper_compress(fam(3, [1, 2, 3]))
    with pytest.raises(EmptyFamilyError):
        upper_compress(SetFamily(3))


def test_shift_examples(fam):
    assert shift_ij(fam(2, [2]), 1, 2) == fam(2, [1])
    assert shift_ij(fam(2, [1], [2]), 1, 2) == fam(2, [1], [2])
    for k in range(5):
        assert shift_ij(level(4, k), 2, 4) == level(4, k)
    with pytest.raises(PreconditionError):
        shift_ij(fam(3, [1]), 2, 2)
    with pytest.raises(PreconditionError):
        shift_ij(fam(3, [1]), 3, 1)
    with pytest.raises(PreconditionError):
        shift_ij(fam(3, [1]), 1, 4)


def test_is_shifted_examples(fam):
    assert is_shifted(fam(2, [1], [2]))
    assert not is_shifted(fam(2, [2]))
    assert is_shifted(fam(3, [1, 2], [1, 3]))
    assert not is_shifted(fam(3, [1, 3]))
    assert is_shifted(SetFamily(3))
    # {2,3} needs {1,2} and {1,3}
    assert not is_shifted(fam(3, [2, 3], [1, 3]))


@given(families(n_max=7))
def test_make_shifted(f):
    g = make_shifted(f)
    assert len(g) == len(f)
    assert g.sizes() == f.sizes()
    assert is_shifted(g)
    assert make_shifted(g) == g


@settings(max_examples=200)
@given(st.integers(2, 7), st.data())
def test_joint_shift_preserves_cross_union(n, data):
    s = data.draw(st.integers(1, n - 1))
    rng = random.Random(data.draw(st.integers(0, 2**32)))
    a, b = random_cross_family_pair(rng, n, s)
    sa, sb = shift_families([a, b])
    assert (len(sa), len(sb)) == (len(a), len(b))
    assert is_cross_s_union([sa, sb], s)
    assert is_shifted(sa) and is_shifted(sb)


def test_link_and_delete_examples(fam):
    assert link_and_delete(fam(3, [1], [1, 3])) == (fam(2, [1]), fam(2, [1]))
    assert link_and_delete(fam(3, [])) == (fam(2, []), SetFamily(2))
    assert link_and_delete(level(3, 1)) == (level(2, 1), fam(2, []))
    with pytest.raises(RangeError):
        link_and_delete(fam(1, [1]))


@given(families(n_min=2))
def test_link_and_delete_sizes(f):
    avoid, link = link_and_delete(f)
    assert avoid.n == link.n == f.n - 1
    assert len(avoid) + len(link) == len(f)


def test_shadow_growth_examples(fam):
    assert check_shadow_growth((fam(4, [1, 2, 3]), fam(4, [1, 2, 3])), 3) is ShadowGrowth.FIRST_GROWS
    assert check_shadow_growth((fam(3, [1, 2]), fam(3, [1, 2])), 2) is ShadowGrowth.FIRST_GROWS
    assert check_shadow_growth((level(3, 2), fam(3, [1, 2])), 1) is ShadowGrowth.SECOND_GROWS


def test_shadow_growth_rejects_non_intersecting_tops():
    # two disjoint 2-sets, so the top slices are not cross 1-intersecting
    with pytest.raises(PreconditionError):
        check_shadow_growth((level(4, 2), level(4, 2)), 1)
    with pytest.raises(PreconditionError):
        check_shadow_growth((level(4, 2), level(4, 2)), 0)


def test_shadow_growth_equal_case():
    # any two 2-subsets of [3] meet, and the shadow of C([3],2) has 3 sets as well
    pair = (level(3, 2), level(3, 2))
    assert check_shadow_growth(pair, 1) is ShadowGrowth.BOTH_EQUAL_R1
    with pytest.raises(PreconditionError):
        check_shadow_growth(pair, 2)


def test_shadow_growth_claim_exhaustive_small():
    for n in range(1, 5):
        acs = [a for a in _antichains(n, n) if a.top() > 0]
        for a in acs:
            for b in acs:
                ta, tb = a.slice(a.top()), b.slice(b.top())
                for r in range(1, n + 1):
                    if not is_cross_t_intersecting([ta, tb], r):
                        break
                    assert check_shadow_growth((a, b), r) is not ShadowGrowth.NEITHER
