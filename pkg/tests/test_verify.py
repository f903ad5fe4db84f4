import pytest

from crossunion.errors import RangeError
from crossunion.verify import (
    CONFIRMED,
    SKIPPED_HYPOTHESIS,
    SKIPPED_SCALE,
    THEOREM_IDS,
    cmd_verify,
    complex_pairs,
    predicted_maximal_pairs,
    report_csv_row,
)


def test_examples():
    r = cmd_verify("thm1.5", 6, 3)
    assert (r.status, r.formula_value, r.oracle_value, r.witnesses_found) == (CONFIRMED, 22, 22, 2)
    r = cmd_verify("thm1.6", 4, 2)
    assert (r.status, r.formula_value, r.oracle_value, r.witnesses_expected, r.witnesses_found) == (
        CONFIRMED, 12, 12, 1, 1,
    )
    r = cmd_verify("prop1.4", 8, 2)
    assert r.status == CONFIRMED and r.detail == "pairs 0,2"


@pytest.mark.parametrize(
    "tid,n,s",
    [
        ("cor1.3i", 6, 3),
        ("cor1.3ii", 6, 3),
        ("cor1.3ii", 5, 2),
        ("thm1.5", 4, 2),
        ("thm1.6", 4, 3),
        ("milner", 5, 3),
        ("frankl1.9", 5, 2),
        ("katona", 5, 3),
        ("thm1.2", 4, 3),
        ("thm1.2", 6, 3),
    ],
)
def test_confirmed(tid, n, s):
    assert cmd_verify(tid, n, s).status == CONFIRMED


def test_s_free_ids():
    assert cmd_verify("wongtay", 4).status == CONFIRMED
    assert cmd_verify("sperner-ratios", 4).status == CONFIRMED
    assert cmd_verify("sperner-ratios", 7, seed=3).status == CONFIRMED
    r = cmd_verify("lemmas", 40)
    assert r.status == CONFIRMED and r.formula_value == r.oracle_value > 2000


def test_skips():
    assert cmd_verify("cor1.3i", 7, 3).status == SKIPPED_SCALE
    assert cmd_verify("cor1.3i", 6, 5).status == SKIPPED_SCALE
    assert cmd_verify("thm1.6", 6, 2).status == SKIPPED_SCALE
    assert cmd_verify("wongtay", 6).status == SKIPPED_SCALE
    assert cmd_verify("thm1.2", 9, 3).status == SKIPPED_SCALE
    assert cmd_verify("sperner-ratios", 9).status == SKIPPED_SCALE
    assert cmd_verify("thm1.5", 5, 3).status == SKIPPED_HYPOTHESIS
    assert cmd_verify("prop1.4", 5, 3).status == SKIPPED_HYPOTHESIS
    assert cmd_verify("cor1.3ii", 4, 3).status == SKIPPED_HYPOTHESIS


def test_cor_1_3_ii_is_an_upper_bound():
    r = cmd_verify("cor1.3ii", 6, 3)
    assert (r.formula_value, r.oracle_value, r.detail) == (21, 21, "attained")
    r = cmd_verify("cor1.3ii", 5, 1)
    assert r.status == CONFIRMED and r.oracle_value < r.formula_value and r.detail == "strict"


def test_errors():
    with pytest.raises(KeyError):
        cmd_verify("thm9.9", 4, 2)
    with pytest.raises(RangeError):
        cmd_verify("thm1.5", 4)
    with pytest.raises(RangeError):
        cmd_verify("thm1.5", 4, 4)
    with pytest.raises(RangeError):
        cmd_verify("wongtay", 1)


def test_ids():
    assert set(THEOREM_IDS) == {
        "thm1.2", "cor1.3i", "cor1.3ii", "prop1.4", "thm1.5", "thm1.6",
        "milner", "frankl1.9", "wongtay", "katona", "sperner-ratios", "lemmas",
    }


def test_csv_row():
    assert report_csv_row(cmd_verify("thm1.5", 6, 3)) == "thm1.5,6,3,22,22,2,2,confirmed"
    assert report_csv_row(cmd_verify("cor1.3i", 7, 3)) == "cor1.3i,7,3,,,,,skipped-scale"


def test_predicted_pairs():
    assert predicted_maximal_pairs(4, 2) == ((1, 1),)
    assert predicted_maximal_pairs(6, 3) == ((0, 3), (1, 2))
    assert predicted_maximal_pairs(9, 4) == ((0, 4),)


def test_complex_pairs_sizes():
    for n in range(1, 5):
        for pair in complex_pairs(n):
            assert sum(len(f) for f in pair) == 1 << n
