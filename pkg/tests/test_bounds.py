from fractions import Fraction
from math import comb

import pytest

from soltes import (
    BadParameterError,
    decomposition_7460,
    diff_lower_bound_7,
    gap_check,
    layer_count,
    moore_bound,
    pair_counts,
    sigma_upper_bound_7,
)
from soltes.bounds import bounds_record, moore_params, pair_counts_closed_7


def test_moore_examples():
    assert moore_bound(4, 12) == 728 == 3**6 - 1
    assert moore_bound(3, 6) == 14
    assert moore_bound(7, 12) == 18662 == 2 * (6**6 - 1) // 5
    assert moore_params(7, 12).k == 6


def test_moore_layers():
    for d in range(3, 9):
        for g in range(4, 21, 2):
            layers = [(d - 1) ** j for j in range(g // 2)]
            assert moore_bound(d, g) == 2 * sum(layers)


@pytest.mark.parametrize("d, g", [(4, 7), (2, 6), (3, 2)])
def test_moore_bad(d, g):
    with pytest.raises(BadParameterError):
        moore_bound(d, g)


def test_moore_exact_for_huge_values():
    assert moore_bound(7, 200) == 2 * (6**100 - 1) // 5


def test_layer_count():
    assert layer_count(7, 0) == 1
    assert layer_count(7, 5) == 216
    assert layer_count(7, 6) == 216


def test_pair_counts_examples():
    assert pair_counts(7, 0) == (6, 0)
    assert pair_counts(7, 1) == (108, 42)
    assert pair_counts(7, 2) == (1080, 504)


def test_pair_counts_closed_forms():
    for i in range(16):
        assert pair_counts(7, i) == pair_counts_closed_7(i)


def test_diff_bound_routes_agree():
    for k in range(1, 41):
        b = diff_lower_bound_7(k)
        assert b.routes_agree, k
    assert diff_lower_bound_7(29).closed_form.denominator == 1


def test_sigma_upper_bound():
    assert sigma_upper_bound_7(1) == Fraction(23792, 1250)
    assert sigma_upper_bound_7(2) > 0
    values = [sigma_upper_bound_7(k) for k in range(1, 41)]
    assert values == sorted(values) and len(set(values)) == 40
    assert isinstance(values[0], Fraction)


def test_gap_check():
    assert not gap_check(1)
    assert gap_check(29) and gap_check(40)
    assert [k for k in range(1, 41) if gap_check(k)] == list(range(29, 41))
    # the stricter threshold turns true at the same k
    assert [k for k in range(1, 41) if gap_check(k, 10**6)] == list(range(29, 41))


def test_decomposition():
    rec = decomposition_7460()
    assert sum(range(12, 123)) == 7437 == comb(123, 2) - comb(12, 2)
    assert rec.path_sum == 7437 and rec.pendant == 23 and rec.total == 7460
    assert rec.added_vertices == 112 and rec.ok


def test_bounds_record():
    r = bounds_record(4, 12)
    assert r["moore"] == 728 and r["diff_lb"] is None and r["schema"] == 1
    r = bounds_record(7, 58)
    assert r["gap_ok"] is True and r["diff_lb"] == diff_lower_bound_7(29).value
    num, den = map(int, r["sigma_ub"].split("/"))
    assert Fraction(num, den) == sigma_upper_bound_7(29)
