import math
from fractions import Fraction

import pytest

from limpack import GraphInputError, bound_sheet


def test_cubic_k2_random_lower_closed_form():
    sheet = bound_sheet(100, 3, 3, 2)
    assert sheet.random_lower == pytest.approx(100 / (3 * math.sqrt(3)), rel=1e-12)
    assert sheet.random_lower == pytest.approx(19.245008972987527, rel=1e-12)


def test_cubic_k1_greedy_lower():
    sheet = bound_sheet(100, 3, 3, 1)
    assert sheet.greedy_lower == Fraction(100, 10)
    assert bound_sheet(100, 3, 3, 2).greedy_lower is None


def test_cubic_upper_half():
    sheet = bound_sheet(100, 3, 3, 2)
    assert sheet.packing_upper == Fraction(100, 2)


def test_simple_form_value():
    sheet = bound_sheet(100, 3, 3, 2)
    expected = 100 * 2 / (math.e * 3 ** 1.5)
    assert sheet.random_lower_simple == pytest.approx(expected, rel=1e-12)
    assert sheet.random_lower_simple == pytest.approx(14.159686, rel=1e-6)


def test_alt_form_equals_binomial_form():
    # (k+1) C(D+1, k+1) == (D+1) C(D, k) makes both factorizations agree
    for max_deg in range(1, 12):
        for k in range(1, max_deg + 1):
            sheet = bound_sheet(60, max_deg, max_deg, k)
            assert sheet.random_lower == pytest.approx(sheet.random_lower_alt, rel=1e-12)


def test_k_above_max_degree_reports_exact():
    sheet = bound_sheet(17, 3, 3, 4)
    assert sheet.exact_value == 17
    assert sheet.random_lower is None
    assert bound_sheet(17, 3, 3, 3).exact_value is None


def test_lower_bounds_below_upper_when_regular():
    for r in range(1, 8):
        for k in range(1, r + 2):
            sheet = bound_sheet(90, r, r, k)
            for low in sheet.lower_bounds():
                assert float(low) <= float(sheet.packing_upper) + 1e-9


def test_binomial_form_dominates_simple_form():
    # the chain binomial-form >= simple-form needs k >= 2 (it reverses at
    # k = 1, where the simple form is instead dominated by the greedy bound)
    for r in range(2, 10):
        for k in range(2, r + 1):
            sheet = bound_sheet(90, r, r, k)
            assert sheet.random_lower >= sheet.random_lower_simple - 1e-9
            assert float(sheet.packing_upper) >= sheet.random_lower - 1e-9
    one = bound_sheet(90, 2, 2, 1)
    assert one.random_lower_simple <= float(one.greedy_lower) + 1e-9


def test_double_domination_bounds():
    sheet = bound_sheet(30, 3, 3, 2)
    expected_avg = (math.log(4) + math.log(3) + 1) * 30 / 3
    expected_min = expected_avg  # min degree equals average degree here
    assert sheet.double_dom_upper_avg == pytest.approx(expected_avg, rel=1e-12)
    assert sheet.double_dom_upper_min == pytest.approx(expected_min, rel=1e-12)
    assert not sheet.double_dom_upper_useful  # not useful in the cubic case
    assert sheet.double_dom_upper_avg > 30  # exceeds n, hence not useful
    other = bound_sheet(30, 5, 4, 2, avg_degree=4.5)
    assert other.double_dom_upper_useful


def test_cubic_reference_values():
    sheet = bound_sheet(14, 3, 3, 2)
    assert sheet.cubic_quarter_lower == Fraction(14, 4)
    sheet3 = bound_sheet(14, 3, 3, 3)
    assert sheet3.cubic_l3_lower == Fraction(9 * 14, 14)
    assert bound_sheet(14, 3, 1, 3).cubic_l3_lower is None
    assert bound_sheet(14, 4, 4, 2).cubic_quarter_lower is None


def test_errors():
    with pytest.raises(GraphInputError):
        bound_sheet(10, 3, 3, 0)
    with pytest.raises(GraphInputError):
        bound_sheet(-1, 3, 3, 1)
    with pytest.raises(GraphInputError):
        bound_sheet(10, 2, 3, 1)


def test_empty_graph_sheet():
    sheet = bound_sheet(0, 0, 0, 1)
    assert sheet.exact_value == 0
    assert sheet.packing_upper == 0


def test_to_text_deterministic():
    a = bound_sheet(60, 3, 3, 2).to_text()
    b = bound_sheet(60, 3, 3, 2).to_text()
    assert a == b
    assert "random_lower:" in a and "packing_upper: 30" in a
