"""Tests for the per-theorem verdict engines."""

import pytest

from src.core.constants import BUDGETS
from src.core.errors import InputError
from src.theorems.engines import (
    ENGINES,
    field_argument,
    thm6_case,
    verify_thm2,
    verify_thm3,
    verify_thm4,
    verify_thm4_1,
    verify_thm4_2,
    verify_thm5,
    verify_thm6,
)
from src.theorems.verdict import Status, TheoremId, TheoremVerdict


# ---------------------------------------------------------------------------
# Field arguments and case routing
# ---------------------------------------------------------------------------


class TestFieldArgument:
    def test_x_one_family(self):
        assert field_argument(TheoremId.T5, {"k": 29, "n": 4}) == 1 - 4 * 29**4

    def test_power_of_three(self):
        assert field_argument(TheoremId.T6, {"q": 5, "n": 2, "e": 2}) == -19

    def test_general_x(self):
        assert field_argument(TheoremId.T41, {"x": 3, "k": 2, "n": 3}) == -23

    def test_twice_prime_power(self):
        assert field_argument(TheoremId.T42, {"l": 3, "e": 1, "n": 2}) == -143


class TestThm6Case:
    @pytest.mark.parametrize(
        "q, n, e, case, halved",
        [
            (7, 2, 1, "(1)", False),
            (5, 4, 1, "(1)", False),
            (5, 2, 1, "(2.1)", False),
            (5, 2, 2, "(2.2)", True),
            (2, 6, 2, "(3.2)", False),
            (2, 10, 2, "(3.1.1)", False),
            (2, 6, 1, "(3.1.2)", False),
            (2, 2, 1, "(3.1.3)", True),
        ],
    )
    def test_routing(self, q, n, e, case, halved):
        assert thm6_case(q, n, e) == (case, halved)


# ---------------------------------------------------------------------------
# Engines
# ---------------------------------------------------------------------------


class TestThm2:
    def test_odd_n(self):
        v = verify_thm2(2, 3)
        assert v.status is Status.PASS
        assert v.d == -31
        assert v.h == 3

    def test_larger_k(self):
        v = verify_thm2(5, 3)
        assert v.passed
        assert v.d == -499

    def test_even_n_not_applicable(self):
        assert verify_thm2(2, 4).status is Status.NOT_APPLICABLE

    def test_domain(self):
        with pytest.raises(InputError):
            verify_thm2(1, 3)


class TestThm3:
    def test_half_case(self):
        v = verify_thm3(5, 2)
        assert v.case_label == "(1)"
        assert v.d == -11
        assert v.expected_divisor == 1
        assert v.full_divisibility is False
        assert v.passed

    def test_excluded_point(self):
        assert verify_thm3(2, 4).status is Status.EXCLUDED

    def test_odd_n(self):
        v = verify_thm3(3, 3)
        assert v.case_label == "(2)"
        assert v.expected_divisor == 3
        assert v.h == 3
        assert v.passed

    def test_d_minus_three_not_applicable(self):
        v = verify_thm3(13, 2)
        assert v.status is Status.NOT_APPLICABLE
        assert v.d == -3


class TestThm4:
    def test_small(self):
        v = verify_thm4(3, 2)
        assert v.passed
        assert v.h == 2
        assert v.case_label == "prime 3 = 3 (mod 4)"

    def test_no_prime_three_mod_four(self):
        assert verify_thm4(5, 2).status is Status.NOT_APPLICABLE

    def test_composite_k(self):
        v = verify_thm4(21, 4)
        assert v.expected_divisor == 4
        assert v.order_s is None
        assert v.passed

    def test_odd_n_not_applicable(self):
        assert verify_thm4(3, 3).status is Status.NOT_APPLICABLE


class TestThm5:
    def test_possible_exception(self):
        v = verify_thm5(29, 4)
        assert v.case_label == "possible-exception"
        assert v.d == -187
        assert v.h == 2
        assert v.full_divisibility is False
        assert v.order_s == 2
        assert v.predicted_orders == (2, 4)
        assert v.passed

    @pytest.mark.parametrize(
        "k, n, d, h",
        [(5, 2, -11, 1), (5, 4, -51, 2), (13, 2, -3, 1), (13, 8, -6347, 28)],
    )
    def test_published_exceptions(self, k, n, d, h):
        v = verify_thm5(k, n)
        assert v.case_label == f"k={k} exception"
        assert (v.d, v.h) == (d, h)
        assert v.passed

    def test_order_at_largest_exception(self):
        assert verify_thm5(13, 8).order_s == 4

    def test_small_k(self):
        v = verify_thm5(3, 2)
        assert v.order_s == 2
        assert v.full_divisibility is True
        assert v.passed

    def test_generic(self):
        v = verify_thm5(3, 3)
        assert v.case_label == "generic"
        assert v.h == 3
        assert v.order_s == 3
        assert v.passed

    def test_even_k_not_applicable(self):
        assert verify_thm5(4, 3).status is Status.NOT_APPLICABLE

    def test_budget_skip(self):
        v = verify_thm5(3, 3, BUDGETS.replace(factor_cap=10))
        assert v.status is Status.SKIPPED
        assert "factor_cap" in v.notes


class TestThm6:
    def test_square_case(self):
        v = verify_thm6(5, 2, 2)
        assert v.case_label == "(2.2)"
        assert v.d == -19
        assert v.passed

    def test_power_of_two_square_case(self):
        v = verify_thm6(2, 2, 1)
        assert v.case_label == "(3.1.3)"
        assert v.d == -7
        assert v.passed

    def test_special_point(self):
        v = verify_thm6(2, 6, 2)
        assert v.case_label == "(3.2)"
        assert (v.d, v.h) == (-7, 1)
        assert v.full_divisibility is False
        assert v.passed

    def test_case_one(self):
        v = verify_thm6(7, 2, 1)
        assert v.case_label == "(1)"
        assert (v.d, v.h) == (-187, 2)
        assert v.order_s == 2
        assert v.passed

    def test_non_square_case(self):
        v = verify_thm6(5, 2, 1)
        assert v.case_label == "(2.1)"
        assert (v.d, v.h) == (-91, 2)
        assert v.passed

    @pytest.mark.parametrize("q, n, e", [(3, 2, 1), (4, 3, 1), (2, 1, 1)])
    def test_not_applicable(self, q, n, e):
        assert verify_thm6(q, n, e).status is Status.NOT_APPLICABLE


class TestThm41:
    @pytest.mark.parametrize("x, k, n, d, h", [(1, 2, 5, -127, 5), (3, 2, 3, -23, 3), (1, 2, 3, -31, 3)])
    def test_small_fields(self, x, k, n, d, h):
        v = verify_thm4_1(x, k, n)
        assert (v.d, v.h) == (d, h)
        assert v.order_s == n
        assert v.passed

    @pytest.mark.parametrize(
        "x, k, n",
        [(2, 3, 3), (1, 1, 3), (1, 2, 2), (3, 3, 3), (11, 2, 3)],
    )
    def test_hypotheses(self, x, k, n):
        assert verify_thm4_1(x, k, n).status is Status.NOT_APPLICABLE


class TestThm42:
    def test_small(self):
        v = verify_thm4_2(3, 1, 2)
        assert (v.d, v.h) == (-143, 10)
        assert v.case_label == "e > 0"
        assert v.passed

    def test_excluded(self):
        assert verify_thm4_2(3, 0, 4).status is Status.EXCLUDED

    def test_l_must_be_odd_prime(self):
        assert verify_thm4_2(2, 1, 2).status is Status.NOT_APPLICABLE
        assert verify_thm4_2(9, 1, 2).status is Status.NOT_APPLICABLE


# ---------------------------------------------------------------------------
# Verdict records
# ---------------------------------------------------------------------------


class TestVerdict:
    def test_every_theorem_has_an_engine(self):
        assert set(ENGINES) == set(TheoremId)

    def test_to_dict_uses_strings(self):
        d = verify_thm5(29, 4).to_dict()
        assert d["d"] == "-187"
        assert d["h"] == "2"
        assert d["params"] == {"k": "29", "n": "4"}
        assert d["pass"] is True

    def test_from_dict_inverts_to_dict(self):
        v = verify_thm6(2, 6, 2)
        assert TheoremVerdict.from_dict(v.to_dict()) == v
