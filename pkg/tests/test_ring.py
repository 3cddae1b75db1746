"""Tests for the maximal-order arithmetic and the power tests."""

import pytest

from src.core.errors import InputError
from src.quadfield.ring import (
    RingElement,
    alpha,
    elem_conj,
    elem_mul,
    elem_neg,
    elem_norm,
    elem_pow,
    elem_trace,
    eta,
    field_of,
    is_pth_power_in_ring,
    is_square_in_ring,
    square_root_in_ring,
    tau,
    unit_group,
)


def _make(u: int, v: int, d: int) -> RingElement:
    return RingElement(u, v, d)


# ---------------------------------------------------------------------------
# Element arithmetic
# ---------------------------------------------------------------------------


class TestElements:
    def test_parity_for_one_mod_four(self):
        _make(1, 1, -7)
        with pytest.raises(InputError):
            _make(1, 2, -7)

    def test_parity_for_other_fields(self):
        _make(2, 4, -5)
        with pytest.raises(InputError):
            _make(1, 1, -5)

    def test_real_field_rejected(self):
        with pytest.raises(InputError):
            _make(2, 0, 5)

    def test_multiplication(self):
        x = _make(1, 1, -7)
        assert elem_mul(x, x) == _make(-3, 1, -7)

    def test_norm_trace_conjugate(self):
        x = _make(1, 3, -11)
        assert elem_norm(x) == 25
        assert elem_trace(x) == 1
        assert elem_mul(x, elem_conj(x)) == RingElement.integer(25, -11)

    def test_norm_is_multiplicative(self):
        x, y = _make(3, 1, -19), _make(-5, 3, -19)
        assert elem_norm(elem_mul(x, y)) == elem_norm(x) * elem_norm(y)

    def test_power(self):
        x = _make(1, 1, -7)
        assert elem_pow(x, 0) == RingElement.integer(1, -7)
        assert elem_pow(x, 3) == elem_mul(x, elem_mul(x, x))

    def test_mixed_fields_rejected(self):
        with pytest.raises(InputError):
            elem_mul(_make(1, 1, -7), _make(1, 1, -3))


class TestUnits:
    @pytest.mark.parametrize("d, size", [(-1, 4), (-3, 6), (-7, 2), (-5, 2)])
    def test_sizes(self, d, size):
        units = unit_group(d)
        assert len(set(units)) == size
        assert all(elem_norm(e) == 1 for e in units)

    def test_cube_roots_of_unity(self):
        omega = _make(-1, 1, -3)
        assert elem_pow(omega, 3) == RingElement.integer(1, -3)


# ---------------------------------------------------------------------------
# Distinguished elements
# ---------------------------------------------------------------------------


class TestDistinguished:
    def test_tau(self):
        assert tau(5, 2) == _make(1, 3, -11)
        assert elem_norm(tau(5, 2)) == 25

    def test_alpha(self):
        assert alpha(5, 2, 2) == _make(9, 1, -19)

    def test_eta(self):
        assert eta(3, 2, 2) == _make(3, 1, -7)

    def test_norm_is_k_to_the_n(self):
        assert elem_norm(tau(13, 8)) == 13**8

    def test_field_of_rejects_positive(self):
        with pytest.raises(InputError):
            field_of(5)


# ---------------------------------------------------------------------------
# Square and p-th power tests
# ---------------------------------------------------------------------------


class TestSquares:
    def test_negative_tau_square_at_published_point(self):
        x = elem_neg(tau(5, 2))
        root = square_root_in_ring(x)
        assert root is not None
        assert elem_pow(root, 2) == x

    def test_tau_itself_not_square(self):
        assert not is_square_in_ring(tau(5, 2))

    def test_tau_three_two_not_square(self):
        t = tau(3, 2)
        assert t == _make(1, 1, -35)
        assert not is_square_in_ring(t)
        assert not is_square_in_ring(elem_neg(t))

    @pytest.mark.parametrize(
        "y",
        [_make(3, -1, -11), _make(5, 3, -7), _make(4, 6, -5), _make(0, 2, -1), _make(7, 1, -3)],
    )
    def test_squares_recognized(self, y):
        x = elem_mul(y, y)
        root = square_root_in_ring(x)
        assert root is not None
        assert elem_mul(root, root) == x

    def test_non_square_norm(self):
        assert square_root_in_ring(_make(1, 1, -7)) is None


class TestPthPowers:
    def test_minus_one_is_a_cube(self):
        assert is_pth_power_in_ring(RingElement.integer(-1, -7), 3)

    def test_cube_found(self):
        y = _make(1, 1, -7)
        assert is_pth_power_in_ring(elem_pow(y, 3), 3)
        assert is_pth_power_in_ring(elem_pow(y, 5), 5)

    def test_alpha_not_a_cube(self):
        a = alpha(5, 3, 1)
        assert not is_pth_power_in_ring(a, 3)
        assert not is_pth_power_in_ring(elem_neg(a), 3)

    def test_norm_not_a_power(self):
        assert not is_pth_power_in_ring(_make(3, 1, -19), 3)

    def test_two_delegates_to_square_test(self):
        x = elem_neg(tau(5, 2))
        assert is_pth_power_in_ring(x, 2) == is_square_in_ring(x)

    def test_bad_exponent(self):
        with pytest.raises(InputError):
            is_pth_power_in_ring(_make(1, 1, -7), 1)
