"""Tests for binary quadratic forms, composition and the class-group layer."""

import pytest

from src.core.constants import BUDGETS
from src.core.errors import BudgetExceededError, InertPrimeError, InputError, RamifiedPrimeError
from src.quadfield.classgroup import (
    CACHE_ENV_VAR,
    CACHE_FILE_NAME,
    CLASS_GROUP_CACHE,
    class_group,
    class_group_of_discriminant,
    class_number,
    fundamental_discriminant,
    ideal_class_order_above,
)
from src.quadfield.forms import (
    QuadForm,
    compose,
    form_inverse,
    form_order,
    form_power,
    prime_form_above,
    principal_form,
    reduce_form,
    reduced_forms,
    split_roots,
)


def _f(a: int, b: int, c: int) -> QuadForm:
    return QuadForm(a, b, c)


# ---------------------------------------------------------------------------
# Forms
# ---------------------------------------------------------------------------


class TestReduction:
    def test_principal_form(self):
        assert principal_form(-23) == _f(1, 1, 6)
        assert principal_form(-20) == _f(1, 0, 5)

    def test_reduce_swaps_and_normalizes(self):
        assert reduce_form(_f(6, 1, 1)) == _f(1, 1, 6)
        assert reduce_form(_f(2, 3, 4)) == _f(2, -1, 3)

    def test_reduced_flags(self):
        assert _f(2, -1, 3).is_reduced
        assert not _f(2, -2, 3).is_reduced
        assert not _f(3, -1, 3).is_reduced

    def test_reduced_forms_of_minus_23(self):
        assert reduced_forms(-23) == [_f(1, 1, 6), _f(2, -1, 3), _f(2, 1, 3)]

    def test_reduced_forms_are_reduced_and_primitive(self):
        for f in reduced_forms(-3999):
            assert f.is_reduced
            assert f.is_primitive
            assert f.discriminant == -3999

    def test_bad_discriminant(self):
        with pytest.raises(InputError):
            principal_form(-5)


class TestComposition:
    def test_square_in_order_three_group(self):
        f = _f(2, 1, 3)
        assert compose(f, f) == _f(2, -1, 3)
        assert compose(f, _f(2, -1, 3)).is_principal

    def test_inverse(self):
        assert form_inverse(_f(2, 1, 3)) == _f(2, -1, 3)

    def test_power_and_order(self):
        f = _f(2, 1, 3)
        assert form_power(f, 3) == principal_form(-23)
        assert form_power(f, -1) == _f(2, -1, 3)
        assert form_order(f) == 3

    def test_order_five(self):
        assert form_order(_f(2, 1, 6)) == 5

    def test_identity(self):
        f = _f(7, 3, 7)
        assert compose(f, principal_form(-187)) == f
        assert compose(f, f).is_principal

    def test_mismatched_discriminants(self):
        with pytest.raises(InputError):
            compose(_f(2, 1, 3), _f(1, 1, 2))


class TestPrimeForms:
    def test_split_roots(self):
        assert split_roots(2, -23) == [1, 3]
        assert split_roots(3, -23) == [1, 5]

    def test_prime_form_and_conjugate(self):
        assert prime_form_above(2, -23) == _f(2, 1, 3)
        assert prime_form_above(2, -23, conjugate=True) == _f(2, -1, 3)

    def test_conjugate_has_same_order(self):
        for p in (2, 3, 13):
            assert form_order(prime_form_above(p, -23)) == form_order(
                prime_form_above(p, -23, conjugate=True)
            )

    def test_inert(self):
        with pytest.raises(InertPrimeError):
            prime_form_above(5, -23)
        with pytest.raises(InertPrimeError):
            prime_form_above(2, -19)

    def test_ramified(self):
        with pytest.raises(RamifiedPrimeError):
            prime_form_above(23, -23)
        with pytest.raises(RamifiedPrimeError):
            prime_form_above(2, -20)


# ---------------------------------------------------------------------------
# Class groups
# ---------------------------------------------------------------------------


class TestClassGroup:
    @pytest.mark.parametrize(
        "d, h",
        [(-1, 1), (-2, 1), (-3, 1), (-7, 1), (-11, 1), (-19, 1), (-163, 1),
         (-5, 2), (-15, 2), (-35, 2), (-51, 2), (-187, 2), (-23, 3), (-31, 3),
         (-107, 3), (-499, 3), (-47, 5), (-127, 5), (-71, 7), (-143, 10), (-6347, 28)],
    )
    def test_class_numbers(self, d, h):
        assert class_number(d) == h

    def test_fundamental_discriminant(self):
        assert fundamental_discriminant(-1) == -4
        assert fundamental_discriminant(-2) == -8
        assert fundamental_discriminant(-3) == -3
        with pytest.raises(InputError):
            fundamental_discriminant(-4)

    def test_summary(self):
        summary = class_group(-5)
        assert summary.D == -20
        assert summary.forms == (_f(1, 0, 5), _f(2, 2, 3))
        assert summary.principal == _f(1, 0, 5)

    def test_lagrange(self):
        for d in (-47, -143, -187, -6347):
            summary = class_group(d)
            assert all(summary.h % form_order(f) == 0 for f in summary.forms)

    def test_ideal_class_order(self):
        assert ideal_class_order_above(5, -51) == 2
        assert ideal_class_order_above(29, -187) == 2
        assert ideal_class_order_above(13, -6347) == 4

    def test_disc_cap(self):
        with pytest.raises(BudgetExceededError):
            class_group_of_discriminant(-6347, BUDGETS.replace(disc_cap=100))

    def test_positive_rejected(self):
        with pytest.raises(InputError):
            class_number(5)


class TestPersistentCache:
    def test_writes_and_reads(self, tmp_path, monkeypatch):
        monkeypatch.setenv(CACHE_ENV_VAR, str(tmp_path))
        CLASS_GROUP_CACHE.clear()
        try:
            assert class_number(-71) == 7
            assert "-71 7" in (tmp_path / CACHE_FILE_NAME).read_text().splitlines()
        finally:
            CLASS_GROUP_CACHE.clear()

    def test_preloaded_values_are_used(self, tmp_path, monkeypatch):
        (tmp_path / CACHE_FILE_NAME).write_text("-79 5\nnot a line\n-83 x\n")
        monkeypatch.setenv(CACHE_ENV_VAR, str(tmp_path))
        CLASS_GROUP_CACHE.clear()
        try:
            assert class_number(-79) == 5
            assert CLASS_GROUP_CACHE.summary(-79) is None
        finally:
            CLASS_GROUP_CACHE.clear()
