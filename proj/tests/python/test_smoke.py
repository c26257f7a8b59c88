"""Smoke tests for the goldenmean python module."""

import pytest

goldenmean = pytest.importorskip("goldenmean")


def test_exact_evaluate():
    value = goldenmean.evaluate(2, "alpha", 2)
    assert value.to_decimal(4) == ("1.6875", False)
    assert value == goldenmean.Dyadic(27, 4)


def test_dyadic_arithmetic_is_exact():
    eighth = goldenmean.Dyadic(1, 3)
    three64 = goldenmean.Dyadic(3, 6)
    assert (eighth + three64) == goldenmean.Dyadic(11, 6)
    assert (eighth * three64).to_decimal(9) == ("0.005859375", False)


def test_series_digits_golden_ratio():
    text, terms, err = goldenmean.series_digits(2, "alpha", 20)
    assert text == "1.61803398874989484820"
    assert err == -20
    assert terms >= 1


def test_oracle_and_series_agree():
    for target in ("alpha", "beta", "gap"):
        assert (
            goldenmean.oracle_digits(3, target, 15)[0]
            == goldenmean.series_digits(3, target, 15)[0]
        )


def test_reference_value_bounds():
    ref = goldenmean.alpha_ref(2, 128)
    assert ref.error_bound < goldenmean.Dyadic(1, 128)


def test_accuracy_table_row():
    (row,) = goldenmean.accuracy_table([(2, 100)])
    assert (row.predicted, row.actual_alpha, row.actual_beta, row.actual_gap) == (7, 10, 10, 9)


def test_predicted_accuracy():
    assert goldenmean.predicted_accuracy(2, 1000) == 73
    assert goldenmean.predicted_accuracy(100, 2) == 55


def test_kbonacci_ratio():
    assert goldenmean.kbonacci_ratio(2, 10, 5) == "1.61818"


def test_domain_error_maps_to_value_error():
    with pytest.raises(ValueError):
        goldenmean.evaluate(1, "alpha", 5)
    with pytest.raises(ValueError):
        goldenmean.kbonacci_ratio(5, 4, 2)


def test_tail_bound_covers_known_error():
    est = goldenmean.evaluate(2, "beta", 10)
    ref = goldenmean.derived_ref("beta", 2, 200)
    diff = ref.value - est
    bound = goldenmean.tail_bound(2, "beta", 10)
    assert diff < bound + ref.error_bound
