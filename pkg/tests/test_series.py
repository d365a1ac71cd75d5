"""Truncated-series engine: frozen examples, error cases, and algebra properties."""

import cmath
import math

import numpy as np
import pytest

from gegenfun.errors import (
    DivisionByZeroSeries,
    NonvanishingInner,
    OddValuation,
    ZeroConstantTerm,
)
from gegenfun.series import (
    TruncatedSeries,
    compose_vanishing,
    div,
    from_constant,
    mixed_deviation,
    pow_alpha,
    pow_rational,
    sqrt_shifted,
)


def assert_coeffs(series, expected, tol=1e-12):
    got = series.coeffs
    assert len(got) == len(expected), f"order mismatch: {len(got)-1} vs {len(expected)-1}"
    for n, (g, e) in enumerate(zip(got, expected)):
        assert abs(complex(g) - complex(e)) <= tol, f"coeff {n}: {g} vs {e}"


def test_from_constant():
    assert_coeffs(from_constant(1.0, 4), [1, 0, 0, 0, 0])
    assert_coeffs(from_constant(0.0, 2), [0, 0, 0])
    assert_coeffs(from_constant(2 - 3j, 0), [2 - 3j])
    with pytest.raises(ValueError):
        from_constant(1.0, -1)


def test_add_sub_mul_examples():
    assert_coeffs(TruncatedSeries([1, 1]) * TruncatedSeries([1, 1]), [1, 2])
    assert_coeffs(TruncatedSeries([0, 1, 0]) * TruncatedSeries([0, 1, 0]), [0, 0, 1])
    assert_coeffs(TruncatedSeries([1, 2]) + TruncatedSeries([3, -2]), [4, 0])
    assert_coeffs(TruncatedSeries([1, 2, 3]) - TruncatedSeries([1, 1]), [0, 1])


def test_order_is_min_of_operands():
    a, b = TruncatedSeries([1, 2, 3, 4]), TruncatedSeries([1, 1])
    assert (a + b).order == 1
    assert (a * b).order == 1


def test_non_finite_rejected():
    with pytest.raises(ValueError):
        TruncatedSeries([1.0, math.inf])
    with pytest.raises(ValueError):
        TruncatedSeries([complex(0, math.nan)])


def test_div_examples():
    assert_coeffs(div(TruncatedSeries([0, 2, 2]), TruncatedSeries([0, 1, 1])), [2, 0])
    assert_coeffs(div(TruncatedSeries([1, 0, 0]), TruncatedSeries([1, 1, 0])), [1, -1, 1])


def test_div_errors():
    with pytest.raises(DivisionByZeroSeries):
        div(TruncatedSeries([1, 0]), TruncatedSeries([0, 0]))
    with pytest.raises(DivisionByZeroSeries):
        div(TruncatedSeries([1, 2, 3]), TruncatedSeries([0, 1, 1]))


def _exp_xi_series(x, order):
    # (1 - (x - sqrt(x^2-1)) t) / R with R = (1 - 2xt + t^2)^(1/2)
    s = math.sqrt(x * x - 1.0)
    r2 = TruncatedSeries.from_polynomial([1.0, -2.0 * x, 1.0], order)
    return TruncatedSeries.from_polynomial([1.0, -(x - s)], order) * pow_alpha(r2, -0.5)


def test_div_removable_singularity_sinh_ratio():
    # sinh(xi)/sinh(xi/3) -> 3 as xi -> 0; xi(t) vanishes at t = 0
    e = _exp_xi_series(2.0, 8)
    e3 = pow_rational(e, 1, 3)
    sinh_xi = (e - pow_alpha(e, -1.0)) * 0.5
    sinh_xi3 = (e3 - pow_alpha(e3, -1.0)) * 0.5
    ratio = div(sinh_xi, sinh_xi3)
    assert ratio.order == 7  # common factor t cancelled
    assert abs(ratio.coefficient(0) - 3.0) <= 1e-10
    # brute-force scalar check of the same ratio at small t
    t = 1e-3
    xi = cmath.log(e.eval_at(t))
    direct = cmath.sinh(xi) / cmath.sinh(xi / 3.0)
    assert abs(ratio.eval_at(t) - direct) <= 1e-12


def test_pow_rational_examples():
    assert_coeffs(pow_rational(TruncatedSeries([1, 2, 1]), 1, 2), [1, 1, 0])
    assert_coeffs(pow_rational(TruncatedSeries([1, 0]), -1, 1), [1, 0])
    with pytest.raises(ZeroConstantTerm):
        pow_rational(TruncatedSeries([0, 1]), 1, 2)
    with pytest.raises(ValueError):
        pow_rational(TruncatedSeries([1, 1]), 1, 0)


def _binomial_series_oracle(poly_tail, alpha, order):
    """(1 + p(t))**alpha with p vanishing at 0, by explicit binomial expansion."""
    acc = np.zeros(order + 1, dtype=complex)
    acc[0] = 1.0
    power = np.zeros(order + 1, dtype=complex)
    power[0] = 1.0
    binom = 1.0
    for k in range(1, order + 1):
        binom *= (alpha - k + 1) / k
        power = np.convolve(power, poly_tail)[: order + 1]
        acc += binom * power
    return acc


def test_pow_rational_vs_binomial_oracle():
    # (1 - 4t + t^2)^(1/12) against the brute-force binomial expansion
    order = 6
    r2 = TruncatedSeries.from_polynomial([1.0, -4.0, 1.0], order)
    got = pow_rational(r2, 1, 12)
    tail = np.zeros(order + 1, dtype=complex)
    tail[1], tail[2] = -4.0, 1.0
    expected = _binomial_series_oracle(tail, 1.0 / 12.0, order)
    assert_coeffs(got, expected, tol=1e-12)


def test_pow_rational_round_trip():
    a = TruncatedSeries([2.0, 0.3, -0.1, 0.05, 0.01])
    back = pow_rational(pow_rational(a, 3, 5), 5, 3)
    assert mixed_deviation(a, back) <= 1e-14


def test_sqrt_shifted_examples():
    assert_coeffs(sqrt_shifted(TruncatedSeries([0, 0, 1, 2])), [0, 1, 1])
    assert_coeffs(sqrt_shifted(TruncatedSeries([4, 4, 1])), [2, 1, 0])
    assert_coeffs(sqrt_shifted(TruncatedSeries([0, 0, 9])), [0, 3])
    with pytest.raises(OddValuation):
        sqrt_shifted(TruncatedSeries([0, 1, 1]))


def test_sqrt_shifted_square_round_trip():
    a = TruncatedSeries([0, 0, 2.0, -1.0, 0.5, 0.25])
    s = sqrt_shifted(a)
    assert mixed_deviation(s * s, TruncatedSeries(a.coeffs[: s.order + 1])) <= 1e-13


def test_compose_vanishing_examples():
    inner = TruncatedSeries([0, 1, 0, 0, 0])
    geom = compose_vanishing([1.0] * 5, inner)
    assert_coeffs(geom, [1, 1, 1, 1, 1])
    const = compose_vanishing([1.0, 0.0, 0.0], TruncatedSeries([0, 0.5, -0.25]))
    assert_coeffs(const, [1, 0, 0])
    with pytest.raises(NonvanishingInner):
        compose_vanishing([1.0, 1.0], TruncatedSeries([1.0, 1.0]))


def test_mul_commutative_associative():
    rng = np.random.default_rng(7)
    for _ in range(20):
        scale = 10.0 ** rng.integers(0, 7)
        a = TruncatedSeries(scale * (rng.standard_normal(9) + 1j * rng.standard_normal(9)))
        b = TruncatedSeries(scale * (rng.standard_normal(9) + 1j * rng.standard_normal(9)))
        c = TruncatedSeries(scale * (rng.standard_normal(9) + 1j * rng.standard_normal(9)))
        assert mixed_deviation(a * b, b * a) <= 1e-15
        lhs, rhs = (a * b) * c, a * (b * c)
        denom = np.maximum.reduce(
            [np.abs(lhs.coeffs), np.abs(rhs.coeffs), np.ones(lhs.order + 1)]
        )
        assert float(np.max(np.abs(lhs.coeffs - rhs.coeffs) / denom)) <= 1e-12


def test_mul_reciprocal_identity():
    rng = np.random.default_rng(11)
    for _ in range(10):
        coeffs = rng.standard_normal(10) + 1j * rng.standard_normal(10)
        coeffs[0] = 1.0 + abs(coeffs[0])
        a = TruncatedSeries(coeffs)
        prod = a * pow_rational(a, -1, 1)
        assert mixed_deviation(prod, from_constant(1.0, prod.order)) <= 1e-10


def test_div_mul_round_trip():
    rng = np.random.default_rng(13)
    for shift in (0, 1, 2):
        a_c = rng.standard_normal(12)
        b_c = rng.standard_normal(12)
        a_c[:shift] = 0.0
        b_c[:shift] = 0.0
        a_c[shift] += 3.0
        b_c[shift] += 3.0
        a, b = TruncatedSeries(a_c), TruncatedSeries(b_c)
        q = div(a, b)
        back = q * b
        # after the valuation shift the product reproduces a at the shifted window
        assert (
            mixed_deviation(back, TruncatedSeries(a.coeffs[: back.order + 1])) <= 1e-10
        )


def test_evaluation_consistency_truncation_order():
    # partial sums of (1 - 2xt + t^2)^(-1/4) vs direct evaluation: halving t
    # shrinks the error by about 2^(N+1)
    x, order = 2.0, 6
    s = pow_alpha(TruncatedSeries.from_polynomial([1.0, -2.0 * x, 1.0], order), -0.25)

    def err(t):
        exact = (1.0 - 2.0 * x * t + t * t) ** -0.25
        return abs(s.eval_at(t) - exact)

    e1, e2 = err(0.1), err(0.05)
    assert e1 < 1e-4
    assert e2 <= e1 / 2 ** (order - 1)


def test_valuation_with_growing_coefficients():
    # leading-term detection must survive geometric coefficient growth
    x = 5.0
    r2 = TruncatedSeries.from_polynomial([1.0, -2.0 * x, 1.0], 24)
    rinv = pow_alpha(r2, -0.5)
    assert rinv.valuation() == 0
    t_times = TruncatedSeries.variable(24) * rinv
    assert t_times.valuation() == 1
