"""Builders for both sides of every generating-function identity, as truncated series.

Naming: R2 is the polynomial 1 - 2xt + t**2 (so R = R2**(1/2) with R(0) = 1),
U2 is 1 - 2(1-u)xt + (1-u)**2 t**2, and Q is R**2 + u(x-t)t, which expands to
the polynomial 1 - (2-u)xt + (1-u)t**2.

Every builder returns series truncated to the requested order; internal work
happens at a slightly higher order so that valuation-shifting divisions never
eat into the reported window.  The two quarter-family closed-form examples
(radical expressions in e**xi) need special care:

* e**xi = (1 - (x - sqrt(x**2-1)) t) / R has constant term 1 (xi -> 0 with t),
  so sinh(xi)/sinh(xi/3) is a 0/0 ratio resolved by the valuation shift.
* e**xi = t sqrt(x**2-1) / (1 - R - xt) has a genuine t**(-1) pole, and its
  cube root carries t**(-1/3); those pieces are tracked as pairs
  (integer exponent k, regular series in s) with t = s**3, every exponent an
  integer power of s.  The final combination must land on non-negative
  exponents divisible by 3 (a genuine power series in t); leftovers above
  tolerance raise UncancelledPole.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainMismatch, UncancelledPole
from .gegenbauer import (
    check_lambda,
    gegenbauer_of_series,
    gegenbauer_recurrence,
    gegenbauer_series_family,
    gegenbauer_weighted_series,
)
from .hypergeometric import gamma_fn, gauss_2f1_series, pfq_terminating, pochhammer
from .legendre import legendre_analytic_series
from .series import DTYPE, TruncatedSeries, _shift_down, _shift_up, div, pow_alpha

Scalar = complex | float | int

_FRAC_TOL = 1e-9


# -- building blocks -----------------------------------------------------------


def _r2(x: Scalar, order: int) -> TruncatedSeries:
    return TruncatedSeries.from_polynomial([1.0, -2.0 * x, 1.0], order)


def _u2(u: Scalar, x: Scalar, order: int) -> TruncatedSeries:
    v = 1.0 - u
    return TruncatedSeries.from_polynomial([1.0, -2.0 * v * x, v * v], order)


def _q_poly(u: Scalar, x: Scalar, order: int) -> TruncatedSeries:
    # R**2 + u(x-t)t = 1 - (2-u)xt + (1-u)t**2
    return TruncatedSeries.from_polynomial([1.0, -(2.0 - u) * x, 1.0 - u], order)


def _one_minus_xt(x: Scalar, order: int) -> TruncatedSeries:
    return TruncatedSeries.from_polynomial([1.0, -x], order)


def _t(order: int) -> TruncatedSeries:
    return TruncatedSeries.variable(order)


# -- left-hand sides: weight families times Gegenbauer values -------------------


def _weights_pochhammer_ratio(
    numerators: tuple[Scalar, ...], denominators: tuple[Scalar, ...], order: int
) -> np.ndarray:
    """w_n = prod (a_i)_n / prod (b_j)_n, built incrementally (exact termination)."""
    w = np.zeros(order + 1, dtype=DTYPE)
    w[0] = 1.0
    for n in range(1, order + 1):
        f = w[n - 1]
        for a in numerators:
            f *= a + n - 1
        for b in denominators:
            f /= b + n - 1
        w[n] = f
    return w


def lhs_first_gf(lam: float, gamma: Scalar, x: Scalar, order: int) -> TruncatedSeries:
    """sum_n ((gamma)_n/(2 lam)_n) C_n(x) t**n."""
    check_lambda(lam)
    w = _weights_pochhammer_ratio((gamma,), (2.0 * lam,), order)
    return gegenbauer_weighted_series(lam, x, order, w)


def lhs_second_gf(lam: float, gamma: Scalar, x: Scalar, order: int) -> TruncatedSeries:
    """sum_n ((gamma)_n (2 lam - gamma)_n / ((2 lam)_n (lam + 1/2)_n)) C_n(x) t**n."""
    check_lambda(lam)
    w = _weights_pochhammer_ratio(
        (gamma, 2.0 * lam - gamma), (2.0 * lam, lam + 0.5), order
    )
    return gegenbauer_weighted_series(lam, x, order, w)


def lhs_alt_gf(lam: float, x: Scalar, order: int, which: int) -> TruncatedSeries:
    """sum_n ((lam ± 1/2)_n/(2 lam)_n) C_n(x) t**n (which = 1 -> +, 2 -> -)."""
    check_lambda(lam)
    shift = 0.5 if which == 1 else -0.5
    w = _weights_pochhammer_ratio((lam + shift,), (2.0 * lam,), order)
    return gegenbauer_weighted_series(lam, x, order, w)


def _weights_2f1_terminating(b: Scalar, c: Scalar, u: Scalar, order: int) -> np.ndarray:
    """w_n = 2F1(-n, b; c; u) by the contiguous recurrence in the degree,

        (c+n) w_{n+1} = (2n + c - (b+n) u) w_n + n (u-1) w_{n-1},

    which avoids the cancellation of the direct alternating sum (at u = 1 it
    collapses to the exact product (c-b)_n/(c)_n, so termination is exact)."""
    w = np.zeros(order + 1, dtype=DTYPE)
    bb, cc, uu = DTYPE(b), DTYPE(c), DTYPE(u)
    w[0] = 1.0
    if order >= 1:
        w[1] = 1.0 - bb * uu / cc
    for n in range(1, order):
        w[n + 1] = ((2 * n + cc - (bb + n) * uu) * w[n] + n * (uu - 1.0) * w[n - 1]) / (cc + n)
    return w


def lhs_extended_first(
    lam: float, gamma: Scalar, u: Scalar, x: Scalar, order: int
) -> TruncatedSeries:
    """Weights 2F1(-n, 2 lam - gamma; 2 lam; u)."""
    check_lambda(lam)
    w = _weights_2f1_terminating(2.0 * lam - gamma, 2.0 * lam, u, order)
    return gegenbauer_weighted_series(lam, x, order, w)


def lhs_extended_second(
    lam: float, gamma: Scalar, u: Scalar, x: Scalar, order: int
) -> TruncatedSeries:
    """Weights 3F2(-n, gamma, 2 lam - gamma; 2 lam, lam + 1/2; u)."""
    check_lambda(lam)
    w = np.array(
        [
            pfq_terminating(
                n, [gamma, 2.0 * lam - gamma], [2.0 * lam, lam + 0.5], u
            )
            for n in range(order + 1)
        ]
    )
    return gegenbauer_weighted_series(lam, x, order, w)


def lhs_lemma(
    lam: float,
    numerators: tuple[Scalar, ...],
    denominators: tuple[Scalar, ...],
    u: Scalar,
    x: Scalar,
    order: int,
) -> TruncatedSeries:
    """Weights (p+1)Fq(-n, c_1..c_p; d_1..d_q; u)."""
    w = np.array(
        [pfq_terminating(n, list(numerators), list(denominators), u) for n in range(order + 1)]
    )
    return gegenbauer_weighted_series(lam, x, order, w)


# -- first generating function ---------------------------------------------------


def rhs_first_gf_a(lam: float, gamma: Scalar, x: Scalar, order: int) -> TruncatedSeries:
    """R**(-gamma) 2F1(gamma, 2 lam - gamma; lam + 1/2; (R - 1 + xt)/(2R))."""
    wo = order + 2
    r2 = _r2(x, wo)
    r = pow_alpha(r2, 0.5)
    arg = div(r + TruncatedSeries.from_polynomial([-1.0, x], wo), 2.0 * r)
    f = gauss_2f1_series(gamma, 2.0 * lam - gamma, lam + 0.5, arg)
    return (pow_alpha(r2, -gamma / 2.0) * f).truncate(order)


def rhs_first_gf_b(lam: float, gamma: Scalar, x: Scalar, order: int) -> TruncatedSeries:
    """(1-xt)**(-gamma) 2F1(gamma/2, gamma/2 + 1/2; lam + 1/2; (x**2-1)t**2/(1-xt)**2)."""
    wo = order + 2
    omxt = _one_minus_xt(x, wo)
    num = TruncatedSeries.from_polynomial([0.0, 0.0, x * x - 1.0], wo)
    arg = div(num, omxt * omxt)
    f = gauss_2f1_series(gamma / 2.0, gamma / 2.0 + 0.5, lam + 0.5, arg)
    return (pow_alpha(omxt, -gamma) * f).truncate(order)


def first_gf_pair(
    lam: float, gamma: Scalar, x: Scalar, order: int, variant: str = "a"
) -> tuple[TruncatedSeries, TruncatedSeries]:
    lhs = lhs_first_gf(lam, gamma, x, order)
    rhs = rhs_first_gf_a(lam, gamma, x, order) if variant == "a" else rhs_first_gf_b(
        lam, gamma, x, order
    )
    return lhs, rhs


def rhs_rewrite_legendre(
    nu: float, mu: float, x: Scalar, order: int, variant: str = "a"
) -> TruncatedSeries:
    """The first generating function written through the degree-nu, order-mu
    Legendre combination analytic at argument 1.

    Variant "a" uses z = (1-xt)/R and prefactor R**(nu+mu); variant "b" uses
    z = 2(R/(1-xt))**2 - 1 with fixed degree -1/4 and prefactor
    (1-xt)**(2 mu - 1/2).  The nu argument is ignored for variant "b".
    """
    wo = order + 2
    r2 = _r2(x, wo)
    scale = 2.0**-mu * gamma_fn(1.0 - mu)
    if variant == "a":
        z = _one_minus_xt(x, wo) * pow_alpha(r2, -0.5)
        f = legendre_analytic_series(nu, mu, z)
        return (scale * pow_alpha(r2, (nu + mu) / 2.0) * f).truncate(order)
    if variant == "b":
        omxt = _one_minus_xt(x, wo)
        z = 2.0 * div(r2, omxt * omxt) - 1.0
        f = legendre_analytic_series(-0.25, mu, z)
        return (scale * pow_alpha(omxt, 2.0 * mu - 0.5) * f).truncate(order)
    raise ValueError(f"unknown variant {variant!r}")


def first_rewrite_pair(
    nu: float, mu: float, x: Scalar, order: int, variant: str = "a"
) -> tuple[TruncatedSeries, TruncatedSeries]:
    gamma = -nu - mu if variant == "a" else 0.5 - 2.0 * mu
    lhs = lhs_first_gf(0.5 - mu, gamma, x, order)
    return lhs, rhs_rewrite_legendre(nu, mu, x, order, variant)


def miller_identities(
    lam: float, big_n: int, x: Scalar, order: int, which: str = "g1"
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Finite-sum identity (g1) and its companion (g2) from the reducible case."""
    check_lambda(lam)
    if big_n < 0:
        raise ValueError("N must be non-negative")
    wo = order + 2
    r2 = _r2(x, wo)
    z = _one_minus_xt(x, wo) * pow_alpha(r2, -0.5)
    cn = gegenbauer_of_series(lam, big_n, z)
    scale = math.factorial(big_n) / pochhammer(2.0 * lam, big_n)
    if which == "g1":
        lhs = lhs_first_gf(lam, -float(big_n), x, order)
        rhs = scale * pow_alpha(r2, big_n / 2.0) * cn
    elif which == "g2":
        lhs = lhs_first_gf(lam, 2.0 * lam + big_n, x, order)
        rhs = scale * pow_alpha(r2, -(2.0 * lam + big_n) / 2.0) * cn
    else:
        raise ValueError(f"unknown which {which!r}")
    return lhs, rhs.truncate(order)


def alt_gf(
    lam: float, x: Scalar, order: int, which: int = 1
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Alternative generating function ((1+R-xt)/2)**(1/2-lam), with (which=1)
    or without (which=2) the extra R**(-1)."""
    check_lambda(lam)
    wo = order + 2
    r2 = _r2(x, wo)
    r = pow_alpha(r2, 0.5)
    body = (r + TruncatedSeries.from_polynomial([1.0, -x], wo)) * 0.5
    powed = pow_alpha(body, 0.5 - lam)
    rhs = pow_alpha(r2, -0.5) * powed if which == 1 else powed
    return lhs_alt_gf(lam, x, order, which), rhs.truncate(order)


# -- the two explicit radical examples -------------------------------------------


def octahedral_example(
    x: float, order: int
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Quarter-parameter family: closed form 2**(-1/4) R**(1/12)
    [cosh(xi/3) + sqrt(sinh xi/(3 sinh(xi/3)))]**(1/4) with
    e**xi = (1 - (x - sqrt(x**2-1)) t)/R; needs |x| > 1."""
    if abs(x) <= 1.0:
        raise DomainMismatch("the hyperbolic substitution needs |x| > 1")
    wo = order + 4
    lhs = lhs_first_gf(0.25, -1.0 / 12.0, x, order)
    r2 = _r2(x, wo)
    sq = cmath.sqrt(complex(x) ** 2 - 1.0)
    e = TruncatedSeries.from_polynomial([1.0, -(x - sq)], wo) * pow_alpha(r2, -0.5)
    e3 = pow_alpha(e, 1.0 / 3.0)
    sinh_xi = (e - pow_alpha(e, -1.0)) * 0.5
    sinh_xi3 = (e3 - pow_alpha(e3, -1.0)) * 0.5
    cosh_xi3 = (e3 + pow_alpha(e3, -1.0)) * 0.5
    ratio = div(sinh_xi, sinh_xi3)  # 0/0 at t = 0, limit 3; order drops by 1
    bracket = cosh_xi3 + pow_alpha(ratio * (1.0 / 3.0), 0.5)
    rhs = 2.0**-0.25 * pow_alpha(r2, 1.0 / 24.0) * pow_alpha(bracket, 0.25)
    return lhs, rhs.truncate(order)


@dataclass(frozen=True)
class _Graded:
    """s**k times a regular series in s (s**3 = t); exponents stay integers."""

    k: int
    body: TruncatedSeries

    def normalized(self) -> "_Graded":
        v = self.body.valuation()
        if v is None or v == 0:
            return self
        return _Graded(self.k + v, _shift_down(self.body, v))


def _graded(body: TruncatedSeries) -> _Graded:
    return _Graded(0, body).normalized()


def _gmul(a: _Graded, b: _Graded) -> _Graded:
    return _Graded(a.k + b.k, a.body * b.body)


def _gdiv(a: _Graded, b: _Graded) -> _Graded:
    a, b = a.normalized(), b.normalized()
    return _Graded(a.k - b.k, div(a.body, b.body))


def _gadd(a: _Graded, b: _Graded) -> _Graded:
    k = min(a.k, b.k)
    return _Graded(k, _shift_up(a.body, a.k - k) + _shift_up(b.body, b.k - k))


def _gpow(a: _Graded, num: int, den: int) -> _Graded:
    a = a.normalized()
    if (a.k * num) % den:
        raise UncancelledPole(
            f"power {num}/{den} of grade {a.k} leaves a fractional exponent"
        )
    return _Graded(a.k * num // den, pow_alpha(a.body, num / den))


def _gscale(a: _Graded, c: Scalar) -> _Graded:
    return _Graded(a.k, a.body * c)


def _graded_to_t_series(a: _Graded, min_order: int) -> TruncatedSeries:
    """Collapse exponents 3n -> t**n; any residue at negative or non-multiple
    exponents above tolerance is an uncancelled pole."""
    a = a.normalized()
    coeffs = a.body.coeffs
    tol = 1e-9 * max(1.0, float(np.max(np.abs(coeffs))))
    top = a.k + a.body.order
    if top < 3 * min_order:
        raise ValueError("insufficient working order for the requested window")
    out = np.zeros(top // 3 + 1, dtype=DTYPE)
    for j, c in enumerate(coeffs):
        e = a.k + j
        if e < 0 or e % 3:
            if abs(c) > tol:
                kind = "negative" if e < 0 else "fractional"
                raise UncancelledPole(
                    f"{kind} exponent {e}/3 retains coefficient {abs(c):.3e}"
                )
            continue
        out[e // 3] = c
    return TruncatedSeries(out)


def tetrahedral_example(
    x: float, order: int, branch: str = "hyperbolic"
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Sixth-parameter family: quartic radicals of e**xi with a t**(-1) pole.

    branch "hyperbolic" (|x| > 1): 2**(-7/12) 3**(-3/8) R**(1/12) (sinh xi)**(-1/3)
    [sqrt(sqrt(3)+1) f+ + sqrt(sqrt(3)-1) f-] at e**xi = t sqrt(x**2-1)/(1-R-xt);
    branch "circular" (|x| < 1): same with cosh, g±, and
    e**xi = t sqrt(1-x**2)/(-1+R+xt).
    """
    if branch not in ("hyperbolic", "circular"):
        raise ValueError(f"unknown branch {branch!r}")
    hyper = branch == "hyperbolic"
    if hyper and abs(x) <= 1.0:
        raise DomainMismatch("the hyperbolic substitution needs |x| > 1")
    if not hyper and abs(x) >= 1.0:
        raise DomainMismatch("the circular substitution needs |x| < 1")
    lhs = lhs_first_gf(1.0 / 6.0, -1.0 / 12.0, x, order)

    so = 3 * order + 12  # working order in s = t**(1/3)
    r2s = TruncatedSeries.from_polynomial(
        [1.0, 0, 0, -2.0 * x, 0, 0, 1.0], so
    )
    rs = pow_alpha(r2s, 0.5)
    ts = TruncatedSeries.from_polynomial([0.0, 0, 0, 1.0], so)
    if hyper:
        sq = math.sqrt(x * x - 1.0)
        den = 1.0 - rs - x * ts
    else:
        sq = math.sqrt(1.0 - x * x)
        den = rs + x * ts - 1.0
    e = _gdiv(_graded(ts * sq), _graded(den))  # exponent -3
    e3 = _gpow(e, 1, 3)
    e_inv, e3_inv = _gpow(e, -1, 1), _gpow(e3, -1, 1)
    half = 0.5
    sh3 = _gscale(_gadd(e3, _gscale(e3_inv, -1.0)), half)
    ch3 = _gscale(_gadd(e3, e3_inv), half)
    if hyper:
        big = _gscale(_gadd(e, _gscale(e_inv, -1.0)), half)  # sinh xi
        s_rad = _gpow(_gscale(_gdiv(big, sh3), 1.0 / 3.0), 1, 2)
        bracket_plus = _gadd(ch3, s_rad)
        bracket_minus = _gdiv(_gscale(_gmul(sh3, sh3), 1.0 / 3.0), bracket_plus)
    else:
        big = _gscale(_gadd(e, e_inv), half)  # cosh xi
        s_rad = _gpow(_gscale(_gdiv(big, ch3), 1.0 / 3.0), 1, 2)
        bracket_plus = _gadd(sh3, s_rad)
        bracket_minus = _gdiv(_gscale(_gmul(ch3, ch3), 1.0 / 3.0), bracket_plus)
    rad_plus = _gpow(_gmul(big, bracket_plus), 1, 4)
    rad_minus = _gpow(_gmul(big, bracket_minus), 1, 4)
    combo = _gadd(
        _gscale(rad_plus, math.sqrt(math.sqrt(3.0) + 1.0)),
        _gscale(rad_minus, math.sqrt(math.sqrt(3.0) - 1.0)),
    )
    total = _gmul(_gpow(big, -1, 3), combo)
    total = _gmul(_graded(pow_alpha(r2s, 1.0 / 24.0)), total)
    total = _gscale(total, 2.0 ** (-7.0 / 12.0) * 3.0**-0.375)
    rhs = _graded_to_t_series(total, order)
    return lhs, rhs.truncate(order)


# -- substitution table -----------------------------------------------------------


class ZForm(enum.Enum):
    RATIO = "(1-xt)/R"
    SQUARED = "2(R/(1-xt))^2-1"


@dataclass(frozen=True)
class SubstitutionRow:
    row: int
    z_form: ZForm
    trig: str  # cosh | cos | coth | tanh
    exp_value: complex  # e^xi, e^(i theta), or the half-argument variants
    z_value: complex
    reconstruction_dev: float


def _reconstruct_z(trig: str, half: bool, v: complex) -> complex:
    if half:
        v = v * v
    w = 1.0 / v
    if trig in ("cosh", "cos"):
        return (v + w) / 2.0
    if trig == "coth":
        return (v + w) / (v - w)
    return (v - w) / (v + w)  # tanh


def substitution_table(x: float, t: float, row: int) -> SubstitutionRow:
    """Exponential substitutions matching each trig parametrization of the two
    Legendre arguments; the returned value is checked to reconstruct z."""
    if not 1 <= row <= 8:
        raise ValueError("row must be 1..8")
    r2 = 1.0 - 2.0 * x * t + t * t
    if r2 <= 0.0:
        raise DomainMismatch("R**2 <= 0 at this (x, t)")
    r = math.sqrt(r2)
    omxt = 1.0 - x * t
    need_hyper = row in (1, 3, 6, 8)
    if need_hyper and abs(x) <= 1.0:
        raise DomainMismatch(f"row {row} needs |x| > 1")
    if not need_hyper and abs(x) >= 1.0:
        raise DomainMismatch(f"row {row} needs |x| < 1")
    if row in (7, 8) and t == 0.0:
        raise DomainMismatch(f"row {row} needs t != 0")
    sq_h = math.sqrt(abs(x * x - 1.0))
    if row == 1:
        form, trig, half = ZForm.RATIO, "cosh", False
        val: complex = (1.0 - (x - sq_h) * t) / r
    elif row == 2:
        form, trig, half = ZForm.RATIO, "cos", False
        val = (1.0 - (x - 1j * sq_h) * t) / r
    elif row == 3:
        form, trig, half = ZForm.RATIO, "coth", False
        val = t * sq_h / (1.0 - r - x * t)
    elif row == 4:
        form, trig, half = ZForm.RATIO, "tanh", False
        val = t * sq_h / (-1.0 + r + x * t)
    elif row == 5:
        form, trig, half = ZForm.SQUARED, "cosh", True
        val = omxt / (r - t * sq_h)
    elif row == 6:
        form, trig, half = ZForm.SQUARED, "cos", True
        val = omxt / (r - 1j * t * sq_h)
    elif row == 7:
        form, trig, half = ZForm.SQUARED, "coth", False
        val = r / (t * sq_h)
    else:
        form, trig, half = ZForm.SQUARED, "tanh", False
        val = r / (t * sq_h)
    z = omxt / r if form is ZForm.RATIO else 2.0 * (r / omxt) ** 2 - 1.0
    zr = _reconstruct_z(trig, half, val)
    rdev = abs(zr - z) / max(1.0, abs(z))
    if rdev > 1e-10:
        raise DomainMismatch(
            f"row {row} reconstruction mismatch at (x, t) = ({x}, {t}): "
            f"{zr} vs {z}"
        )
    return SubstitutionRow(row, form, trig, complex(val), complex(z), rdev)


# -- extended (u-parameter) families ----------------------------------------------


def extended_first_gf(
    lam: float, gamma: Scalar, u: Scalar, x: Scalar, order: int, variant: str = "a"
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """u-extension of the first generating function (u = 1 recovers it)."""
    lhs = lhs_extended_first(lam, gamma, u, x, order)
    wo = order + 2
    r2, u2, q = _r2(x, wo), _u2(u, x, wo), _q_poly(u, x, wo)
    if variant == "a":
        r, us = pow_alpha(r2, 0.5), pow_alpha(u2, 0.5)
        ur = us * r
        arg = div(ur - q, 2.0 * ur)
        f = gauss_2f1_series(gamma, 2.0 * lam - gamma, lam + 0.5, arg)
        rhs = pow_alpha(u2, (gamma - 2.0 * lam) / 2.0) * pow_alpha(r2, -gamma / 2.0) * f
    elif variant == "b":
        qq = q * q
        arg = div(qq - u2 * r2, qq)
        f = gauss_2f1_series(gamma / 2.0, gamma / 2.0 + 0.5, lam + 0.5, arg)
        rhs = pow_alpha(u2, gamma - lam) * pow_alpha(q, -gamma) * f
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return lhs, rhs.truncate(order)


def extended_rewrite(
    nu: float, mu: float, u: Scalar, x: Scalar, order: int, variant: str = "a"
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """u-extension of the Legendre rewrite (u = 1 recovers it)."""
    wo = order + 2
    r2, u2, q = _r2(x, wo), _u2(u, x, wo), _q_poly(u, x, wo)
    scale = 2.0**-mu * gamma_fn(1.0 - mu)
    if variant == "a":
        lhs = lhs_extended_first(0.5 - mu, -nu - mu, u, x, order)
        ur = pow_alpha(u2, 0.5) * pow_alpha(r2, 0.5)
        z = div(q, ur)
        f = legendre_analytic_series(nu, mu, z)
        rhs = (
            scale
            * pow_alpha(u2, (-nu + mu - 1.0) / 2.0)
            * pow_alpha(r2, (nu + mu) / 2.0)
            * f
        )
    elif variant == "b":
        lhs = lhs_extended_first(0.5 - mu, 0.5 - 2.0 * mu, u, x, order)
        qq = q * q
        z = 2.0 * div(u2 * r2, qq) - 1.0
        f = legendre_analytic_series(-0.25, mu, z)
        rhs = scale * pow_alpha(u2, -mu) * pow_alpha(q, 2.0 * mu - 0.5) * f
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return lhs, rhs.truncate(order)


def extended_miller(
    lam: float, big_n: int, u: Scalar, x: Scalar, order: int, which: str = "plus"
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """u-extension of the finite-sum identities (u = 1 recovers them)."""
    check_lambda(lam)
    if big_n < 0:
        raise ValueError("N must be non-negative")
    wo = order + 2
    r2, u2, q = _r2(x, wo), _u2(u, x, wo), _q_poly(u, x, wo)
    z = div(q, pow_alpha(u2, 0.5) * pow_alpha(r2, 0.5))
    cn = gegenbauer_of_series(lam, big_n, z)
    scale = math.factorial(big_n) / pochhammer(2.0 * lam, big_n)
    if which == "plus":
        lhs = lhs_extended_first(lam, -float(big_n), u, x, order)
        rhs = scale * pow_alpha(u2, -(2.0 * lam + big_n) / 2.0) * pow_alpha(r2, big_n / 2.0) * cn
    elif which == "minus":
        lhs = lhs_extended_first(lam, 2.0 * lam + big_n, u, x, order)
        rhs = scale * pow_alpha(u2, big_n / 2.0) * pow_alpha(r2, -(2.0 * lam + big_n) / 2.0) * cn
    else:
        raise ValueError(f"unknown which {which!r}")
    return lhs, rhs.truncate(order)


def lemma_key_check(
    lam: float,
    numerators: tuple[Scalar, ...],
    denominators: tuple[Scalar, ...],
    u: Scalar,
    x: Scalar,
    order: int,
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Series-rearrangement identity powering the u-extensions:
    LHS weights (p+1)Fq(-n, c; d; u); RHS R**(-2 lam) sum_n
    (prod (c)_n / prod (d)_n) C_n((x-t)/R) (-tu/R)**n."""
    if not 1 <= len(numerators) <= 2 or not 1 <= len(denominators) <= 2:
        raise ValueError("p and q must be 1 or 2")
    lhs = lhs_lemma(lam, numerators, denominators, u, x, order)
    wo = order + 2
    r2 = _r2(x, wo)
    rinv = pow_alpha(r2, -0.5)
    w = TruncatedSeries.from_polynomial([x, -1.0], wo) * rinv
    qfac = _t(wo) * rinv * (-u)
    fam = gegenbauer_series_family(lam, order, w)
    acc = TruncatedSeries.from_constant(0.0, wo)
    qn = TruncatedSeries.from_constant(1.0, wo)
    coeff = 1.0 + 0.0j
    for n in range(order + 1):
        if n:
            for c in numerators:
                coeff *= c + n - 1
            for d in denominators:
                coeff /= d + n - 1
            qn = qn * qfac
        acc = acc + coeff * (fam[n] * qn)
    rhs = pow_alpha(r2, -lam) * acc
    return lhs, rhs.truncate(order)


# -- second generating function ----------------------------------------------------


def second_gf(
    lam: float, gamma: Scalar, x: Scalar, order: int, variant: str = "a"
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Product-of-two-2F1 generating function."""
    lhs = lhs_second_gf(lam, gamma, x, order)
    wo = order + 2
    r2 = _r2(x, wo)
    r = pow_alpha(r2, 0.5)
    t = _t(wo)
    if variant == "a":
        f1 = gauss_2f1_series(gamma, 2.0 * lam - gamma, lam + 0.5, (1.0 - r - t) * 0.5)
        f2 = gauss_2f1_series(gamma, 2.0 * lam - gamma, lam + 0.5, (1.0 - r + t) * 0.5)
        rhs = f1 * f2
    elif variant == "b":
        rp, rm = r + t, r - t
        argp = div(rp * rp - 1.0, rp * rp)
        argm = div(rm * rm - 1.0, rm * rm)
        f1 = gauss_2f1_series(gamma / 2.0, gamma / 2.0 + 0.5, lam + 0.5, argp)
        f2 = gauss_2f1_series(gamma / 2.0, gamma / 2.0 + 0.5, lam + 0.5, argm)
        pref = pow_alpha(TruncatedSeries.from_polynomial([1.0, -2.0 * x], wo), -gamma)
        rhs = pref * f1 * f2
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return lhs, rhs.truncate(order)


def extended_second_gf(
    lam: float, gamma: Scalar, u: Scalar, x: Scalar, order: int, variant: str = "a"
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """u-extension of the second generating function (u = 0 degenerates to the
    ordinary generating function)."""
    lhs = lhs_extended_second(lam, gamma, u, x, order)
    wo = order + 2
    r2, u2 = _r2(x, wo), _u2(u, x, wo)
    r, us = pow_alpha(r2, 0.5), pow_alpha(u2, 0.5)
    ut = _t(wo) * u
    if variant == "a":
        argp = div(r - us + ut, 2.0 * r)
        argm = div(r - us - ut, 2.0 * r)
        f1 = gauss_2f1_series(gamma, 2.0 * lam - gamma, lam + 0.5, argp)
        f2 = gauss_2f1_series(gamma, 2.0 * lam - gamma, lam + 0.5, argm)
        rhs = pow_alpha(r2, -lam) * f1 * f2
    elif variant == "b":
        um, up = us - ut, us + ut
        argp = div(up * up - r2, up * up)
        argm = div(um * um - r2, um * um)
        f1 = gauss_2f1_series(gamma / 2.0, gamma / 2.0 + 0.5, lam + 0.5, argm)
        f2 = gauss_2f1_series(gamma / 2.0, gamma / 2.0 + 0.5, lam + 0.5, argp)
        pref = pow_alpha(u2 - ut * ut, -gamma) * pow_alpha(r2, gamma - lam)
        rhs = pref * f1 * f2
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return lhs, rhs.truncate(order)


def second_rewrite(
    nu: float, mu: float, x: Scalar, order: int, variant: str = "a"
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Second generating function through the analytic Legendre combination."""
    wo = order + 2
    r2 = _r2(x, wo)
    r = pow_alpha(r2, 0.5)
    t = _t(wo)
    scale = 2.0 ** (-2.0 * mu) * gamma_fn(1.0 - mu) ** 2
    if variant == "a":
        lhs = lhs_second_gf(0.5 - mu, -nu - mu, x, order)
        rhs = scale * legendre_analytic_series(nu, mu, r + t) * legendre_analytic_series(
            nu, mu, r - t
        )
    elif variant == "b":
        lhs = lhs_second_gf(0.5 - mu, 0.5 - 2.0 * mu, x, order)
        rm, rp = r - t, r + t
        zp = 2.0 * div(TruncatedSeries.from_constant(1.0, wo), rm * rm) - 1.0
        zm = 2.0 * div(TruncatedSeries.from_constant(1.0, wo), rp * rp) - 1.0
        pref = pow_alpha(TruncatedSeries.from_polynomial([1.0, -2.0 * x], wo), 2.0 * mu - 0.5)
        rhs = (
            scale
            * pref
            * legendre_analytic_series(-0.25, mu, zp)
            * legendre_analytic_series(-0.25, mu, zm)
        )
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return lhs, rhs.truncate(order)


# -- algebraicity classification -----------------------------------------------------


@dataclass(frozen=True)
class AlgebraicityVerdict:
    algebraic: bool
    clause: int | None
    detail: str

    def __str__(self) -> str:
        if self.algebraic:
            return f"algebraic (clause {self.clause}): {self.detail}"
        return f"not algebraic by either clause: {self.detail}"


def _in_z_pm(x: float, r: float) -> bool:
    f = x - math.floor(x)
    return min(abs(f - r), abs(f - (1.0 - r)), abs(f - r - 1.0), abs(f - (1.0 - r) + 1.0)) <= _FRAC_TOL


def algebraicity(lam: float, gamma: float) -> AlgebraicityVerdict:
    """Whether the weighted generating functions with this (lam, gamma) are
    algebraic: (1) lam in Z±1/4 with gamma-lam in Z±1/3, or (2) lam in Z±1/6
    with gamma-lam in Z±1/3 or Z±1/4."""
    d = gamma - lam
    if _in_z_pm(lam, 0.25) and _in_z_pm(d, 1.0 / 3.0):
        return AlgebraicityVerdict(True, 1, "lam in Z±1/4, gamma-lam in Z±1/3")
    if _in_z_pm(lam, 1.0 / 6.0):
        if _in_z_pm(d, 1.0 / 3.0):
            return AlgebraicityVerdict(True, 2, "lam in Z±1/6, gamma-lam in Z±1/3")
        if _in_z_pm(d, 0.25):
            return AlgebraicityVerdict(True, 2, "lam in Z±1/6, gamma-lam in Z±1/4")
    return AlgebraicityVerdict(False, None, f"lam = {lam}, gamma - lam = {d}")
