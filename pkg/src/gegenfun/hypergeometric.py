"""Pochhammer symbols, the Gauss 2F1, terminating pFq, and the real Gamma function.

Everything here is plain series summation over complex parameters.  The
scalar 2F1 sums directly for moderate arguments and switches to the Pfaff
map z -> z/(z-1) for real z <= -1/2, which keeps the mapped argument inside
the summation domain without any analytic continuation past the unit disk.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .errors import NoConvergence, PoleAtNonPositiveInteger, PoleInDenominatorParams
from .series import DTYPE, TruncatedSeries, compose_vanishing

Scalar = complex | float | int

# Tolerance for recognizing a floating parameter as an exact (negative) integer.
INT_TOL = 1e-9

# Direct summation is refused at |z| >= DIRECT_LIMIT outside the terminating
# case; real z <= -0.5 goes through the Pfaff map first.
DIRECT_LIMIT = 0.99
MAX_TERMS = 100_000


def as_negative_integer(x: Scalar) -> int | None:
    """Return -n when x is within INT_TOL of a non-positive integer, else None."""
    xr = complex(x)
    if abs(xr.imag) > INT_TOL:
        return None
    n = round(xr.real)
    if n <= 0 and abs(xr.real - n) <= INT_TOL:
        return int(n)
    return None


def pochhammer(a: Scalar, n: int) -> complex:
    """Rising factorial a (a+1) ... (a+n-1); empty product 1 for n = 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    acc = 1.0 + 0.0j
    for k in range(n):
        acc *= a + k
    return acc


def gamma_fn(x: float) -> float:
    """Real Gamma function; poles at non-positive integers are rejected."""
    if x <= 0 and abs(x - round(x)) <= INT_TOL:
        raise PoleAtNonPositiveInteger(f"Gamma pole at x = {x}")
    return math.gamma(x)


def _termination_index(a: Scalar, b: Scalar) -> int | None:
    """Smallest n such that (a)_k (b)_k = 0 for k > n, when a or b is a negative integer."""
    candidates = [-m for m in (as_negative_integer(a), as_negative_integer(b)) if m is not None]
    return min(candidates) if candidates else None


def _check_denominator(c: Scalar, n_terminate: int | None, kmax: int) -> None:
    """(c)_k must not vanish before either termination or the last used term."""
    mc = as_negative_integer(c)
    if mc is None:
        return
    pole_k = -mc + 1  # first k with (c)_k = 0
    stop = n_terminate + 1 if n_terminate is not None else kmax + 1
    if pole_k < stop:
        raise PoleInDenominatorParams(
            f"lower parameter {c} hits a pole before the series terminates"
        )


def gauss_2f1_coeffs(a: Scalar, b: Scalar, c: Scalar, order: int) -> np.ndarray:
    """Maclaurin coefficients (a)_k (b)_k / ((c)_k k!) for k = 0..order."""
    if order < 0:
        raise ValueError("order must be non-negative")
    n_term = _termination_index(a, b)
    _check_denominator(c, n_term, order)
    out = np.zeros(order + 1, dtype=DTYPE)
    aa, bb, cc = DTYPE(a), DTYPE(b), DTYPE(c)
    term = DTYPE(1.0)
    out[0] = term
    for k in range(order):
        if n_term is not None and k >= n_term:
            break
        term *= (aa + k) * (bb + k) / ((cc + k) * (k + 1))
        out[k + 1] = term
    return out


def gauss_2f1_scalar(a: Scalar, b: Scalar, c: Scalar, z: Scalar, tol: float = 1e-14) -> complex:
    """Gauss 2F1 by direct summation (terminating series are summed exactly).

    Stops once three consecutive terms fall below tol times the accumulated
    magnitude.  Real arguments z <= -0.5 are summed after the Pfaff
    transformation 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a,c-b;c;z/(z-1)).
    """
    n_term = _termination_index(a, b)
    if n_term is not None:
        _check_denominator(c, n_term, n_term)
        # extended precision: alternating terminating sums cancel heavily
        aa, bb, cc, zz = DTYPE(a), DTYPE(b), DTYPE(c), DTYPE(z)
        acc = DTYPE(1.0)
        term = DTYPE(1.0)
        for k in range(n_term):
            term *= (aa + k) * (bb + k) * zz / ((cc + k) * (k + 1))
            acc += term
        return complex(acc)

    zc = complex(z)
    if abs(zc.imag) < 1e-300 and zc.real <= -0.5:
        w = zc / (zc - 1.0)
        return complex(
            (1.0 - zc) ** (-complex(a)) * gauss_2f1_scalar(a, c - b, c, w, tol)
        )
    if abs(zc) >= DIRECT_LIMIT:
        raise NoConvergence(f"|z| = {abs(zc):.4f} outside the direct-summation domain")
    _check_denominator(c, None, MAX_TERMS)
    acc = 1.0 + 0.0j
    term = 1.0 + 0.0j
    small = 0
    for k in range(MAX_TERMS):
        term *= (a + k) * (b + k) * zc / ((c + k) * (k + 1))
        acc += term
        if abs(term) < tol * max(1.0, abs(acc)):
            small += 1
            if small >= 3:
                return complex(acc)
        else:
            small = 0
    raise NoConvergence(f"2F1 did not converge within {MAX_TERMS} terms at z = {z}")


def gauss_2f1_series(a: Scalar, b: Scalar, c: Scalar, inner: TruncatedSeries) -> TruncatedSeries:
    """2F1 composed with a series argument vanishing at t = 0."""
    return compose_vanishing(gauss_2f1_coeffs(a, b, c, inner.order), inner)


def pfq_terminating(
    n: int,
    extra_numerators: Sequence[Scalar],
    denominators: Sequence[Scalar],
    u: Scalar,
) -> complex:
    """Finite sum of the (p+1)Fq with leading numerator -n: n+1 exact terms."""
    if n < 0:
        raise ValueError("n must be non-negative")
    for d in denominators:
        md = as_negative_integer(d)
        if md is not None and -md + 1 <= n:
            raise PoleInDenominatorParams(
                f"denominator parameter {d} vanishes within the finite sum"
            )
    acc = 1.0 + 0.0j
    term = 1.0 + 0.0j
    for k in range(n):
        term *= (-n + k) * u / (k + 1)
        for cnum in extra_numerators:
            term *= cnum + k
        for d in denominators:
            term /= d + k
        acc += term
    return complex(acc)
