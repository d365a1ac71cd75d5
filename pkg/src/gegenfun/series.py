"""Truncated power series in t with complex coefficients.

A series of order N stores the N+1 Taylor coefficients of a function at
t = 0; higher-order terms are unknown rather than zero.  Arithmetic results
carry order = min of the operand orders.  Division by a series whose first
nonzero coefficient sits at index v > 0 removes the common factor t^v and
reduces the order by v, so callers that need order N after divisions must
over-allocate.

All operations are pure: no instance is mutated after construction.
"""

from __future__ import annotations

from typing import Sequence, Union

import numpy as np

from .errors import (
    DivisionByZeroSeries,
    NonvanishingInner,
    OddValuation,
    ZeroConstantTerm,
)

Scalar = Union[int, float, complex]

# Coefficients smaller than ZERO_TOL * max(1, local coefficient scale) are
# treated as exact zeros when locating the leading term: cancellations like
# sinh(xi)/sinh(xi/3) leave roundoff residue where exact arithmetic has zeros.
# The scale is the max coefficient magnitude over a short forward window
# (not the whole series): series like (1-2xt+t**2)**(-1/2) at x = 5 grow
# geometrically to ~1e23 by order 24, and a global-max threshold would
# swallow their genuinely nonzero O(1) leading coefficients.
ZERO_TOL = 1e-12
_SCALE_WINDOW = 6

# Coefficients are held in the widest hardware complex type.  On x86 this is
# 80-bit extended (eps ~ 1e-19), which buys three digits of headroom against
# the cancellation inherent in composing hypergeometric series with
# large-coefficient arguments; elsewhere it silently aliases complex128.
DTYPE = np.clongdouble
_REAL_DTYPE = np.longdouble


class TruncatedSeries:
    """Degree-N jet: coeffs[n] is the coefficient of t**n, len = order+1."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Scalar] | np.ndarray):
        c = np.asarray(coeffs, dtype=DTYPE)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(c.view(_REAL_DTYPE))):
            raise ValueError("non-finite coefficient")
        self.coeffs = c

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @classmethod
    def from_constant(cls, c: Scalar, order: int) -> "TruncatedSeries":
        if order < 0:
            raise ValueError("order must be non-negative")
        a = np.zeros(order + 1, dtype=DTYPE)
        a[0] = c
        return cls(a)

    @classmethod
    def variable(cls, order: int) -> "TruncatedSeries":
        """The series t itself (requires order >= 1)."""
        if order < 1:
            raise ValueError("variable needs order >= 1")
        a = np.zeros(order + 1, dtype=DTYPE)
        a[1] = 1.0
        return cls(a)

    @classmethod
    def from_polynomial(cls, coeffs: Sequence[Scalar], order: int) -> "TruncatedSeries":
        """Polynomial coefficients padded with zeros (or truncated) to the given order."""
        a = np.zeros(order + 1, dtype=np.complex128)
        src = np.asarray(coeffs, dtype=DTYPE)
        n = min(src.size, order + 1)
        a[:n] = src[:n]
        return cls(a)

    # -- basic queries ------------------------------------------------------

    def coefficient(self, n: int) -> complex:
        return complex(self.coeffs[n])

    def zero_threshold(self, at: int = 0) -> float:
        scale = float(np.max(np.abs(self.coeffs[: at + _SCALE_WINDOW + 1])))
        return ZERO_TOL * max(1.0, scale)

    def valuation(self) -> int | None:
        """Index of the first coefficient above the zero threshold; None if all vanish."""
        ab = np.abs(self.coeffs)
        for i in range(ab.size):
            if ab[i] > ZERO_TOL * max(1.0, float(np.max(ab[: i + _SCALE_WINDOW + 1]))):
                return i
        return None

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1])

    def eval_at(self, t: Scalar) -> complex:
        """Horner partial sum of the jet at a concrete t."""
        acc = 0.0 + 0.0j
        for c in self.coeffs[::-1]:
            acc = acc * t + c
        return complex(acc)

    def max_abs_imag(self) -> float:
        return float(np.max(np.abs(self.coeffs.imag)))

    def real_coeffs(self) -> np.ndarray:
        return self.coeffs.real.copy()

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "TruncatedSeries | Scalar") -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order) + 1
            return TruncatedSeries(self.coeffs[:n] + other.coeffs[:n])
        c = self.coeffs.copy()
        c[0] += other
        return TruncatedSeries(c)

    __radd__ = __add__

    def __sub__(self, other: "TruncatedSeries | Scalar") -> "TruncatedSeries":
        return self + (-other if isinstance(other, TruncatedSeries) else -1.0 * other)

    def __rsub__(self, other: Scalar) -> "TruncatedSeries":
        return (-self) + other

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-self.coeffs)

    def __mul__(self, other: "TruncatedSeries | Scalar") -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order) + 1
            return TruncatedSeries(np.convolve(self.coeffs, other.coeffs)[:n])
        return TruncatedSeries(self.coeffs * other)

    __rmul__ = __mul__

    def __truediv__(self, other: "TruncatedSeries | Scalar") -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return div(self, other)
        return TruncatedSeries(self.coeffs / other)

    def __rtruediv__(self, other: Scalar) -> "TruncatedSeries":
        return div(TruncatedSeries.from_constant(other, self.order), self)

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.coeffs.tolist()!r})"


# -- free-function forms of the series operations -----------------------------


def from_constant(c: Scalar, order: int) -> TruncatedSeries:
    return TruncatedSeries.from_constant(c, order)


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a - b


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def _shift_down(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Divide by t**k, discarding the k leading (numerically zero) coefficients."""
    if k == 0:
        return a
    if a.order < k:
        raise ValueError("shift exceeds order")
    return TruncatedSeries(a.coeffs[k:])


def _shift_up(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Multiply by t**k; the known coefficient window grows with the shift."""
    if k == 0:
        return a
    return TruncatedSeries(np.concatenate([np.zeros(k, dtype=DTYPE), a.coeffs]))


def div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Series division with removable-singularity handling.

    Requires valuation(b) <= valuation(a).  A common factor t**v with
    v = valuation(b) is divided out of both operands first; the result's
    order is min(order a, order b) - v.
    """
    vb = b.valuation()
    if vb is None:
        raise DivisionByZeroSeries("divisor is the zero series")
    va = a.valuation()
    order = min(a.order, b.order) - vb
    if va is None:
        if order < 0:
            raise DivisionByZeroSeries("no retained coefficients after valuation shift")
        return TruncatedSeries.from_constant(0.0, order)
    if vb > va:
        raise DivisionByZeroSeries(
            f"divisor valuation {vb} exceeds dividend valuation {va}"
        )
    an = _shift_down(a, vb).coeffs
    bn = _shift_down(b, vb).coeffs
    out = np.zeros(order + 1, dtype=DTYPE)
    b0 = bn[0]
    for n in range(order + 1):
        acc = an[n] if n < an.size else 0.0
        kmax = min(n, bn.size - 1)
        if kmax >= 1:
            acc = acc - np.dot(out[n - kmax : n][::-1], bn[1 : kmax + 1])
        out[n] = acc / b0
    return TruncatedSeries(out)


def pow_alpha(a: TruncatedSeries, alpha: Scalar) -> TruncatedSeries:
    """a**alpha for arbitrary complex alpha, principal branch of the constant term.

    Uses the standard power recurrence b_n = (1/(n a_0)) * sum_{k=1..n}
    ((alpha+1)k - n) a_k b_{n-k}, which needs a nonzero constant term.
    """
    a0 = a.coeffs[0]
    if abs(a0) <= a.zero_threshold():
        raise ZeroConstantTerm("series has (numerically) zero constant term")
    n = a.order
    out = np.zeros(n + 1, dtype=DTYPE)
    out[0] = a0 ** alpha
    ac = a.coeffs
    for m in range(1, n + 1):
        k = np.arange(1, m + 1)
        out[m] = np.dot(((alpha + 1) * k - m) * ac[1 : m + 1], out[m - 1 :: -1][:m]) / (
            m * a0
        )
    return TruncatedSeries(out)


def pow_rational(a: TruncatedSeries, p: int, q: int) -> TruncatedSeries:
    """a**(p/q) with integer p and positive integer q, principal branch."""
    if q <= 0:
        raise ValueError("q must be a positive integer")
    return pow_alpha(a, p / q)


def sqrt_shifted(a: TruncatedSeries) -> TruncatedSeries:
    """Square root of a series with even valuation: sqrt(t**2w * u) = t**w sqrt(u)."""
    v = a.valuation()
    if v is None:
        raise ZeroConstantTerm("square root of the zero series")
    if v % 2:
        raise OddValuation(f"valuation {v} is odd")
    body = pow_alpha(_shift_down(a, v), 0.5)
    return _shift_up(body, v // 2)


def compose_vanishing(
    outer_coeffs: Sequence[Scalar] | np.ndarray, inner: TruncatedSeries
) -> TruncatedSeries:
    """Evaluate the Maclaurin polynomial sum outer[k] z**k at a series z with z(0) = 0."""
    thr = inner.zero_threshold()
    if abs(inner.coeffs[0]) > thr:
        raise NonvanishingInner("inner series has nonzero constant term")
    outer = np.asarray(outer_coeffs, dtype=DTYPE)
    n = min(outer.size - 1, inner.order)
    acc = TruncatedSeries.from_constant(outer[n], inner.order)
    for k in range(n - 1, -1, -1):
        acc = acc * inner + outer[k]
    return acc


def mixed_deviation(a: TruncatedSeries, b: TruncatedSeries, upto: int | None = None) -> float:
    """max_n |a_n - b_n| / max(1, |a_n|, |b_n|) over the shared coefficient window."""
    n = min(a.order, b.order)
    if upto is not None:
        if upto > n:
            raise ValueError(f"requested order {upto} exceeds available order {n}")
        n = upto
    x, y = a.coeffs[: n + 1], b.coeffs[: n + 1]
    denom = np.maximum(1.0, np.maximum(np.abs(x), np.abs(y)))
    return float(np.max(np.abs(x - y) / denom))
