"""Identity catalog: stable ids, default sample grids, runners, and report records.

Default grids follow the validity regimes of the closed forms: hyperbolic
substitutions sample x in {1.3, 1.5, 2, 5}, circular ones x in
{-0.7, 0.3, 0.6, 0.9}, and the u-extensions sweep {0, 0.4, 1, 0.7+0.2i}.
The second-family square-root variant (gf2.b) is sampled at |x| <= 0.7:
its construction composes hypergeometric series with arguments whose leading
coefficient is 2(1+|x|), and the resulting cancellation grows with |x|.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from . import genfun, legendre, poisson
from .errors import GegenfunError
from .series import mixed_deviation

HYPERBOLIC_X = (1.3, 1.5, 2.0, 5.0)
CIRCULAR_X = (-0.7, 0.3, 0.6, 0.9)
U_GRID = (0.0, 0.4, 1.0, 0.7 + 0.2j)

DEFAULT_ORDER = 16
DEFAULT_TOL = 1e-8


def _fmt(v) -> str:
    if isinstance(v, complex):
        if v.imag == 0:
            return _fmt(v.real)
        return f"{v.real:g}{v.imag:+g}j"
    if isinstance(v, float):
        return f"{v:g}"
    return str(v)


def _point(**kv) -> dict[str, str]:
    return {k: _fmt(v) for k, v in kv.items()}


@dataclass
class SampleResult:
    point: dict[str, str]
    max_mixed_deviation: float
    passed: bool
    note: str = ""


@dataclass
class IdentityReport:
    identity_id: str
    params: dict[str, str]
    order: int
    tol: float
    samples: list[SampleResult]
    overall_pass: bool
    runtime_ms: int


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    description: str
    runner: Callable[[int, float, dict], list[SampleResult]]


def _pair_sample(point: dict[str, str], builder, order: int, tol: float) -> SampleResult:
    try:
        lhs, rhs = builder()
        dev = mixed_deviation(lhs, rhs, min(order, lhs.order, rhs.order))
        return SampleResult(point, dev, dev <= tol)
    except GegenfunError as exc:
        return SampleResult(point, math.inf, False, f"{type(exc).__name__}: {exc}")


def _value_sample(point: dict[str, str], fn, tol: float) -> SampleResult:
    try:
        dev = float(fn())
        return SampleResult(point, dev, dev <= tol)
    except GegenfunError as exc:
        return SampleResult(point, math.inf, False, f"{type(exc).__name__}: {exc}")


def _grid(overrides: dict, key: str, default: Sequence) -> Sequence:
    vals = overrides.get(key)
    return default if vals is None else vals


# -- runner factories ------------------------------------------------------------


def _run_first_gf(variant: str):
    def run(order: int, tol: float, ov: dict) -> list[SampleResult]:
        cases = [
            (0.25, -1.0 / 12.0, (1.3, 2.0, 5.0)),
            (1.0 / 6.0, 0.3, (0.3, 0.9)),
            (2.0, 1.1, (1.5,)),
            (0.5, 0.3, (-0.7,)),
        ]
        out = []
        for lam, gamma, xs in cases:
            for x in _grid(ov, "x", xs):
                out.append(
                    _pair_sample(
                        _point(lam=lam, gamma=gamma, x=x),
                        lambda: genfun.first_gf_pair(lam, gamma, x, order, variant),
                        order,
                        tol,
                    )
                )
        return out

    return run


def _run_first_rewrite(variant: str):
    def run(order: int, tol: float, ov: dict) -> list[SampleResult]:
        if variant == "a":
            cases = [
                (-1.0 / 6.0, 0.25, (2.0, 0.6)),
                (-0.25, 1.0 / 3.0, (1.5, 0.4)),
                (0.0, 0.25, (2.0,)),
                (1.8, 0.2, (1.3,)),
            ]
        else:
            cases = [
                (-0.25, 0.25, (0.5, 1.5)),
                (-0.25, 1.0 / 3.0, (2.0,)),
                (-0.25, 0.2, (0.5,)),
            ]
        out = []
        for nu, mu, xs in cases:
            for x in _grid(ov, "x", xs):
                out.append(
                    _pair_sample(
                        _point(nu=nu, mu=mu, x=x),
                        lambda: genfun.first_rewrite_pair(nu, mu, x, order, variant),
                        order,
                        tol,
                    )
                )
        return out

    return run


def _run_miller(which: str):
    def run(order: int, tol: float, ov: dict) -> list[SampleResult]:
        cases = [
            (0.25, 0, 1.5),
            (0.25, 1, 2.0),
            (0.25, 3, 1.5),
            (1.0 / 6.0, 3, 0.3),
            (1.5, 3, 0.6),
        ]
        out = []
        for lam, n, x_default in cases:
            for x in _grid(ov, "x", (x_default,)):
                out.append(
                    _pair_sample(
                        _point(lam=lam, N=n, x=x),
                        lambda: genfun.miller_identities(lam, n, x, order, which),
                        order,
                        tol,
                    )
                )
        return out

    return run


def _run_alt(which: int):
    def run(order: int, tol: float, ov: dict) -> list[SampleResult]:
        out = []
        for lam in (0.5, 0.25, 7.0 / 6.0, 1.0 / 6.0):
            for x in _grid(ov, "x", (1.5, 0.3)):
                out.append(
                    _pair_sample(
                        _point(lam=lam, x=x),
                        lambda: genfun.alt_gf(lam, x, order, which),
                        order,
                        tol,
                    )
                )
        return out

    return run


def _run_octa(order: int, tol: float, ov: dict) -> list[SampleResult]:
    return [
        _pair_sample(
            _point(x=x),
            lambda: genfun.octahedral_example(x, order),
            order,
            tol,
        )
        for x in _grid(ov, "x", HYPERBOLIC_X)
    ]


def _run_tetra(branch: str):
    default = (1.5, 2.0) if branch == "hyperbolic" else (0.3, 0.6)

    def run(order: int, tol: float, ov: dict) -> list[SampleResult]:
        return [
            _pair_sample(
                _point(x=x, branch=branch),
                lambda: genfun.tetrahedral_example(x, order, branch),
                order,
                tol,
            )
            for x in _grid(ov, "x", default)
        ]

    return run


def _run_lemma(order: int, tol: float, ov: dict) -> list[SampleResult]:
    cases = [
        ((7.0 / 12.0,), (0.5,), 0.6, 1.5),
        ((0.3, 0.2), (0.5, 0.75), 0.6, 1.5),
        ((0.3,), (0.5,), 0.0, 2.0),
        ((0.4, 0.7), (1.2, 0.9), 0.7 + 0.2j, 0.6),
    ]
    out = []
    for nums, dens, u_default, x in cases:
        for u in _grid(ov, "u", (u_default,)):
            out.append(
                _pair_sample(
                    _point(lam=0.25, c=";".join(map(_fmt, nums)), d=";".join(map(_fmt, dens)), u=u, x=x),
                    lambda: genfun.lemma_key_check(0.25, nums, dens, u, x, order),
                    order,
                    tol,
                )
            )
    return out


def _run_extended_first(variant: str):
    def run(order: int, tol: float, ov: dict) -> list[SampleResult]:
        out = []
        for lam, gamma, x in ((0.25, -1.0 / 12.0, 2.0), (1.0 / 6.0, 0.3, 0.6)):
            for u in _grid(ov, "u", U_GRID):
                out.append(
                    _pair_sample(
                        _point(lam=lam, gamma=gamma, u=u, x=x),
                        lambda: genfun.extended_first_gf(lam, gamma, u, x, order, variant),
                        order,
                        tol,
                    )
                )
        return out

    return run


def _run_extended_rewrite(variant: str):
    def run(order: int, tol: float, ov: dict) -> list[SampleResult]:
        if variant == "a":
            cases = [
                (-1.0 / 6.0, 0.25, 0.5, 2.0),
                (0.0, 0.25, 0.4, 0.6),
                (-0.25, 1.0 / 3.0, 1.0, 1.5),
                (-1.0 / 6.0, 0.25, 0.7 + 0.2j, 2.0),
            ]
        else:
            cases = [
                (-0.25, 0.25, 0.4, 0.5),
                (-0.25, 1.0 / 3.0, 1.0, 1.5),
                (-0.25, 0.2, 0.7 + 0.2j, 0.6),
            ]
        out = []
        for nu, mu, u_default, x in cases:
            for u in _grid(ov, "u", (u_default,)):
                out.append(
                    _pair_sample(
                        _point(nu=nu, mu=mu, u=u, x=x),
                        lambda: genfun.extended_rewrite(nu, mu, u, x, order, variant),
                        order,
                        tol,
                    )
                )
        return out

    return run


def _run_extended_miller(which: str):
    def run(order: int, tol: float, ov: dict) -> list[SampleResult]:
        cases = [
            (1.0 / 6.0, 2, 0.3, 1.5),
            (0.25, 0, 0.6, 2.0),
            (0.25, 3, 1.0, 1.3),
            (1.5, 1, 0.3, 0.6),
        ]
        out = []
        for lam, n, u_default, x in cases:
            for u in _grid(ov, "u", (u_default,)):
                out.append(
                    _pair_sample(
                        _point(lam=lam, N=n, u=u, x=x),
                        lambda: genfun.extended_miller(lam, n, u, x, order, which),
                        order,
                        tol,
                    )
                )
        return out

    return run


def _run_second_gf(variant: str):
    def run(order: int, tol: float, ov: dict) -> list[SampleResult]:
        if variant == "a":
            cases = [
                (0.5, 0.3, 0.6),
                (1.0 / 6.0, 0.5, 0.4),
                (0.5, -2.0, 1.5),
                (2.0, 1.1, 0.9),
                (0.25, 7.0 / 12.0, 1.5),
            ]
        else:
            cases = [
                (0.5, 0.3, 0.3),
                (1.0 / 6.0, 0.5, 0.45),
                (2.0, 1.1, 0.6),
                (0.5, -2.0, 0.3),
                (0.25, 7.0 / 12.0, -0.7),
            ]
        out = []
        for lam, gamma, x_default in cases:
            for x in _grid(ov, "x", (x_default,)):
                out.append(
                    _pair_sample(
                        _point(lam=lam, gamma=gamma, x=x),
                        lambda: genfun.second_gf(lam, gamma, x, order, variant),
                        order,
                        tol,
                    )
                )
        return out

    return run


def _run_extended_second(variant: str):
    def run(order: int, tol: float, ov: dict) -> list[SampleResult]:
        cases = [
            (0.5, 0.3, 1.0, 0.6),
            (0.25, 0.25 + 1.0 / 3.0, 0.4, 1.5),
            (0.25, 0.3, 0.0, 1.5),
            (1.0 / 6.0, 0.25, 0.7 + 0.2j, 0.6),
        ]
        out = []
        for lam, gamma, u_default, x in cases:
            for u in _grid(ov, "u", (u_default,)):
                out.append(
                    _pair_sample(
                        _point(lam=lam, gamma=gamma, u=u, x=x),
                        lambda: genfun.extended_second_gf(lam, gamma, u, x, order, variant),
                        order,
                        tol,
                    )
                )
        return out

    return run


def _run_second_rewrite(variant: str):
    def run(order: int, tol: float, ov: dict) -> list[SampleResult]:
        if variant == "a":
            cases = [(-1.0 / 6.0, 0.25, 0.5), (-0.2, 0.2, 0.5), (-0.25, 1.0 / 3.0, 1.5), (0.0, 0.25, 2.0)]
        else:
            cases = [(-0.25, 0.25, 0.5), (-0.25, 1.0 / 3.0, 0.3), (-0.25, 0.2, 0.6)]
        out = []
        for nu, mu, x_default in cases:
            for x in _grid(ov, "x", (x_default,)):
                out.append(
                    _pair_sample(
                        _point(nu=nu, mu=mu, x=x),
                        lambda: genfun.second_rewrite(nu, mu, x, order, variant),
                        order,
                        tol,
                    )
                )
        return out

    return run


def _run_subst_table(order: int, tol: float, ov: dict) -> list[SampleResult]:
    rows = [
        (1, 2.0, 0.1),
        (2, 0.5, 0.1),
        (3, 2.0, 0.1),
        (4, 0.5, 0.1),
        (5, 0.5, 0.2),
        (6, 2.0, 0.2),
        (7, 0.5, 0.1),
        (8, 2.0, 0.1),
    ]
    out = []
    for row, x_default, t in rows:
        for x in _grid(ov, "x", (x_default,)):
            def fn(row=row, x=x, t=t):
                sr = genfun.substitution_table(x, t, row)
                return sr.reconstruction_dev

            out.append(
                _value_sample(_point(row=row, x=x, t=t), fn, tol)
            )
    return out


# -- kernel and elliptic runners ----------------------------------------------------


_KERNEL_POINTS = (
    (1.0, 1.7, 0.15),
    (1.2, 2.0, -0.2),
    (0.8, 0.8, 0.1),
    (math.pi / 2.0, math.pi / 2.0, -0.15),
)


def _run_kernel(weighted: bool):
    def run(order: int, tol: float, ov: dict) -> list[SampleResult]:
        out = []
        for lam in (0.25, 1.0 / 6.0):
            for theta, phi, t in _KERNEL_POINTS:
                def fn(lam=lam, theta=theta, phi=phi, t=t):
                    args = poisson.KernelArgs(lam, theta, phi, t)
                    closed = (poisson.poisson_kernel if weighted else poisson.companion_kernel)
                    v1, v2 = closed(args, "tilde"), closed(args, "z")
                    psum = poisson.bilinear_partial_sum(lam, theta, phi, t, 48, weighted)
                    scale = max(1.0, abs(v1))
                    return max(abs(v1 - v2), abs(v1 - psum)) / scale

                zt, _ = poisson.kernel_arguments(poisson.KernelArgs(lam, theta, phi, t))
                out.append(
                    _value_sample(
                        _point(lam=lam, theta=theta, phi=phi, t=t, arg=round(zt, 4)), fn, tol
                    )
                )
        return out

    return run


def _run_operator(order: int, tol: float, ov: dict) -> list[SampleResult]:
    out = []
    for lam in (0.25, 1.0 / 6.0):
        for theta, phi in ((1.0, 1.7), (0.8, 2.1)):
            out.append(
                _value_sample(
                    _point(lam=lam, theta=theta, phi=phi, order=order),
                    lambda: poisson.operator_relation_check(lam, theta, phi, order),
                    tol,
                )
            )
    return out


def _run_quarter_kernel(order: int, tol: float, ov: dict) -> list[SampleResult]:
    pts = ((math.pi / 2, math.pi / 2, -0.15), (1.2, 2.0, -0.2), (1.0, 1.3, -0.1))
    out = []
    for theta, phi, t in pts:
        def fn(theta=theta, phi=phi, t=t):
            args = poisson.KernelArgs(0.25, theta, phi, t)
            a = poisson.quarter_kernel_elliptic(args)
            b = poisson.poisson_kernel(args, "tilde")
            return abs(a - b) / max(1.0, abs(b))

        out.append(_value_sample(_point(theta=theta, phi=phi, t=t), fn, tol))
    return out


def _run_elliptic_quarter(order: int, tol: float, ov: dict) -> list[SampleResult]:
    out = []
    for w in (1e-6, 0.1, 0.25, 0.49):
        def fn(w=w):
            a, b = poisson.elliptic_quarter_lhs(w), poisson.elliptic_quarter_rhs(w)
            return abs(a - b) / max(1.0, abs(b))

        out.append(_value_sample(_point(w=w), fn, tol))
    return out


def _run_k_2f1(order: int, tol: float, ov: dict) -> list[SampleResult]:
    from .hypergeometric import gauss_2f1_scalar

    out = []
    for m in (0.05, 0.3, 0.5, 0.8):
        def fn(m=m):
            a = 2.0 / math.pi * poisson.elliptic_k(m)
            b = gauss_2f1_scalar(0.5, 0.5, 1.0, m).real
            return abs(a - b) / max(1.0, abs(b))

        out.append(_value_sample(_point(m=m), fn, tol))
    return out


def _run_legendre_relation(order: int, tol: float, ov: dict) -> list[SampleResult]:
    out = []
    for m in (0.1, 0.3, 0.5):
        def fn(m=m):
            e, k = poisson.elliptic_e, poisson.elliptic_k
            val = e(m) * k(1 - m) + e(1 - m) * k(m) - k(m) * k(1 - m)
            return abs(val - math.pi / 2.0)

        out.append(_value_sample(_point(m=m), fn, tol))
    return out


def _closed_form_grids():
    lg = legendre
    hyp = np.linspace(0.2, 2.0, 10)
    circ = np.linspace(0.3, 2.8, 10)
    tanh_grid = np.linspace(-1.5, 1.5, 10)
    coth_grid = np.linspace(0.3, 2.0, 10)
    z_leg = np.linspace(1.2, 2.8, 10)
    z_fer = np.linspace(-0.8, 0.8, 10)
    L, F = lg.Branch.LEGENDRE, lg.Branch.FERRERS

    def rel(a, b):
        return abs(a - b) / max(abs(b), 1e-300)

    def oracle(nu, mu, z, branch):
        return lg.legendre_p_hypergeometric(nu, mu, z, branch)

    yield "reducible-L", lambda: max(
        rel(lg.reducible_case(0.25, 2, z, L), oracle(1.75, 0.25, z, L)) for z in z_leg
    )
    yield "reducible-F", lambda: max(
        rel(lg.reducible_case(-0.5, 1, z, F), oracle(1.5, -0.5, z, F)) for z in z_fer
    )
    yield "cyclic-L", lambda: max(
        rel(lg.cyclic_case(1.0 / 3.0, xi, L), oracle(0.0, 1.0 / 3.0, 1.0 / math.tanh(xi), L))
        for xi in coth_grid
    )
    yield "cyclic-F", lambda: max(
        rel(lg.cyclic_case(1.0 / 3.0, xi, F), oracle(0.0, 1.0 / 3.0, math.tanh(xi), F))
        for xi in tanh_grid
    )
    yield "dihedral-L", lambda: max(
        rel(lg.dihedral_case(1.0 / 6.0, xi, L), oracle(1.0 / 6.0, 0.5, math.cosh(xi), L))
        for xi in hyp
    )
    yield "dihedral-F", lambda: max(
        rel(lg.dihedral_case(1.0 / 6.0, th, F), oracle(1.0 / 6.0, 0.5, math.cos(th), F))
        for th in circ
    )
    for sign, tag in ((+1, "octahedral+"), (-1, "octahedral-")):
        yield f"{tag}-L", lambda sign=sign: max(
            rel(lg.octahedral_p(sign, xi, L), oracle(-1.0 / 6.0, sign * 0.25, math.cosh(xi), L))
            for xi in hyp
        )
        yield f"{tag}-F", lambda sign=sign: max(
            rel(lg.octahedral_p(sign, th, F), oracle(-1.0 / 6.0, sign * 0.25, math.cos(th), F))
            for th in circ
        )
    for sign, tag in ((+1, "tetrahedral+"), (-1, "tetrahedral-")):
        yield f"{tag}-L", lambda sign=sign: max(
            rel(
                lg.tetrahedral_p(sign, xi, L),
                oracle(-0.25, sign / 3.0, 1.0 / math.tanh(xi), L),
            )
            for xi in coth_grid
        )
        yield f"{tag}-F", lambda sign=sign: max(
            rel(
                lg.tetrahedral_p(sign, xi, F),
                oracle(-0.25, sign / 3.0, math.tanh(xi), F),
            )
            for xi in tanh_grid
        )


def _run_closed_forms(order: int, tol: float, ov: dict) -> list[SampleResult]:
    return [
        _value_sample(_point(case=name, grid="10-point"), fn, tol)
        for name, fn in _closed_form_grids()
    ]


# -- catalog ----------------------------------------------------------------------


CATALOG: tuple[IdentityEntry, ...] = (
    IdentityEntry("gf1.a", "first generating function, square-root argument form", _run_first_gf("a")),
    IdentityEntry("gf1.b", "first generating function, quadratic-transformed form", _run_first_gf("b")),
    IdentityEntry("gf1.rewrite.a", "first family rewritten via the analytic Legendre combination, z=(1-xt)/R", _run_first_rewrite("a")),
    IdentityEntry("gf1.rewrite.b", "first family rewritten at fixed degree -1/4, z=2(R/(1-xt))^2-1", _run_first_rewrite("b")),
    IdentityEntry("miller.g1", "terminating finite-sum identity, R^N prefactor", _run_miller("g1")),
    IdentityEntry("miller.g2", "companion sum with R^(-2 lam - N) prefactor", _run_miller("g2")),
    IdentityEntry("alt.1", "alternative generating function with R^(-1) prefactor", _run_alt(1)),
    IdentityEntry("alt.2", "alternative generating function without the R^(-1) prefactor", _run_alt(2)),
    IdentityEntry("octa.c14", "explicit radical form of the quarter-parameter family (octahedral)", _run_octa),
    IdentityEntry("tetra.c16.hyp", "explicit radical form of the sixth-parameter family, hyperbolic branch", _run_tetra("hyperbolic")),
    IdentityEntry("tetra.c16.circ", "explicit radical form of the sixth-parameter family, circular branch", _run_tetra("circular")),
    IdentityEntry("lemma.key", "series-rearrangement identity behind the u-extensions", _run_lemma),
    IdentityEntry("gf1x.a", "u-extended first generating function, square-root form", _run_extended_first("a")),
    IdentityEntry("gf1x.b", "u-extended first generating function, quadratic-transformed form", _run_extended_first("b")),
    IdentityEntry("gf1x.rewrite.a", "u-extended Legendre rewrite, z=Q/(UR)", _run_extended_rewrite("a")),
    IdentityEntry("gf1x.rewrite.b", "u-extended Legendre rewrite, z=2(UR/Q)^2-1", _run_extended_rewrite("b")),
    IdentityEntry("millerx.plus", "u-extended finite-sum identity, U^(-2 lam - N) R^N", _run_extended_miller("plus")),
    IdentityEntry("millerx.minus", "u-extended companion sum, U^N R^(-2 lam - N)", _run_extended_miller("minus")),
    IdentityEntry("gf2.a", "second generating function, product of two 2F1 factors", _run_second_gf("a")),
    IdentityEntry("gf2.b", "second generating function, quadratic-transformed product", _run_second_gf("b")),
    IdentityEntry("gf2x.a", "u-extended second generating function, product form", _run_extended_second("a")),
    IdentityEntry("gf2x.b", "u-extended second generating function, transformed product", _run_extended_second("b")),
    IdentityEntry("gf2.rewrite.a", "second family through analytic Legendre factors at R±t", _run_second_rewrite("a")),
    IdentityEntry("gf2.rewrite.b", "second family at fixed degree -1/4, arguments 2/(R∓t)^2-1", _run_second_rewrite("b")),
    IdentityEntry("subst.table", "exponential substitutions reconstruct both Legendre arguments", _run_subst_table),
    IdentityEntry("legendre.closedforms", "closed forms agree with the hypergeometric definition on 10-point grids", _run_closed_forms),
    IdentityEntry("poisson.kernel", "Poisson kernel closed form vs bilinear sum and variant agreement", _run_kernel(True)),
    IdentityEntry("poisson.companion", "companion kernel closed form vs bilinear sum and variant agreement", _run_kernel(False)),
    IdentityEntry("poisson.operator", "weight map (lam+n)/lam links companion and kernel coefficients", _run_operator),
    IdentityEntry("poisson.quarter", "quarter-parameter kernel through complete elliptic integrals", _run_quarter_kernel),
    IdentityEntry("elliptic.quarter", "2F1(1/4,5/4;1/2;w) expressed through K and E at (1±sqrt(w))/2", _run_elliptic_quarter),
    IdentityEntry("elliptic.k2f1", "(2/pi) K(m) equals 2F1(1/2,1/2;1;m)", _run_k_2f1),
    IdentityEntry("elliptic.legendre", "Legendre relation between K and E", _run_legendre_relation),
)

_BY_ID = {e.id: e for e in CATALOG}


def identity_ids() -> tuple[str, ...]:
    return tuple(e.id for e in CATALOG)


def get_entry(identity_id: str):
    return _BY_ID.get(identity_id)


def run_identity(
    identity_id: str,
    order: int = DEFAULT_ORDER,
    tol: float = DEFAULT_TOL,
    overrides: dict | None = None,
) -> IdentityReport:
    entry = _BY_ID.get(identity_id)
    if entry is None:
        raise KeyError(identity_id)
    t0 = time.perf_counter()
    samples = entry.runner(order, tol, overrides or {})
    ms = int(round((time.perf_counter() - t0) * 1000.0))
    params = {"tol": _fmt(tol)}
    ov = overrides or {}
    if ov.get("x") is not None:
        params["x"] = ",".join(_fmt(v) for v in ov["x"])
    if ov.get("u") is not None:
        params["u"] = ",".join(_fmt(v) for v in ov["u"])
    return IdentityReport(
        identity_id=identity_id,
        params=params,
        order=order,
        tol=tol,
        samples=samples,
        overall_pass=all(s.passed for s in samples),
        runtime_ms=ms,
    )


def report_to_json(report: IdentityReport) -> str:
    obj = {
        "identity": report.identity_id,
        "params": report.params,
        "order": report.order,
        "tol": report.tol,
        "samples": [
            {
                "point": s.point,
                "max_mixed_deviation": s.max_mixed_deviation,
                "pass": s.passed,
                **({"note": s.note} if s.note else {}),
            }
            for s in report.samples
        ],
        "overall_pass": report.overall_pass,
        "runtime_ms": report.runtime_ms,
    }
    return json.dumps(obj, sort_keys=True)


def reports_to_csv(reports: Iterable[IdentityReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["identity", "point", "order", "max_mixed_deviation", "pass", "note"])
    for r in reports:
        for s in r.samples:
            point = " ".join(f"{k}={v}" for k, v in s.point.items())
            writer.writerow(
                [r.identity_id, point, r.order, repr(s.max_mixed_deviation),
                 str(s.passed).lower(), s.note]
            )
    return buf.getvalue()
