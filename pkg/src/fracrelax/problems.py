"""Closed-form benchmark integral equations y + I^alpha y = F.

Three families:

* power:  y = x^p with polynomial-plus-power forcing,
* exp:    y = e^x minus its Taylor polynomial of degree m,
* ml:     y = the Mittag-Leffler tail remainder of E_alpha(-x^alpha) past its
          fractional Taylor polynomial of degree m.

Each factory returns an immutable problem with vectorized forcing/exact
evaluators; residual_check validates the (F, y) pair against a high-resolution
end-corrected quadrature before any solver run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .fracint import UniformGrid, corrected_sum_I, scheme_coefficients
from .specfun import gamma, mittag_leffler

__all__ = [
    "BenchmarkProblem",
    "make_power_problem",
    "make_exp_problem",
    "make_ml_problem",
    "residual_check",
]


@dataclass(frozen=True)
class BenchmarkProblem:
    """An integral equation y + I^alpha y = F with known exact solution.

    vanishing_order counts how many derivatives of y vanish at 0 (y(0)=0
    always holds; vanishing_order=1 additionally means y'(0)=0, etc.).
    """

    alpha: float
    X: float
    forcing: Callable[[np.ndarray], np.ndarray]
    exact: Callable[[np.ndarray], np.ndarray]
    label: str
    vanishing_order: int


def _ml_values(alpha: float, beta: float, z: np.ndarray) -> np.ndarray:
    flat = np.asarray(z, dtype=float).ravel()
    out = np.array([mittag_leffler(alpha, beta, float(v)) for v in flat])
    return out.reshape(np.shape(z))


def make_power_problem(p: float, alpha: float, X: float = 1.0) -> BenchmarkProblem:
    """y = x^p, F = x^p + Gamma(p+1)/Gamma(p+alpha+1) x^(p+alpha)."""
    if p <= 0.0:
        raise ValueError("power problem requires p > 0")
    coef = gamma(p + 1.0) / gamma(p + alpha + 1.0)

    def exact(x):
        x = np.asarray(x, dtype=float)
        return x**p

    def forcing(x):
        x = np.asarray(x, dtype=float)
        return x**p + coef * x ** (p + alpha)

    vanish = int(p) - 1 if float(p).is_integer() else math.ceil(p) - 1
    return BenchmarkProblem(
        alpha=alpha,
        X=X,
        forcing=forcing,
        exact=exact,
        label=f"power[p={p:g}]",
        vanishing_order=vanish,
    )


def make_exp_problem(m: int, alpha: float, X: float = 1.0) -> BenchmarkProblem:
    """y = e^x - sum_{k=0}^m x^k/k!  (the degree-m Taylor remainder of e^x)."""
    if not 0 <= m <= 12:
        raise ValueError("exp problem requires 0 <= m <= 12")

    def exact(x):
        x = np.asarray(x, dtype=float)
        out = np.exp(x)
        for k in range(m + 1):
            out = out - x**k / math.factorial(k)
        return out

    def forcing(x):
        x = np.asarray(x, dtype=float)
        out = np.exp(x) + x**alpha * _ml_values(1.0, 1.0 + alpha, x)
        for k in range(m + 1):
            out = out - x ** (k + alpha) / gamma(k + 1.0 + alpha) - x**k / math.factorial(k)
        return out

    return BenchmarkProblem(
        alpha=alpha,
        X=X,
        forcing=forcing,
        exact=exact,
        label=f"exp[m={m}]",
        vanishing_order=m,
    )


def make_ml_problem(m: int, alpha: float, X: float = 1.0) -> BenchmarkProblem:
    """y = E_alpha(-x^alpha) + Gamma(1+2a) x^(3a) E_{a,1+3a}(-x^a) minus its
    fractional Taylor polynomial of degree m; the forcing is a single power.
    """
    if m < 2:
        raise ValueError("ml problem requires m >= 2")
    g2 = gamma(1.0 + 2.0 * alpha)
    fcoef = (-1.0) ** m * (g2 - 1.0) / gamma(1.0 + (m + 1.0) * alpha)

    def forcing(x):
        x = np.asarray(x, dtype=float)
        return fcoef * x ** ((m + 1.0) * alpha)

    def exact(x):
        x = np.asarray(x, dtype=float)
        xa = x**alpha
        out = _ml_values(alpha, 1.0, -xa)
        out = out + g2 * x ** (3.0 * alpha) * _ml_values(alpha, 1.0 + 3.0 * alpha, -xa)
        out = out - 1.0 + xa / gamma(1.0 + alpha) - x ** (2.0 * alpha) / g2
        tail = np.zeros_like(x)
        for k in range(3, m + 1):
            tail = tail + (-1.0) ** k * x ** (k * alpha) / gamma(1.0 + k * alpha)
        return out + (g2 - 1.0) * tail

    vanish = math.ceil((m + 1) * alpha) - 1
    return BenchmarkProblem(
        alpha=alpha,
        X=X,
        forcing=forcing,
        exact=exact,
        label=f"ml[m={m}]",
        vanishing_order=vanish,
    )


def residual_check(problem: BenchmarkProblem, samples: int = 20, n: int = 4096) -> float:
    """max over sample points of |y(x) + Q(x) - F(x)| with Q a high-resolution
    end-corrected (order 4+alpha) quadrature of I^alpha y.
    """
    if samples < 2:
        raise ValueError("samples must be >= 2")
    x = np.linspace(0.0, problem.X, n + 1)
    y = np.asarray(problem.exact(x), dtype=float)
    coeffs = scheme_coefficients(problem.alpha, "A4")
    worst = 0.0
    for j in range(1, samples + 1):
        m = (j * n) // samples
        grid = UniformGrid(X=x[m], n=m, values=y[: m + 1])
        q = corrected_sum_I(grid, coeffs)
        f = float(np.asarray(problem.forcing(np.array([x[m]])))[0])
        worst = max(worst, abs(y[m] + q - f))
    return worst
