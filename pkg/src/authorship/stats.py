"""Small numerical core: OLS line fits, Pearson correlation, Student's t tail.

Everything here is pure Python over ``math.fsum`` so results are
deterministic across platforms and independent of summation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateFit, UndefinedCorrelation

_BETACF_MAX_ITER = 500
_BETACF_EPS = 1e-16
_TINY = 1e-300


def _betacf(a: float, b: float, x: float) -> float:
    # Modified Lentz evaluation of the incomplete beta continued fraction.
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _TINY:
        d = _TINY
    d = 1.0 / d
    h = d
    for m in range(1, _BETACF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETACF_EPS:
            return h
    raise ArithmeticError(f"incomplete beta did not converge for a={a}, b={b}, x={x}")


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b) for a, b > 0 and 0 <= x <= 1."""
    if a <= 0 or b <= 0:
        raise ValueError("a and b must be positive")
    if not 0.0 <= x <= 1.0:
        raise ValueError("x must lie in [0, 1]")
    if x == 0.0 or x == 1.0:
        return x
    log_front = (
        math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
        + a * math.log(x) + b * math.log1p(-x)
    )
    front = math.exp(log_front)
    # The continued fraction converges fast only on this side of the mean.
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def t_two_tailed_p(t: float, df: float) -> float:
    """Two-tailed p-value P(|T| >= |t|) for Student's t with ``df`` degrees of freedom."""
    if df <= 0:
        raise ValueError("degrees of freedom must be positive")
    if math.isnan(t):
        return math.nan
    if math.isinf(t):
        return 0.0
    return regularized_incomplete_beta(df / 2.0, 0.5, df / (df + t * t))


def t_cdf(t: float, df: float) -> float:
    tail = 0.5 * t_two_tailed_p(t, df)
    return 1.0 - tail if t >= 0 else tail


def _mean(xs: Sequence[float]) -> float:
    return math.fsum(xs) / len(xs)


@dataclass(frozen=True)
class LineFit:
    """Ordinary least squares fit of ``y = intercept + slope * x``."""

    slope: float
    intercept: float
    r_squared: float
    se_slope: float
    se_intercept: float
    n: int

    @property
    def df(self) -> int:
        return self.n - 2

    def predict(self, x: float) -> float:
        return self.intercept + self.slope * x


def fit_line(xs: Sequence[float], ys: Sequence[float]) -> LineFit:
    """OLS of ys on xs with x centered at its mean before fitting.

    Raises DegenerateFit for fewer than three points or constant x.
    """
    n = len(xs)
    if n != len(ys):
        raise ValueError("xs and ys differ in length")
    if n < 3:
        raise DegenerateFit(f"need at least 3 points to fit a line, got {n}")
    x_bar = _mean(xs)
    y_bar = _mean(ys)
    dx = [x - x_bar for x in xs]
    dy = [y - y_bar for y in ys]
    sxx = math.fsum(d * d for d in dx)
    if sxx == 0.0:
        raise DegenerateFit("all x values are identical")
    sxy = math.fsum(a * b for a, b in zip(dx, dy))
    syy = math.fsum(d * d for d in dy)
    slope = sxy / sxx
    # Intercept at the centered origin is y_bar; shift back to x = 0.
    intercept = y_bar - slope * x_bar
    sse = math.fsum((b - slope * a) ** 2 for a, b in zip(dx, dy))
    if syy == 0.0:
        r_squared = 0.0
    else:
        r_squared = min(1.0, max(0.0, 1.0 - sse / syy))
    sigma2 = sse / (n - 2)
    se_slope = math.sqrt(sigma2 / sxx)
    se_intercept = math.sqrt(sigma2 * (1.0 / n + x_bar * x_bar / sxx))
    return LineFit(slope, intercept, r_squared, se_slope, se_intercept, n)


def t_statistic(estimate: float, se: float) -> float:
    if se == 0.0:
        if estimate == 0.0:
            return 0.0
        return math.copysign(math.inf, estimate)
    return estimate / se


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Sample Pearson correlation; raises UndefinedCorrelation on zero variance."""
    n = len(xs)
    if n != len(ys):
        raise ValueError("xs and ys differ in length")
    if n < 2:
        raise UndefinedCorrelation(f"need at least 2 observations, got {n}")
    x_bar = _mean(xs)
    y_bar = _mean(ys)
    dx = [x - x_bar for x in xs]
    dy = [y - y_bar for y in ys]
    sxx = math.fsum(d * d for d in dx)
    syy = math.fsum(d * d for d in dy)
    if sxx == 0.0 or syy == 0.0:
        raise UndefinedCorrelation("one of the variables has zero variance")
    sxy = math.fsum(a * b for a, b in zip(dx, dy))
    r = sxy / math.sqrt(sxx * syy)
    return min(1.0, max(-1.0, r))


def correlation_p_value(r: float, n: int) -> float:
    """Two-tailed p-value for H0: rho = 0 given a sample correlation over n pairs."""
    if n < 3:
        return math.nan
    if abs(r) >= 1.0:
        return 0.0
    t = r * math.sqrt((n - 2) / (1.0 - r * r))
    return t_two_tailed_p(t, n - 2)
