"""Degree frequency distributions and log-log power-law fits.

The fit is ordinary least squares of log10(frequency) on log10(degree),
so ``y = c * degree ** phi`` with ``phi`` the slope and ``c`` ten to the
intercept. Each coefficient is tested against zero with a two-tailed
Student's t test on ``n - 2`` degrees of freedom.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DegenerateFit
from .stats import fit_line, t_statistic, t_two_tailed_p

DEFAULT_ALPHA = 0.01
LOTKA_EXPONENT = -2.0


@dataclass(frozen=True)
class FrequencyDistribution:
    points: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prev = None
        for degree, freq in self.points:
            if freq < 1:
                raise ValueError(f"frequency at degree {degree} must be >= 1")
            if degree < 0 or (prev is not None and degree <= prev):
                raise ValueError("degrees must be non-negative and strictly increasing")
            prev = degree

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def total(self) -> int:
        return sum(f for _, f in self.points)


def frequency_distribution(degrees: Sequence[int], include_zero: bool = False) -> FrequencyDistribution:
    """Histogram of a degree vector; degree 0 is dropped unless ``include_zero``."""
    if not degrees:
        raise ValueError("degree vector is empty")
    counts = Counter(degrees)
    if not include_zero:
        counts.pop(0, None)
    return FrequencyDistribution(tuple(sorted(counts.items())))


@dataclass(frozen=True)
class PowerLawFit:
    c: float
    phi: float
    r_squared: float
    se_log_c: float
    se_phi: float
    t_log_c: float
    t_phi: float
    p_log_c: float
    p_phi: float
    n_points: int
    alpha: float = DEFAULT_ALPHA

    @property
    def log_c(self) -> float:
        return math.log10(self.c)

    @property
    def significant_log_c(self) -> bool:
        return self.p_log_c < self.alpha

    @property
    def significant_phi(self) -> bool:
        return self.p_phi < self.alpha

    def predict(self, degree: float) -> float:
        return self.c * degree ** self.phi


def fit_power_law(
    points: FrequencyDistribution | Iterable[tuple[float, float]],
    alpha: float = DEFAULT_ALPHA,
) -> PowerLawFit:
    """Fit ``y = c * degree ** phi`` by OLS in log10-log10 space.

    ``points`` is a FrequencyDistribution or any iterable of
    (degree, value) pairs with positive entries. Zero-degree points are
    skipped because they have no logarithm.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError("alpha must lie in (0, 1)")
    pairs = [(d, y) for d, y in points if d > 0]
    if any(y <= 0 for _, y in pairs):
        raise ValueError("values must be positive to take logarithms")
    if len(pairs) < 3:
        raise DegenerateFit(f"need at least 3 positive-degree points, got {len(pairs)}")
    xs = [math.log10(d) for d, _ in pairs]
    ys = [math.log10(y) for _, y in pairs]
    line = fit_line(xs, ys)
    t_c = t_statistic(line.intercept, line.se_intercept)
    t_phi = t_statistic(line.slope, line.se_slope)
    return PowerLawFit(
        c=10.0 ** line.intercept,
        phi=line.slope,
        r_squared=line.r_squared,
        se_log_c=line.se_intercept,
        se_phi=line.se_slope,
        t_log_c=t_c,
        t_phi=t_phi,
        p_log_c=t_two_tailed_p(t_c, line.df),
        p_phi=t_two_tailed_p(t_phi, line.df),
        n_points=line.n,
        alpha=alpha,
    )


def lotka_comparison(fit: PowerLawFit | float) -> float:
    """Absolute distance of the fitted exponent from Lotka's -2."""
    phi = fit.phi if isinstance(fit, PowerLawFit) else float(fit)
    return abs(phi - LOTKA_EXPONENT)
