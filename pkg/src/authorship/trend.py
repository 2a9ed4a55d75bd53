"""Linear trend of cumulative annual counts with extrapolation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .corpus import YearSummary
from .errors import DegenerateFit
from .stats import fit_line

DEFAULT_HORIZON = 5


@dataclass(frozen=True)
class TrendFit:
    slope: float
    intercept: float
    r_squared: float
    last_year: int
    extrapolation: tuple[tuple[int, float], ...]

    def predict(self, year: float) -> float:
        return self.intercept + self.slope * year


def fit_trend(series: Sequence[tuple[int, float]], horizon: int = DEFAULT_HORIZON) -> TrendFit:
    """OLS of cumulative count on year, then evaluate the line ``horizon`` years ahead."""
    if horizon < 0:
        raise ValueError("horizon must be non-negative")
    if len(series) < 3:
        raise DegenerateFit(f"need at least 3 yearly points, got {len(series)}")
    years = [y for y, _ in series]
    if any(b <= a for a, b in zip(years, years[1:])):
        raise ValueError("years must be strictly increasing")
    line = fit_line([float(y) for y in years], [float(v) for _, v in series])
    last = years[-1]
    ahead = tuple((year, line.predict(year)) for year in range(last + 1, last + horizon + 1))
    return TrendFit(line.slope, line.intercept, line.r_squared, last, ahead)


def cumulative_series(summary: Sequence[YearSummary]) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """(year, cumulative papers) and (year, cumulative authors) for years that had papers."""
    observed = [row for row in summary if row.papers > 0]
    papers = [(row.year, row.cumulative_papers) for row in observed]
    authors = [(row.year, row.cumulative_authors) for row in observed]
    return papers, authors
