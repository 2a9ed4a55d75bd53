import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import stats as sps

from authorship.corpus import corpus_summary
from authorship.errors import DegenerateFit
from authorship.trend import cumulative_series, fit_trend

from conftest import make_corpus


def test_exact_line():
    fit = fit_trend([(2000, 10), (2001, 20), (2002, 30)], horizon=2)
    assert fit.slope == pytest.approx(10, rel=1e-12)
    assert fit.r_squared == pytest.approx(1.0, abs=1e-12)
    assert [y for y, _ in fit.extrapolation] == [2003, 2004]
    assert [v for _, v in fit.extrapolation] == pytest.approx([40, 50], rel=1e-12)


def test_horizon_zero():
    assert fit_trend([(1, 1), (2, 3), (3, 4)], horizon=0).extrapolation == ()


def test_gapped_years_against_linregress():
    series = [(2000, 31), (2003, 70), (2004, 101), (2005, 150), (2006, 178), (2007, 204), (2008, 245), (2009, 280), (2010, 326)]
    fit = fit_trend(series, horizon=5)
    ref = sps.linregress([y for y, _ in series], [v for _, v in series])
    assert fit.slope == pytest.approx(ref.slope, rel=1e-10)
    assert fit.intercept == pytest.approx(ref.intercept, rel=1e-9)
    assert fit.r_squared == pytest.approx(ref.rvalue ** 2, rel=1e-10)
    assert [y for y, _ in fit.extrapolation] == [2011, 2012, 2013, 2014, 2015]
    assert fit.extrapolation[-1][1] == pytest.approx(ref.intercept + ref.slope * 2015, rel=1e-9)


def test_errors():
    with pytest.raises(DegenerateFit):
        fit_trend([(2000, 1), (2001, 2)])
    with pytest.raises(ValueError):
        fit_trend([(2000, 1), (2000, 2), (2001, 3)])
    with pytest.raises(ValueError):
        fit_trend([(2000, 1), (2001, 2), (2002, 3)], horizon=-1)


@settings(max_examples=100, deadline=None)
@given(
    values=st.lists(st.integers(0, 1000), min_size=3, max_size=15),
    shift=st.integers(-500, 500),
)
def test_year_shift_changes_intercept_only(values, shift):
    series = [(2000 + i, v) for i, v in enumerate(sorted(values))]
    moved = [(y + shift, v) for y, v in series]
    a, b = fit_trend(series), fit_trend(moved)
    assert b.slope == pytest.approx(a.slope, rel=1e-9, abs=1e-9)
    assert b.r_squared == pytest.approx(a.r_squared, rel=1e-9, abs=1e-9)
    assert b.predict(2000 + shift) == pytest.approx(a.predict(2000), rel=1e-9, abs=1e-6)


@settings(max_examples=50, deadline=None)
@given(values=st.lists(st.integers(0, 1000), min_size=3, max_size=15, unique=True))
def test_monotone_extrapolation(values):
    fit = fit_trend([(2000 + i, v) for i, v in enumerate(sorted(values))], horizon=5)
    preds = [v for _, v in fit.extrapolation]
    assert fit.slope > 0
    assert all(b > a for a, b in zip(preds, preds[1:]))


def test_cumulative_series_skips_empty_years():
    c = make_corpus([(2000, ["a"]), (2000, ["b"]), (2003, ["a", "c"]), (2004, ["d"])])
    papers, authors = cumulative_series(corpus_summary(c))
    assert papers == [(2000, 2), (2003, 3), (2004, 4)]
    assert authors == [(2000, 2), (2003, 3), (2004, 4)]
