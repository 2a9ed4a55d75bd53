"""Assemble every statistic and export for one corpus into a report bundle."""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from . import export
from .bigraph import (
    DEFAULT_TOP_K,
    DegreeStats,
    author_degrees,
    authors_per_paper_stats,
    build_pag,
    paper_degrees,
    papers_per_author_stats,
    top_authors_by_papers,
)
from .coauthor import build_cag, coauthor_degrees, coauthors_per_author_stats, components, top_authors_by_coauthors
from .corpus import Corpus, corpus_summary
from .errors import AuthorshipError
from .mixing import Attribute, assortativity, correlation_significance, mixing_plot_data, productivity_collaboration_correlation
from .powerfit import DEFAULT_ALPHA, PowerLawFit, fit_power_law, frequency_distribution, lotka_comparison
from .trend import DEFAULT_HORIZON, TrendFit, cumulative_series, fit_trend

EXPORT_KINDS = ("dot", "graphml")


def round_sig(x, digits: int = 6):
    """Round floats to ``digits`` significant digits; ints pass through."""
    if isinstance(x, Fraction):
        x = float(x)
    if isinstance(x, bool) or isinstance(x, int):
        return x
    if math.isnan(x):
        return None
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return float(f"{x:.{digits}g}")


def _rounded(obj):
    if isinstance(obj, dict):
        return {k: _rounded(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_rounded(v) for v in obj]
    if isinstance(obj, (float, Fraction)):
        return round_sig(obj)
    return obj


def _stats_doc(stats: DegreeStats) -> dict:
    return {"min": stats.min, "avg": stats.avg, "max": stats.max}


def _fit_doc(fit: PowerLawFit) -> dict:
    return {
        "c": fit.c,
        "phi": fit.phi,
        "r2": fit.r_squared,
        "se": {"log_c": fit.se_log_c, "phi": fit.se_phi},
        "t": {"log_c": fit.t_log_c, "phi": fit.t_phi},
        "p": {"log_c": fit.p_log_c, "phi": fit.p_phi},
        "alpha": fit.alpha,
        "significant": {"log_c": fit.significant_log_c, "phi": fit.significant_phi},
        "n_points": fit.n_points,
    }


def _trend_doc(fit: TrendFit) -> dict:
    return {
        "slope": fit.slope,
        "intercept": fit.intercept,
        "r2": fit.r_squared,
        "extrapolation": [[year, value] for year, value in fit.extrapolation],
    }


def _ranking(rows) -> list:
    return [[key.render(), value] for key, value in rows]


@dataclass
class ReportBundle:
    summary: dict
    artifacts: dict[str, str] = field(default_factory=dict)
    problems: list[str] = field(default_factory=list)

    def summary_json(self) -> str:
        return json.dumps(_rounded(self.summary), indent=2, ensure_ascii=False) + "\n"


def analyze(
    corpus: Corpus,
    *,
    top_k: int = DEFAULT_TOP_K,
    alpha: float = DEFAULT_ALPHA,
    horizon: int = DEFAULT_HORIZON,
    exports: tuple[str, ...] = EXPORT_KINDS,
) -> ReportBundle:
    """Run the full pipeline.

    Statistics that cannot be computed (too few distinct degrees to fit,
    zero-variance correlations) are recorded as ``null`` in the summary
    with a message in ``problems``; everything else is still produced.
    """
    problems: list[str] = []
    artifacts: dict[str, str] = {}

    pag = build_pag(corpus)
    cag = build_cag(pag)
    pdeg, adeg, cdeg = paper_degrees(pag), author_degrees(pag), coauthor_degrees(cag)

    def attempt(label, fn):
        try:
            return fn()
        except AuthorshipError as exc:
            problems.append(f"{label}: {exc}")
            return None

    degree_sections = {}
    for name, degrees, stats in (
        ("authors_per_paper", pdeg, authors_per_paper_stats(pag)),
        ("papers_per_author", adeg, papers_per_author_stats(pag)),
        ("coauthors_per_author", cdeg, coauthors_per_author_stats(cag)),
    ):
        fd = frequency_distribution(degrees)
        fit = attempt(f"{name} power-law fit", lambda: fit_power_law(fd, alpha))
        section = _stats_doc(stats)
        section["fit"] = _fit_doc(fit) if fit else None
        section["lotka_deviation"] = lotka_comparison(fit) if fit else None
        degree_sections[name] = section
        artifacts[f"{name}.csv"] = export.distribution_csv(fd, fit)

    r_pc = attempt("productivity-collaboration correlation", lambda: productivity_collaboration_correlation(adeg, cdeg))
    correlation = {
        "r": r_pc,
        "p_value": correlation_significance(r_pc, len(adeg)) if r_pc is not None else None,
        "n_authors": len(adeg),
    }

    mixing_docs = {}
    for tau in Attribute:
        result = attempt(f"assortativity ({tau.value})", lambda: assortativity(cag, tau))
        rows = mixing_plot_data(result) if result else []
        artifacts[f"mixing_{tau.value}.csv"] = export.mixing_csv(rows)
        mixing_docs[tau.value] = {
            "attribute": tau.value,
            "r": result.r if result else None,
            "n_edges": result.n_directed_edges if result else 2 * cag.n_edges,
        }

    years = corpus_summary(corpus)
    paper_series, author_series = cumulative_series(years)
    paper_trend = attempt("paper trend", lambda: fit_trend(paper_series, horizon))
    author_trend = attempt("author trend", lambda: fit_trend(author_series, horizon))
    artifacts["trend.csv"] = _trend_csv(paper_series, author_series, paper_trend, author_trend)

    comps = components(cag, top_k)
    sizes = Counter(c.size for c in comps)
    ranked = sorted(comps, key=lambda c: (-c.size, c.central[0][0]))
    component_doc = {
        "count": len(comps),
        "largest": ranked[0].size,
        "isolated_authors": sizes.get(1, 0),
        "size_census": [[size, n] for size, n in sorted(sizes.items(), reverse=True)],
        "largest_components": [
            {"size": c.size, "central": _ranking(c.central)} for c in ranked[:top_k]
        ],
    }

    summary = {
        "corpus": {
            "papers": corpus.n_papers,
            "authors": corpus.n_authors,
            "author_name_entries": corpus.raw_name_count,
            "incidences": pag.n_edges,
            "coauthor_edges": cag.n_edges,
            "first_year": years[0].year,
            "last_year": years[-1].year,
        },
        **degree_sections,
        "productivity_collaboration": correlation,
        "assortativity": mixing_docs,
        "trend": {
            "papers": _trend_doc(paper_trend) if paper_trend else None,
            "authors": _trend_doc(author_trend) if author_trend else None,
        },
        "top_authors": {
            "by_papers": _ranking(top_authors_by_papers(pag, top_k)),
            "by_coauthors": _ranking(top_authors_by_coauthors(cag, top_k)),
        },
        "components": component_doc,
        "parameters": {"alpha": alpha, "top_k": top_k, "horizon": horizon},
        "problems": problems,
    }

    if "graphml" in exports:
        artifacts["pag.graphml"] = export.pag_graphml(pag)
        artifacts["cag.graphml"] = export.cag_graphml(cag)
    if "dot" in exports:
        artifacts["pag.dot"] = export.pag_dot(pag)
        artifacts["cag.dot"] = export.cag_dot(cag)
    return ReportBundle(summary, artifacts, problems)


def _trend_csv(paper_series, author_series, paper_trend, author_trend) -> str:
    observed_papers = dict(paper_series)
    observed_authors = dict(author_series)
    years = sorted(observed_papers)
    extra = [y for y, _ in (paper_trend or author_trend).extrapolation] if (paper_trend or author_trend) else []

    def fitted(fit, year):
        return export.fmt_num(fit.predict(year)) if fit else ""

    rows = []
    for year in years + extra:
        rows.append((
            year,
            observed_papers.get(year, ""),
            observed_authors.get(year, ""),
            fitted(paper_trend, year),
            fitted(author_trend, year),
            "true" if year in extra else "false",
        ))
    header = (
        "year", "observed_cumulative_papers", "observed_cumulative_authors",
        "fitted_papers", "fitted_authors", "is_extrapolated",
    )
    return export.to_csv(header, rows)
