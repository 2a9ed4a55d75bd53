"""Productivity/collaboration correlation and attribute assortativity.

Assortativity follows the mixing construction: every undirected
co-authorship edge becomes two directed edges, each endpoint is labelled
by a scalar attribute, and the coefficient is the Pearson correlation of
(start label, end label) over the directed edge list. The mixing matrix
view (fraction of directed edges between each pair of label values) is
available through :func:`mixing_matrix`.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .coauthor import CoauthorGraph, coauthor_degrees
from .errors import UndefinedCorrelation, UndefinedMixing
from .stats import correlation_p_value, pearson


class Attribute(str, enum.Enum):
    PAPERS = "papers"
    COAUTHORS = "coauthors"


def attribute_values(cg: CoauthorGraph, tau: Attribute | str) -> list[int]:
    tau = Attribute(tau)
    if tau is Attribute.PAPERS:
        return list(cg.paper_counts)
    return coauthor_degrees(cg)


def productivity_collaboration_correlation(papers: Sequence[float], coauthors: Sequence[float]) -> float:
    """Pearson r between papers-per-author and collaborators-per-author."""
    if len(papers) != len(coauthors):
        raise ValueError("vectors differ in length")
    return pearson(papers, coauthors)


def correlation_significance(r: float, n: int) -> float:
    return correlation_p_value(r, n)


@dataclass(frozen=True)
class MixingResult:
    attribute: str
    r: float
    n_directed_edges: int
    edge_pairs: tuple[tuple[float, float], ...]


def directed_edge_pairs(cg: CoauthorGraph, values: Sequence[float]) -> list[tuple[float, float]]:
    pairs = []
    for j, k in cg.edges():
        pairs.append((values[j], values[k]))
        pairs.append((values[k], values[j]))
    return pairs


def assortativity_values(cg: CoauthorGraph, values: Sequence[float], attribute: str = "custom") -> MixingResult:
    """Assortativity of ``cg`` under an arbitrary per-author scalar label."""
    if len(values) != cg.n_authors:
        raise ValueError("need one attribute value per author")
    if cg.n_edges == 0:
        raise UndefinedMixing("graph has no edges")
    pairs = directed_edge_pairs(cg, values)
    starts = [a for a, _ in pairs]
    ends = [b for _, b in pairs]
    try:
        r = pearson(starts, ends)
    except UndefinedCorrelation as exc:
        raise UndefinedMixing("endpoint attribute has zero variance") from exc
    return MixingResult(attribute, r, len(pairs), tuple(pairs))


def assortativity(cg: CoauthorGraph, tau: Attribute | str) -> MixingResult:
    tau = Attribute(tau)
    return assortativity_values(cg, attribute_values(cg, tau), tau.value)


def mixing_plot_data(result: MixingResult) -> list[tuple[float, float, int]]:
    """Directed-edge counts per (start label, end label), sorted by labels."""
    counts = Counter(result.edge_pairs)
    return [(a, b, n) for (a, b), n in sorted(counts.items())]


@dataclass(frozen=True)
class MixingMatrix:
    classes: tuple[float, ...]
    fractions: tuple[tuple[Fraction, ...], ...]

    @property
    def marginals(self) -> tuple[Fraction, ...]:
        return tuple(sum(row, Fraction(0)) for row in self.fractions)

    @property
    def total(self) -> Fraction:
        return sum(self.marginals, Fraction(0))

    def coefficient(self) -> float:
        """Scalar assortativity computed from the matrix and its marginals."""
        xs = self.classes
        f = self.marginals
        mean = math.fsum(float(fi) * x for fi, x in zip(f, xs))
        var = math.fsum(float(fi) * (x - mean) ** 2 for fi, x in zip(f, xs))
        if var == 0.0:
            raise UndefinedMixing("endpoint attribute has zero variance")
        cov = math.fsum(
            float(e) * (xs[i] - mean) * (xs[j] - mean)
            for i, row in enumerate(self.fractions)
            for j, e in enumerate(row)
            if e
        )
        return cov / var


def mixing_matrix(result: MixingResult) -> MixingMatrix:
    """Exact fractions of directed edges from each label class to each other."""
    classes = tuple(sorted({a for a, _ in result.edge_pairs}))
    pos = {x: i for i, x in enumerate(classes)}
    counts = [[0] * len(classes) for _ in classes]
    for a, b in result.edge_pairs:
        counts[pos[a]][pos[b]] += 1
    total = len(result.edge_pairs)
    fractions = tuple(tuple(Fraction(n, total) for n in row) for row in counts)
    return MixingMatrix(classes, fractions)
