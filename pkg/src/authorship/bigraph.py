"""Paper-author bipartite graph and its degree statistics."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .corpus import AuthorKey, Corpus
from .errors import EmptyCorpus

DEFAULT_TOP_K = 5


@dataclass(frozen=True)
class BipartiteGraph:
    """Sparse paper-author incidence.

    Vertex ``i`` on the paper side is ``paper_ids[i]``; vertex ``j`` on the
    author side is ``author_keys[j]``. ``paper_authors[i]`` lists the author
    indices of paper ``i`` in author-line order, ``author_papers[j]`` the
    paper indices of author ``j`` in ascending order.
    """

    paper_ids: tuple[str, ...]
    author_keys: tuple[AuthorKey, ...]
    paper_authors: tuple[tuple[int, ...], ...]
    author_papers: tuple[tuple[int, ...], ...]

    @property
    def n_papers(self) -> int:
        return len(self.paper_ids)

    @property
    def n_authors(self) -> int:
        return len(self.author_keys)

    @property
    def n_edges(self) -> int:
        return sum(len(row) for row in self.paper_authors)

    def edges(self) -> list[tuple[int, int]]:
        """(paper index, author index) pairs, 0-based, in row order."""
        return [(i, j) for i, row in enumerate(self.paper_authors) for j in sorted(row)]

    def incidence_matrix(self) -> list[list[int]]:
        """Dense N x M 0/1 matrix; only sensible for small graphs."""
        pam = [[0] * self.n_authors for _ in range(self.n_papers)]
        for i, j in self.edges():
            pam[i][j] = 1
        return pam


@dataclass(frozen=True)
class DegreeStats:
    min: int
    avg: Fraction
    max: int

    @classmethod
    def of(cls, degrees: Sequence[int]) -> "DegreeStats":
        if not degrees:
            raise ValueError("degree vector is empty")
        return cls(min(degrees), Fraction(sum(degrees), len(degrees)), max(degrees))


def build_pag(corpus: Corpus) -> BipartiteGraph:
    """Union of one star per paper: paper vertex joined to each of its authors."""
    if not corpus.papers:
        raise EmptyCorpus("corpus has no papers")
    index: dict[AuthorKey, int] = {key: j for j, key in enumerate(corpus.authors)}
    author_papers: list[list[int]] = [[] for _ in corpus.authors]
    paper_authors = []
    for i, paper in enumerate(corpus.papers):
        row = tuple(index[key] for key in paper.authors)
        for j in row:
            author_papers[j].append(i)
        paper_authors.append(row)
    return BipartiteGraph(
        paper_ids=tuple(p.id for p in corpus.papers),
        author_keys=tuple(corpus.authors),
        paper_authors=tuple(paper_authors),
        author_papers=tuple(tuple(col) for col in author_papers),
    )


def paper_degrees(g: BipartiteGraph) -> list[int]:
    """Number of authors on each paper (row sums of the incidence matrix)."""
    return [len(row) for row in g.paper_authors]


def author_degrees(g: BipartiteGraph) -> list[int]:
    """Number of papers by each author (column sums of the incidence matrix)."""
    return [len(col) for col in g.author_papers]


def authors_per_paper_stats(g: BipartiteGraph) -> DegreeStats:
    return DegreeStats.of(paper_degrees(g))


def papers_per_author_stats(g: BipartiteGraph) -> DegreeStats:
    return DegreeStats.of(author_degrees(g))


def rank_by(keys: Sequence[AuthorKey], values: Sequence[int], k: int) -> list[tuple[AuthorKey, int]]:
    """Top ``k`` (key, value) pairs, highest value first, ties by key order."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    order = sorted(range(len(keys)), key=lambda j: (-values[j], keys[j]))
    return [(keys[j], values[j]) for j in order[:k]]


def top_authors_by_papers(g: BipartiteGraph, k: int = DEFAULT_TOP_K) -> list[tuple[AuthorKey, int]]:
    return rank_by(g.author_keys, author_degrees(g), k)
