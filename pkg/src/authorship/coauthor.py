"""Co-authorship graph derived from the paper-author bigraph."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bigraph import DEFAULT_TOP_K, BipartiteGraph, DegreeStats, author_degrees, rank_by
from .corpus import AuthorKey, Corpus


@dataclass(frozen=True)
class CoauthorGraph:
    """Undirected simple graph over authors; an edge means at least one shared paper.

    ``weights`` maps each edge ``(j, k)`` with ``j < k`` to the number of
    papers the two authors share. Statistics use only the 0/1 structure.
    ``paper_counts`` carries each author's paper count from the bigraph so
    that attribute-based mixing can run on this graph alone.
    """

    author_keys: tuple[AuthorKey, ...]
    neighbors: tuple[tuple[int, ...], ...]
    weights: dict[tuple[int, int], int]
    paper_counts: tuple[int, ...]

    @property
    def n_authors(self) -> int:
        return len(self.author_keys)

    @property
    def n_edges(self) -> int:
        return len(self.weights)

    def edges(self) -> list[tuple[int, int]]:
        """Sorted (j, k) pairs with j < k, 0-based."""
        return sorted(self.weights)

    def has_edge(self, j: int, k: int) -> bool:
        return (min(j, k), max(j, k)) in self.weights

    def adjacency_matrix(self) -> list[list[int]]:
        cam = [[0] * self.n_authors for _ in range(self.n_authors)]
        for j, k in self.weights:
            cam[j][k] = cam[k][j] = 1
        return cam


def build_cag(g: BipartiteGraph) -> CoauthorGraph:
    """Replace every paper star by the complete graph on its authors and take the union."""
    weights: dict[tuple[int, int], int] = {}
    for row in g.paper_authors:
        for a, b in combinations(sorted(row), 2):
            weights[(a, b)] = weights.get((a, b), 0) + 1
    adjacency: list[list[int]] = [[] for _ in range(g.n_authors)]
    for a, b in weights:
        adjacency[a].append(b)
        adjacency[b].append(a)
    return CoauthorGraph(
        author_keys=g.author_keys,
        neighbors=tuple(tuple(sorted(n)) for n in adjacency),
        weights=dict(sorted(weights.items())),
        paper_counts=tuple(author_degrees(g)),
    )


def build_cag_from_corpus(corpus: Corpus) -> CoauthorGraph:
    """Same graph as ``build_cag(build_pag(corpus))``, built from author lists directly."""
    index = {key: j for j, key in enumerate(corpus.authors)}
    weights: dict[tuple[int, int], int] = {}
    paper_counts = [0] * len(index)
    adjacency: list[set[int]] = [set() for _ in index]
    for paper in corpus.papers:
        ids = [index[key] for key in paper.authors]
        for j in ids:
            paper_counts[j] += 1
        for a, b in combinations(ids, 2):
            edge = (a, b) if a < b else (b, a)
            weights[edge] = weights.get(edge, 0) + 1
            adjacency[a].add(b)
            adjacency[b].add(a)
    return CoauthorGraph(
        author_keys=tuple(corpus.authors),
        neighbors=tuple(tuple(sorted(n)) for n in adjacency),
        weights=dict(sorted(weights.items())),
        paper_counts=tuple(paper_counts),
    )


def coauthor_degrees(cg: CoauthorGraph) -> list[int]:
    """Number of distinct collaborators of each author."""
    return [len(n) for n in cg.neighbors]


def coauthors_per_author_stats(cg: CoauthorGraph) -> DegreeStats:
    return DegreeStats.of(coauthor_degrees(cg))


def top_authors_by_coauthors(cg: CoauthorGraph, k: int = DEFAULT_TOP_K) -> list[tuple[AuthorKey, int]]:
    return rank_by(cg.author_keys, coauthor_degrees(cg), k)


class UnionFind:
    """Disjoint sets over 0..n-1 with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True

    def groups(self) -> list[list[int]]:
        """Members of each set in ascending order, sets ordered by smallest member."""
        by_root: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            by_root.setdefault(self.find(x), []).append(x)
        return list(by_root.values())


@dataclass(frozen=True)
class Component:
    id: int
    members: tuple[int, ...]
    central: tuple[tuple[AuthorKey, int], ...]

    @property
    def size(self) -> int:
        return len(self.members)


def components(cg: CoauthorGraph, top_k: int = DEFAULT_TOP_K) -> list[Component]:
    """Connected components, ordered and numbered by smallest member index.

    ``central`` holds up to ``top_k`` members with the most collaborators.
    """
    uf = UnionFind(cg.n_authors)
    for a, b in cg.weights:
        uf.union(a, b)
    degrees = coauthor_degrees(cg)
    result = []
    for cid, members in enumerate(uf.groups()):
        keys = [cg.author_keys[j] for j in members]
        central = rank_by(keys, [degrees[j] for j in members], top_k)
        result.append(Component(cid, tuple(members), tuple(central)))
    return result


def component_labels(cg: CoauthorGraph) -> list[int]:
    """Component id of each author vertex."""
    labels = [0] * cg.n_authors
    for comp in components(cg, top_k=1):
        for j in comp.members:
            labels[j] = comp.id
    return labels
