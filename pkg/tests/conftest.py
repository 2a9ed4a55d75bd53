import random
from pathlib import Path

import pytest

from authorship.corpus import AuthorKey, Corpus, PaperRecord, parse_corpus

FIXTURES = Path(__file__).parent / "fixtures"

FIG1_JSONL = (
    b'{"id": "P1", "year": 2000, "authors": ["A1", "A2"]}\n'
    b'{"id": "P2", "year": 2001, "authors": ["A2", "A3", "A4"]}\n'
)


@pytest.fixture
def fig1():
    """The two hypothetical papers of the worked example."""
    return parse_corpus(FIG1_JSONL, "jsonl")


def make_corpus(papers: list[tuple[int, list[str]]]) -> Corpus:
    records = [
        PaperRecord(f"P{i + 1}", year, tuple(AuthorKey(name.lower()) for name in names))
        for i, (year, names) in enumerate(papers)
    ]
    return Corpus(tuple(records))


def random_corpus(rng: random.Random, max_papers: int = 30, max_team: int = 6, pool: int = 40) -> Corpus:
    n = rng.randint(1, max_papers)
    names = [f"a{k}" for k in range(rng.randint(1, pool))]
    papers = []
    for _ in range(n):
        team = rng.sample(names, rng.randint(1, min(max_team, len(names))))
        papers.append((rng.randint(2000, 2010), team))
    return make_corpus(papers)


# Brute-force oracles: they only look at the corpus, never at the graphs under test.

def oracle_pam(corpus: Corpus) -> list[list[int]]:
    return [[1 if a in p.authors else 0 for a in corpus.authors] for p in corpus.papers]


def oracle_cam(corpus: Corpus) -> list[list[int]]:
    m = corpus.n_authors
    cam = [[0] * m for _ in range(m)]
    for j in range(m):
        for k in range(m):
            if j != k and any(
                corpus.authors[j] in p.authors and corpus.authors[k] in p.authors for p in corpus.papers
            ):
                cam[j][k] = 1
    return cam


def oracle_components(cam: list[list[int]]) -> list[list[int]]:
    """Partition by transitive closure (Warshall) of the adjacency relation."""
    m = len(cam)
    reach = [[bool(cam[i][j]) or i == j for j in range(m)] for i in range(m)]
    for k in range(m):
        for i in range(m):
            if reach[i][k]:
                row_k = reach[k]
                row_i = reach[i]
                for j in range(m):
                    if row_k[j]:
                        row_i[j] = True
    seen, parts = set(), []
    for i in range(m):
        if i not in seen:
            part = [j for j in range(m) if reach[i][j]]
            seen.update(part)
            parts.append(part)
    return parts


def oracle_pearson(xs, ys) -> float:
    n = len(xs)
    sx, sy = sum(xs), sum(ys)
    sxx = sum(x * x for x in xs)
    syy = sum(y * y for y in ys)
    sxy = sum(x * y for x, y in zip(xs, ys))
    return (n * sxy - sx * sy) / ((n * sxx - sx * sx) ** 0.5 * (n * syy - sy * sy) ** 0.5)


def pair_count_bound(corpus: Corpus) -> int:
    return sum(len(p.authors) * (len(p.authors) - 1) // 2 for p in corpus.papers)



_criteria: dict[str, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for label in getattr(report, "criterion_labels", ()):
        _criteria.setdefault(label, []).append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    report.criterion_labels = [m.args[0] for m in item.iter_markers("criterion")]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: int(s.split(".")[0])):
        ok = all(o == "passed" for o in _criteria[label])
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")
