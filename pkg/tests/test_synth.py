import math
from collections import Counter

import pytest

from authorship.bigraph import author_degrees, build_pag
from authorship.corpus import parse_corpus
from authorship.synth import MAX_PRODUCTIVITY, author_name, productivity_sampler, synth_jsonl
from authorship.corpus import normalize_name


def zeta_trunc(alpha, kmax):
    return math.fsum(k ** -alpha for k in range(1, kmax + 1))


def discrete_mle_exponent(ks, kmax):
    """Grid-search MLE of alpha for P(k) = k**-alpha / Z on 1..kmax."""
    n = len(ks)
    s = math.fsum(math.log(k) for k in ks)
    grid = [1.5 + i / 1000 for i in range(1001)]
    return max(grid, key=lambda a: -a * s - n * math.log(zeta_trunc(a, kmax)))


@pytest.fixture(scope="module")
def productivities():
    corpus = parse_corpus(synth_jsonl(42, 5000, -2.0).encode())
    return author_degrees(build_pag(corpus))


def test_papers_per_author_follow_target_law(productivities):
    counts = Counter(productivities)
    n = len(productivities)
    z = zeta_trunc(2.0, MAX_PRODUCTIVITY)
    for k in (1, 2, 3):
        expected = k ** -2.0 / z
        assert counts[k] / n == pytest.approx(expected, abs=4 * math.sqrt(expected * (1 - expected) / n))


def test_mle_recovers_exponent(productivities):
    alpha = discrete_mle_exponent(productivities, MAX_PRODUCTIVITY)
    assert alpha == pytest.approx(2.0, abs=0.1)


def test_sampler_support():
    import random

    draw = productivity_sampler(-2.0, 10)
    rng = random.Random(0)
    values = {draw(rng) for _ in range(5000)}
    assert values <= set(range(1, 11)) and 1 in values and 10 in values


def test_author_names_are_distinct_keys():
    keys = {normalize_name(author_name(j)) for j in range(20000)}
    assert len(keys) == 20000
