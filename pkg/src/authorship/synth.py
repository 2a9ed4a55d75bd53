"""Seeded synthetic corpora with a power-law papers-per-author distribution."""

from __future__ import annotations

import bisect
import json
import random
import string
from itertools import accumulate

MAX_PRODUCTIVITY = 1000
AUTHOR_SLOTS_PER_PAPER = 2.64
FIRST_YEAR = 2000
N_YEARS = 11


def _surname(j: int) -> str:
    letters = []
    j += 26 * 26  # at least three letters
    while j:
        j, rem = divmod(j, 26)
        letters.append(string.ascii_lowercase[rem])
    return "".join(reversed(letters)).capitalize()


def author_name(j: int) -> str:
    given = string.ascii_uppercase[j % 26]
    return f"{given}. {_surname(j)}"


def productivity_sampler(phi: float, support: int):
    """Inverse-transform sampler for P(k) proportional to k**phi on 1..support."""
    weights = [k ** phi for k in range(1, support + 1)]
    cdf = list(accumulate(weights))
    total = cdf[-1]

    def draw(rng: random.Random) -> int:
        return bisect.bisect_left(cdf, rng.random() * total) + 1

    return draw


def synth_papers(seed: int, n_papers: int, phi: float) -> list[dict]:
    """Generate ``n_papers`` paper dicts.

    Author productivities k are drawn until their total reaches about
    2.64 author slots per paper. Each author then appears on exactly k
    distinct papers, and every paper receives at least one author.
    """
    if n_papers < 1:
        raise ValueError("n_papers must be >= 1")
    if not phi < -1:
        raise ValueError("phi must be < -1")
    rng = random.Random(seed)
    draw = productivity_sampler(phi, min(MAX_PRODUCTIVITY, n_papers))

    target = max(n_papers, round(AUTHOR_SLOTS_PER_PAPER * n_papers)) if n_papers > 1 else 1
    productivity: list[int] = []
    slots = 0
    while slots < target:
        k = draw(rng)
        productivity.append(k)
        slots += k

    tokens = [j for j, k in enumerate(productivity) for _ in range(k)]
    rng.shuffle(tokens)
    members: list[list[int]] = [[] for _ in range(n_papers)]
    member_sets: list[set[int]] = [set() for _ in range(n_papers)]
    # Seat one token per paper first so no paper is left empty.
    for i in range(n_papers):
        j = tokens[i]
        members[i].append(j)
        member_sets[i].add(j)
    for j in tokens[n_papers:]:
        for _ in range(64):
            i = rng.randrange(n_papers)
            if j not in member_sets[i]:
                break
        else:
            free = [i for i in range(n_papers) if j not in member_sets[i]]
            i = rng.choice(free)
        members[i].append(j)
        member_sets[i].add(j)

    papers = []
    for i, team in enumerate(members):
        papers.append({
            "id": f"S{i + 1:06d}",
            "year": FIRST_YEAR + i * N_YEARS // n_papers,
            "authors": [author_name(j) for j in team],
        })
    return papers


def synth_jsonl(seed: int, n_papers: int, phi: float) -> str:
    return "".join(json.dumps(p) + "\n" for p in synth_papers(seed, n_papers, phi))
