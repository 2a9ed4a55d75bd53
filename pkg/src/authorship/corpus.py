"""Bibliographic corpus loading and author-name normalization.

Authors are identified by surname plus given-name initials. Two name
strings that reduce to the same (surname, initials) pair are treated as
one author everywhere downstream, which may merge distinct people but
never splits one person written in different styles.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import re
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Iterator

from .errors import DuplicatePaperId, EmptyCorpus, MalformedName, ParseError

log = logging.getLogger(__name__)

MIN_YEAR = 1900
MAX_YEAR = 2100

FORMATS = ("jsonl", "csv")

# Lower-cased particles folded into the surname when they precede it.
SURNAME_PARTICLES = frozenset(
    {"de", "del", "dela", "della", "la", "las", "los", "delos", "van", "von", "der", "den", "da", "di", "do", "dos", "du", "le", "ter"}
)
NAME_SUFFIXES = frozenset({"jr", "sr", "ii", "iii", "iv"})

# LaTeX accent commands such as \~n, \'{e}, {\"o}
_LATEX_ACCENT = re.compile(r"\\[`'^\"~=.uvHcdbtk]\s*\{?\s*([A-Za-z])\s*\}?")
_NON_WORD = re.compile(r"[^0-9a-z]")


@dataclass(frozen=True, order=True)
class AuthorKey:
    """Normalized author identity: case-folded surname and given-name initials."""

    surname: str
    initials: str = ""

    def __post_init__(self):
        if not self.surname:
            raise MalformedName("surname must be non-empty")
        if not all(ch.isalpha() for ch in self.initials):
            raise MalformedName(f"initials must be letters only: {self.initials!r}")

    def render(self) -> str:
        """Canonical text form; ``normalize_name(key.render()) == key``."""
        if not self.initials:
            return self.surname
        return f"{self.surname}, {' '.join(ch + '.' for ch in self.initials)}"

    def __str__(self) -> str:
        return self.render()


def _fold(text: str) -> str:
    text = _LATEX_ACCENT.sub(r"\1", text)
    text = unicodedata.normalize("NFKD", text)
    text = "".join(ch for ch in text if not unicodedata.combining(ch))
    return text.replace("{", "").replace("}", "")


def _bare(token: str) -> str:
    return _NON_WORD.sub("", token.casefold())


def _is_suffix(token: str) -> bool:
    return _bare(token) in NAME_SUFFIXES


def _initials_of(token: str) -> str:
    """Initials contributed by one given-name token.

    "Juan" -> "j", "J." -> "j", "J.P." -> "jp", "Jean-Pierre" -> "jp",
    and short all-caps runs such as "REO" are read as initials.
    """
    pieces = [p for p in re.split(r"[.\-]", token) if p]
    out = []
    for piece in pieces:
        letters = [ch for ch in piece if ch.isalpha()]
        if not letters:
            continue
        if 2 <= len(letters) <= 3 and all(ch.isupper() for ch in letters) and "." not in token:
            out.extend(letters)
        else:
            out.append(letters[0])
    return "".join(out).casefold()


def normalize_name(raw: str) -> AuthorKey:
    """Reduce an author-line name to its AuthorKey.

    Accepts "Given [Middle] Surname" and "Surname, Given [Middle]". Surname
    particles (dela, van, ...) are merged into the surname, diacritics are
    dropped, and generational suffixes are discarded with a warning.
    """
    text = _fold(raw).strip()
    if not text:
        raise MalformedName("empty name")

    if "," in text:
        parts = [p.strip() for p in text.split(",")]
        surname_tokens = parts[0].split()
        given_tokens = parts[1].split() if len(parts) > 1 else []
        for extra in parts[2:]:
            if _is_suffix(extra):
                log.warning("dropping name suffix %r in %r", extra, raw)
                continue
            given_tokens.extend(extra.split())
        while surname_tokens and len(surname_tokens) > 1 and _is_suffix(surname_tokens[-1]):
            log.warning("dropping name suffix %r in %r", surname_tokens[-1], raw)
            surname_tokens.pop()
    else:
        tokens = text.split()
        while len(tokens) > 1 and _is_suffix(tokens[-1]):
            log.warning("dropping name suffix %r in %r", tokens[-1], raw)
            tokens.pop()
        start = len(tokens) - 1
        while start > 0 and _bare(tokens[start - 1]) in SURNAME_PARTICLES:
            start -= 1
        surname_tokens = tokens[start:]
        given_tokens = tokens[:start]

    surname = "".join(_bare(t) for t in surname_tokens)
    if not surname:
        raise MalformedName(f"no surname in {raw!r}")
    initials = "".join(_initials_of(t) for t in given_tokens)
    return AuthorKey(surname, initials)


@dataclass(frozen=True)
class PaperRecord:
    id: str
    year: int
    authors: tuple[AuthorKey, ...]
    title: str | None = None

    def __post_init__(self):
        if not self.authors:
            raise ValueError(f"paper {self.id!r} has no authors")
        if len(set(self.authors)) != len(self.authors):
            raise ValueError(f"paper {self.id!r} lists an author twice")
        if not MIN_YEAR <= self.year <= MAX_YEAR:
            raise ValueError(f"paper {self.id!r} year {self.year} outside [{MIN_YEAR}, {MAX_YEAR}]")


@dataclass(frozen=True)
class Corpus:
    """The paper archive and its set of distinct authors.

    ``authors`` keeps first-appearance order, so index ``j`` matches the
    j-th author met while scanning papers in order.
    """

    papers: tuple[PaperRecord, ...]
    authors: tuple[AuthorKey, ...] = field(default=())
    raw_name_count: int = 0

    def __post_init__(self):
        if not self.authors:
            object.__setattr__(self, "authors", _distinct_authors(self.papers))
        if not self.raw_name_count:
            object.__setattr__(self, "raw_name_count", self.total_incidences)

    @property
    def n_papers(self) -> int:
        return len(self.papers)

    @property
    def n_authors(self) -> int:
        return len(self.authors)

    @property
    def total_incidences(self) -> int:
        return sum(len(p.authors) for p in self.papers)


def _distinct_authors(papers: Iterable[PaperRecord]) -> tuple[AuthorKey, ...]:
    seen: dict[AuthorKey, int] = {}
    for paper in papers:
        for key in paper.authors:
            if key not in seen:
                seen[key] = len(seen)
    return tuple(seen)


def _build_record(line: int, paper_id, year, authors, title=None) -> tuple[PaperRecord, int]:
    if not isinstance(paper_id, str) or not paper_id.strip():
        raise ParseError(line, "id must be a non-empty string")
    if isinstance(year, bool) or not isinstance(year, int):
        raise ParseError(line, f"year must be an integer, got {year!r}")
    if not MIN_YEAR <= year <= MAX_YEAR:
        raise ParseError(line, f"year {year} outside [{MIN_YEAR}, {MAX_YEAR}]")
    if not isinstance(authors, list) or not authors:
        raise ParseError(line, "authors must be a non-empty list")
    keys: list[AuthorKey] = []
    for name in authors:
        if not isinstance(name, str) or not name.strip():
            raise ParseError(line, f"author entry {name!r} is empty or not a string")
        try:
            key = normalize_name(name)
        except MalformedName as exc:
            raise ParseError(line, str(exc)) from exc
        if key in keys:
            log.warning("line %d: %r repeats author %s on paper %r; keeping one", line, name, key, paper_id)
            continue
        keys.append(key)
    if title is not None and not isinstance(title, str):
        raise ParseError(line, "title must be a string")
    record = PaperRecord(paper_id.strip(), year, tuple(keys), title)
    return record, len(authors)


def _jsonl_rows(text: str) -> Iterator[tuple[int, PaperRecord, int]]:
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(lineno, f"invalid JSON: {exc.msg}") from exc
        if not isinstance(obj, dict):
            raise ParseError(lineno, "expected a JSON object")
        for required in ("id", "year", "authors"):
            if required not in obj:
                raise ParseError(lineno, f"missing field {required!r}")
        record, n_raw = _build_record(lineno, obj["id"], obj["year"], obj["authors"], obj.get("title"))
        yield lineno, record, n_raw


def _csv_rows(text: str) -> Iterator[tuple[int, PaperRecord, int]]:
    reader = csv.DictReader(io.StringIO(text, newline=""))
    if reader.fieldnames is None:
        return
    header = [h.strip() for h in reader.fieldnames]
    missing = {"id", "year", "authors"} - set(header)
    if missing:
        raise ParseError(1, f"CSV header lacks {sorted(missing)}")
    reader.fieldnames = header
    for row in reader:
        lineno = reader.line_num
        if None in row:
            raise ParseError(lineno, "row has more fields than the header")
        values = [row.get(h) for h in header]
        if all(v is None or not v.strip() for v in values):
            continue
        year_text = (row.get("year") or "").strip()
        try:
            year = int(year_text)
        except ValueError:
            raise ParseError(lineno, f"year must be an integer, got {year_text!r}") from None
        authors_text = row.get("authors") or ""
        authors = [a.strip() for a in authors_text.split(";") if a.strip()]
        title = row.get("title") or None
        record, n_raw = _build_record(lineno, row.get("id") or "", year, authors, title)
        yield lineno, record, n_raw


def parse_corpus(source: bytes | str | IO, format: str = "jsonl") -> Corpus:
    """Parse a JSON-lines or CSV corpus into a Corpus.

    ``source`` may be raw bytes, already-decoded text, or a file object.
    """
    if format not in FORMATS:
        raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise ParseError(0, f"input is not UTF-8: {exc}") from exc

    rows = _jsonl_rows(source) if format == "jsonl" else _csv_rows(source)
    papers: list[PaperRecord] = []
    seen_ids: set[str] = set()
    raw_names = 0
    for lineno, record, n_raw in rows:
        if record.id in seen_ids:
            raise DuplicatePaperId(record.id, lineno)
        seen_ids.add(record.id)
        papers.append(record)
        raw_names += n_raw
    if not papers:
        raise EmptyCorpus("no paper records in input")
    return Corpus(tuple(papers), _distinct_authors(papers), raw_names)


def guess_format(path: str | Path) -> str:
    return "csv" if Path(path).suffix.lower() == ".csv" else "jsonl"


def load_corpus(path: str | Path, format: str | None = None) -> Corpus:
    path = Path(path)
    return parse_corpus(path.read_bytes(), format or guess_format(path))


def dump_jsonl(corpus: Corpus) -> str:
    """Serialize a corpus as JSON lines, authors in canonical key form."""
    lines = []
    for paper in corpus.papers:
        obj = {"id": paper.id, "year": paper.year}
        if paper.title is not None:
            obj["title"] = paper.title
        obj["authors"] = [key.render() for key in paper.authors]
        lines.append(json.dumps(obj, ensure_ascii=False))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class YearSummary:
    year: int
    papers: int
    new_authors: int
    cumulative_papers: int
    cumulative_authors: int


def corpus_summary(corpus: Corpus) -> list[YearSummary]:
    """Per-year paper and first-appearance author counts, with running totals.

    Years between the first and last that have no papers are included
    with zero counts.
    """
    if not corpus.papers:
        raise EmptyCorpus("corpus has no papers")
    by_year: dict[int, list[PaperRecord]] = {}
    for paper in corpus.papers:
        by_year.setdefault(paper.year, []).append(paper)
    seen: set[AuthorKey] = set()
    rows = []
    cum_papers = 0
    for year in range(min(by_year), max(by_year) + 1):
        papers = by_year.get(year, [])
        fresh = {key for p in papers for key in p.authors} - seen
        seen |= fresh
        cum_papers += len(papers)
        rows.append(YearSummary(year, len(papers), len(fresh), cum_papers, len(seen)))
    return rows
