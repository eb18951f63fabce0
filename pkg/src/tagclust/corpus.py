"""Bookmark corpus loading, deduplication, and the inverted tag index.

Corpus files are JSONL (UTF-8, one bookmark per line). Each line is an object:

    {"url": "https://...", "title": "optional", "tags": {"recipe": 3, "fish": 1}}

``tags`` may also be a plain list of strings, which counts every occurrence
once. Tag strings are NFC-normalized, trimmed, and lowercased; occurrences
that collapse onto the same normalized tag accumulate their counts.
"""

from __future__ import annotations

import json
import unicodedata
from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import IO, Iterable, Union


class CorpusFormatError(ValueError):
    """A corpus line could not be parsed; the message names the 1-based line."""

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no


def normalize_tag(raw: str) -> str:
    """NFC-normalize, trim, and lowercase a tag string."""
    return unicodedata.normalize("NFC", raw).strip().lower()


@dataclass
class Bookmark:
    """One deduplicated resource and its tag multiset (per-tag user counts)."""

    url: str
    title: str | None
    tag_counts: dict[str, int]

    def total_tags(self) -> int:
        """Total tag tokens on this bookmark, i.e. every tag weighted by its count."""
        return sum(self.tag_counts.values())


@dataclass
class Corpus:
    bookmarks: list[Bookmark]
    duplicates_dropped: int = 0
    malformed_dropped: int = 0


@dataclass
class FolksonomyIndex:
    """Immutable posting lists and pair co-occurrence counts over a corpus.

    Bookmark ids are positions in ``bookmarks``. ``cooc`` stores one entry per
    unordered pair of tags that share at least one bookmark, keyed by the
    lexicographically sorted pair.
    """

    bookmarks: list[Bookmark]
    postings: dict[str, frozenset[int]]
    cooc: dict[tuple[str, str], int]
    tag_universe: list[str]


def _iter_lines(data: Union[bytes, str, IO]) -> Iterable[tuple[int, str]]:
    if hasattr(data, "read"):
        data = data.read()
    if isinstance(data, str):
        for no, line in enumerate(data.split("\n"), 1):
            yield no, line
        return
    for no, raw in enumerate(data.split(b"\n"), 1):
        try:
            yield no, raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CorpusFormatError(no, f"invalid UTF-8: {exc}") from exc


def _parse_tags(tags: object, line_no: int) -> dict[str, int]:
    counts: Counter[str] = Counter()
    if isinstance(tags, dict):
        for raw, count in tags.items():
            if isinstance(count, bool) or not isinstance(count, int) or count < 1:
                raise CorpusFormatError(
                    line_no, f"tag {raw!r} needs a positive integer count, got {count!r}"
                )
            tag = normalize_tag(raw)
            if tag:
                counts[tag] += count
    elif isinstance(tags, list):
        for raw in tags:
            if not isinstance(raw, str):
                raise CorpusFormatError(line_no, f"tag list entries must be strings, got {raw!r}")
            tag = normalize_tag(raw)
            if tag:
                counts[tag] += 1
    else:
        raise CorpusFormatError(line_no, "'tags' must be an object of counts or a list of strings")
    return dict(counts)


def load_corpus(data: Union[bytes, str, IO]) -> Corpus:
    """Parse a JSONL byte stream into a deduplicated Corpus.

    The first occurrence of each URL wins; later ones are dropped and counted
    in ``duplicates_dropped``. Records whose tags all normalize to empty are
    dropped and counted in ``malformed_dropped``. Raises CorpusFormatError
    (with the line number) for lines that are not valid bookmark records;
    empty input yields an empty corpus.
    """
    bookmarks: list[Bookmark] = []
    seen_urls: set[str] = set()
    duplicates = 0
    malformed = 0

    for line_no, line in _iter_lines(data):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusFormatError(line_no, f"invalid JSON: {exc.msg}") from exc
        if not isinstance(record, dict):
            raise CorpusFormatError(line_no, "expected a JSON object")

        url = record.get("url")
        if not isinstance(url, str) or not url.strip():
            raise CorpusFormatError(line_no, "missing or empty 'url'")
        url = url.strip()

        title = record.get("title")
        if title is not None and not isinstance(title, str):
            raise CorpusFormatError(line_no, "'title' must be a string when present")

        if "tags" not in record:
            raise CorpusFormatError(line_no, "missing 'tags'")
        tag_counts = _parse_tags(record["tags"], line_no)

        if not tag_counts:
            malformed += 1
            continue
        if url in seen_urls:
            duplicates += 1
            continue
        seen_urls.add(url)
        bookmarks.append(Bookmark(url=url, title=title, tag_counts=tag_counts))

    return Corpus(bookmarks, duplicates_dropped=duplicates, malformed_dropped=malformed)


def build_index(corpus: Corpus) -> FolksonomyIndex:
    """Materialize posting lists and pair co-occurrence counts for a corpus."""
    posting_sets: defaultdict[str, set[int]] = defaultdict(set)
    cooc: Counter[tuple[str, str]] = Counter()
    for bookmark_id, bookmark in enumerate(corpus.bookmarks):
        tags = sorted(bookmark.tag_counts)
        for tag in tags:
            posting_sets[tag].add(bookmark_id)
        cooc.update(combinations(tags, 2))
    return FolksonomyIndex(
        bookmarks=list(corpus.bookmarks),
        postings={tag: frozenset(ids) for tag, ids in posting_sets.items()},
        cooc=dict(cooc),
        tag_universe=sorted(posting_sets),
    )
