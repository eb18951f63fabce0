"""Hit ranking: absolute accumulated tag frequency, or WDF*ITF.

WDF (within-document frequency) of a tag in a bookmark is
log2(freq + 1) / log2(L) with L the bookmark's total tag tokens; a
single-token bookmark gets WDF 1.0 outright. ITF (inverse tag frequency) is
log2(M / m) + 1 where M counts all tag tokens in the initial hit set and m
those of the tag itself, so ITF >= 1 always. Both statistics stay pinned to
the initial hit set while a query is refined.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .corpus import Bookmark


@dataclass
class HitSetStats:
    """Tag token totals over a hit set: M (all tokens) and m (per tag)."""

    total_tokens: int
    tag_tokens: dict[str, int]


def hit_set_stats(hits: list[Bookmark]) -> HitSetStats:
    per_tag: Counter[str] = Counter()
    for bookmark in hits:
        per_tag.update(bookmark.tag_counts)
    return HitSetStats(total_tokens=sum(per_tag.values()), tag_tokens=dict(per_tag))


@dataclass
class RankedHit:
    bookmark: Bookmark
    score: float
    rank: int


def wdf(bookmark: Bookmark, tag: str) -> float:
    length = bookmark.total_tags()
    if length <= 1:
        return 1.0
    return math.log2(bookmark.tag_counts.get(tag, 0) + 1) / math.log2(length)


def itf(stats: HitSetStats, tag: str) -> float:
    return math.log2(stats.total_tokens / stats.tag_tokens[tag]) + 1.0


def _ranked(hits: list[Bookmark], scores: list[float]) -> list[RankedHit]:
    # Ties: richer annotation first (larger total), then ascending url.
    order = sorted(
        range(len(hits)),
        key=lambda i: (-scores[i], -hits[i].total_tags(), hits[i].url),
    )
    return [RankedHit(hits[i], scores[i], rank) for rank, i in enumerate(order, 1)]


def rank_absolute(hits: list[Bookmark], query_tags: list[str]) -> list[RankedHit]:
    """Rank by the accumulated absolute frequency of the query tags."""
    if not query_tags:
        raise ValueError("ranking requires at least one query tag")
    scores = [
        float(sum(bookmark.tag_counts.get(tag, 0) for tag in query_tags)) for bookmark in hits
    ]
    return _ranked(hits, scores)


def rank_wdf_itf(
    hits: list[Bookmark], query_tags: list[str], stats: HitSetStats
) -> list[RankedHit]:
    """Rank by summed WDF*ITF of the query tags, with ITF from ``stats``."""
    if not query_tags:
        raise ValueError("ranking requires at least one query tag")
    weights = {tag: itf(stats, tag) for tag in query_tags}
    scores = [
        sum(wdf(bookmark, tag) * weights[tag] for tag in query_tags) for bookmark in hits
    ]
    return _ranked(hits, scores)
