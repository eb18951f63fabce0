"""Boolean AND queries over the tag index, hit-set views, and the full pipeline.

A query is a base tag plus zero or more AND refinements. Executing one
intersects the postings of all query tags, builds a hit-set view (tag
frequencies and co-occurrence restricted to the hits), grows a tag cluster on
that view, and ranks the hit bookmarks.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .clustering import (
    ClusterParams,
    NoSeedPairError,
    SeedsBelowThresholdError,
    TagGraph,
    grow_cluster,
    select_seed_pair,
)
from .corpus import FolksonomyIndex, normalize_tag
from .ranking import RankedHit, hit_set_stats, rank_absolute, rank_wdf_itf
from .similarity import Measure, coincidence
from .vizmodel import build_display_graph, to_json

RANKINGS = ("absolute", "wdf_itf")


@dataclass(frozen=True)
class Query:
    base: str
    refinements: tuple[str, ...] = ()

    def tags(self) -> tuple[str, ...]:
        return (self.base,) + self.refinements


def make_query(base: str, refinements: tuple[str, ...] | list[str] = ()) -> Query:
    """Normalize the base and refinements, dropping duplicates and the base itself."""
    norm_base = normalize_tag(base)
    if not norm_base:
        raise ValueError("query base tag is empty after normalization")
    kept: list[str] = []
    for raw in refinements:
        tag = normalize_tag(raw)
        if tag and tag != norm_base and tag not in kept:
            kept.append(tag)
    return Query(base=norm_base, refinements=tuple(kept))


def refine_vertex(query: Query, tag: str) -> Query:
    """Append one tag to the AND chain; refining with a present tag is a no-op."""
    norm = normalize_tag(tag)
    if not norm:
        raise ValueError("refinement tag is empty after normalization")
    if norm == query.base or norm in query.refinements:
        return query
    return Query(base=query.base, refinements=query.refinements + (norm,))


def refine_edge(query: Query, tag_a: str, tag_b: str) -> Query:
    """Append both endpoint tags of an edge to the AND chain."""
    norm_a = normalize_tag(tag_a)
    norm_b = normalize_tag(tag_b)
    if not norm_a or not norm_b:
        raise ValueError("refinement tag is empty after normalization")
    if norm_a == norm_b:
        raise ValueError("edge refinement needs two distinct tags")
    return refine_vertex(refine_vertex(query, norm_a), norm_b)


class HitSetView:
    """Tag statistics restricted to one hit set.

    freq maps each tag to the number of hit bookmarks carrying it; cooc counts
    hit bookmarks carrying both tags of a pair. Candidate neighbors are served
    in descending frequency order with ties broken lexicographically.
    """

    def __init__(self, hit_ids: frozenset[int], freq: dict[str, int],
                 cooc: dict[tuple[str, str], int]):
        self.hit_ids = hit_ids
        self.freq = freq
        self._cooc = cooc
        adjacency: dict[str, list[str]] = {}
        for (a, b), g in cooc.items():
            if g >= 1:
                adjacency.setdefault(a, []).append(b)
                adjacency.setdefault(b, []).append(a)
        order = lambda tag: (-freq[tag], tag)
        self._neighbors = {tag: sorted(others, key=order) for tag, others in adjacency.items()}

    def cooc(self, a: str, b: str) -> int:
        key = (a, b) if a <= b else (b, a)
        return self._cooc.get(key, 0)

    def cooc_pairs(self):
        return self._cooc.items()

    def neighbors(self, tag: str) -> list[str]:
        return self._neighbors.get(tag, [])

    def phi(self, measure: Measure, a: str, b: str) -> float:
        return coincidence(measure, self.freq[a], self.freq[b], self.cooc(a, b))


def build_view(index: FolksonomyIndex, hit_ids: frozenset[int]) -> HitSetView:
    """Recount tag and pair frequencies over just the hit bookmarks."""
    freq: Counter[str] = Counter()
    cooc: Counter[tuple[str, str]] = Counter()
    for bid in hit_ids:
        tags = sorted(index.bookmarks[bid].tag_counts)
        freq.update(tags)
        cooc.update(combinations(tags, 2))
    return HitSetView(hit_ids=hit_ids, freq=dict(freq), cooc=dict(cooc))


def intersect_hits(index: FolksonomyIndex, query: Query) -> frozenset[int]:
    """Bookmark ids matched by every tag in the query, smallest postings first."""
    postings = []
    for tag in query.tags():
        p = index.postings.get(tag)
        if p is None:
            return frozenset()
        postings.append(p)
    postings.sort(key=len)
    hits = postings[0]
    for p in postings[1:]:
        hits = hits & p
        if not hits:
            break
    return hits


@dataclass
class QueryResult:
    query: Query
    params: ClusterParams
    ranking: str
    hit_count: int
    page: int
    page_size: int
    hits: list[RankedHit] = field(default_factory=list)
    graph: TagGraph = field(default_factory=lambda: TagGraph(vertices={}, edges={}))

    def to_dict(self) -> dict:
        display = build_display_graph(self.graph)
        return {
            "query": {"base": self.query.base, "and": list(self.query.refinements)},
            "params": {
                "measure": self.params.measure.value,
                "method": self.params.method.value,
                "threshold": self.params.threshold,
                "support_floor": self.params.support_floor,
                "ranking": self.ranking,
            },
            "hit_count": self.hit_count,
            "page": self.page,
            "page_size": self.page_size,
            "hits": [
                {
                    "rank": hit.rank,
                    "url": hit.bookmark.url,
                    "title": hit.bookmark.title,
                    "score": round(hit.score, 6),
                }
                for hit in self.hits
            ],
            "graph": json.loads(to_json(display)),
        }


def _query_tag_graph(view: HitSetView, query: Query) -> TagGraph:
    """Vertex-only graph naming the query tags when no cluster can be grown."""
    return TagGraph(vertices={tag: view.freq[tag] for tag in query.tags()}, edges={})


def execute(index: FolksonomyIndex, query: Query, params: ClusterParams | None = None,
            ranking: str = "absolute", page: int = 1, page_size: int = 20) -> QueryResult:
    """Run the full pipeline: intersect, cluster on the hit set, rank, paginate.

    The configured support floor degrades to the largest co-occurrence count
    present in the hit set, so small corpora still produce a seed pair. If the
    cluster method refuses its seeds the result keeps a vertex-only graph of
    the query tags.
    """
    if params is None:
        params = ClusterParams()
    if ranking not in RANKINGS:
        raise ValueError(f"unknown ranking {ranking!r}")
    if page < 1:
        raise ValueError("page must be >= 1")
    if page_size < 1:
        raise ValueError("page_size must be >= 1")

    hit_ids = intersect_hits(index, query)
    result = QueryResult(query=query, params=params, ranking=ranking,
                         hit_count=len(hit_ids), page=page, page_size=page_size)
    if not hit_ids:
        return result

    view = build_view(index, hit_ids)

    max_g = max((g for _, g in view.cooc_pairs()), default=0)
    if max_g >= 1:
        effective = ClusterParams(
            measure=params.measure,
            method=params.method,
            threshold=params.threshold,
            support_floor=min(params.support_floor, max_g),
        )
        try:
            seeds = select_seed_pair(view, effective.measure, effective.support_floor)
            graph = grow_cluster(view, seeds, effective)
        except (NoSeedPairError, SeedsBelowThresholdError):
            graph = _query_tag_graph(view, query)
    else:
        graph = _query_tag_graph(view, query)
    for tag in query.tags():
        graph.vertices.setdefault(tag, view.freq[tag])
    result.graph = graph

    hit_bookmarks = [index.bookmarks[bid] for bid in sorted(hit_ids)]
    if ranking == "absolute":
        ranked = rank_absolute(hit_bookmarks, list(query.tags()))
    else:
        initial_ids = index.postings.get(query.base, frozenset())
        stats = hit_set_stats([index.bookmarks[bid] for bid in sorted(initial_ids)])
        ranked = rank_wdf_itf(hit_bookmarks, list(query.tags()), stats)
    start = (page - 1) * page_size
    result.hits = ranked[start:start + page_size]
    return result
