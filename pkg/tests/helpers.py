"""Shared random-corpus generators and brute-force oracles.

Everything here recomputes results from first principles (direct formula
evaluation, exhaustive filtering, BFS) so the tests never reuse the library's
own arithmetic as its oracle.
"""

import math
from collections import Counter, defaultdict
from itertools import combinations

from tagclust.corpus import Bookmark, Corpus

TAG_POOL = [f"t{i:02d}" for i in range(26)]


def random_corpus(rng, max_tags=20, max_bookmarks=50, multi_counts=False):
    n_tags = rng.randint(2, max_tags)
    pool = TAG_POOL[:n_tags]
    bookmarks = []
    for i in range(rng.randint(1, max_bookmarks)):
        k = rng.randint(1, min(6, n_tags))
        tags = rng.sample(pool, k)
        counts = {t: (rng.randint(1, 4) if multi_counts else 1) for t in tags}
        bookmarks.append(Bookmark(url=f"https://example.org/{i}", title=None,
                                  tag_counts=counts))
    return Corpus(bookmarks=bookmarks)


def phi_direct(measure, a, b, g):
    if measure == "dice":
        return 2.0 * g / (a + b)
    if measure == "cosine":
        return g / math.sqrt(a * b)
    if measure == "jaccard":
        return g / (a + b - g)
    raise ValueError(measure)


def stats_from_sets(tag_sets):
    """Per-tag and per-pair bookmark counts over a list of tag sets."""
    freq = Counter()
    cooc = Counter()
    for tags in tag_sets:
        ordered = sorted(tags)
        freq.update(ordered)
        cooc.update(combinations(ordered, 2))
    return freq, cooc


def bfs_component(freq, cooc, measure, threshold, seeds):
    """Vertices reachable from the seed pair across threshold-topping edges."""
    adjacency = defaultdict(set)
    for (a, b), g in cooc.items():
        if g >= 1 and phi_direct(measure, freq[a], freq[b], g) >= threshold:
            adjacency[a].add(b)
            adjacency[b].add(a)
    seen = set(seeds)
    stack = list(seeds)
    while stack:
        tag = stack.pop()
        for other in adjacency[tag]:
            if other not in seen:
                seen.add(other)
                stack.append(other)
    return seen


def brute_hits(corpus, query_tags):
    """Ids of bookmarks carrying every query tag, by exhaustive scan."""
    return {
        i for i, bm in enumerate(corpus.bookmarks)
        if all(t in bm.tag_counts for t in query_tags)
    }


def brute_seed_pair(freq, cooc, measure, support_floor):
    """Independent argmax over all pairs; None when nothing meets the floor."""
    best = None
    for pair in sorted(cooc):
        g = cooc[pair]
        if g < support_floor:
            continue
        phi = phi_direct(measure, freq[pair[0]], freq[pair[1]], g)
        key = (phi, g)
        if best is None or key > best[0]:
            best = (key, pair)
    return None if best is None else best[1]
