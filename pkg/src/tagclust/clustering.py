"""Cluster growth from a seed tag pair.

All three methods start from the most similar eligible pair and grow one
cluster over a hit-set-restricted similarity function:

* single link: admit any tag whose similarity to some member tops the
  threshold, keeping the admitting edge;
* complete link: admit a tag only when it tops the threshold against every
  current member, then emit all pairwise edges;
* group average: run the single-link expansion, re-threshold at the mean of
  the admitted similarities (capped by the seed pair's own similarity), and
  run single link again.

Comparisons are inclusive (phi >= threshold admits) and an admitted edge
always needs at least one shared bookmark, so a zero threshold cannot connect
tags that never co-occur. Candidates are visited in a fixed order (descending
hit-set frequency, then lexicographic), which makes every method
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .similarity import Measure


class ClusterMethod(str, Enum):
    SINGLE_LINK = "single"
    COMPLETE_LINK = "complete"
    GROUP_AVERAGE = "group_average"


class NoSeedPairError(LookupError):
    """No tag pair in the view meets the co-occurrence support floor."""


class SeedsBelowThresholdError(ValueError):
    """Complete link requires the seed pair itself to top the threshold."""


@dataclass
class ClusterParams:
    measure: Measure = Measure.COSINE
    method: ClusterMethod = ClusterMethod.SINGLE_LINK
    threshold: float = 0.5
    support_floor: int = 50

    def __post_init__(self) -> None:
        if not 0.0 <= self.threshold <= 1.0:
            raise ValueError(f"threshold must be in [0, 1], got {self.threshold}")
        if self.support_floor < 1:
            raise ValueError(f"support_floor must be >= 1, got {self.support_floor}")


@dataclass
class TagGraph:
    """Undirected weighted tag graph: vertex frequencies and edge similarities.

    Edge keys are lexicographically sorted pairs, one entry per unordered pair.
    """

    vertices: dict[str, int]
    edges: dict[tuple[str, str], float]


def _edge_key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a < b else (b, a)


def select_seed_pair(view, measure: Measure, support_floor: int) -> tuple[str, str]:
    """Most similar tag pair co-occurring in at least ``support_floor`` bookmarks.

    Ties go to the pair with more shared bookmarks, then to the
    lexicographically smaller pair. Raises NoSeedPairError when nothing meets
    the floor; callers may retry with a lower one.
    """
    best: tuple[str, str] | None = None
    best_phi = 0.0
    best_g = 0
    for pair, g in sorted(view.cooc_pairs()):
        if g < support_floor:
            continue
        phi = view.phi(measure, *pair)
        if best is None or phi > best_phi or (phi == best_phi and g > best_g):
            best, best_phi, best_g = pair, phi, g
    if best is None:
        raise NoSeedPairError(f"no tag pair co-occurs in >= {support_floor} bookmarks")
    return best


def _check_seeds(view, seeds: tuple[str, str]) -> tuple[str, str]:
    a, b = seeds
    if a == b:
        raise ValueError("seed tags must be distinct")
    if a not in view.freq or b not in view.freq:
        raise ValueError(f"seed pair ({a!r}, {b!r}) is not part of the view")
    if view.cooc(a, b) < 1:
        raise ValueError(f"seed tags {a!r} and {b!r} never co-occur in the hit set")
    return _edge_key(a, b)


def _expand(view, seeds: tuple[str, str], measure: Measure, threshold: float):
    """Single-link growth; returns members, admitting edges, and the admitted
    similarity total/count used by group average."""
    a, b = seeds
    members = [a, b]
    in_cluster = {a, b}
    edges = {_edge_key(a, b): view.phi(measure, a, b)}
    total = 0.0
    count = 0
    i = 0
    while i < len(members):
        member = members[i]
        # neighbors() yields only co-occurring tags, already in candidate order
        for candidate in view.neighbors(member):
            if candidate in in_cluster:
                continue
            phi = view.phi(measure, member, candidate)
            if phi >= threshold:
                in_cluster.add(candidate)
                members.append(candidate)
                edges[_edge_key(member, candidate)] = phi
                total += phi
                count += 1
        i += 1
    return members, edges, total, count


def _graph(view, members, edges) -> TagGraph:
    return TagGraph(vertices={tag: view.freq[tag] for tag in members}, edges=edges)


def single_link(view, seeds: tuple[str, str], params: ClusterParams) -> TagGraph:
    """Transitive closure of threshold-topping similarities from the seed pair.

    The seed edge is always part of the output; every other edge is the one
    that admitted its new endpoint.
    """
    seeds = _check_seeds(view, seeds)
    members, edges, _, _ = _expand(view, seeds, params.measure, params.threshold)
    return _graph(view, members, edges)


def complete_link(view, seeds: tuple[str, str], params: ClusterParams) -> TagGraph:
    """Greedy quasi-clique: every member pair tops the threshold.

    A candidate is admitted only if it co-occurs with, and is similar enough
    to, every current member; afterwards all pairwise edges are emitted.
    """
    a, b = seeds = _check_seeds(view, seeds)
    if view.phi(params.measure, a, b) < params.threshold:
        raise SeedsBelowThresholdError(
            f"seed pair ({a!r}, {b!r}) is below the threshold {params.threshold}"
        )
    members = [a, b]
    in_cluster = {a, b}
    b_neighbors = set(view.neighbors(b))
    pool = [c for c in view.neighbors(a) if c in b_neighbors and c not in in_cluster]
    changed = True
    while changed:
        changed = False
        for candidate in pool:
            if candidate in in_cluster:
                continue
            if all(
                view.cooc(candidate, member) >= 1
                and view.phi(params.measure, candidate, member) >= params.threshold
                for member in members
            ):
                members.append(candidate)
                in_cluster.add(candidate)
                changed = True
    edges = {
        _edge_key(x, y): view.phi(params.measure, x, y) for x, y in combinations(members, 2)
    }
    return _graph(view, members, edges)


def group_average(view, seeds: tuple[str, str], params: ClusterParams) -> TagGraph:
    """Single-link growth re-thresholded at the mean admitted similarity.

    If the seed pair's own similarity is below that mean, the mean is replaced
    by it. When the first expansion admits nothing, the seed-pair graph is
    returned unchanged.
    """
    seeds = _check_seeds(view, seeds)
    members, edges, total, count = _expand(view, seeds, params.measure, params.threshold)
    if count == 0:
        return _graph(view, members, edges)
    new_threshold = total / count
    seed_phi = view.phi(params.measure, *seeds)
    if seed_phi < new_threshold:
        new_threshold = seed_phi
    members, edges, _, _ = _expand(view, seeds, params.measure, new_threshold)
    return _graph(view, members, edges)


_METHODS = {
    ClusterMethod.SINGLE_LINK: single_link,
    ClusterMethod.COMPLETE_LINK: complete_link,
    ClusterMethod.GROUP_AVERAGE: group_average,
}


def grow_cluster(view, seeds: tuple[str, str], params: ClusterParams) -> TagGraph:
    """Dispatch to the configured cluster method."""
    return _METHODS[ClusterMethod(params.method)](view, seeds, params)
