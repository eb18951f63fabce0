import math
import random

import pytest

from helpers import bfs_component, random_corpus, stats_from_sets
from tagclust.clustering import (
    ClusterMethod,
    ClusterParams,
    NoSeedPairError,
    SeedsBelowThresholdError,
    complete_link,
    group_average,
    grow_cluster,
    select_seed_pair,
    single_link,
)
from tagclust.corpus import build_index, load_corpus
from tagclust.queryengine import build_view
from tagclust.similarity import Measure

COS = Measure.COSINE


def view_of(corpus):
    index = build_index(corpus)
    return build_view(index, frozenset(range(len(index.bookmarks))))


def view_from_sets(tag_sets):
    import json

    lines = "".join(
        json.dumps({"url": f"u{i}", "tags": sorted(tags)}) + "\n"
        for i, tags in enumerate(tag_sets)
    )
    return view_of(load_corpus(lines))


@pytest.fixture
def c5_view(c5_corpus):
    return view_of(c5_corpus)


def params(method=ClusterMethod.SINGLE_LINK, threshold=0.5, measure=COS, floor=1):
    return ClusterParams(measure=measure, method=method, threshold=threshold,
                         support_floor=floor)


def test_cluster_params_validation():
    with pytest.raises(ValueError):
        ClusterParams(threshold=1.5)
    with pytest.raises(ValueError):
        ClusterParams(threshold=-0.1)
    with pytest.raises(ValueError):
        ClusterParams(support_floor=0)


def test_seed_pair_c5_floor_two(c5_view):
    assert select_seed_pair(c5_view, COS, 2) == ("recipe", "seafood")


def test_seed_pair_c5_floor_three(c5_view):
    with pytest.raises(NoSeedPairError):
        select_seed_pair(c5_view, COS, 3)


def test_seed_pair_no_pairs_at_all():
    view = view_from_sets([{"solo"}])
    with pytest.raises(NoSeedPairError):
        select_seed_pair(view, COS, 1)


def test_seed_pair_tie_prefers_larger_cooccurrence():
    # phi(p,q) = phi(r,s) = 0.5 under dice, but (r,s) shares two bookmarks.
    sets = [{"p", "q"}, {"p"}, {"q"},
            {"r", "s"}, {"r", "s"}, {"r"}, {"r"}, {"s"}, {"s"}]
    view = view_from_sets(sets)
    assert select_seed_pair(view, Measure.DICE, 1) == ("r", "s")


def test_seed_pair_full_tie_is_lexicographic():
    sets = [{"m", "n"}, {"m"}, {"n"}, {"x", "y"}, {"x"}, {"y"}]
    view = view_from_sets(sets)
    assert select_seed_pair(view, Measure.DICE, 1) == ("m", "n")


def test_single_link_c5_example(c5_view):
    graph = single_link(c5_view, ("recipe", "seafood"), params(threshold=0.5))
    assert set(graph.vertices) == {"recipe", "seafood", "cooking"}
    assert graph.vertices == {"recipe": 4, "seafood": 2, "cooking": 3}
    assert set(graph.edges) == {("recipe", "seafood"), ("cooking", "recipe")}
    assert graph.edges[("recipe", "seafood")] == pytest.approx(0.7071, abs=1e-4)
    assert graph.edges[("cooking", "recipe")] == pytest.approx(0.5774, abs=1e-4)


def test_single_link_threshold_one_keeps_seeds_only(c5_view):
    graph = single_link(c5_view, ("recipe", "seafood"), params(threshold=1.0))
    assert set(graph.vertices) == {"recipe", "seafood"}
    assert set(graph.edges) == {("recipe", "seafood")}


def test_single_link_threshold_zero_reaches_cooccurrence_component(c5_view):
    graph = single_link(c5_view, ("recipe", "seafood"), params(threshold=0.0))
    expected = bfs_component(c5_view.freq, dict(c5_view.cooc_pairs()), "cosine",
                             0.0, ("recipe", "seafood"))
    assert set(graph.vertices) == expected == {"recipe", "seafood", "cooking"}


def test_single_link_seed_edge_survives_even_below_threshold(c5_view):
    graph = single_link(c5_view, ("cooking", "seafood"), params(threshold=0.5))
    assert ("cooking", "seafood") in graph.edges
    assert graph.edges[("cooking", "seafood")] == pytest.approx(0.4082, abs=1e-4)
    assert set(graph.vertices) == {"cooking", "seafood", "recipe"}


def test_seed_validation_errors(c5_view):
    with pytest.raises(ValueError):
        single_link(c5_view, ("recipe", "recipe"), params())
    with pytest.raises(ValueError):
        single_link(c5_view, ("recipe", "boats"), params())
    view = view_from_sets([{"a"}, {"b"}])
    with pytest.raises(ValueError):
        single_link(view, ("a", "b"), params())


def test_complete_link_c5_example(c5_view):
    graph = complete_link(c5_view, ("recipe", "seafood"),
                          params(method=ClusterMethod.COMPLETE_LINK, threshold=0.5))
    assert set(graph.vertices) == {"recipe", "seafood"}
    assert set(graph.edges) == {("recipe", "seafood")}


def test_complete_link_threshold_zero_admits_cooccurring(c5_view):
    graph = complete_link(c5_view, ("recipe", "seafood"),
                          params(method=ClusterMethod.COMPLETE_LINK, threshold=0.0))
    assert set(graph.vertices) == {"recipe", "seafood", "cooking"}
    assert set(graph.edges) == {
        ("recipe", "seafood"), ("cooking", "recipe"), ("cooking", "seafood")
    }


def test_complete_link_rejects_seeds_below_threshold(c5_view):
    with pytest.raises(SeedsBelowThresholdError):
        complete_link(c5_view, ("cooking", "seafood"),
                      params(method=ClusterMethod.COMPLETE_LINK, threshold=0.5))


def test_complete_link_two_tag_view():
    view = view_from_sets([{"a", "b"}, {"a", "b"}])
    graph = complete_link(view, ("a", "b"),
                          params(method=ClusterMethod.COMPLETE_LINK, threshold=0.5))
    assert set(graph.vertices) == {"a", "b"}
    assert list(graph.edges) == [("a", "b")]


def test_complete_link_all_pairs_meet_threshold_random():
    rng = random.Random(23)
    checked = 0
    for _ in range(40):
        corpus = random_corpus(rng)
        view = view_of(corpus)
        try:
            seeds = select_seed_pair(view, COS, 1)
        except NoSeedPairError:
            continue
        for threshold in (0.2, 0.5, 0.8):
            p = params(method=ClusterMethod.COMPLETE_LINK, threshold=threshold)
            try:
                graph = complete_link(view, seeds, p)
            except SeedsBelowThresholdError:
                continue
            members = sorted(graph.vertices)
            for i, a in enumerate(members):
                for b in members[i + 1:]:
                    assert view.phi(COS, a, b) >= threshold
                    checked += 1
    assert checked > 0


def test_group_average_c5_trace(c5_view):
    graph = group_average(c5_view, ("recipe", "seafood"),
                          params(method=ClusterMethod.GROUP_AVERAGE, threshold=0.5))
    assert set(graph.vertices) == {"recipe", "seafood", "cooking"}
    assert set(graph.edges) == {("recipe", "seafood"), ("cooking", "recipe")}
    # cooking is admitted exactly at the re-threshold, so the mean must have
    # landed on phi(cooking, recipe) = 2/sqrt(12)
    rerun = single_link(c5_view, ("recipe", "seafood"),
                        params(threshold=2 / math.sqrt(12)))
    assert graph == rerun


def test_group_average_nothing_admitted_keeps_seed_graph(c5_view):
    graph = group_average(c5_view, ("recipe", "seafood"),
                          params(method=ClusterMethod.GROUP_AVERAGE, threshold=0.9))
    assert set(graph.vertices) == {"recipe", "seafood"}
    assert set(graph.edges) == {("recipe", "seafood")}


def test_group_average_seed_phi_caps_rethreshold():
    # phi(a,b) = 0.2887 is weaker than the admitted mean 0.5774, so the final
    # threshold falls back to the seed phi and pulls in e (phi(a,e) = 0.4082).
    sets = [{"a", "c"}, {"a", "c"}, {"a", "d"}, {"a", "d"},
            {"a", "b"}, {"b"}, {"a", "e"}]
    view = view_from_sets(sets)
    graph = group_average(view, ("a", "b"),
                          params(method=ClusterMethod.GROUP_AVERAGE, threshold=0.5))
    assert set(graph.vertices) == {"a", "b", "c", "d", "e"}
    assert ("a", "e") in graph.edges


def test_single_link_matches_bfs_oracle_random():
    rng = random.Random(99)
    for _ in range(30):
        corpus = random_corpus(rng)
        sets = [set(bm.tag_counts) for bm in corpus.bookmarks]
        freq, cooc = stats_from_sets(sets)
        view = view_of(corpus)
        for measure in ("dice", "cosine", "jaccard"):
            try:
                seeds = select_seed_pair(view, Measure(measure), 1)
            except NoSeedPairError:
                break
            for threshold in (0.3, 0.6):
                graph = single_link(view, seeds, params(threshold=threshold,
                                                        measure=Measure(measure)))
                expected = bfs_component(freq, cooc, measure, threshold, seeds)
                assert set(graph.vertices) == expected


def test_single_link_and_group_average_outputs_are_connected():
    rng = random.Random(41)
    for _ in range(20):
        view = view_of(random_corpus(rng))
        try:
            seeds = select_seed_pair(view, COS, 1)
        except NoSeedPairError:
            continue
        for method, fn in ((ClusterMethod.SINGLE_LINK, single_link),
                           (ClusterMethod.GROUP_AVERAGE, group_average)):
            graph = fn(view, seeds, params(method=method, threshold=0.4))
            reached = bfs_component(
                graph.vertices,
                {pair: 1 for pair in graph.edges},
                "dice", 0.0, seeds,
            )
            assert reached == set(graph.vertices)


def test_edges_always_connect_cooccurring_tags():
    rng = random.Random(5)
    for _ in range(20):
        view = view_of(random_corpus(rng))
        try:
            seeds = select_seed_pair(view, COS, 1)
        except NoSeedPairError:
            continue
        graph = single_link(view, seeds, params(threshold=0.0))
        for a, b in graph.edges:
            assert view.cooc(a, b) >= 1


def test_methods_are_deterministic(c5_view):
    for method in ClusterMethod:
        p = params(method=method, threshold=0.5)
        seeds = select_seed_pair(c5_view, COS, 1)
        assert grow_cluster(c5_view, seeds, p) == grow_cluster(c5_view, seeds, p)


def test_grow_cluster_dispatches_on_method(c5_view):
    seeds = ("recipe", "seafood")
    p = params(method=ClusterMethod.GROUP_AVERAGE, threshold=0.5)
    assert grow_cluster(c5_view, seeds, p) == group_average(c5_view, seeds, p)
