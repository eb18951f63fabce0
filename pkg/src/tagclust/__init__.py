"""Tag co-occurrence clustering and query refinement over bookmark folksonomies."""

from .clustering import (
    ClusterMethod,
    ClusterParams,
    NoSeedPairError,
    SeedsBelowThresholdError,
    TagGraph,
    complete_link,
    group_average,
    grow_cluster,
    select_seed_pair,
    single_link,
)
from .corpus import (
    Bookmark,
    Corpus,
    CorpusFormatError,
    FolksonomyIndex,
    build_index,
    load_corpus,
    normalize_tag,
)
from .queryengine import (
    HitSetView,
    Query,
    QueryResult,
    build_view,
    execute,
    intersect_hits,
    make_query,
    refine_edge,
    refine_vertex,
)
from .ranking import HitSetStats, RankedHit, hit_set_stats, itf, rank_absolute, rank_wdf_itf, wdf
from .similarity import Measure, coincidence, cosine, dice, jaccard
from .vizmodel import DisplayGraph, bin_edges, bin_vertices, build_display_graph, to_dot, to_json

__version__ = "0.1.0"

__all__ = [
    "Bookmark",
    "ClusterMethod",
    "ClusterParams",
    "Corpus",
    "CorpusFormatError",
    "DisplayGraph",
    "FolksonomyIndex",
    "HitSetStats",
    "HitSetView",
    "Measure",
    "NoSeedPairError",
    "Query",
    "QueryResult",
    "RankedHit",
    "SeedsBelowThresholdError",
    "TagGraph",
    "bin_edges",
    "bin_vertices",
    "build_display_graph",
    "build_index",
    "build_view",
    "coincidence",
    "complete_link",
    "cosine",
    "dice",
    "execute",
    "group_average",
    "grow_cluster",
    "hit_set_stats",
    "intersect_hits",
    "itf",
    "jaccard",
    "load_corpus",
    "make_query",
    "normalize_tag",
    "rank_absolute",
    "rank_wdf_itf",
    "refine_edge",
    "refine_vertex",
    "select_seed_pair",
    "single_link",
    "to_dot",
    "to_json",
    "wdf",
]
