"""Issue a base query, then refine it by clicking a vertex and an edge of the
returned cluster. Hit counts only ever shrink.

Run with:  python3 demos/query_refinement.py
"""

from pathlib import Path

from tagclust import build_index, execute, load_corpus, make_query, refine_edge, refine_vertex

DATA = Path(__file__).parent / "data" / "sample_corpus.jsonl"


def show(label, result):
    terms = " and ".join((result.query.base,) + result.query.refinements)
    print(f"{label}: [{terms}] -> {result.hit_count} hits")
    for hit in result.hits:
        print(f"  #{hit.rank} {hit.bookmark.url}  score {hit.score:.4f}")
    edges = ", ".join(f"{a}--{b}" for (a, b) in sorted(result.graph.edges))
    print(f"  cluster: {sorted(result.graph.vertices)}; edges: {edges}")
    print()


def main() -> None:
    corpus = load_corpus(DATA.read_bytes())
    index = build_index(corpus)

    query = make_query("recipe")
    result = execute(index, query, ranking="absolute")
    show("base query", result)

    narrowed = refine_vertex(query, "seafood")
    show("vertex click", execute(index, narrowed, ranking="absolute"))

    pinpointed = refine_edge(query, "baking", "dessert")
    show("edge click", execute(index, pinpointed, ranking="absolute"))

    weighted = execute(index, query, ranking="wdf_itf")
    show("base query, wdf_itf ranking", weighted)


if __name__ == "__main__":
    main()
