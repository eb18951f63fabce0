"""Export the cluster for a query as canonical JSON and as Graphviz DOT.

Run with:  python3 demos/export_formats.py
"""

from pathlib import Path

from tagclust import build_display_graph, build_index, execute, load_corpus, make_query, to_dot, to_json

DATA = Path(__file__).parent / "data" / "sample_corpus.jsonl"


def main() -> None:
    corpus = load_corpus(DATA.read_bytes())
    index = build_index(corpus)

    result = execute(index, make_query("css"))
    display = build_display_graph(result.graph)

    print("JSON:")
    print(to_json(display).decode("utf-8"))
    print()
    print("DOT:")
    print(to_dot(display).decode("utf-8"))


if __name__ == "__main__":
    main()
