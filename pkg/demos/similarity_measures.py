"""Compare the three coincidence measures on pairs drawn from a small corpus.

Run with:  python3 demos/similarity_measures.py
"""

from pathlib import Path

from tagclust import Measure, build_index, coincidence, load_corpus

DATA = Path(__file__).parent / "data" / "sample_corpus.jsonl"


def main() -> None:
    corpus = load_corpus(DATA.read_bytes())
    index = build_index(corpus)

    print(f"corpus: {len(corpus.bookmarks)} bookmarks, {len(index.tag_universe)} tags")
    print()
    print(f"{'pair':<28} {'a':>3} {'b':>3} {'g':>3} {'dice':>7} {'cosine':>7} {'jaccard':>7}")

    for (left, right), g in sorted(index.cooc.items()):
        a = len(index.postings[left])
        b = len(index.postings[right])
        row = f"{left + ' / ' + right:<28} {a:>3} {b:>3} {g:>3}"
        for measure in Measure:
            row += f" {coincidence(measure, a, b, g):>7.4f}"
        print(row)

    print()
    print("jaccard never exceeds dice, and all three agree at 0 and 1.")


if __name__ == "__main__":
    main()
