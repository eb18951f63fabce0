import pytest

from tagclust.corpus import build_index, load_corpus

C5_JSONL = b"""\
{"url": "https://example.org/b1", "title": "b1", "tags": {"recipe": 1, "cooking": 1}}
{"url": "https://example.org/b2", "title": "b2", "tags": {"recipe": 1, "cooking": 1, "seafood": 1}}
{"url": "https://example.org/b3", "title": "b3", "tags": {"recipe": 1, "seafood": 1}}
{"url": "https://example.org/b4", "title": "b4", "tags": {"cooking": 1}}
{"url": "https://example.org/b5", "title": "b5", "tags": {"recipe": 1}}
"""


@pytest.fixture
def c5_jsonl():
    return C5_JSONL


@pytest.fixture
def c5_corpus():
    return load_corpus(C5_JSONL)


@pytest.fixture
def c5_index(c5_corpus):
    return build_index(c5_corpus)


@pytest.fixture
def c5_file(tmp_path):
    path = tmp_path / "c5.jsonl"
    path.write_bytes(C5_JSONL)
    return path
