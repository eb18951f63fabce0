"""HTTP facade over the query engine.

Endpoints: POST /corpus swaps in a new corpus atomically, GET /query runs the
full pipeline, GET /tags/top serves the tag-cloud entry point, GET /healthz
reports liveness. The protocol is stateless: refinements travel as repeated
``and=`` query parameters, so a client gesture is just URL construction.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException, Query as QueryParam, Request
from fastapi.middleware.cors import CORSMiddleware

from .clustering import ClusterMethod, ClusterParams
from .corpus import Corpus, CorpusFormatError, FolksonomyIndex, build_index, load_corpus
from .queryengine import RANKINGS, execute, make_query
from .similarity import Measure

DEFAULT_PORT = 8000
DEFAULT_MAX_CORPUS_BYTES = 16 * 1024 * 1024


def _env_float(environ, key: str, fallback: float) -> float:
    raw = environ.get(key)
    return fallback if raw is None else float(raw)


def _env_int(environ, key: str, fallback: int) -> int:
    raw = environ.get(key)
    return fallback if raw is None else int(raw)


@dataclass
class ServiceConfig:
    listen_port: int = DEFAULT_PORT
    max_corpus_bytes: int = DEFAULT_MAX_CORPUS_BYTES
    default_threshold: float = 0.5
    default_measure: Measure = Measure.COSINE
    default_method: ClusterMethod = ClusterMethod.SINGLE_LINK
    default_ranking: str = "absolute"
    support_floor: int = 50
    page_size: int = 20
    cors_origins: list[str] = field(default_factory=lambda: ["*"])

    def __post_init__(self):
        if not 0 < self.listen_port < 65536:
            raise ValueError(f"invalid listen port {self.listen_port}")
        if self.max_corpus_bytes <= 0:
            raise ValueError("max corpus bytes must be positive")
        if not 0.0 <= self.default_threshold <= 1.0:
            raise ValueError("default threshold must lie in [0, 1]")
        if self.default_ranking not in RANKINGS:
            raise ValueError(f"unknown ranking {self.default_ranking!r}")
        if self.support_floor < 1 or self.page_size < 1:
            raise ValueError("limits must be positive")

    @classmethod
    def from_env(cls, environ=None) -> "ServiceConfig":
        env = os.environ if environ is None else environ
        origins = env.get("CORS_ORIGINS", "*")
        return cls(
            listen_port=_env_int(env, "LISTEN_PORT", DEFAULT_PORT),
            max_corpus_bytes=_env_int(env, "MAX_CORPUS_BYTES", DEFAULT_MAX_CORPUS_BYTES),
            default_threshold=_env_float(env, "DEFAULT_THRESHOLD", 0.5),
            default_measure=Measure(env.get("DEFAULT_MEASURE", "cosine")),
            default_method=ClusterMethod(env.get("DEFAULT_METHOD", "single")),
            default_ranking=env.get("DEFAULT_RANKING", "absolute"),
            support_floor=_env_int(env, "SUPPORT_FLOOR", 50),
            page_size=_env_int(env, "PAGE_SIZE", 20),
            cors_origins=[o.strip() for o in origins.split(",") if o.strip()],
        )


class IndexHolder:
    """One active corpus snapshot; replacement is serialized and atomic.

    Readers grab the (corpus, index) tuple in a single reference read, so an
    in-flight query keeps working on the snapshot it started with.
    """

    def __init__(self):
        self._snapshot: tuple[Corpus, FolksonomyIndex] | None = None
        self._swap_lock = threading.Lock()

    @property
    def loaded(self) -> bool:
        return self._snapshot is not None

    def current(self) -> tuple[Corpus, FolksonomyIndex]:
        snapshot = self._snapshot
        if snapshot is None:
            corpus = Corpus(bookmarks=[])
            return corpus, build_index(corpus)
        return snapshot

    def replace(self, data: bytes) -> tuple[Corpus, FolksonomyIndex]:
        """Parse and index first; only a fully built snapshot is installed."""
        corpus = load_corpus(data)
        index = build_index(corpus)
        with self._swap_lock:
            self._snapshot = (corpus, index)
        return corpus, index


def _invalid(field_name: str, message: str) -> HTTPException:
    return HTTPException(
        status_code=422,
        detail=[{"loc": ["query", field_name], "msg": message, "type": "value_error"}],
    )


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    cfg = ServiceConfig() if config is None else config
    app = FastAPI(title="tagclust")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cfg.cors_origins,
        allow_methods=["*"],
        allow_headers=["*"],
    )
    holder = IndexHolder()
    app.state.holder = holder
    app.state.config = cfg

    @app.post("/corpus")
    async def post_corpus(request: Request):
        body = await request.body()
        if len(body) > cfg.max_corpus_bytes:
            raise HTTPException(
                status_code=413,
                detail=f"corpus exceeds {cfg.max_corpus_bytes} bytes",
            )
        try:
            corpus, index = holder.replace(body)
        except CorpusFormatError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return {
            "bookmarks": len(corpus.bookmarks),
            "tags": len(index.tag_universe),
            "duplicates_dropped": corpus.duplicates_dropped,
        }

    @app.get("/query")
    def get_query(
        q: str,
        and_: list[str] = QueryParam(default=[], alias="and"),
        measure: str | None = None,
        method: str | None = None,
        threshold: float | None = None,
        ranking: str | None = None,
        page: int = 1,
        page_size: int | None = None,
    ):
        try:
            query = make_query(q, and_)
        except ValueError as exc:
            raise _invalid("q", str(exc))
        try:
            m = cfg.default_measure if measure is None else Measure(measure)
        except ValueError:
            raise _invalid("measure", f"measure must be one of {[x.value for x in Measure]}")
        try:
            meth = cfg.default_method if method is None else ClusterMethod(method)
        except ValueError:
            raise _invalid("method", f"method must be one of {[x.value for x in ClusterMethod]}")
        t = cfg.default_threshold if threshold is None else threshold
        if not 0.0 <= t <= 1.0:
            raise _invalid("threshold", "threshold must lie in [0, 1]")
        r = cfg.default_ranking if ranking is None else ranking
        if r not in RANKINGS:
            raise _invalid("ranking", f"ranking must be one of {list(RANKINGS)}")
        if page < 1:
            raise _invalid("page", "page must be >= 1")
        size = cfg.page_size if page_size is None else page_size
        if size < 1:
            raise _invalid("page_size", "page_size must be >= 1")
        params = ClusterParams(measure=m, method=meth, threshold=t,
                               support_floor=cfg.support_floor)
        _, index = holder.current()
        result = execute(index, query, params, ranking=r, page=page, page_size=size)
        return result.to_dict()

    @app.get("/tags/top")
    def tags_top(n: int = 50):
        if n < 1:
            raise _invalid("n", "n must be >= 1")
        _, index = holder.current()
        counts = [(tag, len(ids)) for tag, ids in index.postings.items()]
        counts.sort(key=lambda item: (-item[1], item[0]))
        return [{"tag": tag, "freq": freq} for tag, freq in counts[:n]]

    @app.get("/healthz")
    def healthz():
        return {"status": "ok", "corpus_loaded": holder.loaded}

    return app


def serve(config: ServiceConfig | None = None, host: str = "127.0.0.1") -> None:
    """Run the service under uvicorn; blocks until interrupted."""
    import uvicorn

    cfg = ServiceConfig() if config is None else config
    uvicorn.run(create_app(cfg), host=host, port=cfg.listen_port, log_level="warning")
