"""Shared builders for tests: tiny corpora by hand, random corpora by seed."""

from __future__ import annotations

import random
from datetime import date, timedelta
from pathlib import Path

from chronorank import Corpus, Document, EntityCatalog, Granularity, Query, Semantics

GOLDEN_DIR = Path(__file__).parent / "data" / "golden"


def golden(name: str) -> str:
    return (GOLDEN_DIR / name).read_text()

# Most periods a generated query may span, per granularity, expressed as the
# widest start-to-end distance in days.
RANGE_SPAN_DAYS = {
    Granularity.DAY: 23,
    Granularity.WEEK: 7 * 23,
    Granularity.MONTH: 690,
    Granularity.YEAR: 8300,
}


def make_doc(doc_id: str, day: str, mentions: dict[str, int]) -> Document:
    return Document(id=doc_id, published_at=date.fromisoformat(day), mentions=mentions)


def make_corpus(*docs: Document, catalog: EntityCatalog | None = None) -> Corpus:
    return Corpus(documents=list(docs), catalog=catalog or EntityCatalog())


def entity_pool(size: int) -> list[str]:
    return [f"e{i:02d}" for i in range(size)]


def random_corpus(
    rng: random.Random,
    doc_count: int,
    pool: list[str],
    window_start: date,
    window_end: date,
    max_mentions: int = 6,
) -> Corpus:
    """Corpus of random documents dated inside the window.

    Some documents get an empty mention map on purpose; ingest accepts those
    and they must never match a query.
    """
    span = (window_end - window_start).days
    docs = []
    for i in range(doc_count):
        width = rng.randint(0, min(max_mentions, len(pool)))
        entities = rng.sample(pool, width)
        mentions = {e: rng.randint(1, 9) for e in entities}
        day = window_start + timedelta(days=rng.randint(0, span))
        docs.append(Document(id=f"doc{i:05d}", published_at=day, mentions=mentions))
    return Corpus(documents=docs)


def random_case(
    rng: random.Random,
    granularity: Granularity,
    beta: float,
    doc_count: int,
    entity_count: int,
) -> tuple[Corpus, Query, Query]:
    """One random corpus plus matching ALL and ANY queries.

    The corpus window is padded beyond the query range so date filtering has
    something to drop. Query entities may include ids no document mentions.
    """
    pool = entity_pool(entity_count)
    range_start = date(1987, 1, 1) + timedelta(days=rng.randint(0, 2400))
    range_end = range_start + timedelta(days=rng.randint(0, RANGE_SPAN_DAYS[granularity]))
    pad = timedelta(days=max(3, (range_end - range_start).days // 3))
    corpus = random_corpus(rng, doc_count, pool, range_start - pad, range_end + pad)
    interest = frozenset(rng.sample(pool, rng.randint(1, min(4, entity_count))))
    queries = tuple(
        Query(
            entities=interest,
            semantics=semantics,
            start=range_start,
            end=range_end,
            granularity=granularity,
            beta=beta,
        )
        for semantics in (Semantics.ALL, Semantics.ANY)
    )
    return corpus, queries[0], queries[1]
