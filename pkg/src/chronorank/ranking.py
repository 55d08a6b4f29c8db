"""Scoring and ranking of matched documents.

A document's total score combines three signals:

  relativeness   share of the document's mention mass that points at query
                 entities, under ANY semantics damped by query coverage
  timeliness     share of all matched documents published in the document's
                 period
  relatedness    per non-query entity, an idf-damped rate of co-occurrence
                 with the matched documents across the query periods

    total = timeliness * relativeness + beta * mean(relatedness over E_d)

where the mean divides by the full entity count of the document and sums only
over its non-query entities.

Evaluation order is fixed so results are bit-for-bit reproducible: related
entities are summed in ascending entity-id order, period contributions in
ascending period order, and the division happens after the sum. Ties in the
final ordering break by ascending document id.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import Document, EntityId
from .index import CorpusIndex, PeriodId, period_of
from .query import Query, QueryContext, Semantics, match_documents


@dataclass(frozen=True)
class ScoreBreakdown:
    """Score components for one ranked document."""

    doc_id: str
    period: PeriodId
    relativeness: float
    timeliness: float
    relatedness_term: float
    total: float


RankedResult = list[ScoreBreakdown]


def relativeness_all(doc: Document, entities: frozenset[EntityId]) -> float:
    """Fraction of the document's mentions that refer to query entities.

    Under ALL semantics every query entity is present, so this is simply the
    query share of the document's mention mass.
    """
    if not doc.mentions:
        raise ValueError(f"document {doc.id!r} has no mentions to score")
    hits = sum(doc.mentions.get(entity, 0) for entity in entities)
    return hits / doc.total_mentions()


def relativeness_any(doc: Document, entities: frozenset[EntityId]) -> float:
    """Query share of the mention mass, weighted by query coverage.

    The coverage factor is the fraction of query entities the document
    actually mentions, so partial matches score lower than full ones.
    """
    if not doc.mentions:
        raise ValueError(f"document {doc.id!r} has no mentions to score")
    hits = sum(doc.mentions.get(entity, 0) for entity in entities)
    overlap = sum(1 for entity in entities if entity in doc.mentions)
    return (hits / doc.total_mentions()) * (overlap / len(entities))


def timeliness(ctx: QueryContext, period: PeriodId) -> float:
    """Share of matched documents published in the given period."""
    try:
        return ctx.period_scores[period]
    except KeyError:
        raise ValueError(f"period {period.key} is outside the query range") from None


def idf(ctx: QueryContext, entity: EntityId) -> float:
    """Inverse frequency of an entity within the query-entity neighbourhood.

    Counts how often the entity appears among all documents, corpus-wide,
    that mention at least one query entity. An entity present in every such
    document scores 0; one present in none scores 1.
    """
    union = ctx.query_entity_docs
    if not union:
        raise ValueError("no documents mention any query entity")
    posting = ctx.index.docs_by_entity.get(entity, ())
    inside = sum(1 for doc_id in posting if doc_id in union)
    return 1.0 - inside / len(union)


def relatedness(ctx: QueryContext, entity: EntityId) -> float:
    """Idf-damped co-occurrence rate of an entity with the matched documents.

    Sums, period by period in ascending order, the fraction of matched
    documents in that period that also mention the entity, then scales by
    idf. Memoized on the context for the lifetime of the query. Only defined
    for entities outside the query set.
    """
    if entity in ctx.query.entities:
        raise ValueError(f"entity {entity!r} is a query entity; relatedness applies to the others")
    memo = ctx.entity_scores
    if entity in memo:
        return memo[entity]
    matched = ctx.matched
    total = len(matched)
    cooccurrence = 0.0
    for pid in ctx.periods:
        posting = ctx.index.docs_by_entity_period.get((entity, pid))
        if posting:
            count = sum(1 for doc_id in posting if doc_id in matched)
            cooccurrence += count / total
    score = idf(ctx, entity) * cooccurrence
    memo[entity] = score
    return score


def final_score(ctx: QueryContext, doc: Document) -> ScoreBreakdown:
    """Combine the three signals into the document's total score."""
    query = ctx.query
    if query.semantics is Semantics.ALL:
        relativeness = relativeness_all(doc, query.entities)
    else:
        relativeness = relativeness_any(doc, query.entities)
    pid = period_of(doc.published_at, query.granularity)
    timely = timeliness(ctx, pid)
    related_sum = 0.0
    for entity in sorted(doc.mentions):
        if entity not in query.entities:
            related_sum += relatedness(ctx, entity)
    relatedness_term = related_sum / len(doc.mentions)
    total = timely * relativeness + query.beta * relatedness_term
    return ScoreBreakdown(
        doc_id=doc.id,
        period=pid,
        relativeness=relativeness,
        timeliness=timely,
        relatedness_term=relatedness_term,
        total=total,
    )


def rank(index: CorpusIndex, query: Query) -> RankedResult:
    """Match, score, and order documents for a query.

    Results are sorted by total descending with ties broken by document id
    ascending, then truncated to top_k when the query sets one. An empty
    match yields an empty list.
    """
    ctx = match_documents(index, query)
    if not ctx.matched:
        return []
    rows = [final_score(ctx, index.doc_table[doc_id]) for doc_id in sorted(ctx.matched)]
    rows.sort(key=lambda row: (-row.total, row.doc_id))
    if query.top_k is not None:
        rows = rows[: query.top_k]
    return rows
