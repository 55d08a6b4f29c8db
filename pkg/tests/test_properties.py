"""Property-based invariants over random corpora and queries."""

from __future__ import annotations

from datetime import date, timedelta

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from chronorank import (
    Corpus,
    Document,
    Granularity,
    Query,
    Semantics,
    build_index,
    idf,
    match_documents,
    oracle_rank,
    period_of,
    periods_in_range,
    rank,
    relatedness,
    relativeness_all,
    relativeness_any,
)

POOL = ["A", "B", "C", "D", "E", "F"]
WINDOW_START = date(1990, 1, 1)

entity_sets = st.sets(st.sampled_from(POOL), max_size=4)
days = st.integers(min_value=0, max_value=89)
counts = st.integers(min_value=1, max_value=6)


@st.composite
def documents(draw, index: int) -> Document:
    entities = draw(entity_sets)
    mentions = {e: draw(counts) for e in sorted(entities)}
    offset = draw(days)
    return Document(
        id=f"doc{index:03d}",
        published_at=WINDOW_START + timedelta(days=offset),
        mentions=mentions,
    )


@st.composite
def corpora(draw) -> Corpus:
    size = draw(st.integers(min_value=0, max_value=14))
    return Corpus(documents=[draw(documents(i)) for i in range(size)])


@st.composite
def queries(draw) -> Query:
    interest = draw(st.sets(st.sampled_from(POOL), min_size=1, max_size=3))
    semantics = draw(st.sampled_from(list(Semantics)))
    granularity = draw(st.sampled_from(list(Granularity)))
    lo = draw(days)
    hi = draw(days)
    start = WINDOW_START + timedelta(days=min(lo, hi))
    end = WINDOW_START + timedelta(days=max(lo, hi))
    beta = draw(st.sampled_from([0.0, 0.3, 0.5, 1.0]))
    return Query(
        entities=frozenset(interest),
        semantics=semantics,
        start=start,
        end=end,
        granularity=granularity,
        beta=beta,
    )


@settings(max_examples=120, deadline=None)
@given(corpus=corpora(), query=queries())
def test_score_components_stay_in_bounds(corpus, query):
    index = build_index(corpus, query.granularity)
    for row in rank(index, query):
        assert 0.0 < row.relativeness <= 1.0
        assert 0.0 < row.timeliness <= 1.0
        assert 0.0 <= row.relatedness_term < 1.0
        assert 0.0 < row.total <= 1.0 + query.beta
        assert row.total == row.timeliness * row.relativeness + query.beta * row.relatedness_term


@settings(max_examples=120, deadline=None)
@given(corpus=corpora(), query=queries())
def test_period_shares_sum_to_one_over_matched(corpus, query):
    index = build_index(corpus, query.granularity)
    ctx = match_documents(index, query)
    assume(ctx.matched)
    assert abs(sum(ctx.period_scores.values()) - 1.0) <= 1e-12


@settings(max_examples=120, deadline=None)
@given(corpus=corpora(), query=queries())
def test_relatedness_collapses_over_the_period_partition(corpus, query):
    """Summing per-period co-occurrence over a partition of the matched set
    equals the overall co-occurrence rate."""
    index = build_index(corpus, query.granularity)
    ctx = match_documents(index, query)
    assume(ctx.matched)
    extras = sorted(corpus.entity_universe - query.entities)
    assume(extras)
    for entity in extras:
        whole = len(set(index.docs_by_entity.get(entity, ())) & ctx.matched) / len(ctx.matched)
        assert abs(relatedness(ctx, entity) - idf(ctx, entity) * whole) <= 1e-12


@settings(max_examples=120, deadline=None)
@given(corpus=corpora(), query=queries())
def test_all_matches_are_contained_in_any_matches(corpus, query):
    index = build_index(corpus, query.granularity)
    strict = Query(
        entities=query.entities, semantics=Semantics.ALL, start=query.start,
        end=query.end, granularity=query.granularity, beta=query.beta,
    )
    loose = Query(
        entities=query.entities, semantics=Semantics.ANY, start=query.start,
        end=query.end, granularity=query.granularity, beta=query.beta,
    )
    assert match_documents(index, strict).matched <= match_documents(index, loose).matched


@settings(max_examples=120, deadline=None)
@given(corpus=corpora(), query=queries(), bump=st.integers(min_value=1, max_value=9))
def test_matching_ignores_mention_counts(corpus, query, bump):
    index = build_index(corpus, query.granularity)
    before = match_documents(index, query).matched
    bumped_docs = [
        Document(
            id=doc.id,
            published_at=doc.published_at,
            mentions={e: c + bump for e, c in doc.mentions.items()},
        )
        for doc in corpus.documents
    ]
    bumped_index = build_index(Corpus(documents=bumped_docs), query.granularity)
    assert match_documents(bumped_index, query).matched == before


@settings(max_examples=120, deadline=None)
@given(corpus=corpora(), query=queries())
def test_beta_zero_orders_by_timeliness_times_relativeness(corpus, query):
    plain = Query(
        entities=query.entities, semantics=query.semantics, start=query.start,
        end=query.end, granularity=query.granularity, beta=0.0,
    )
    index = build_index(corpus, plain.granularity)
    rows = rank(index, plain)
    expected = sorted(rows, key=lambda r: (-(r.timeliness * r.relativeness), r.doc_id))
    assert [r.doc_id for r in rows] == [r.doc_id for r in expected]
    for row in rows:
        assert row.total == row.timeliness * row.relativeness


@settings(max_examples=120, deadline=None)
@given(
    mentions=st.dictionaries(st.sampled_from(POOL), counts, min_size=1, max_size=5),
    extra=counts,
)
def test_increasing_a_query_count_raises_all_relativeness(mentions, extra):
    interest = frozenset({"A"})
    assume("A" in mentions)
    other_mass = sum(c for e, c in mentions.items() if e != "A")
    doc = Document(id="d", published_at=WINDOW_START, mentions=mentions)
    raised = Document(
        id="d", published_at=WINDOW_START,
        mentions=dict(mentions, A=mentions["A"] + extra),
    )
    before = relativeness_all(doc, interest)
    after = relativeness_all(raised, interest)
    if other_mass > 0:
        assert after > before
    else:
        assert after == before == 1.0


@settings(max_examples=120, deadline=None)
@given(
    mentions=st.dictionaries(st.sampled_from(POOL), counts, min_size=1, max_size=5),
    target=st.sampled_from(POOL),
)
def test_single_entity_variants_agree(mentions, target):
    assume(target in mentions)
    doc = Document(id="d", published_at=WINDOW_START, mentions=mentions)
    interest = frozenset({target})
    assert relativeness_all(doc, interest) == relativeness_any(doc, interest)


@settings(max_examples=60, deadline=None)
@given(corpus=corpora(), query=queries())
def test_engine_agrees_with_brute_force(corpus, query):
    index = build_index(corpus, query.granularity)
    got = rank(index, query)
    expected = oracle_rank(corpus, query)
    assert [r.doc_id for r in got] == [r.doc_id for r in expected]
    for mine, ref in zip(got, expected):
        assert abs(mine.total - ref.total) <= 1e-12
        assert abs(mine.relativeness - ref.relativeness) <= 1e-12
        assert abs(mine.timeliness - ref.timeliness) <= 1e-12
        assert abs(mine.relatedness_term - ref.relatedness_term) <= 1e-12


@settings(max_examples=120, deadline=None)
@given(corpus=corpora(), query=queries())
def test_ranking_is_deterministic_within_a_process(corpus, query):
    index = build_index(corpus, query.granularity)
    once = rank(index, query)
    again = rank(build_index(corpus, query.granularity), query)
    assert once == again


@settings(max_examples=200, deadline=None)
@given(lo=days, hi=days, granularity=st.sampled_from(list(Granularity)))
def test_periods_cover_the_range_without_gaps(lo, hi, granularity):
    start = WINDOW_START + timedelta(days=min(lo, hi))
    end = WINDOW_START + timedelta(days=max(lo, hi))
    periods = periods_in_range(start, end, granularity)
    assert periods[0].first_day() <= start <= periods[0].last_day()
    assert periods[-1].first_day() <= end <= periods[-1].last_day()
    for earlier, later in zip(periods, periods[1:]):
        assert (later.first_day() - earlier.last_day()).days == 1
        assert earlier < later
    for pid in periods:
        assert period_of(pid.first_day(), granularity) == pid
        assert period_of(pid.last_day(), granularity) == pid
