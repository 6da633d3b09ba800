from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from rakun.centrality import brute_force_load
from rakun.config import ExtractionConfig
from rakun.keywords import (
    ScoredKeyword,
    analyze,
    bigram_candidates,
    extract,
    generate,
    rank_unigrams,
    select_keywords,
    trigram_candidates,
)
from rakun.metavertex import MetaVertexRecord
from rakun.normalize import stem
from rakun.textgraph import CorpusGraph, Token

RAW = ExtractionConfig(min_token_length=1, normalization="none", edit_distance_threshold=0, word_length_diff_threshold=0)


def toks(*labels):
    return [Token(x, x, i) for i, x in enumerate(labels)]


def kw(text, score):
    return ScoredKeyword(tuple(text.split()), score)


def flat(kws):
    return [(k.text, k.score) for k in kws]


def test_rank_unigrams_sorts_with_lexicographic_ties():
    out = rank_unigrams({"b": 1.0, "a": 0.0, "c": 0.0})
    assert flat(out) == [("b", 1.0), ("a", 0.0), ("c", 0.0)]


def test_rank_unigrams_uses_representative():
    rec = MetaVertexRecord(frozenset({"mechanic", "mechanical"}), "mechan", "mechanical")
    assert flat(rank_unigrams({"mechan": 2.5}, [rec])) == [("mechanical", 2.5)]


def test_rank_unigrams_empty():
    assert rank_unigrams({}) == []


TOKENS = toks("machine", "learning", "beats", "machine", "learning")


def test_bigram_support_strictly_above_threshold():
    scores = {"machine": 4.0, "learning": 2.0, "beats": 0.0}
    out = bigram_candidates(TOKENS, scores, 1)
    assert flat(out) == [("machine learning", 3.0)]
    assert bigram_candidates(TOKENS, scores, 2) == []


def test_bigram_uses_merged_vertex_labels():
    tokens = toks("graph", "model", "graphs", "model")
    vertex_of = {"graph": "graph", "graphs": "graph"}
    out = bigram_candidates(tokens, {"graph": 1.0, "model": 3.0}, 1, vertex_of, {"graph": "graphs"})
    assert flat(out) == [("graphs model", 2.0)]


def test_trigram_extensions_on_path():
    g = CorpusGraph.from_edges([("a", "b"), ("b", "c"), ("c", "d")])
    scores = {"a": 0.0, "b": 2.0, "c": 2.0, "d": 0.0}
    out = trigram_candidates([ScoredKeyword(("b", "c"), 2.0, ("b", "c"))], g, scores)
    assert {k.text for k in out} == {"a b c", "b c d"}
    assert {k.text: k.score for k in out}["a b c"] == pytest.approx(4 / 3)


def test_trigram_without_neighbours():
    g = CorpusGraph.from_edges([("b", "c")])
    assert trigram_candidates([ScoredKeyword(("b", "c"), 1.0, ("b", "c"))], g, {"b": 1, "c": 1}) == []


def test_trigram_drops_repeated_vertices():
    g = CorpusGraph.from_edges([("a", "b"), ("b", "a")])
    assert trigram_candidates([ScoredKeyword(("a", "b"), 1.0, ("a", "b"))], g, {"a": 1, "b": 1}) == []


def test_select_unigrams_only_when_p1():
    uni = [kw("x", 5), kw("y", 4)]
    big = [kw("x y", 9)]
    out = select_keywords(uni, big, [], ExtractionConfig(max_ngram=1, num_keywords=10))
    assert flat(out) == [("x", 5), ("y", 4)]


def test_select_tie_break_then_truncate():
    out = select_keywords([kw("y", 5), kw("z", 1), kw("x", 5)], [], [], ExtractionConfig(num_keywords=2))
    assert flat(out) == [("x", 5), ("y", 5)]


def test_select_first_occurrence_wins():
    # "graphs" stems to the same key as "graph"; the unigram comes first
    out = select_keywords([kw("graph", 0.9)], [kw("graphs", 2.0)], [], ExtractionConfig(max_ngram=2))
    assert flat(out) == [("graph", 0.9)]


def test_extract_empty_document():
    assert extract("", RAW) == []
    assert extract("a an", RAW.replace(min_token_length=3)) == []


# Golden documents. Expected lists are traced by hand on the successor
# graph; the centralities are re-checked against the brute-force oracle.

GOLDEN_1 = "alpha beta gamma alpha beta delta"
GOLDEN_1_GRAPH = CorpusGraph.from_edges(
    [("alpha", "beta", 2), ("beta", "gamma"), ("gamma", "alpha"), ("beta", "delta")]
)
GOLDEN_1_EXPECTED = [
    ("beta", 3.0),
    ("alpha beta", 2.5),
    ("alpha", 2.0),
    ("alpha beta gamma", 2.0),
    ("gamma alpha beta", 2.0),
]

GOLDEN_2 = "Large graph links small graphs links large network"
GOLDEN_2_PRE = CorpusGraph.from_edges(
    [
        ("large", "graph"),
        ("graph", "links"),
        ("links", "small"),
        ("small", "graphs"),
        ("graphs", "links"),
        ("links", "large"),
        ("large", "network"),
    ]
)
GOLDEN_2_POST = CorpusGraph.from_edges(
    [
        ("large", "graph"),
        ("graph", "links", 2),
        ("links", "small"),
        ("small", "graph"),
        ("links", "large"),
        ("large", "network"),
    ]
)
GOLDEN_2_EXPECTED = [
    ("links", 6.0),
    ("graphs", 5.0),
    ("large", 3.5),
    ("small", 0.5),
    ("network", 0.0),
]

GOLDEN_3 = "Machine learning beats machine learning."
GOLDEN_3_EXPECTED = [
    ("beats", 1.0),
    ("beats machine learning", 1.0),
    ("learning", 1.0),
    ("machine", 1.0),
    ("machine learning", 1.0),
    ("machine learning beats", 1.0),
]


def test_golden_1_trigrams():
    cfg = RAW.replace(max_ngram=3, bigram_count_threshold=1, num_keywords=5)
    a = analyze(GOLDEN_1, cfg)
    assert a.merged == GOLDEN_1_GRAPH
    assert a.scores == brute_force_load(GOLDEN_1_GRAPH)
    assert flat(generate(a, cfg)) == GOLDEN_1_EXPECTED


def test_golden_2_meta_vertex():
    cfg = RAW.replace(word_length_diff_threshold=1, edit_distance_threshold=1, num_keywords=5)
    a = analyze(GOLDEN_2, cfg)
    assert a.graph == GOLDEN_2_PRE
    pre = brute_force_load(GOLDEN_2_PRE)
    assert (pre["graph"], pre["graphs"]) == (3.0, 4.0)
    assert [(set(r.members), r.identifier, r.representative) for r in a.records] == [
        ({"graph", "graphs"}, "graph", "graphs")
    ]
    assert a.merged == GOLDEN_2_POST
    assert a.scores == brute_force_load(GOLDEN_2_POST)
    assert flat(generate(a, cfg)) == GOLDEN_2_EXPECTED


def test_golden_3_all_ties():
    cfg = RAW.replace(max_ngram=3, bigram_count_threshold=1)
    a = analyze(GOLDEN_3, cfg)
    assert a.scores == brute_force_load(a.merged) == {"machine": 1.0, "learning": 1.0, "beats": 1.0}
    assert flat(generate(a, cfg)) == GOLDEN_3_EXPECTED


words = st.sampled_from(["graph", "graphs", "node", "nodes", "edge", "load", "loads", "flow", "text", "word", "the", "of"])
documents = st.lists(words, max_size=60).map(" ".join)
configs = st.builds(
    ExtractionConfig,
    num_keywords=st.integers(1, 12),
    min_token_length=st.integers(0, 4),
    edit_distance_threshold=st.integers(0, 3),
    word_length_diff_threshold=st.integers(0, 3),
    max_ngram=st.integers(1, 3),
    bigram_count_threshold=st.integers(1, 3),
    normalization=st.sampled_from(["none", "stem"]),
)


@settings(max_examples=150)
@given(documents, configs)
def test_extract_properties(text, cfg):
    a = analyze(text, cfg)
    out = generate(a, cfg)
    assert len(out) <= cfg.num_keywords
    assert all(x.score >= y.score for x, y in zip(out, out[1:]))
    assert out == extract(text, cfg)

    observed = {w.lower() for w in text.split()}
    for k in out:
        assert set(k.terms) <= observed
        assert k.score == pytest.approx(sum(a.scores[v] for v in k.vertices) / len(k.vertices))
    if cfg.max_ngram == 1:
        assert all(len(k.terms) == 1 and k.vertices[0] in a.merged.vertices for k in out)

    labels = [a.vertex_of.get(t.normalized, t.normalized) for t in a.tokens]
    support = Counter(zip(labels, labels[1:]))
    bigrams = bigram_candidates(a.tokens, a.scores, cfg.bigram_count_threshold, a.vertex_of, a.display)
    for b in bigrams:
        assert support[b.vertices] > cfg.bigram_count_threshold
    pairs = {b.vertices for b in bigrams}
    trigrams = trigram_candidates(bigrams, a.merged, a.scores, a.display)
    for t in trigrams:
        assert t.vertices[:2] in pairs or t.vertices[1:] in pairs

    # generate() prunes the trigram pool; it must agree with the full pools
    unigrams = sorted(
        (ScoredKeyword((a.display[v],), s, (v,)) for v, s in a.scores.items()),
        key=lambda k: (-k.score, k.text),
    )
    assert flat(out) == flat(select_keywords(unigrams, bigrams, trigrams, cfg))


def test_keyword_term_bounds():
    with pytest.raises(ValueError):
        ScoredKeyword(("a", "b", "c", "d"), 1.0)
    with pytest.raises(ValueError):
        ScoredKeyword(("",), 1.0)


def test_stemmed_dedup_key_uses_porter():
    assert stem("graphs") == stem("graph")
