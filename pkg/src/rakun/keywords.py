"""Keyword ranking and 1/2/3-gram generation on top of load centrality."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .centrality import load_centrality
from .config import ExtractionConfig
from .metavertex import MetaVertexRecord, candidate_pairs, merge_meta_vertices, vertex_mapping
from .normalize import stem_phrase
from .textgraph import CorpusGraph, Token, build_graph, tokenize


@dataclass(frozen=True)
class ScoredKeyword:
    terms: tuple[str, ...]
    score: float
    # post-merge vertex labels the keyword was built from
    vertices: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not 1 <= len(self.terms) <= 3 or not all(self.terms):
            raise ValueError(f"bad keyword terms {self.terms!r}")

    @property
    def text(self) -> str:
        return " ".join(self.terms)


def _sort_key(kw: ScoredKeyword):
    return (-kw.score, kw.text)


@dataclass
class DocumentAnalysis:
    """Everything about one document that does not depend on p, f or k."""

    tokens: list[Token]
    graph: CorpusGraph
    merged: CorpusGraph
    records: list[MetaVertexRecord]
    scores: dict[str, float]
    vertex_of: dict[str, str]
    display: dict[str, str]
    pre_scores: dict[str, float] | None = None
    # full ranked pool per (p, f); generate() only truncates it to k
    ranked: dict = field(default_factory=dict, repr=False, compare=False)


def surface_forms(tokens: Iterable[Token]) -> dict[str, str]:
    """Most frequent lowercased surface per normalized label (ties: lexicographic)."""
    seen: dict[str, Counter] = defaultdict(Counter)
    for t in tokens:
        seen[t.normalized][t.surface.lower()] += 1
    return {label: min(c.items(), key=lambda kv: (-kv[1], kv[0]))[0] for label, c in seen.items()}


def display_forms(
    vertices: Iterable[str],
    records: Sequence[MetaVertexRecord],
    surface_of: Mapping[str, str] | None = None,
) -> dict[str, str]:
    """Post-merge label -> term shown to users.

    Meta vertices show their representative; labels are then mapped to an
    observed surface form when ``surface_of`` knows them.
    """
    surface_of = surface_of or {}
    rep = {r.identifier: r.representative for r in records}
    out = {}
    for v in vertices:
        label = rep.get(v, v)
        out[v] = surface_of.get(label, label)
    return out


def rank_unigrams(
    scores: Mapping[str, float],
    records: Sequence[MetaVertexRecord] = (),
    surface_of: Mapping[str, str] | None = None,
) -> list[ScoredKeyword]:
    display = display_forms(scores, records, surface_of)
    out = [ScoredKeyword((display[v],), scores[v], (v,)) for v in scores]
    out.sort(key=_sort_key)
    return out


def bigram_candidates(
    tokens: Sequence[Token],
    scores: Mapping[str, float],
    f: int,
    vertex_of: Mapping[str, str] | None = None,
    display: Mapping[str, str] | None = None,
) -> list[ScoredKeyword]:
    """Consecutive vertex pairs seen strictly more than ``f`` times, scored by mean centrality."""
    vertex_of = vertex_of or {}
    display = display or {}
    labels = [vertex_of.get(t.normalized, t.normalized) for t in tokens]
    support = Counter(p for p in zip(labels, labels[1:]) if p[0] != p[1])
    out = []
    for (a, b), n in support.items():
        if n > f:
            out.append(
                ScoredKeyword(
                    (display.get(a, a), display.get(b, b)),
                    (scores[a] + scores[b]) / 2,
                    (a, b),
                )
            )
    out.sort(key=_sort_key)
    return out


def trigram_candidates(
    bigrams: Iterable[ScoredKeyword],
    graph: CorpusGraph,
    scores: Mapping[str, float],
    display: Mapping[str, str] | None = None,
    min_score: float | None = None,
) -> list[ScoredKeyword]:
    """Extend each bigram by an in-neighbour of its left vertex or an out-neighbour of its right vertex.

    Trigrams scoring below ``min_score`` are dropped; with it set, neighbours
    are scanned best-first so hopeless extensions are never built.
    """
    display = display or {}

    def best_first(adj):
        return {v: sorted(ws, key=lambda w: -scores[w]) for v, ws in adj.items()}

    succ = best_first(graph.successors())
    pred = best_first(graph.predecessors())
    bound = float("-inf")
    if min_score is not None:
        # 3 * mean >= 3 * min_score, with slack for rounding; the exact check is below
        bound = 3 * min_score - 1e-9 * (1 + abs(3 * min_score))
    top = max(scores.values(), default=0.0)
    triples: set[tuple[str, str, str]] = set()
    for bg in bigrams:
        a, b = bg.vertices
        base = scores[a] + scores[b]
        if base + top < bound:
            continue
        for u in pred.get(a, ()):
            if base + scores[u] < bound:
                break
            triples.add((u, a, b))
        for x in succ.get(b, ()):
            if base + scores[x] < bound:
                break
            triples.add((a, b, x))
    out = []
    for tri in triples:
        if len(set(tri)) < 3:
            continue
        score = sum(scores[v] for v in tri) / 3
        if min_score is not None and score < min_score:
            continue
        out.append(ScoredKeyword(tuple(display.get(v, v) for v in tri), score, tri))
    out.sort(key=_sort_key)
    return out


def select_keywords(
    unigrams: Sequence[ScoredKeyword],
    bigrams: Sequence[ScoredKeyword],
    trigrams: Sequence[ScoredKeyword],
    config: ExtractionConfig,
) -> list[ScoredKeyword]:
    return _rank_pool(unigrams, bigrams, trigrams, config.max_ngram)[: config.num_keywords]


def _rank_pool(unigrams, bigrams, trigrams, max_ngram: int) -> list[ScoredKeyword]:
    pool = list(unigrams)
    if max_ngram >= 2:
        pool += bigrams
    if max_ngram >= 3:
        pool += trigrams
    seen: set[str] = set()
    unique = []
    for kw in pool:
        key = stem_phrase(kw.terms)
        if key not in seen:
            seen.add(key)
            unique.append(kw)
    unique.sort(key=_sort_key)
    return unique


def analyze(text: str, config: ExtractionConfig, workers: int = 1) -> DocumentAnalysis:
    """Tokenize, build the graph, merge meta vertices and rank the merged graph."""
    tokens = tokenize(text, config)
    graph = build_graph(tokens)
    if not graph.vertices:
        return DocumentAnalysis(tokens, graph, graph, [], {}, {}, {})
    pairs = candidate_pairs(graph, config.word_length_diff_threshold, config.edit_distance_threshold)
    pre_scores = None
    if pairs:
        pre_scores = load_centrality(graph, workers=workers)
        merged, records = merge_meta_vertices(graph, pairs, pre_scores)
    else:
        merged, records = graph, []
    scores = load_centrality(merged, workers=workers)
    vertex_of = vertex_mapping(records)
    display = display_forms(merged.vertices, records, surface_forms(tokens))
    return DocumentAnalysis(tokens, graph, merged, records, scores, vertex_of, display, pre_scores)


def generate(analysis: DocumentAnalysis, config: ExtractionConfig) -> list[ScoredKeyword]:
    """The n-gram and selection stage: depends only on p, f and k."""
    if not analysis.scores:
        return []
    p, f, k = config.max_ngram, config.bigram_count_threshold, config.num_keywords
    # the trigram pool is pruned against k, so k is part of the key there
    key = (p, f if p >= 2 else None, k if p >= 3 else None)
    if key not in analysis.ranked:
        analysis.ranked[key] = _ranked_candidates(analysis, p, f, k)
    return analysis.ranked[key][:k]


def _ranked_candidates(analysis: DocumentAnalysis, p: int, f: int, k: int) -> list[ScoredKeyword]:
    """Ranked, deduplicated pool; only the first k entries are guaranteed when p = 3."""
    unigrams = [
        ScoredKeyword((analysis.display[v],), s, (v,)) for v, s in analysis.scores.items()
    ]
    unigrams.sort(key=_sort_key)
    bigrams: list[ScoredKeyword] = []
    trigrams: list[ScoredKeyword] = []
    if p >= 2:
        bigrams = bigram_candidates(
            analysis.tokens,
            analysis.scores,
            f,
            analysis.vertex_of,
            analysis.display,
        )
    if p >= 3:
        # a trigram below the k-th shorter n-gram can never reach the top k, and
        # trigrams come last in the pool so they never decide an earlier duplicate
        head = _rank_pool(unigrams, bigrams, [], 2)
        floor = head[k - 1].score if len(head) >= k else None
        trigrams = trigram_candidates(bigrams, analysis.merged, analysis.scores, analysis.display, floor)
    return _rank_pool(unigrams, bigrams, trigrams, p)


def extract(text: str, config: ExtractionConfig | None = None, workers: int = 1) -> list[ScoredKeyword]:
    """Top-k keywords of one document."""
    config = config or ExtractionConfig()
    return generate(analyze(text, config, workers=workers), config)
