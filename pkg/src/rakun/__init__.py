"""Unsupervised keyword extraction with load centrality and meta-vertex aggregation."""

__version__ = "0.1.0"

from .centrality import brute_force_load, load_centrality
from .config import PAPER_DEFAULT, PRESETS, ExtractionConfig, Normalization
from .evaluation import (
    EvalMetrics,
    GoldDocument,
    GridSpec,
    cross_validate,
    evaluate_dataset,
    load_dataset,
    score_document,
)
from .keywords import (
    ScoredKeyword,
    analyze,
    bigram_candidates,
    extract,
    rank_unigrams,
    select_keywords,
    trigram_candidates,
)
from .metavertex import MetaVertexRecord, candidate_pairs, levenshtein, merge_meta_vertices
from .textgraph import CorpusGraph, Token, build_graph, tokenize

__all__ = [
    "CorpusGraph",
    "EvalMetrics",
    "ExtractionConfig",
    "GoldDocument",
    "GridSpec",
    "MetaVertexRecord",
    "Normalization",
    "PAPER_DEFAULT",
    "PRESETS",
    "ScoredKeyword",
    "Token",
    "analyze",
    "bigram_candidates",
    "brute_force_load",
    "build_graph",
    "candidate_pairs",
    "cross_validate",
    "evaluate_dataset",
    "extract",
    "levenshtein",
    "load_centrality",
    "load_dataset",
    "merge_meta_vertices",
    "rank_unigrams",
    "score_document",
    "select_keywords",
    "tokenize",
    "trigram_candidates",
]
