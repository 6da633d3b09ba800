"""Text to directed weighted successor graph."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .config import ExtractionConfig
from .normalize import normalizer_for

# alphanumeric runs, allowing single internal hyphens/apostrophes ("state-of-the-art", "don't")
TOKEN_RE = re.compile(r"[^\W_]+(?:['’-][^\W_]+)*")


@dataclass(frozen=True)
class Token:
    surface: str
    normalized: str
    position: int


@dataclass
class CorpusGraph:
    """Directed graph over token labels with positive integer edge weights.

    Self-loops are never stored. ``edges`` maps ``(source, target)`` to weight.
    """

    vertices: set[str] = field(default_factory=set)
    edges: dict[tuple[str, str], int] = field(default_factory=dict)

    directed = True

    def add_vertex(self, label: str) -> None:
        self.vertices.add(label)

    def add_edge(self, source: str, target: str, weight: int = 1) -> None:
        if source == target:
            return
        if weight < 1:
            raise ValueError(f"edge weight must be >= 1, got {weight}")
        self.vertices.add(source)
        self.vertices.add(target)
        key = (source, target)
        self.edges[key] = self.edges.get(key, 0) + weight

    def successors(self) -> dict[str, list[str]]:
        """Adjacency lists, sorted for deterministic iteration."""
        adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        for s, t in self.edges:
            adj[s].append(t)
        for v in adj:
            adj[v].sort()
        return adj

    def predecessors(self) -> dict[str, list[str]]:
        adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        for s, t in self.edges:
            adj[t].append(s)
        for v in adj:
            adj[v].sort()
        return adj

    def total_weight(self) -> int:
        return sum(self.edges.values())

    def copy(self) -> "CorpusGraph":
        return CorpusGraph(set(self.vertices), dict(self.edges))

    def __len__(self) -> int:
        return len(self.vertices)

    def check(self) -> None:
        """Raise AssertionError if a structural invariant is broken."""
        for (s, t), w in self.edges.items():
            assert s != t, f"self-loop on {s!r}"
            assert w >= 1, f"non-positive weight on {(s, t)!r}"
            assert s in self.vertices and t in self.vertices, f"dangling edge {(s, t)!r}"

    @classmethod
    def from_edges(cls, edges: Iterable[tuple], vertices: Iterable[str] = ()) -> "CorpusGraph":
        """Build from ``(s, t)`` or ``(s, t, weight)`` tuples."""
        g = cls()
        for v in vertices:
            g.add_vertex(v)
        for e in edges:
            g.add_edge(*e)
        return g


def iter_words(text: str) -> Iterator[str]:
    for m in TOKEN_RE.finditer(text):
        yield m.group(0)


def tokenize(text: str, config: ExtractionConfig) -> list[Token]:
    """Split, lowercase, normalize and filter a document.

    Tokens shorter than ``config.min_token_length`` (after normalization) or
    listed as stopwords are removed, so their neighbours become adjacent.
    """
    norm = normalizer_for(config)
    stop = config.stopwords or frozenset()
    out: list[Token] = []
    for pos, word in enumerate(iter_words(text)):
        lowered = word.lower()
        if lowered in stop:
            continue
        label = norm(lowered)
        if not label or len(label) < config.min_token_length or label in stop:
            continue
        out.append(Token(word, label, pos))
    return out


def build_graph(tokens: Sequence[Token] | Sequence[Sequence[Token]]) -> CorpusGraph:
    """Successor graph of one document, or of several without cross-document edges.

    Pass a list of token lists to build a corpus graph; pairs never span two
    documents.
    """
    if tokens and not isinstance(tokens[0], Token):
        docs = tokens
    else:
        docs = [tokens]
    g = CorpusGraph()
    for doc in docs:
        labels = [t.normalized for t in doc]
        g.vertices.update(labels)
        for pair, n in Counter(zip(labels, labels[1:])).items():
            if pair[0] != pair[1]:
                g.edges[pair] = g.edges.get(pair, 0) + n
    return g


def merge_graphs(graphs: Iterable[CorpusGraph]) -> CorpusGraph:
    """Weight-summing union; associative and commutative."""
    out = CorpusGraph()
    for g in graphs:
        out.vertices |= g.vertices
        for e, w in g.edges.items():
            out.edges[e] = out.edges.get(e, 0) + w
    return out
