"""Meta-vertex aggregation: merging near-duplicate vertices."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from rapidfuzz.distance import Levenshtein

from .normalize import stem as porter_stem
from .textgraph import CorpusGraph


@dataclass(frozen=True)
class MetaVertexRecord:
    members: frozenset[str]
    identifier: str
    representative: str


def levenshtein(a: str, b: str, cutoff: int | None = None) -> int:
    """Unit-cost edit distance. With ``cutoff``, any value above it is returned as ``cutoff + 1``."""
    return Levenshtein.distance(a, b, score_cutoff=cutoff)


def candidate_pairs(graph: CorpusGraph, l: int, alpha: int) -> set[tuple[str, str]]:
    """Unordered pairs (as sorted tuples) with length difference <= l and edit distance <= alpha.

    Vertices are bucketed by length so the edit distance is only computed for
    pairs that already pass the length test.
    """
    by_len: dict[int, list[str]] = defaultdict(list)
    for v in graph.vertices:
        by_len[len(v)].append(v)
    for words in by_len.values():
        words.sort()
    lengths = sorted(by_len)
    pairs: set[tuple[str, str]] = set()
    for i, n in enumerate(lengths):
        for m in lengths[i:]:
            if m - n > l:
                break
            left, right = by_len[n], by_len[m]
            for a_i, a in enumerate(left):
                others = right[a_i + 1:] if m == n else right
                for b in others:
                    if Levenshtein.distance(a, b, score_cutoff=alpha) <= alpha:
                        pairs.add((a, b) if a < b else (b, a))
    return pairs


class _DisjointSet:
    def __init__(self):
        self.parent: dict[str, str] = {}

    def find(self, x: str) -> str:
        root = x
        while self.parent.get(root, root) != root:
            root = self.parent[root]
        while x != root:
            self.parent[x], x = root, self.parent.get(x, x)
        return root

    def union(self, a: str, b: str) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller label becomes root so the structure is order independent
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def groups(self) -> list[set[str]]:
        out: dict[str, set[str]] = defaultdict(set)
        for x in list(self.parent):
            out[self.find(x)].add(x)
        return [g for g in out.values() if len(g) > 1]


def _pick_representative(members: Iterable[str], centrality: Mapping[str, float]) -> str:
    return min(members, key=lambda v: (-centrality[v], v))


def merge_meta_vertices(
    graph: CorpusGraph,
    pairs: Iterable[tuple[str, str]],
    pre_merge_centrality: Mapping[str, float],
    stem: Callable[[str], str] = porter_stem,
) -> tuple[CorpusGraph, list[MetaVertexRecord]]:
    """Collapse each connected group of candidate pairs into one vertex.

    The group's representative is its most central member (lexicographically
    smallest on ties) and the new vertex is labelled with the representative's
    stem. If that label is already an outside vertex or another group's label,
    the groups are fused and the choice is redone. Edges are rewired to the new
    label, parallel edges add up, and edges that turn into self-loops vanish.
    """
    ds = _DisjointSet()
    for a, b in pairs:
        for v in (a, b):
            if v not in graph.vertices:
                raise KeyError(f"candidate pair references unknown vertex {v!r}")
        if a != b:
            ds.parent.setdefault(a, a)
            ds.parent.setdefault(b, b)
            ds.union(a, b)

    missing = [v for v in graph.vertices if v not in pre_merge_centrality]
    if missing and ds.parent:
        raise KeyError(f"no pre-merge centrality for {sorted(missing)[:5]}")

    while True:
        groups = sorted((sorted(g) for g in ds.groups()), key=lambda g: g[0])
        owner = {v: g[0] for g in groups for v in g}
        label_of: dict[str, str] = {}
        changed = False
        claimed: dict[str, str] = {}
        for g in groups:
            label = stem(_pick_representative(g, pre_merge_centrality))
            label_of[g[0]] = label
            if label in graph.vertices and owner.get(label) != g[0]:
                ds.parent.setdefault(label, label)
                ds.union(g[0], label)
                changed = True
            elif label in claimed:
                ds.union(g[0], claimed[label])
                changed = True
            else:
                claimed[label] = g[0]
        if not changed:
            break

    vertex_map: dict[str, str] = {}
    records: list[MetaVertexRecord] = []
    for g in groups:
        rep = _pick_representative(g, pre_merge_centrality)
        ident = label_of[g[0]]
        records.append(MetaVertexRecord(frozenset(g), ident, rep))
        for v in g:
            vertex_map[v] = ident

    if not records:
        return graph.copy(), []

    out = CorpusGraph()
    for v in graph.vertices:
        out.vertices.add(vertex_map.get(v, v))
    for (s, t), w in graph.edges.items():
        s2, t2 = vertex_map.get(s, s), vertex_map.get(t, t)
        if s2 != t2:
            out.edges[s2, t2] = out.edges.get((s2, t2), 0) + w
    records.sort(key=lambda r: r.identifier)
    return out, records


def vertex_mapping(records: Iterable[MetaVertexRecord]) -> dict[str, str]:
    """Original label -> merged label for every member of every record."""
    return {m: r.identifier for r in records for m in r.members}
