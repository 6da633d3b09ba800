"""Load centrality on directed graphs.

Every ordered pair (s, t) with t reachable from s sends one unit of flow from
s towards t. A vertex holding flow for t hands it out in equal shares to its
successors that are one hop closer to t. The load of v is the flow it relays
as an interior vertex; flow it originates or absorbs is not counted.
Distances are hop counts; edge weights play no role here.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Sequence

from .textgraph import CorpusGraph

# Targets are always summed in blocks of this size, in block order, so the
# floating point result does not depend on the number of workers.
_BLOCK = 64

BRUTE_FORCE_MAX_VERTICES = 10


def _indexed(graph: CorpusGraph):
    labels = sorted(graph.vertices)
    index = {v: i for i, v in enumerate(labels)}
    pred: list[list[int]] = [[] for _ in labels]
    for s, t in graph.edges:
        pred[index[t]].append(index[s])
    for lst in pred:
        lst.sort()
    return labels, pred


def _load_block(pred: Sequence[Sequence[int]], targets: range) -> list[float]:
    n = len(pred)
    load = [0.0] * n
    for t in targets:
        dist = [-1] * n
        dist[t] = 0
        hops: list[list[int] | None] = [None] * n
        order = [t]
        # BFS on reversed edges; hops[u] collects u's successors one step closer to t
        for v in order:
            dv = dist[v] + 1
            for u in pred[v]:
                du = dist[u]
                if du < 0:
                    dist[u] = dv
                    hops[u] = [v]
                    order.append(u)
                elif du == dv:
                    hops[u].append(v)
        if len(order) < 3:
            continue
        inflow = [0.0] * n
        # order is non-decreasing in distance; walk it backwards so each
        # vertex has received all its inflow before passing it on
        for i in range(len(order) - 1, 0, -1):
            v = order[i]
            relayed = inflow[v]
            load[v] += relayed
            nxt = hops[v]
            share = (1.0 + relayed) / len(nxt)
            for w in nxt:
                inflow[w] += share
    return load


def load_centrality(graph: CorpusGraph, workers: int = 1) -> dict[str, float]:
    """Unnormalized load of every vertex, O(|V|·|E|).

    With ``workers > 1`` target blocks are spread over processes; the result
    is bit-identical to the serial run.
    """
    if not graph.vertices:
        raise ValueError("load centrality of an empty graph is undefined")
    labels, pred = _indexed(graph)
    n = len(labels)
    blocks = [range(i, min(i + _BLOCK, n)) for i in range(0, n, _BLOCK)]
    if workers > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(_load_block, [pred] * len(blocks), blocks))
    else:
        partials = [_load_block(pred, b) for b in blocks]
    total = [0.0] * n
    for part in partials:
        for i, x in enumerate(part):
            total[i] += x
    return {v: total[i] for i, v in enumerate(labels)}


def _all_pairs_hops(labels: list[str], graph: CorpusGraph) -> dict[tuple[str, str], int]:
    inf = float("inf")
    d = {(a, b): (0 if a == b else inf) for a in labels for b in labels}
    for s, t in graph.edges:
        d[s, t] = 1
    for k in labels:
        for i in labels:
            dik = d[i, k]
            if dik == inf:
                continue
            for j in labels:
                if dik + d[k, j] < d[i, j]:
                    d[i, j] = dik + d[k, j]
    return d


def brute_force_load(graph: CorpusGraph, exact: bool = False) -> dict[str, float] | dict[str, Fraction]:
    """Reference load by explicit enumeration of every shortest path.

    Distances come from Floyd-Warshall; each shortest s-t path is walked and
    carries the product of the split factors along it. Arithmetic is exact
    (``Fraction``); pass ``exact=True`` to get the fractions back.
    """
    if len(graph.vertices) > BRUTE_FORCE_MAX_VERTICES:
        raise ValueError(
            f"brute_force_load is limited to {BRUTE_FORCE_MAX_VERTICES} vertices, "
            f"got {len(graph.vertices)}"
        )
    labels = sorted(graph.vertices)
    succ = graph.successors()
    dist = _all_pairs_hops(labels, graph)
    load = {v: Fraction(0) for v in labels}

    for s in labels:
        for t in labels:
            if s == t or dist[s, t] == float("inf"):
                continue

            def nexthops(v):
                return [w for w in succ[v] if dist[w, t] == dist[v, t] - 1]

            stack = [(s, (s,), Fraction(1))]
            while stack:
                v, path, mass = stack.pop()
                if v == t:
                    for u in path[1:-1]:
                        load[u] += mass
                    continue
                hops = nexthops(v)
                for w in hops:
                    stack.append((w, path + (w,), mass / len(hops)))

    if exact:
        return load
    return {v: float(x) for v, x in load.items()}
