"""Search small directed graphs for one where load and betweenness disagree.

Both measures are computed exactly (fractions): load by the brute-force
path enumerator, betweenness by counting shortest paths through each vertex.
Graphs are sampled at random (seeded); the smallest witness seen, by vertex
count and then edge count, is printed.

    python scripts/find_load_betweenness_witness.py --max-vertices 6 --samples 20000
"""

import argparse
import random
from fractions import Fraction

from rakun.centrality import brute_force_load
from rakun.textgraph import CorpusGraph


def exact_betweenness(graph: CorpusGraph) -> dict[str, Fraction]:
    labels = sorted(graph.vertices)
    succ = graph.successors()

    def paths(s):
        # BFS layering from s, then count paths per vertex
        dist, sigma, order = {s: 0}, {s: 1}, [s]
        for v in order:
            for w in succ[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    sigma[w] = 0
                    order.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
        return dist, sigma

    info = {s: paths(s) for s in labels}
    out = {v: Fraction(0) for v in labels}
    for s in labels:
        ds, ss = info[s]
        for t in labels:
            if t == s or t not in ds:
                continue
            for v in labels:
                if v in (s, t) or v not in ds:
                    continue
                dv, sv = info[v]
                if t in dv and ds[v] + dv[t] == ds[t]:
                    out[v] += Fraction(ss[v] * sv[t], ss[t])
    return out


def search(max_vertices: int, samples: int, seed: int):
    rng = random.Random(seed)
    best = None
    for _ in range(samples):
        n = rng.randint(3, max_vertices)
        labels = [chr(ord("a") + i) for i in range(n)]
        p = rng.uniform(0.15, 0.6)
        edges = [(u, v) for u in labels for v in labels if u != v and rng.random() < p]
        g = CorpusGraph.from_edges(edges, labels)
        size = (n, len(edges))
        if best is not None and size >= best[0]:
            continue
        load = brute_force_load(g, exact=True)
        btw = exact_betweenness(g)
        if load != btw:
            best = (size, g, load, btw)
    return None if best is None else best[1:]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-vertices", type=int, default=6)
    ap.add_argument("--samples", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    found = search(args.max_vertices, args.samples, args.seed)
    if found is None:
        print("no witness found")
        return
    g, load, btw = found
    print("edges:", sorted(g.edges))
    for v in sorted(g.vertices):
        print(f"  {v}: load={load[v]}  betweenness={btw[v]}")


if __name__ == "__main__":
    main()
