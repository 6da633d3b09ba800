"""Five-fold cross-validated grid search on one dataset; prints the winner of every fold.

    python scripts/cv_grid_search.py data/wiki20 --seed 1 --jobs 8
"""

import argparse
import time
from collections import Counter

from rakun.evaluation import PAPER_GRID, cross_validate, load_dataset


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("dataset")
    ap.add_argument("--folds", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    docs = load_dataset(args.dataset)
    start = time.perf_counter()
    res = cross_validate(docs, PAPER_GRID, folds=args.folds, seed=args.seed, workers=args.jobs)
    for f in res.folds:
        print(f"fold {f.fold}: {f.best_config.short():<40} train F1 {f.train.f1:.3f}  test F1 {f.test.f1:.3f}")
    m = res.metrics
    print(f"overall: P {m.precision:.3f}  R {m.recall:.3f}  F1 {m.f1:.3f}  ({time.perf_counter() - start:.0f}s)")
    winner, count = Counter(c.short() for c in res.best_configs).most_common(1)[0]
    print(f"most frequent winner: {winner} ({count}/{len(res.folds)} folds)")


if __name__ == "__main__":
    main()
