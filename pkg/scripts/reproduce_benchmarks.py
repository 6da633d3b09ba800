"""Evaluate the paper-default preset on every dataset present under a data directory.

    python scripts/reproduce_benchmarks.py --data data --jobs 8

Each dataset is expected as <data>/<name>/docsutf8 + keys. Missing datasets
are listed and skipped. Inspec and Schutz2008 only run with --all.
"""

import argparse
import logging
import time
from pathlib import Path

from rakun.config import PAPER_DEFAULT
from rakun.evaluation import evaluate_dataset, load_dataset

# published F1@10 for the default configuration
REPORTED_F1 = {
    "500N-KPCrowd-v1.1": 0.428,
    "Inspec": 0.054,
    "Nguyen2007": 0.096,
    "PubMed": 0.075,
    "Schutz2008": 0.418,
    "SemEval2010": 0.091,
    "SemEval2017": 0.112,
    "citeulike180": 0.250,
    "fao30": 0.233,
    "fao780": 0.094,
    "kdd": 0.046,
    "theses100": 0.069,
    "wiki20": 0.190,
    "www": 0.060,
}
LARGE = {"Inspec", "Schutz2008"}


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--data", default="data")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--all", action="store_true", help="include the large corpora")
    ap.add_argument("--only", nargs="*", help="dataset names to run")
    args = ap.parse_args()
    logging.basicConfig(level=logging.WARNING)

    names = args.only or sorted(REPORTED_F1)
    print(f"{'dataset':<20} {'docs':>5} {'P':>6} {'R':>6} {'F1':>6} {'report':>6} {'secs':>7}")
    for name in names:
        root = Path(args.data) / name
        if not (root / "docsutf8").is_dir():
            print(f"{name:<20} missing ({root})")
            continue
        if name in LARGE and not args.all and not args.only:
            print(f"{name:<20} skipped (use --all)")
            continue
        docs = load_dataset(root)
        start = time.perf_counter()
        m = evaluate_dataset(docs, PAPER_DEFAULT, workers=args.jobs)
        secs = time.perf_counter() - start
        reported = REPORTED_F1.get(name)
        rep_s = f"{reported:.3f}" if reported is not None else "-"
        print(f"{name:<20} {len(docs):>5} {m.precision:6.3f} {m.recall:6.3f} {m.f1:6.3f} {rep_s:>6} {secs:7.1f}")


if __name__ == "__main__":
    main()
