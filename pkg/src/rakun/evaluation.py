"""Gold-standard datasets, micro-averaged scoring and cross-validated grid search."""

from __future__ import annotations

import itertools
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .config import ExtractionConfig, Normalization
from .keywords import DocumentAnalysis, ScoredKeyword, analyze, generate
from .normalize import stem
from .textgraph import iter_words

logger = logging.getLogger(__name__)


class DatasetError(Exception):
    """The dataset directory does not follow the docsutf8/ + keys/ layout."""


@dataclass
class GoldDocument:
    id: str
    body: str
    gold_keys: set[str]

    @property
    def flagged(self) -> bool:
        """True when there is nothing to score against."""
        return not self.gold_keys


@dataclass(frozen=True)
class EvalMetrics:
    tp: int = 0
    fp: int = 0
    fn: int = 0

    @property
    def predicted(self) -> int:
        return self.tp + self.fp

    @property
    def gold_total(self) -> int:
        return self.tp + self.fn

    @property
    def precision(self) -> float:
        return self.tp / self.predicted if self.predicted else 0.0

    @property
    def recall(self) -> float:
        return self.tp / self.gold_total if self.gold_total else 0.0

    @property
    def f1(self) -> float:
        p, r = self.precision, self.recall
        return 2 * p * r / (p + r) if p + r else 0.0

    def __add__(self, other: "EvalMetrics") -> "EvalMetrics":
        return EvalMetrics(self.tp + other.tp, self.fp + other.fp, self.fn + other.fn)

    def to_dict(self) -> dict:
        return {
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "gold_total": self.gold_total,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
        }


def load_dataset(root: str | Path) -> list[GoldDocument]:
    """Read ``<root>/docsutf8/<id>.txt`` with keys from ``<root>/keys/<id>.key``."""
    root = Path(root)
    docs_dir, keys_dir = root / "docsutf8", root / "keys"
    for d in (docs_dir, keys_dir):
        if not d.is_dir():
            raise DatasetError(f"{root}: missing directory {d.name}/ (expected docsutf8/ and keys/)")
    docs = []
    for path in sorted(docs_dir.glob("*.txt")):
        key_path = keys_dir / (path.stem + ".key")
        if not key_path.is_file():
            logger.warning("%s has no key file, skipping", path.name)
            continue
        body = path.read_text(encoding="utf-8", errors="replace")
        keys = {
            line.strip().lower()
            for line in key_path.read_text(encoding="utf-8", errors="replace").splitlines()
            if line.strip()
        }
        if not keys:
            logger.warning("%s has an empty key file; it will not be scored", key_path.name)
        docs.append(GoldDocument(path.stem, body, keys))
    if not docs:
        raise DatasetError(f"{root}: no documents with key files found")
    return docs


def normalize_key(phrase: str) -> str:
    """Lowercase, split like the tokenizer, stem each word, rejoin with single spaces."""
    return " ".join(stem(w.lower()) for w in iter_words(phrase))


def score_document(predicted: Iterable[ScoredKeyword | str], gold: GoldDocument | Iterable[str]) -> EvalMetrics:
    gold_keys = gold.gold_keys if isinstance(gold, GoldDocument) else gold
    pred = {normalize_key(p if isinstance(p, str) else p.text) for p in predicted}
    pred.discard("")
    ref = {normalize_key(g) for g in gold_keys}
    ref.discard("")
    tp = len(pred & ref)
    return EvalMetrics(tp=tp, fp=len(pred) - tp, fn=len(ref) - tp)


def _extract_one(args):
    body, config = args
    return generate(analyze(body, config), config)


def evaluate_dataset(
    docs: Sequence[GoldDocument],
    config: ExtractionConfig,
    workers: int = 1,
) -> EvalMetrics:
    """Micro-averaged metrics: counts are summed before P/R/F1 are computed."""
    if not docs:
        raise ValueError("no documents to evaluate")
    scored = [d for d in docs if not d.flagged]
    jobs = [(d.body, config) for d in scored]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            preds = list(pool.map(_extract_one, jobs))
    else:
        preds = [_extract_one(j) for j in jobs]
    total = EvalMetrics()
    for d, p in zip(scored, preds):
        total = total + score_document(p, d)
    return total


@dataclass(frozen=True)
class GridSpec:
    """Value lists for each grid dimension; iterated in itertools.product order."""

    num_tokens: tuple[int, ...] = (1, 2, 3)
    bigram_count_threshold: tuple[int, ...] = (1, 2)
    word_length_diff: tuple[int, ...] = (0, 2, 3, 4)
    edit_distance: tuple[int, ...] = (2, 3)
    lemmatization: tuple[bool, ...] = (True, False)

    def configs(self, base: ExtractionConfig | None = None) -> list[ExtractionConfig]:
        base = base or ExtractionConfig()
        out = []
        for p, f, l, a, lem in itertools.product(
            self.num_tokens,
            self.bigram_count_threshold,
            self.word_length_diff,
            self.edit_distance,
            self.lemmatization,
        ):
            out.append(
                base.replace(
                    max_ngram=p,
                    bigram_count_threshold=f,
                    word_length_diff_threshold=l,
                    edit_distance_threshold=a,
                    normalization=Normalization.LEMMATIZE if lem else Normalization.NONE,
                )
            )
        return out


PAPER_GRID = GridSpec()


def _analysis_key(config: ExtractionConfig):
    return (
        config.normalization,
        config.min_token_length,
        config.stopwords,
        config.lemma_table,
        config.word_length_diff_threshold,
        config.edit_distance_threshold,
    )


def _score_configs(args) -> list[EvalMetrics]:
    """Per-config metrics of one document, sharing the graph stages between configs."""
    doc, configs = args
    analyses: dict[tuple, DocumentAnalysis] = {}
    out = []
    for cfg in configs:
        key = _analysis_key(cfg)
        if key not in analyses:
            analyses[key] = analyze(doc.body, cfg)
        out.append(score_document(generate(analyses[key], cfg), doc))
    return out


@dataclass
class FoldResult:
    fold: int
    test_ids: list[str]
    best_config: ExtractionConfig
    train: EvalMetrics
    test: EvalMetrics


@dataclass
class CVResult:
    folds: list[FoldResult] = field(default_factory=list)
    metrics: EvalMetrics = field(default_factory=EvalMetrics)

    @property
    def best_configs(self) -> list[ExtractionConfig]:
        return [f.best_config for f in self.folds]


def fold_assignment(ids: Sequence[str], folds: int, seed: int) -> list[list[int]]:
    """Seeded shuffle, then contiguous nearly-equal slices."""
    if folds < 2:
        raise ValueError("need at least 2 folds")
    if folds > len(ids):
        raise ValueError(f"{folds} folds requested for {len(ids)} documents")
    order = list(range(len(ids)))
    random.Random(seed).shuffle(order)
    size, extra = divmod(len(order), folds)
    out, start = [], 0
    for i in range(folds):
        stop = start + size + (1 if i < extra else 0)
        out.append(sorted(order[start:stop]))
        start = stop
    return out


def cross_validate(
    docs: Sequence[GoldDocument],
    grid: GridSpec | Sequence[ExtractionConfig] = PAPER_GRID,
    folds: int = 5,
    seed: int = 0,
    base: ExtractionConfig | None = None,
    workers: int = 1,
) -> CVResult:
    """k-fold CV with a grid search on each training split.

    The winner on a split maximizes micro F1 over the training documents, with
    ties going to the earlier grid entry. Test counts of all folds are summed
    into the final metrics.

    Since a document's predictions under a config do not depend on the split,
    every (document, config) pair is scored once and reused across folds.
    """
    configs = grid.configs(base) if isinstance(grid, GridSpec) else list(grid)
    if not configs:
        raise ValueError("empty grid")
    docs = list(docs)
    parts = fold_assignment([d.id for d in docs], folds, seed)

    jobs = [(d, configs) for d in docs if not d.flagged]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            table = list(pool.map(_score_configs, jobs))
    else:
        table = [_score_configs(j) for j in jobs]
    per_doc: dict[int, list[EvalMetrics]] = {}
    it = iter(table)
    for i, d in enumerate(docs):
        if not d.flagged:
            per_doc[i] = next(it)

    result = CVResult()
    for k, test_idx in enumerate(parts):
        test_set = set(test_idx)
        train_idx = [i for i in range(len(docs)) if i not in test_set and i in per_doc]
        best, best_train = 0, None
        for c in range(len(configs)):
            m = EvalMetrics()
            for i in train_idx:
                m = m + per_doc[i][c]
            if best_train is None or m.f1 > best_train.f1:
                best, best_train = c, m
        test = EvalMetrics()
        for i in test_idx:
            if i in per_doc:
                test = test + per_doc[i][best]
        result.folds.append(
            FoldResult(k, [docs[i].id for i in test_idx], configs[best], best_train, test)
        )
        result.metrics = result.metrics + test
    return result
