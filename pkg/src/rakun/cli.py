"""Command line interface: ``rakun extract | evaluate | export-graph``.

Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Sequence

from . import __version__
from .config import PRESETS, ExtractionConfig, Normalization
from .evaluation import PAPER_GRID, DatasetError, cross_validate, evaluate_dataset, load_dataset
from .export import FORMATS, WRITERS, keyword_flags
from .keywords import analyze, generate

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2
LEMMA_ENV = "RAKUN_LEMMA_TABLE"

log = logging.getLogger("rakun")


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunManifest:
    command: str
    config: dict
    inputs: list[str]
    output: str | None
    version: str = __version__
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunManifest":
        return cls(**json.loads(text))


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("extraction parameters (override the preset)")
    g.add_argument("--preset", choices=sorted(PRESETS), default="paper-default")
    g.add_argument("--top-k", type=int, help="number of keywords k")
    g.add_argument("--min-token-length", type=int, help="drop tokens shorter than this")
    g.add_argument("--edit-distance", type=int, help="meta-vertex edit distance threshold")
    g.add_argument("--len-diff", type=int, help="meta-vertex word length difference threshold")
    g.add_argument("--max-ngram", type=int, choices=(1, 2, 3))
    g.add_argument("--bigram-threshold", type=int, help="bigram support must exceed this")
    g.add_argument("--normalization", choices=[m.value for m in Normalization])
    g.add_argument("--lemma-table", help=f"surface<TAB>lemma file (fallback: ${LEMMA_ENV})")
    g.add_argument("--stopwords", help="file with one stopword per line")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--manifest", help="write a JSON run manifest here")
    p.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rakun", description="Keyword extraction by load centrality.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("extract", help="extract keywords from a file or a directory of .txt files")
    p.add_argument("input")
    p.add_argument("--output", "-o", help="write records here instead of stdout")
    _add_config_flags(p)

    p = sub.add_parser("evaluate", help="score against a docsutf8/ + keys/ dataset")
    p.add_argument("dataset")
    p.add_argument("--cv", type=int, metavar="FOLDS", help="run k-fold cross-validation")
    p.add_argument("--grid", action="store_true", help="grid-search the training folds (needs --cv)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o")
    _add_config_flags(p)

    p = sub.add_parser("export-graph", help="dump the merged, ranked graph of a document")
    p.add_argument("input")
    p.add_argument("--format", choices=FORMATS, default="dot")
    p.add_argument("--output", "-o")
    _add_config_flags(p)
    return parser


def _read_stopwords(path: str) -> frozenset[str]:
    try:
        with open(path, encoding="utf-8") as fh:
            return frozenset(w.strip().lower() for w in fh if w.strip() and not w.startswith("#"))
    except OSError as e:
        raise DataError(f"cannot read stopwords file {path}: {e}") from e


def resolve_config(args: argparse.Namespace) -> ExtractionConfig:
    cfg = PRESETS[args.preset]
    changes = {}
    for flag, name in [
        ("top_k", "num_keywords"),
        ("min_token_length", "min_token_length"),
        ("edit_distance", "edit_distance_threshold"),
        ("len_diff", "word_length_diff_threshold"),
        ("max_ngram", "max_ngram"),
        ("bigram_threshold", "bigram_count_threshold"),
        ("normalization", "normalization"),
    ]:
        value = getattr(args, flag)
        if value is not None:
            changes[name] = value
    lemma = args.lemma_table or os.environ.get(LEMMA_ENV)
    if lemma:
        if not Path(lemma).is_file():
            raise DataError(f"lemma table not found: {lemma}")
        changes["lemma_table"] = lemma
    if args.stopwords:
        changes["stopwords"] = _read_stopwords(args.stopwords)
    try:
        return cfg.replace(**changes)
    except ValueError as e:
        raise UsageError(str(e)) from e


def _input_files(path: Path) -> list[Path]:
    if path.is_dir():
        return sorted(p for p in path.rglob("*.txt") if p.is_file())
    if path.is_file():
        return [path]
    raise DataError(f"cannot read input {path}")


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8", errors="replace")
    except OSError as e:
        raise DataError(f"cannot read {path}: {e}") from e


def _extract_record(args) -> dict:
    doc_id, text, config = args
    kws = generate(analyze(text, config), config)
    return {"id": doc_id, "keywords": [{"keyword": k.text, "score": k.score} for k in kws]}


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_extract(args, config: ExtractionConfig) -> list[str]:
    root = Path(args.input)
    files = _input_files(root)
    jobs = []
    for f in files:
        doc_id = f.relative_to(root).with_suffix("").as_posix() if root.is_dir() else f.stem
        jobs.append((doc_id, _read(f), config))
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_extract_record, jobs))
    else:
        records = [_extract_record(j) for j in jobs]
    _emit("".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records), args.output)
    return [str(f) for f in files]


def cmd_evaluate(args, config: ExtractionConfig) -> list[str]:
    try:
        docs = load_dataset(args.dataset)
    except DatasetError as e:
        raise DataError(str(e)) from e
    name = Path(args.dataset).resolve().name
    record: dict = {"dataset": name, "documents": len(docs)}
    if args.cv:
        if args.cv > len(docs):
            raise UsageError(f"--cv {args.cv} exceeds the number of documents ({len(docs)})")
        grid = PAPER_GRID if args.grid else [config]
        res = cross_validate(docs, grid, folds=args.cv, seed=args.seed, base=config, workers=args.jobs)
        record["config"] = "grid" if args.grid else config.to_dict()
        record.update(res.metrics.to_dict())
        record["folds"] = [
            {
                "fold": f.fold,
                "test_ids": f.test_ids,
                "best_config": f.best_config.to_dict(),
                "train_f1": f.train.f1,
                "test": f.test.to_dict(),
            }
            for f in res.folds
        ]
    else:
        if args.grid:
            raise UsageError("--grid needs --cv")
        m = evaluate_dataset(docs, config, workers=args.jobs)
        record["config"] = config.to_dict()
        record.update(m.to_dict())
    _emit(json.dumps(record, ensure_ascii=False) + "\n", args.output)
    return [args.dataset]


def cmd_export_graph(args, config: ExtractionConfig) -> list[str]:
    path = Path(args.input)
    if not path.is_file():
        raise DataError(f"cannot read input {path}")
    a = analyze(_read(path), config)
    flags = keyword_flags(a.scores, config.num_keywords)
    _emit(WRITERS[args.format](a.merged, a.scores, flags, a.display), args.output)
    return [str(path)]


COMMANDS = {"extract": cmd_extract, "evaluate": cmd_evaluate, "export-graph": cmd_export_graph}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        config = resolve_config(args)
        inputs = COMMANDS[args.command](args, config)
    except UsageError as e:
        print(f"rakun: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as e:
        print(f"rakun: {e}", file=sys.stderr)
        return EXIT_DATA
    if args.manifest:
        manifest = RunManifest(args.command, config.to_dict(), inputs, args.output)
        Path(args.manifest).write_text(manifest.to_json() + "\n", encoding="utf-8")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
