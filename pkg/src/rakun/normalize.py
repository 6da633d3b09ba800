"""Token normalization: the shared Porter stemmer and lemma lookup tables."""

from __future__ import annotations

import logging
from functools import lru_cache
from pathlib import Path
from typing import Callable

from nltk.stem import PorterStemmer

from .config import ExtractionConfig, Normalization

logger = logging.getLogger(__name__)

_porter = PorterStemmer(mode=PorterStemmer.ORIGINAL_ALGORITHM)


@lru_cache(maxsize=200_000)
def stem(word: str) -> str:
    """Porter stem of a single lowercased word."""
    return _porter.stem(word, to_lowercase=True)


def stem_phrase(words) -> str:
    return " ".join(stem(w) for w in words)


def load_lemma_table(path: str | Path) -> dict[str, str]:
    """Read a ``surface<TAB>lemma`` file. Blank lines and ``#`` comments are skipped."""
    table: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n\r")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) < 2 or not parts[0] or not parts[1]:
                raise ValueError(f"{path}:{lineno}: expected 'surface<TAB>lemma'")
            table[parts[0].strip().lower()] = parts[1].strip().lower()
    return table


@lru_cache(maxsize=16)
def _cached_table(path: str) -> dict[str, str]:
    return load_lemma_table(path)


def normalizer_for(config: ExtractionConfig) -> Callable[[str], str]:
    """Return the function mapping a lowercased token to its graph label."""
    mode = config.normalization
    if mode is Normalization.NONE:
        return lambda w: w
    if mode is Normalization.LEMMATIZE:
        if config.lemma_table:
            table = _cached_table(str(config.lemma_table))
            return lambda w: table.get(w, w)
        logger.debug("no lemma table configured, falling back to stemming")
    return stem
