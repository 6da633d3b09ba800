"""Extraction parameters and named presets."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class Normalization(str, Enum):
    NONE = "none"
    STEM = "stem"
    LEMMATIZE = "lemmatize"


@dataclass(frozen=True)
class ExtractionConfig:
    """Every tunable of the extractor.

    ``lemma_table`` is a path to a two-column TSV; when normalization is
    ``lemmatize`` and no table is given, tokens are stemmed instead.
    """

    num_keywords: int = 10
    min_token_length: int = 3
    edit_distance_threshold: int = 2
    word_length_diff_threshold: int = 3
    max_ngram: int = 1
    bigram_count_threshold: int = 1
    normalization: Normalization = Normalization.LEMMATIZE
    stopwords: frozenset[str] | None = field(default=None, compare=True)
    lemma_table: str | None = None

    def __post_init__(self):
        if not isinstance(self.normalization, Normalization):
            object.__setattr__(self, "normalization", Normalization(self.normalization))
        if self.stopwords is not None and not isinstance(self.stopwords, frozenset):
            object.__setattr__(self, "stopwords", frozenset(self.stopwords))
        if self.num_keywords < 1:
            raise ValueError(f"num_keywords must be >= 1, got {self.num_keywords}")
        if self.max_ngram not in (1, 2, 3):
            raise ValueError(f"max_ngram must be 1, 2 or 3, got {self.max_ngram}")
        if self.bigram_count_threshold < 1:
            raise ValueError("bigram_count_threshold must be positive")
        for name in ("min_token_length", "edit_distance_threshold", "word_length_diff_threshold"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")

    def replace(self, **changes: Any) -> "ExtractionConfig":
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> dict[str, Any]:
        out = dataclasses.asdict(self)
        out["normalization"] = self.normalization.value
        out["stopwords"] = sorted(self.stopwords) if self.stopwords is not None else None
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ExtractionConfig":
        data = dict(data)
        if data.get("stopwords") is not None:
            data["stopwords"] = frozenset(data["stopwords"])
        return cls(**data)

    def short(self) -> str:
        """Compact human-readable summary used in reports."""
        return (
            f"p={self.max_ngram} f={self.bigram_count_threshold} "
            f"l={self.word_length_diff_threshold} a={self.edit_distance_threshold} "
            f"norm={self.normalization.value}"
        )


# k=10, unigrams only, l=3, alpha=2, lemmatized input. The minimal token
# length is not reported; 3 drops one- and two-letter tokens.
PAPER_DEFAULT = ExtractionConfig()

PRESETS: dict[str, ExtractionConfig] = {
    "paper-default": PAPER_DEFAULT,
    "multiword": PAPER_DEFAULT.replace(max_ngram=3, bigram_count_threshold=1),
}
