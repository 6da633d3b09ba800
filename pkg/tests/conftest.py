import os
import string
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from rakun.textgraph import CorpusGraph

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

REPO = Path(__file__).resolve().parents[1]
DATA_DIR = Path(os.environ.get("RAKUN_DATA_DIR", REPO / "data"))

# lines printed at the end of the run by the acceptance module
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def digraphs(draw, max_vertices=7, min_vertices=1, labels=string.ascii_lowercase):
    n = draw(st.integers(min_vertices, max_vertices))
    names = labels[:n]
    arcs = [(u, v) for u in names for v in names if u != v]
    chosen = draw(st.lists(st.sampled_from(arcs), unique=True, max_size=len(arcs))) if arcs else []
    weights = draw(st.lists(st.integers(1, 5), min_size=len(chosen), max_size=len(chosen)))
    return CorpusGraph.from_edges([(u, v, w) for (u, v), w in zip(chosen, weights)], names)


@st.composite
def word_graphs(draw, max_vertices=10):
    """Graphs over short words from a tiny alphabet, so near-duplicates are common."""
    words = draw(
        st.lists(st.text("abcd", min_size=1, max_size=5), min_size=1, max_size=max_vertices, unique=True)
    )
    arcs = [(u, v) for u in words for v in words if u != v]
    chosen = draw(st.lists(st.sampled_from(arcs), unique=True, max_size=min(len(arcs), 25))) if arcs else []
    weights = draw(st.lists(st.integers(1, 4), min_size=len(chosen), max_size=len(chosen)))
    return CorpusGraph.from_edges([(u, v, w) for (u, v), w in zip(chosen, weights)], words)


@pytest.fixture
def tiny_dataset(tmp_path):
    """Three-document dataset in the docsutf8/ + keys/ layout."""
    root = tmp_path / "tiny"
    (root / "docsutf8").mkdir(parents=True)
    (root / "keys").mkdir()
    docs = {
        "d1": (
            "Graph centrality ranks words. Load centrality on a word graph finds keyword candidates; "
            "the graph of words links each word to the next word.",
            ["graph", "load centrality", "keyword"],
        ),
        "d2": (
            "Stemming maps words to stems. A stemmer strips suffixes so stemmed keywords match "
            "gold keywords after stemming.",
            ["stemming", "stemmer", "suffixes"],
        ),
        "d3": (
            "Cross validation splits documents into folds; each fold is scored and the scores are "
            "summed over folds for validation.",
            ["cross validation", "folds", "documents"],
        ),
        "d4": (
            "Edit distance compares strings. Similar strings with small edit distance are merged "
            "into meta vertices of the graph.",
            ["edit distance", "strings", "meta vertices"],
        ),
    }
    for name, (body, keys) in docs.items():
        (root / "docsutf8" / f"{name}.txt").write_text(body, encoding="utf-8")
        (root / "keys" / f"{name}.key").write_text("\n".join(keys) + "\n", encoding="utf-8")
    return root
