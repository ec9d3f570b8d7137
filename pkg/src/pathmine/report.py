"""Join structural properties with path-frequency results and emit artifacts.

Everything written here is deterministic: fixed row orders, fixed float
rendering (6 significant digits), no timestamps. Re-running with the same
inputs must reproduce byte-identical files.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from scipy.stats import rankdata, spearmanr

from .errors import ValidationError
from .fpgrowth import FrequentPattern, patterns_csv
from .graph import Graph, clustering, degree_histogram
from .transactions import NGramCounts, TransactionDb, ngram_counts_csv, vertex_frequency

__all__ = [
    "VertexFrequencyRecord",
    "StatsReport",
    "correlate_degree_frequency",
    "top_degree_share",
    "build_report",
    "write_report",
    "DEFAULT_PERCENTILES",
]

DEFAULT_PERCENTILES = (1.0, 5.0, 10.0, 25.0, 50.0)


@dataclass(frozen=True)
class VertexFrequencyRecord:
    vertex: int
    degree: int
    path_count: int
    path_fraction: float


@dataclass
class StatsReport:
    """Everything the CSV/JSON artifacts (and the plots frontend) consume."""

    degree_histogram: dict[int, int]
    clustering_average: float
    vertex_records: list[VertexFrequencyRecord]
    ngram_counts: dict[int, NGramCounts]
    patterns: list[FrequentPattern]
    spearman_rho: float
    top_share: dict[float, float]
    metadata: dict = field(default_factory=dict)


def correlate_degree_frequency(g: Graph, freq: dict[int, int]) -> float:
    """Spearman rank correlation between vertex degree and path occurrences.

    Vertices absent from ``freq`` count as 0. Returns 0.0 by definition when
    either variable is constant.
    """
    n = g.vertex_count
    if n == 0:
        raise ValidationError("cannot correlate on an empty graph")
    for v in freq:
        if not 0 <= v < n:
            raise IndexError(f"vertex {v} out of range [0, {n})")
    degrees = np.diff(g.offsets).astype(np.float64)
    counts = np.zeros(n, dtype=np.float64)
    for v, c in freq.items():
        counts[v] = c
    if np.all(degrees == degrees[0]) or np.all(counts == counts[0]):
        return 0.0
    # rho is exactly +/-1 iff the average-tie rank vectors agree (or reverse);
    # handling those cases by rank comparison avoids float noise at the poles.
    rd = rankdata(degrees)
    rc = rankdata(counts)
    if np.array_equal(rd, rc):
        return 1.0
    if np.array_equal(rd, float(n + 1) - rc):
        return -1.0
    return float(spearmanr(degrees, counts)[0])


def top_degree_share(g: Graph, freq: dict[int, int], percentile: float) -> float:
    """Fraction of all path occurrences held by the top-degree percentile.

    The ceil(percentile% * vertex_count) highest-degree vertices are taken,
    degree ties broken by higher path count, then lower id. 0.0 when there
    are no occurrences at all (empty run).
    """
    if not 0 < percentile <= 100:
        raise ValidationError(f"percentile must be in (0, 100], got {percentile}")
    n = g.vertex_count
    if n == 0:
        raise ValidationError("cannot rank vertices of an empty graph")
    degrees = np.diff(g.offsets)
    counts = np.zeros(n, dtype=np.int64)
    for v, c in freq.items():
        counts[v] = c
    total = int(counts.sum())
    if total == 0:
        return 0.0
    m = math.ceil(percentile / 100.0 * n)
    order = np.lexsort((np.arange(n), -counts, -degrees))
    return float(counts[order[:m]].sum() / total)


def build_report(
    g: Graph,
    db: TransactionDb,
    ngram_counts: dict[int, NGramCounts],
    patterns: list[FrequentPattern],
    metadata: dict | None = None,
    percentiles: tuple[float, ...] = DEFAULT_PERCENTILES,
) -> StatsReport:
    """Assemble the full report from a graph and its traversal results."""
    freq = vertex_frequency(db)
    total_transactions = len(db.transactions)
    degrees = np.diff(g.offsets)
    records = []
    for v in range(g.vertex_count):
        count = freq.get(v, 0)
        fraction = count / total_transactions if total_transactions else 0.0
        records.append(
            VertexFrequencyRecord(
                vertex=v,
                degree=int(degrees[v]),
                path_count=count,
                path_fraction=fraction,
            )
        )
    records.sort(key=lambda r: (-r.path_count, r.vertex))
    meta = dict(metadata or {})
    meta.update(
        {
            "vertex_count": g.vertex_count,
            "edge_count": g.edge_count,
            "transaction_count": total_transactions,
            "source_count": db.source_count,
            "unreachable_pairs": db.unreachable_pairs,
            "graph_fingerprint": db.graph_fingerprint,
            "empty_run": total_transactions == 0,
        }
    )
    return StatsReport(
        degree_histogram=degree_histogram(g),
        clustering_average=clustering(g).average if not g.directed else float("nan"),
        vertex_records=records,
        ngram_counts=ngram_counts,
        patterns=patterns,
        spearman_rho=correlate_degree_frequency(g, freq),
        top_share={p: top_degree_share(g, freq, p) for p in percentiles},
        metadata=meta,
    )


def _fmt(x: float) -> str:
    """Reals rendered with 6 significant digits (round-half-even)."""
    return format(float(x), ".6g")


def write_report(report: StatsReport, directory: str | Path) -> list[Path]:
    """Emit degree_hist.csv, vertex_freq.csv, ngram_<n>.csv, patterns.csv and
    summary.json into ``directory``. Partial output is removed on failure."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    try:
        written.append(_write(directory / "degree_hist.csv", _degree_hist_csv(report)))
        written.append(_write(directory / "vertex_freq.csv", _vertex_freq_csv(report)))
        for n in sorted(report.ngram_counts):
            written.append(
                _write(directory / f"ngram_{n}.csv", ngram_counts_csv(report.ngram_counts[n]))
            )
        written.append(_write(directory / "patterns.csv", patterns_csv(report.patterns)))
        written.append(_write(directory / "summary.json", _summary_json(report)))
    except OSError as exc:
        for p in written:
            try:
                os.unlink(p)
            except OSError:
                pass
        raise OSError(f"failed writing report into {directory}: {exc}") from exc
    return written


def _write(path: Path, content: str) -> Path:
    path.write_text(content, encoding="utf-8", newline="\n")
    return path


def _degree_hist_csv(report: StatsReport) -> str:
    lines = ["degree,count"]
    for degree in sorted(report.degree_histogram):
        lines.append(f"{degree},{report.degree_histogram[degree]}")
    return "\n".join(lines) + "\n"


def _vertex_freq_csv(report: StatsReport) -> str:
    lines = ["vertex,degree,path_count,path_fraction"]
    for r in report.vertex_records:
        lines.append(f"{r.vertex},{r.degree},{r.path_count},{_fmt(r.path_fraction)}")
    return "\n".join(lines) + "\n"


def _summary_json(report: StatsReport) -> str:
    def sig6(x: float) -> float | None:
        if isinstance(x, float) and math.isnan(x):
            return None
        return float(_fmt(x))

    payload = {
        "clustering_average": sig6(report.clustering_average),
        "spearman_rho": sig6(report.spearman_rho),
        "top_degree_share": {_fmt(p): sig6(s) for p, s in sorted(report.top_share.items())},
        "pattern_count": len(report.patterns),
        "ngram_totals": {str(n): c.total() for n, c in sorted(report.ngram_counts.items())},
    }
    payload.update(report.metadata)
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
