"""Command-line front end: full pipeline plus independently invocable stages.

Stages compose through plain-text intermediates (transaction file, CSVs);
graph fingerprints guard against mixing stages from different graphs.
Exit codes: 0 success, 1 usage/validation, 2 parse/missing input, 3 runtime.
"""

from __future__ import annotations

import math
import os
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path

import click

from .errors import ParseError, PathmineError, ValidationError
from .fpgrowth import build_fptree, mine, patterns_csv
from .graph import Graph, clustering, degree_histogram, export_dot, load_edge_list
from .report import build_report, write_report
from .transactions import (
    TransactionDb,
    count_ngrams,
    ngram_counts_csv,
    parse_db,
    serialize_db,
)
from .traversal import run_traversals, sample_sources

DEFAULT_OUT = os.environ.get("PATHMINE_OUT", "pathmine_out")


@dataclass
class RunConfig:
    input_path: str
    directed: bool = False
    weighted: bool = False
    mode: str = "sample"
    k: int = 100
    seed: int = 42
    min_support: str = "0.01"
    max_pattern_size: int = 3
    ngram_sizes: tuple[int, ...] = (1, 2, 3)
    out_dir: str = DEFAULT_OUT
    dot_cap: int = 60
    threads: int = 1

    def __post_init__(self):
        if self.mode not in ("sample", "exhaustive"):
            raise ValidationError(f"mode must be 'sample' or 'exhaustive', got {self.mode!r}")
        if self.mode == "sample" and self.k < 1:
            raise ValidationError(f"sample mode requires k >= 1, got {self.k}")
        if self.threads < 1:
            raise ValidationError(f"threads must be >= 1, got {self.threads}")
        if self.max_pattern_size < 0:
            raise ValidationError(f"max pattern size must be >= 0, got {self.max_pattern_size}")
        parse_min_support(self.min_support)


def parse_min_support(raw: str) -> float | int:
    """Absolute count when the text is an integer >= 1, else a fraction in (0, 1]."""
    text = str(raw).strip()
    try:
        if "." in text or "e" in text or "E" in text:
            value = float(text)
            if not 0 < value <= 1:
                raise ValidationError(f"fractional min-support must be in (0, 1], got {value}")
            return value
        count = int(text)
        if count < 1:
            raise ValidationError(f"absolute min-support must be >= 1, got {count}")
        return count
    except ValueError:
        raise ValidationError(f"cannot parse min-support {raw!r}") from None


def resolve_min_support(raw: str, transaction_count: int) -> int:
    value = parse_min_support(raw)
    if isinstance(value, int):
        return value
    return max(1, math.ceil(value * transaction_count))


@contextmanager
def _stage(name: str):
    """Prefix stage names onto errors so pipeline failures locate themselves."""
    try:
        yield
    except (ValidationError, ParseError) as exc:
        raise type(exc)(f"[{name}] {exc}") from exc


def _load_graph(config: RunConfig) -> Graph:
    return load_edge_list(config.input_path, directed=config.directed, weighted=config.weighted)


def _select_sources(g: Graph, config: RunConfig) -> list[int]:
    if config.mode == "exhaustive":
        return list(range(g.vertex_count))
    return sample_sources(g, config.k, config.seed).sources


def _traversed_edges(db: TransactionDb) -> set[tuple[int, int]]:
    edges = set()
    for t in db.transactions:
        for u, v in zip(t, t[1:]):
            edges.add((u, v))
    return edges


def _metadata(config: RunConfig, min_support_absolute: int) -> dict:
    return {
        "mode": config.mode,
        "k": config.k if config.mode == "sample" else None,
        "seed": config.seed if config.mode == "sample" else None,
        "min_support": str(config.min_support),
        "min_support_absolute": min_support_absolute,
        "max_pattern_size": config.max_pattern_size,
        "ngram_sizes": list(config.ngram_sizes),
        "directed": config.directed,
        "weighted": config.weighted,
    }


def run_pipeline(config: RunConfig, echo=click.echo):
    """parse -> sources -> traversals -> n-grams -> FP-Growth -> report -> DOT."""
    with _stage("ingest"):
        g = _load_graph(config)
    with _stage("paths"):
        sources = _select_sources(g, config)
        db = run_traversals(g, sources, threads=config.threads)

    out = Path(config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "transactions.txt").write_text(serialize_db(db), encoding="utf-8", newline="\n")

    with _stage("mine"):
        canonicalize = not config.directed
        ngrams = {n: count_ngrams(db, n, canonicalize=canonicalize) for n in config.ngram_sizes}
        support = resolve_min_support(config.min_support, len(db.transactions))
        max_size = config.max_pattern_size or None  # 0 mines unbounded
        patterns = mine(build_fptree(db, support), support, max_size=max_size)
    with _stage("report"):
        report = build_report(g, db, ngrams, patterns, metadata=_metadata(config, support))
        write_report(report, out)

    dot = export_dot(g, highlight=_traversed_edges(db), max_vertices=config.dot_cap)
    (out / "traversal.dot").write_text(dot, encoding="utf-8", newline="\n")

    echo(f"graph          {g.vertex_count} vertices, {g.edge_count} edges")
    echo(f"fingerprint    {db.graph_fingerprint}")
    if config.mode == "sample":
        echo(f"sources        {len(sources)} sampled (k={config.k}, seed={config.seed})")
    else:
        echo(f"sources        all {len(sources)} vertices (exhaustive)")
    echo(f"transactions   {len(db.transactions)} ({db.unreachable_pairs} unreachable pairs)")
    for n in sorted(ngrams):
        echo(f"ngrams n={n}     {len(ngrams[n].entries)} distinct, {ngrams[n].total()} total")
    echo(f"patterns       {len(patterns)} (min support {support}, max size {config.max_pattern_size})")
    echo(f"clustering     {report.clustering_average:.6g}")
    echo(f"spearman rho   {report.spearman_rho:.6g}")
    for p in sorted(report.top_share):
        echo(f"top {p:g}% share  {report.top_share[p]:.6g}")
    echo(f"report         {out}")
    return report


def _graph_options(f):
    f = click.option("--input", "input_path", required=True, help="Edge-list file.")(f)
    f = click.option("--directed", is_flag=True, help="Treat edges as directed.")(f)
    f = click.option("--weighted", is_flag=True, help="Expect a third weight column.")(f)
    return f


def _traversal_options(f):
    f = click.option("--mode", type=click.Choice(["sample", "exhaustive"]), default="sample")(f)
    f = click.option("--k", type=int, default=100, help="Number of sampled sources.")(f)
    f = click.option("--seed", type=int, default=42, help="Sampling seed.")(f)
    f = click.option("--threads", type=int, default=1, help="Traversal parallelism.")(f)
    return f


def _mining_options(f):
    f = click.option("--min-support", default="0.01", help="Absolute count or fraction.")(f)
    f = click.option("--max-size", type=int, default=3,
                     help="Largest itemset mined (0 = unbounded).")(f)
    f = click.option("--ngrams", default="1,2,3", help="Comma-separated window sizes.")(f)
    return f


def _parse_ngrams(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise ValidationError(f"cannot parse --ngrams {text!r}") from None
    if not sizes or any(n < 1 for n in sizes):
        raise ValidationError(f"--ngrams must list integers >= 1, got {text!r}")
    return sizes


@click.group()
def cli():
    """Shortest-path transaction mining over edge-list graphs."""


@cli.command()
@_graph_options
@_traversal_options
@_mining_options
@click.option("--out", "out_dir", default=DEFAULT_OUT, help="Output directory.")
@click.option("--dot-cap", type=int, default=60, help="Max vertices in the DOT export.")
def pipeline(input_path, directed, weighted, mode, k, seed, threads,
             min_support, max_size, ngrams, out_dir, dot_cap):
    """Run the whole pipeline and write all report artifacts."""
    config = RunConfig(
        input_path=input_path, directed=directed, weighted=weighted, mode=mode,
        k=k, seed=seed, min_support=min_support, max_pattern_size=max_size,
        ngram_sizes=_parse_ngrams(ngrams), out_dir=out_dir, dot_cap=dot_cap,
        threads=threads,
    )
    run_pipeline(config)


@cli.command()
@_graph_options
def ingest(input_path, directed, weighted):
    """Parse and validate a graph, printing its shape and fingerprint."""
    g = load_edge_list(input_path, directed=directed, weighted=weighted)
    click.echo(f"vertices     {g.vertex_count}")
    click.echo(f"edges        {g.edge_count}")
    click.echo(f"directed     {g.directed}")
    click.echo(f"weighted     {g.weights is not None}")
    click.echo(f"fingerprint  {g.fingerprint()}")


@cli.command()
@_graph_options
@_traversal_options
@click.option("--out", "out_dir", default=DEFAULT_OUT, help="Output directory.")
def paths(input_path, directed, weighted, mode, k, seed, threads, out_dir):
    """Run traversals and write the transaction database file."""
    config = RunConfig(
        input_path=input_path, directed=directed, weighted=weighted,
        mode=mode, k=k, seed=seed, threads=threads, out_dir=out_dir,
    )
    g = _load_graph(config)
    db = run_traversals(g, _select_sources(g, config), threads=config.threads)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    target = out / "transactions.txt"
    target.write_text(serialize_db(db), encoding="utf-8", newline="\n")
    click.echo(f"transactions {len(db.transactions)} ({db.unreachable_pairs} unreachable pairs)")
    click.echo(f"written      {target}")


@cli.command("mine")
@click.option("--db", "db_path", required=True, help="Transaction file from 'paths'.")
@click.option("--directed", is_flag=True, help="Disable undirected n-gram pooling.")
@_mining_options
@click.option("--out", "out_dir", default=DEFAULT_OUT, help="Output directory.")
def mine_cmd(db_path, directed, min_support, max_size, ngrams, out_dir):
    """Mine frequent patterns and n-gram counts from a transaction file."""
    db = parse_db(Path(db_path).read_text(encoding="utf-8"))
    sizes = _parse_ngrams(ngrams)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for n in sizes:
        counts = count_ngrams(db, n, canonicalize=not directed)
        (out / f"ngram_{n}.csv").write_text(ngram_counts_csv(counts), encoding="utf-8", newline="\n")
    support = resolve_min_support(min_support, len(db.transactions))
    patterns = mine(build_fptree(db, support), support, max_size=max_size or None)
    (out / "patterns.csv").write_text(patterns_csv(patterns), encoding="utf-8", newline="\n")
    click.echo(f"patterns     {len(patterns)} (min support {support})")
    click.echo(f"written      {out}")


@cli.command()
@_graph_options
@click.option("--out", "out_dir", default=DEFAULT_OUT, help="Output directory.")
def stats(input_path, directed, weighted, out_dir):
    """Graph-only properties: degree histogram file plus clustering summary."""
    g = load_edge_list(input_path, directed=directed, weighted=weighted)
    hist = degree_histogram(g)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    lines = ["degree,count"] + [f"{d},{hist[d]}" for d in sorted(hist)]
    (out / "degree_hist.csv").write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    click.echo(f"vertices     {g.vertex_count}")
    click.echo(f"edges        {g.edge_count}")
    if not directed:
        click.echo(f"clustering   {clustering(g).average:.6g}")
    click.echo(f"written      {out / 'degree_hist.csv'}")


@cli.command("report")
@_graph_options
@_traversal_options
@_mining_options
@click.option("--db", "db_path", required=True, help="Transaction file from 'paths'.")
@click.option("--out", "out_dir", default=DEFAULT_OUT, help="Output directory.")
def report_cmd(input_path, directed, weighted, mode, k, seed, threads,
               min_support, max_size, ngrams, db_path, out_dir):
    """Join graph properties with traversal results and write all report files."""
    config = RunConfig(
        input_path=input_path, directed=directed, weighted=weighted, mode=mode,
        k=k, seed=seed, min_support=min_support, max_pattern_size=max_size,
        ngram_sizes=_parse_ngrams(ngrams), out_dir=out_dir, threads=threads,
    )
    g = _load_graph(config)
    db = parse_db(Path(db_path).read_text(encoding="utf-8"), expected_fingerprint=g.fingerprint())
    ngram_map = {n: count_ngrams(db, n, canonicalize=not directed) for n in config.ngram_sizes}
    support = resolve_min_support(min_support, len(db.transactions))
    patterns = mine(build_fptree(db, support), support, max_size=max_size or None)
    report = build_report(g, db, ngram_map, patterns, metadata=_metadata(config, support))
    files = write_report(report, out_dir)
    click.echo(f"spearman rho {report.spearman_rho:.6g}")
    for f in files:
        click.echo(f"written      {f}")


@cli.command("export-dot")
@_graph_options
@click.option("--db", "db_path", default=None, help="Highlight traversed edges from this file.")
@click.option("--dot-cap", type=int, default=60, help="Max vertices in the DOT export.")
@click.option("--out", "out_dir", default=DEFAULT_OUT, help="Output directory.")
def export_dot_cmd(input_path, directed, weighted, db_path, dot_cap, out_dir):
    """Write a Graphviz DOT view of the graph, highlighting traversed edges."""
    g = load_edge_list(input_path, directed=directed, weighted=weighted)
    highlight = None
    if db_path is not None:
        db = parse_db(Path(db_path).read_text(encoding="utf-8"), expected_fingerprint=g.fingerprint())
        highlight = _traversed_edges(db)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    target = out / "traversal.dot"
    target.write_text(export_dot(g, highlight=highlight, max_vertices=dot_cap),
                      encoding="utf-8", newline="\n")
    click.echo(f"written      {target}")


def main(argv=None) -> int:
    """Entry point with the documented exit-code mapping."""
    try:
        cli.main(args=argv, prog_name="pathmine", standalone_mode=False)
        return 0
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        click.echo(f"usage error: {exc.format_message()}", err=True)
        return 1
    except ValidationError as exc:
        click.echo(f"validation error: {exc}", err=True)
        return 1
    except ParseError as exc:
        click.echo(f"parse error: {exc}", err=True)
        return 2
    except FileNotFoundError as exc:
        click.echo(f"missing input file: {exc.filename or exc}", err=True)
        return 2
    except Exception as exc:
        click.echo(f"runtime error: {exc}", err=True)
        return 3


if __name__ == "__main__":
    sys.exit(main())
