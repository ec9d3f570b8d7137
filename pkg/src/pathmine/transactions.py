"""Transaction database over shortest paths and consecutive n-gram counts."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import ParseError, ValidationError

__all__ = [
    "PathTransaction",
    "TransactionDb",
    "NGramCounts",
    "count_ngrams",
    "vertex_frequency",
    "serialize_db",
    "parse_db",
    "ngram_counts_csv",
    "validate_db",
]

# One shortest path, source first: >= 2 distinct vertices, consecutive
# pairs are graph edges.
PathTransaction = tuple[int, ...]


@dataclass
class TransactionDb:
    """Ordered shortest-path transactions plus traversal bookkeeping."""

    transactions: list[PathTransaction]
    source_count: int = 0
    unreachable_pairs: int = 0
    graph_fingerprint: str = ""


@dataclass
class NGramCounts:
    """Occurrence counts of length-n consecutive vertex windows."""

    n: int
    entries: dict[tuple[int, ...], int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.entries.values())


def count_ngrams(db: TransactionDb, n: int, canonicalize: bool = True) -> NGramCounts:
    """Slide a length-n window over each transaction and count occurrences.

    With ``canonicalize`` (the default, for undirected graphs) a window is
    replaced by its reversal when that is lexicographically smaller, so the
    same undirected segment traversed in either direction pools its counts.
    """
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    counts: Counter[tuple[int, ...]] = Counter()
    for t in db.transactions:
        for i in range(len(t) - n + 1):
            gram = t[i : i + n]
            if canonicalize:
                rev = gram[::-1]
                if rev < gram:
                    gram = rev
            counts[gram] += 1
    return NGramCounts(n=n, entries=dict(counts))


def vertex_frequency(db: TransactionDb) -> dict[int, int]:
    """Per-vertex transaction occurrence counts (paths are simple, so window
    counts and containment counts coincide)."""
    counts: Counter[int] = Counter()
    for t in db.transactions:
        counts.update(t)
    return dict(counts)


def serialize_db(db: TransactionDb) -> str:
    """Line-oriented text form: '%' header lines, then one transaction per line."""
    lines = [
        f"%sources {db.source_count}",
        f"%unreachable {db.unreachable_pairs}",
    ]
    if db.graph_fingerprint:
        lines.append(f"%fp {db.graph_fingerprint}")
    for t in db.transactions:
        lines.append(" ".join(str(v) for v in t))
    return "\n".join(lines) + "\n"


def parse_db(text: str, expected_fingerprint: str | None = None) -> TransactionDb:
    """Inverse of serialize_db. Rejects malformed lines and, when an expected
    graph fingerprint is given, headers naming a different graph."""
    source_count = 0
    unreachable = 0
    fingerprint = ""
    transactions: list[PathTransaction] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("%"):
            tokens = line[1:].split()
            if len(tokens) != 2:
                raise ParseError(f"malformed header {line!r}", lineno)
            key, value = tokens
            if key == "sources":
                source_count = _int_field(value, line, lineno)
            elif key == "unreachable":
                unreachable = _int_field(value, line, lineno)
            elif key == "fp":
                fingerprint = value
            else:
                raise ParseError(f"unknown header {key!r}", lineno)
            continue
        if not line:
            raise ParseError("empty transaction line", lineno)
        try:
            vertices = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise ParseError(f"non-integer vertex id in {line!r}", lineno) from None
        if len(vertices) < 2:
            raise ParseError("transaction must contain at least 2 vertices", lineno)
        if len(set(vertices)) != len(vertices):
            raise ParseError(f"repeated vertex in transaction {line!r}", lineno)
        transactions.append(vertices)
    if expected_fingerprint is not None and fingerprint != expected_fingerprint:
        raise ParseError(
            f"graph fingerprint mismatch: file has {fingerprint!r}, "
            f"expected {expected_fingerprint!r}"
        )
    return TransactionDb(
        transactions=transactions,
        source_count=source_count,
        unreachable_pairs=unreachable,
        graph_fingerprint=fingerprint,
    )


def _int_field(value: str, line: str, lineno: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"non-integer header value in {line!r}", lineno) from None


def ngram_counts_csv(counts: NGramCounts) -> str:
    """CSV rows ``n,items,count`` sorted by count descending, then items ascending."""
    rows = sorted(counts.entries.items(), key=lambda kv: (-kv[1], kv[0]))
    lines = ["n,items,count"]
    for items, c in rows:
        lines.append(f"{counts.n},{'|'.join(str(v) for v in items)},{c}")
    return "\n".join(lines) + "\n"


def validate_db(db: TransactionDb, g) -> None:
    """Check every transaction against a Graph: ids in range, simple, edge-valid."""
    n = g.vertex_count
    for t in db.transactions:
        if len(t) < 2:
            raise ValidationError(f"transaction {t} shorter than 2 vertices")
        if len(set(t)) != len(t):
            raise ValidationError(f"transaction {t} repeats a vertex")
        for v in t:
            if not 0 <= v < n:
                raise ValidationError(f"vertex {v} out of range [0, {n})")
        for u, v in zip(t, t[1:]):
            if not g.has_edge(u, v):
                raise ValidationError(f"transaction {t} uses missing edge ({u}, {v})")
