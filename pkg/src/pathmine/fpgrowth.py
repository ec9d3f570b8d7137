"""Frequent unordered vertex itemsets via FP-Growth.

Transactions are treated as item sets (paths are simple, so duplicates cannot
occur). Items are ranked by descending global support with ties toward the
smaller vertex id; transactions are reordered by that ranking before prefix
insertion, which makes tree shape and mining output reproducible. Mining uses
the baseline recursion: single-item conditional pattern bases with fully
rebuilt conditional trees.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ValidationError
from .transactions import TransactionDb

__all__ = [
    "FpNode",
    "FpTree",
    "FrequentPattern",
    "build_fptree",
    "mine",
    "brute_force_frequent",
    "patterns_csv",
]

ROOT = -1  # parent marker and pseudo-item of the root node

BRUTE_FORCE_MAX_ITEMS = 15


@dataclass
class FpNode:
    item: int
    count: int
    parent: int
    children: dict[int, int] = field(default_factory=dict)


@dataclass
class HeaderEntry:
    support: int
    nodes: list[int] = field(default_factory=list)


@dataclass
class FpTree:
    """Prefix tree over support-ordered transactions, with a header table.

    ``nodes[0]`` is the root; ``header`` maps each surviving item to its total
    support and the arena indices of all nodes carrying it (insertion order);
    ``item_order`` maps item -> rank (0 = most frequent).
    """

    nodes: list[FpNode]
    header: dict[int, HeaderEntry]
    item_order: dict[int, int]
    min_support: int

    def insert(self, items: Sequence[int], count: int) -> None:
        """Insert a support-ordered transaction, accumulating shared prefixes."""
        cur = 0
        for item in items:
            nxt = self.nodes[cur].children.get(item)
            if nxt is None:
                nxt = len(self.nodes)
                self.nodes.append(FpNode(item=item, count=0, parent=cur))
                self.nodes[cur].children[item] = nxt
                self.header[item].nodes.append(nxt)
            self.nodes[nxt].count += count
            cur = nxt

    def prefix_path(self, node: int) -> list[int]:
        """Items on the path from a node's parent up to (excluding) the root."""
        items = []
        cur = self.nodes[node].parent
        while cur != 0:
            items.append(self.nodes[cur].item)
            cur = self.nodes[cur].parent
        return items


def build_fptree(db: TransactionDb, min_support: int) -> FpTree:
    """Two-pass construction: count supports, drop infrequent items, insert
    the reordered remainder of each transaction."""
    if min_support < 1:
        raise ValidationError(f"min_support must be >= 1, got {min_support}")
    return _build(((tuple(t), 1) for t in db.transactions), min_support)


def _build(weighted_transactions: Iterable[tuple[tuple[int, ...], int]], min_support: int) -> FpTree:
    rows = list(weighted_transactions)
    support: Counter[int] = Counter()
    for items, count in rows:
        for item in items:
            support[item] += count

    frequent = {i: c for i, c in support.items() if c >= min_support}
    ranking = sorted(frequent, key=lambda i: (-frequent[i], i))
    item_order = {item: rank for rank, item in enumerate(ranking)}

    tree = FpTree(
        nodes=[FpNode(item=ROOT, count=0, parent=ROOT)],
        header={i: HeaderEntry(support=frequent[i]) for i in ranking},
        item_order=item_order,
        min_support=min_support,
    )
    for items, count in rows:
        kept = sorted((i for i in items if i in frequent), key=item_order.__getitem__)
        if kept:
            tree.insert(kept, count)
    return tree


@dataclass(frozen=True, order=True)
class FrequentPattern:
    """An itemset (ascending vertex ids) with its exact transaction support."""

    items: tuple[int, ...]
    support: int


def mine(tree: FpTree, min_support: int, max_size: int | None = None) -> list[FrequentPattern]:
    """Emit every itemset with support >= min_support (size-capped when asked),
    each exactly once, sorted by (size, -support, items)."""
    if min_support != tree.min_support:
        raise ValidationError(
            f"min_support {min_support} does not match tree threshold {tree.min_support}"
        )
    if max_size is not None and max_size < 1:
        raise ValidationError(f"max_size must be >= 1, got {max_size}")
    out: list[FrequentPattern] = []
    _mine_into(tree, (), max_size, out)
    return _sorted_patterns(out)


def _mine_into(
    tree: FpTree,
    suffix: tuple[int, ...],
    max_size: int | None,
    out: list[FrequentPattern],
) -> None:
    # Least-frequent items first: their conditional bases are smallest.
    for item in sorted(tree.header, key=lambda i: -tree.item_order[i]):
        entry = tree.header[item]
        pattern = tuple(sorted((item,) + suffix))
        out.append(FrequentPattern(items=pattern, support=entry.support))
        if max_size is not None and len(pattern) >= max_size:
            continue
        base = []
        for node in entry.nodes:
            path = tree.prefix_path(node)
            if path:
                base.append((tuple(path), tree.nodes[node].count))
        if base:
            conditional = _build(base, tree.min_support)
            if conditional.header:
                _mine_into(conditional, pattern, max_size, out)


def _sorted_patterns(patterns: list[FrequentPattern]) -> list[FrequentPattern]:
    return sorted(patterns, key=lambda p: (len(p.items), -p.support, p.items))


def brute_force_frequent(
    db: TransactionDb, min_support: int, max_size: int
) -> list[FrequentPattern]:
    """Level-wise enumeration with exact support counting; the mining oracle.

    Guarded: refuses item universes above BRUTE_FORCE_MAX_ITEMS frequent items.
    Output contract and ordering match :func:`mine`.
    """
    if min_support < 1:
        raise ValidationError(f"min_support must be >= 1, got {min_support}")
    if max_size < 1:
        raise ValidationError(f"max_size must be >= 1, got {max_size}")
    tsets = [frozenset(t) for t in db.transactions]
    support: Counter[int] = Counter()
    for t in tsets:
        support.update(t)
    items = sorted(i for i, c in support.items() if c >= min_support)
    if len(items) > BRUTE_FORCE_MAX_ITEMS:
        raise ValidationError(
            f"item universe too large for brute force: {len(items)} frequent items "
            f"(limit {BRUTE_FORCE_MAX_ITEMS})"
        )
    out: list[FrequentPattern] = []
    previous: set[tuple[int, ...]] = set()
    for size in range(1, max_size + 1):
        current: set[tuple[int, ...]] = set()
        for candidate in combinations(items, size):
            if size > 1 and any(
                sub not in previous for sub in combinations(candidate, size - 1)
            ):
                continue  # anti-monotone prune
            cset = frozenset(candidate)
            count = sum(1 for t in tsets if cset <= t)
            if count >= min_support:
                current.add(candidate)
                out.append(FrequentPattern(items=candidate, support=count))
        if not current:
            break
        previous = current
    return _sorted_patterns(out)


def patterns_csv(patterns: list[FrequentPattern]) -> str:
    """CSV rows ``support,size,items`` in mine's output order."""
    lines = ["support,size,items"]
    for p in patterns:
        lines.append(f"{p.support},{len(p.items)},{'|'.join(str(v) for v in p.items)}")
    return "\n".join(lines) + "\n"
