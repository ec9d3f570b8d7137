import math
import random

import pytest

from pathmine import (
    ParseError,
    TransactionDb,
    ValidationError,
    count_ngrams,
    from_edges,
    ngram_counts_csv,
    parse_db,
    run_traversals,
    serialize_db,
    validate_db,
    vertex_frequency,
)
from conftest import random_connected_graph
from oracles import floyd_warshall


def db_of(*transactions):
    return TransactionDb(transactions=[tuple(t) for t in transactions])


def random_db(rng, max_transactions=30, max_item=20):
    transactions = []
    for _ in range(rng.randint(0, max_transactions)):
        length = rng.randint(2, min(8, max_item))
        transactions.append(tuple(rng.sample(range(max_item), length)))
    return TransactionDb(transactions=transactions)


class TestCountNgrams:
    def test_bigrams(self):
        counts = count_ngrams(db_of([0, 1, 2]), 2)
        assert counts.entries == {(0, 1): 1, (1, 2): 1}

    def test_canonicalization_reverses_tuple(self):
        counts = count_ngrams(db_of([3, 1, 2]), 2)
        assert counts.entries == {(1, 3): 1, (1, 2): 1}

    def test_reversal_pooling(self):
        counts = count_ngrams(db_of([0, 1, 2], [2, 1, 0]), 3)
        assert counts.entries == {(0, 1, 2): 2}

    def test_no_canonicalization(self):
        counts = count_ngrams(db_of([2, 1, 0]), 2, canonicalize=False)
        assert counts.entries == {(2, 1): 1, (1, 0): 1}

    def test_window_longer_than_transaction(self):
        counts = count_ngrams(db_of([0, 1]), 3)
        assert counts.entries == {}

    def test_n_zero_rejected(self):
        with pytest.raises(ValidationError):
            count_ngrams(db_of([0, 1]), 0)

    def test_window_count_conservation(self, rng):
        for _ in range(20):
            db = random_db(rng)
            for n in (1, 2, 3, 4):
                counts = count_ngrams(db, n, canonicalize=rng.random() < 0.5)
                expected = sum(max(0, len(t) - n + 1) for t in db.transactions)
                assert counts.total() == expected

    def test_canonicalization_idempotent(self, rng):
        for _ in range(200):
            gram = tuple(rng.sample(range(30), rng.randint(1, 4)))
            canonical = min(gram, gram[::-1])
            assert min(canonical, canonical[::-1]) == canonical

    def test_ngrams_are_shortest_subpaths(self, rng):
        # Subpaths of shortest paths are shortest paths.
        for _ in range(8):
            n = rng.randint(3, 14)
            g = random_connected_graph(rng, n, weighted=rng.random() < 0.5)
            triples = [(u, v, 1.0 if w is None else w) for u, v, w in g.edges()]
            oracle = floyd_warshall(n, triples)
            db = run_traversals(g, list(range(n)))
            for size in (2, 3):
                for gram in count_ngrams(db, size, canonicalize=False).entries:
                    cost = sum(
                        oracle[u][v] for u, v in zip(gram, gram[1:])
                    )
                    assert cost == oracle[gram[0]][gram[-1]]


class TestVertexFrequency:
    def test_simple(self):
        assert vertex_frequency(db_of([0, 1, 2], [0, 1])) == {0: 2, 1: 2, 2: 1}

    def test_empty_db(self):
        assert vertex_frequency(TransactionDb(transactions=[])) == {}

    def test_p3_exhaustive(self, p3):
        # Six hand-enumerable shortest paths on 0-1-2.
        db = run_traversals(p3, [0, 1, 2])
        assert vertex_frequency(db) == {1: 6, 0: 4, 2: 4}

    def test_matches_unigram_counts(self, rng):
        for _ in range(10):
            db = random_db(rng)
            freq = vertex_frequency(db)
            unigrams = count_ngrams(db, 1).entries
            assert freq == {v: c for (v,), c in unigrams.items()}
            assert sum(freq.values()) == sum(len(t) for t in db.transactions)


class TestSerialization:
    def test_format(self):
        db = TransactionDb(
            transactions=[(0, 1)], source_count=1, unreachable_pairs=0,
            graph_fingerprint="abcd",
        )
        assert serialize_db(db) == "%sources 1\n%unreachable 0\n%fp abcd\n0 1\n"

    def test_round_trip(self, rng):
        for _ in range(20):
            db = random_db(rng)
            db.source_count = rng.randint(0, 10)
            db.unreachable_pairs = rng.randint(0, 10)
            db.graph_fingerprint = f"{rng.getrandbits(64):016x}"
            assert parse_db(serialize_db(db)) == db

    def test_round_trip_without_fingerprint(self):
        db = TransactionDb(transactions=[(0, 1)])
        assert parse_db(serialize_db(db)) == db

    def test_empty_transaction_line(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_db("%sources 0\n\n0 1\n")

    def test_single_vertex_line_rejected(self):
        with pytest.raises(ParseError):
            parse_db("7\n")

    def test_non_integer_rejected(self):
        with pytest.raises(ParseError):
            parse_db("0 x\n")

    def test_repeated_vertex_rejected(self):
        with pytest.raises(ParseError):
            parse_db("0 1 0\n")

    def test_fingerprint_mismatch(self):
        text = serialize_db(
            TransactionDb(transactions=[(0, 1)], graph_fingerprint="aaaa")
        )
        with pytest.raises(ParseError, match="fingerprint"):
            parse_db(text, expected_fingerprint="bbbb")
        assert parse_db(text, expected_fingerprint="aaaa").transactions == [(0, 1)]


class TestValidateDb:
    def test_accepts_traversal_output(self, p3):
        validate_db(run_traversals(p3, [0, 1, 2]), p3)

    def test_rejects_out_of_range(self, p3):
        with pytest.raises(ValidationError):
            validate_db(db_of([0, 7]), p3)

    def test_rejects_non_edges(self, p3):
        with pytest.raises(ValidationError):
            validate_db(db_of([0, 2]), p3)


class TestNgramCsv:
    def test_sorted_by_count_then_items(self):
        db = db_of([0, 1, 2], [0, 1], [5, 6])
        csv = ngram_counts_csv(count_ngrams(db, 2))
        assert csv.splitlines() == [
            "n,items,count",
            "2,0|1,2",
            "2,1|2,1",
            "2,5|6,1",
        ]
