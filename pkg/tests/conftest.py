import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable

from pathmine import from_edges


def random_edges(rng, n, prob, weighted=False, max_w=10):
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < prob:
                if weighted:
                    edges.append((u, v, float(rng.randint(1, max_w))))
                else:
                    edges.append((u, v))
    return edges


def random_graph(rng, n, prob=0.2, weighted=False, max_w=10):
    return from_edges(n, random_edges(rng, n, prob, weighted, max_w))


def random_connected_graph(rng, n, extra_prob=0.15, weighted=False, max_w=10):
    """Random spanning tree plus extra edges: always connected."""
    edges = {}
    for v in range(1, n):
        u = rng.randrange(v)
        edges[(u, v)] = float(rng.randint(1, max_w)) if weighted else None
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_prob:
                edges[(u, v)] = float(rng.randint(1, max_w)) if weighted else None
    if weighted:
        return from_edges(n, [(u, v, w) for (u, v), w in edges.items()])
    return from_edges(n, list(edges))


@pytest.fixture
def p3():
    return from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def facebook_path():
    """SNAP facebook_combined.txt, when the user has supplied it."""
    import os

    candidates = []
    env = os.environ.get("PATHMINE_FACEBOOK_FILE")
    if env:
        candidates.append(Path(env))
    candidates.append(Path(__file__).parent.parent / "data" / "facebook_combined.txt")
    for path in candidates:
        if path.is_file():
            return path
    return None
