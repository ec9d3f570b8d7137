"""Mine frequent vertex patterns from the shortest-path transactions.

Two complementary views: consecutive n-grams keep the order inside each
path (which road segments are shared), while FP-Growth itemsets ignore
order (which vertices co-occur anywhere on the same path).
"""

from karate import karate_club

from pathmine import (
    brute_force_frequent,
    build_fptree,
    count_ngrams,
    mine,
    run_traversals,
)

graph = karate_club()
db = run_traversals(graph, list(range(graph.vertex_count)))  # exhaustive
print(f"exhaustive transaction database: {len(db.transactions)} paths")

for n in (2, 3):
    counts = count_ngrams(db, n)
    top = sorted(counts.entries.items(), key=lambda kv: (-kv[1], kv[0]))[:5]
    print(f"\nmost-traversed {n}-vertex segments:")
    for gram, count in top:
        print(f"  {'-'.join(map(str, gram)):12s} {count} times")

min_support = len(db.transactions) // 20  # 5% of all paths
tree = build_fptree(db, min_support)
patterns = mine(tree, min_support, max_size=3)
print(f"\nFP-Growth: {len(patterns)} itemsets appear on >= {min_support} paths")
for p in [p for p in patterns if len(p.items) >= 2][:8]:
    print(f"  {p.items}  support {p.support}")

# The simple level-wise enumerator double-checks the miner on small inputs.
small = run_traversals(graph, [0, 33])
assert mine(build_fptree(small, 30), 30) == brute_force_frequent(small, 30, 10)
print("\nbrute-force enumerator agrees with FP-Growth on the 2-source database")
