"""Turn shortest paths into a transaction database.

Every source-to-target shortest path is one transaction: an ordered vertex
sequence. Ties between equal-cost paths are broken deterministically (the
smallest-id optimal predecessor wins), so the database is reproducible.
"""

from karate import karate_club

from pathmine import (
    reconstruct_path,
    run_traversals,
    sample_sources,
    serialize_db,
    sssp,
    vertex_frequency,
)

graph = karate_club()

# One single-source run, read a few paths off the parent tree.
result = sssp(graph, 16)
print("paths from member 16:")
for target in (26, 14, 9):
    print(f"  to {target:2d}: {reconstruct_path(result, target)}")

# Sampled multi-source traversal: the K-sources variant of the pipeline.
sample = sample_sources(graph, k=5, seed=42)
print(f"\nsampled sources (seed 42): {sample.sources}")
db = run_traversals(graph, sample.sources)
print(f"transactions: {len(db.transactions)}, unreachable pairs: {db.unreachable_pairs}")

print("\nfirst five transactions:")
for t in db.transactions[:5]:
    print(f"  {t}")

freq = vertex_frequency(db)
top = sorted(freq.items(), key=lambda kv: -kv[1])[:5]
print("\nmembers on the most shortest paths:")
for v, count in top:
    print(f"  member {v:2d}  on {count} of {len(db.transactions)} paths "
          f"(degree {graph.degree(v)})")

# The text serialization is what the CLI's 'paths' stage writes.
print("\nserialized header:")
print("\n".join(serialize_db(db).splitlines()[:3]))
