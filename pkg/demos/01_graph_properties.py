"""Parse a social graph and inspect its structure.

Zachary's karate club (34 members, 78 friendship ties) is small enough to
read whole, yet already shows the degree skew the toolkit is built around.
"""

from karate import karate_club

from pathmine import clustering, degree_histogram, export_dot, parse_edge_list, to_edge_list

graph = karate_club()
print(f"karate club: {graph.vertex_count} vertices, {graph.edge_count} edges")

degrees = [(graph.degree(v), v) for v in range(graph.vertex_count)]
print("\nfive best-connected members:")
for degree, v in sorted(degrees, reverse=True)[:5]:
    print(f"  member {v:2d}  degree {degree}")

print("\ndegree histogram (degree -> members):")
hist = degree_histogram(graph)
for degree in sorted(hist):
    print(f"  {degree:2d} {'#' * hist[degree]}")

stats = clustering(graph)
print(f"\naverage clustering coefficient: {stats.average:.4f}")
best = sorted(range(graph.vertex_count), key=lambda v: -stats.local[v])[:3]
print("most clustered members:", best)

# The canonical edge-list text round-trips through the parser unchanged.
assert parse_edge_list(to_edge_list(graph)) == graph

print("\nDOT export of the 10 biggest hubs (render with graphviz):")
print(export_dot(graph, max_vertices=10))
