"""Counting maximal independent sets: the two laws and the extremal graphs.

A maximal independent set (MIS) cannot absorb any further vertex.  Unions
of graphs multiply MIS counts, joins add them, and among all n-vertex
graphs the count is maximized by disjoint unions of triangles (with an
edge, two edges, or a K4 patching up n mod 3).
"""

from miscover import (
    Variant,
    complete_graph,
    count_mis,
    cycle_graph,
    disjoint_union,
    enumerate_mis,
    extremal_graph,
    from_edges,
    join,
    max_partition_product,
    perrin,
)

path = from_edges(3, [(0, 1), (1, 2)])
print("MISes of the path 0-1-2:", enumerate_mis(path))
print("MISes of K_4:", enumerate_mis(complete_graph(4)))

print()
k3 = complete_graph(3)
print("disjoint unions multiply:", count_mis(disjoint_union(k3, k3)), "= 3*3")
print("joins add:", count_mis(join(k3, k3)), "= 3+3 (the join of K_3s is K_6)")

print()
print("n, MIS count of the extremal graph, maximum-product partition value")
for n in range(1, 16):
    g = extremal_graph(n)
    print(f"{n:3d}  {count_mis(g):5d}  {max_partition_product(n):5d}")

print()
print("for n = 3i+1 there are two extremal shapes with the same count:")
for variant in (Variant.TWO_EDGES, Variant.K4):
    g = extremal_graph(7, variant)
    print(f"  {variant.value:10s} -> edges {sorted(g.edges())}, {count_mis(g)} MISes")

print()
print("cycle MIS counts follow the Perrin recurrence P(j) = P(j-2) + P(j-3):")
row = [count_mis(cycle_graph(j)) for j in range(3, 16)]
print("  cycles :", row)
print("  perrin :", [perrin(j) for j in range(3, 16)])

# a 120-vertex extremal graph still counts exactly: 40 triangles
print()
print("count for the 120-vertex extremal graph:", count_mis(extremal_graph(120)))
