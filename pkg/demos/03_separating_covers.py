"""Separating covers and their two-way correspondence with graphs.

A family of subsets of {0..m-1} is a separating cover when it covers the
ground set and every pair of elements sits in two disjoint family
members.  Each graph's MIS family induces such a cover (one set per
vertex), and conversely the disjointness graph of any cover has at least
as many MISes as there are elements, which is exactly why the minimum
cover size is the inverse of the maximum MIS count.
"""

from miscover import (
    SeparatingCover,
    count_mis,
    cover_from_graph,
    extremal_graph,
    graph_from_cover,
    min_separating_sets,
    minimal_cover,
    validate_cover,
)

good = SeparatingCover(2, [{0}, {1}])
bad = SeparatingCover(2, [{0, 1}])
print("two singletons on two elements:", validate_cover(good))
print("one doubleton on two elements: ", validate_cover(bad))

print()
g = extremal_graph(5)  # a triangle plus an edge: 6 MISes
cover = cover_from_graph(g)
print(f"cover from the 5-vertex extremal graph ({count_mis(g)} MISes):")
for i in range(len(cover.sets)):
    print(f"  set {i}: {sorted(cover.set_members(i))}")
print("valid:", validate_cover(cover).valid)

back = graph_from_cover(cover)
print(f"its disjointness graph regains {count_mis(back)} >= 6 MISes")

print()
print("m, minimum sets needed, sets used by minimal_cover(m)")
for m in (1, 2, 3, 4, 6, 9, 10, 27, 100):
    built = minimal_cover(m)
    assert validate_cover(built).valid
    print(f"{m:4d}  {min_separating_sets(m):3d}  {len(built.sets):3d}")
