"""Integer complexity: writing m with as few 1s as possible.

c(10) = 7, for instance via (1+1+1)(1+1+1)+1.  The recurrence tries every
additive split and every factorization; minimal expressions convert to
graphs (sums become joins, products become disjoint unions) whose MIS
count recovers the value, and the largest integer of complexity n is the
maximum-product partition value again.
"""

from miscover import (
    complexity_csv,
    complexity_table,
    count_mis,
    format_expression,
    graph_from_expression,
    graph_to_text,
    max_partition_product,
    minimal_expression,
    parse_expression,
)

table = complexity_table(1000)
print("first rows of the table (m,c):")
print(complexity_csv(table, 12), end="")

print()
print("minimal expressions:")
for m in (6, 10, 11, 719, 1000):
    e = minimal_expression(m, table)
    print(f"  {m:5d} = {format_expression(e)}   ({e.ones} ones)")

print()
e = parse_expression("(1+1)((1+1)(1+1)+1)")
g = graph_from_expression(e)
print(f"the expression {format_expression(e)} (value {e.value}, {e.ones} ones)")
print(f"becomes a graph on {g.n} vertices with {count_mis(g)} MISes:")
print(graph_to_text(g), end="")

print()
print("largest integer needing exactly n ones vs. the partition bound:")
largest = {}
for m in range(1, 1001):
    largest[table[m]] = m
for n in range(1, 15):
    print(f"  n={n:2d}: {largest[n]:4d}  (bound {max_partition_product(n)})")
