"""Split n into positive integers and multiply: how big can the product get?

The answer prefers 3s: any summand of 5 or more loses to splitting off a
3, four 4s never beat pairs of 3s, and three 2s lose to two 3s.  This
script compares the closed form with an exhaustive search over integer
partitions, then shows the inverse pairing with separating covers.
"""

from miscover import max_partition_product, min_separating_sets
from miscover.oracles import brute_max_partition_product

print("n, best product, the closed form's shape")
for n in range(1, 13):
    value = max_partition_product(n)
    check = brute_max_partition_product(n)
    assert value == check
    i, r = divmod(n, 3)
    shape = {0: f"3^{i}", 1: f"4*3^{i - 1}", 2: f"2*3^{i}"}[r] if n > 1 else "1"
    print(f"{n:3d}  {value:6d}  {shape}")

print()
print("The function grows strictly and super-multiplicatively:")
for a, b in [(4, 5), (7, 6), (10, 10)]:
    lhs = max_partition_product(a) * max_partition_product(b)
    rhs = max_partition_product(a + b)
    print(f"  f({a})*f({b}) = {lhs}  <=  f({a + b}) = {rhs}")

print()
print("min_separating_sets is its left inverse: s(f(n)) = n")
for n in (1, 5, 9, 40, 100):
    m = max_partition_product(n)
    print(f"  n={n:3d}: f(n) = {m}, s(f(n)) = {min_separating_sets(m)}")

# the values stay exact far beyond 64-bit range
n = 123
print()
print(f"f({n}) = {max_partition_product(n)} (exact, = 3^41)")
