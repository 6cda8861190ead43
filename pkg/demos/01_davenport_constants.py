"""Davenport constants across a family of rank-two groups.

For C_m + C_{mn} the constant is m + mn - 1: the longest minimal zero-sum
sequence has exactly that length, and the search below recovers the value by
exhausting all zero-sum-free sequences. The witness column shows one minimal
zero-sum sequence of maximal length for each group.
"""

from zerosum import davenport, make_group

print(f"{'group':>8} {'D':>4} {'m+mn-1':>7} {'nodes':>8}  witness")
for m, mn in [(2, 2), (2, 4), (2, 6), (3, 3), (3, 6), (4, 4), (2, 8), (5, 5), (3, 9)]:
    G = make_group([m, mn])
    result = davenport(G)
    print(
        f"{str(G):>8} {result.d:>4} {m + mn - 1:>7} {result.nodes:>8}  "
        f"{result.witness}"
    )

print()
print("Cyclic groups give D(C_n) = n:")
for n in (6, 10, 25, 64):
    result = davenport(make_group([n]))
    print(f"  D(C_{n}) = {result.d}")

print()
print("The search is rank-agnostic even though the closed form is not:")
result = davenport(make_group([2, 2, 2]))
print(f"  D(C_2^3) = {result.d}, witness {result.witness}")
