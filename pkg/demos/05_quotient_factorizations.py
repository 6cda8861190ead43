"""Quotient reduction and admissible block factorizations.

The reduction C_m + C_{mn} -> C_m + C_m (coordinatewise mod m) has a cyclic
kernel of order n. Sequences over the big group can be split into size-m
blocks whose images under the reduction are zero-sum; the leftover block
then carries the residual image. This is the workhorse for transferring
structure between the quotient and the full group.
"""

from zerosum import (
    apply_hom,
    find_admissible_factorization,
    inductive_quotient,
    parse_sequence,
    sigma,
)

phi = inductive_quotient(2, 2)
print(f"reduction: {phi.source} -> {phi.target}, generator images {phi.images}")
kernel = [g for g in phi.source.elements() if phi.apply(g) == phi.target.zero()]
print(f"kernel: {kernel} (cyclic of order 2)")
print()

T = parse_sequence(phi.source, "[1,1] [0,1]^3")
print(f"T = {T}, image {apply_hom(phi, T)}")
blocks = find_admissible_factorization(2, 2, 1, T)
print("admissible factorization (first block is the residual one):")
for i, block in enumerate(blocks):
    image_sum = sigma(apply_hom(phi, block))
    print(f"  S_{i} = {block}   sum of image = {image_sum}")
print()

T = parse_sequence(phi.source, "[1,1]^4")
blocks = find_admissible_factorization(2, 2, 1, T)
print(f"T = {T} splits as {[str(b) for b in blocks]}")
print("(here even the residual block has zero-sum image; callers decide")
print(" what condition the residual must satisfy)")
print()

T = parse_sequence(phi.source, "[0,0] [0,1] [1,0] [1,1]")
print(f"T = {T}: all four images are distinct, so no block exists:")
print(f"  result = {find_admissible_factorization(2, 2, 1, T)}")
