"""Classifying extremal sequences against the two structural families.

Every ml-mzss over a rank-two group matches at least one family:

  type 1 builds on a basis {e1, e2}: one basis element appears with
  multiplicity one less than its order, and the remaining terms live in a
  coset of the cyclic group it generates;

  type 2 builds on a generating pair {g1, g2} that need not be a basis, with
  an exact (not just modular) constraint on the coset offsets.

The families overlap: the second sequence below has witnesses of both kinds,
and each witness regenerates the sequence exactly.
"""

from zerosum import classify, gen_type1, gen_type2, make_group, parse_sequence

G = make_group([2, 4])

for text in ("[0,1]^3 [1,2] [1,3]", "[0,1] [1,0] [1,1]^3"):
    S = parse_sequence(G, text)
    result = classify(G, S)
    print(f"{S}:")
    print(f"  type 1: {result.is_type1} ({len(result.type1_witnesses)} witnesses)")
    print(f"  type 2: {result.is_type2} ({len(result.type2_witnesses)} witnesses)")
    if result.type1_witnesses:
        w = result.type1_witnesses[0]
        print(f"  first type-1 witness: e1={w.e1} e2={w.e2} j={w.j} x={w.x}")
        assert gen_type1(G, w) == S
    if result.type2_witnesses:
        w = result.type2_witnesses[0]
        print(f"  first type-2 witness: g1={w.g1} g2={w.g2} s={w.s} x={w.x}")
        assert gen_type2(G, w) == S
    print("  every witness regenerates the sequence exactly")
    print()

print("A type-2 witness with s != 1 needs the coset condition m*g1 = m*g2;")
print("over C_2 + C_4, g1 = (1,1), g2 = (0,1) satisfies it:")
from zerosum import Type2Witness

S = gen_type2(G, Type2Witness(g1=(1, 1), g2=(0, 1), s=2, x=(1, 0)))
print(f"  generated: {S}")
print(f"  classified back: type2 = {classify(G, S).is_type2}")
