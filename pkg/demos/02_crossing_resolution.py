"""
Resolving crossings
===================

A crossing pair a < b < c < d (a~c, b~d) in a perfect matching can be
reconnected in the two planar ways, (a~b, c~d) and (a~d, b~c); both have
strictly fewer crossings, so repeating this expands any matching as a
sum of noncrossing ones with nonnegative integer coefficients.  The
expansion is independent of which crossing is rewritten first, and it
agrees with exact polynomial arithmetic on products of 2x2 minors.
"""

import random

from tworow import Matching, crossing_pairs
from tworow.minors import expand_in_web_basis, minor_product
from tworow.webs import resolve_crossings

crossed = Matching.from_pairs([(1, 4), (2, 5), (3, 6)])
print("matching:", " ".join(f"{a}~{b}" for a, b in crossed.pairs()))
print("crossing quadruples:", crossing_pairs(crossed))

expansion = resolve_crossings(crossed)
print("\nexpansion into noncrossing matchings:")
for m, c in sorted(expansion.items(), key=lambda kv: kv[0].partner):
    print(f"  {c} * ({' '.join(f'{a}~{b}' for a, b in m.pairs())})")

# Rewrite in a random order instead of the default lexicographic one;
# the result is the same vector.
rng = random.Random(42)
randomized = resolve_crossings(crossed, pick=rng.choice, memo={})
print("\nrandom rewrite order gives the same expansion:", randomized == expansion)

# Independent check: expand the product of the pair minors of the
# matching over the minor products of noncrossing matchings, by exact
# linear algebra on the monomial coefficients.
oracle = expand_in_web_basis(minor_product(crossed), 3)
print("polynomial expansion agrees:", oracle == expansion)
