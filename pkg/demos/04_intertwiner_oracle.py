"""
The intertwiner cross-check
===========================

The polytabloid and web models are isomorphic irreducibles, so up to one
scalar there is exactly one map X between them commuting with every
adjacent transposition.  Stacking the linear conditions X A_i = B_i X
over all generators and computing the exact nullspace recovers that map
with no reference to crossing rewrites; after scaling its
(consecutive matching, interleaved tableau) entry to 1, it must equal
the transition matrix entry for entry.  It does.
"""

from tworow import intertwiner_oracle, transition_matrix
from tworow import specht, webs
from tworow.linalg import mat_mul

for n in (1, 2, 3, 4):
    oracle = intertwiner_oracle(n)
    direct = transition_matrix(n)
    print(f"n={n}: oracle equals the rewrite computation: {oracle == direct}")

# The commuting condition, spelled out at n=3: X is the transpose of the
# entry matrix (rows webs, columns tableaux).
n = 3
x = [list(col) for col in zip(*transition_matrix(n).entries)]
for i in range(1, 2 * n):
    a = specht.action_matrix(i, n)
    b = webs.action_matrix(i, n)
    print(f"  X A_{i} == B_{i} X:", mat_mul(x, a) == mat_mul(b, x))
