"""
Two Catalan families and the pairing between them
==================================================

Standard fillings of the 2 x n rectangle and noncrossing perfect
matchings on 1..2n are counted by the same Catalan numbers, and the
opener/closer reading of a tableau turns one into the other.
"""

from tworow import (
    catalan,
    enumerate_syt,
    enumerate_webs,
    tableau_to_web,
)

for n in range(1, 7):
    print(f"n={n}: {len(enumerate_syt(n))} tableaux, "
          f"{len(enumerate_webs(n))} matchings, Catalan={catalan(n)}")

# The five objects on each side at n = 3, in the canonical order (the
# interleaved tableau / consecutive matching come first).
print("\nThe n=3 families, paired by reading the first row as openers:")
for t in enumerate_syt(3):
    w = tableau_to_web(t)
    pairs = " ".join(f"{a}~{b}" for a, b in w.pairs())
    print(f"  {t.rows[0]} / {t.rows[1]}   <->   {pairs}")

# The pairing is a bijection: every matching shows up exactly once.
image = {tableau_to_web(t) for t in enumerate_syt(3)}
print("\npairing is a bijection:", image == set(enumerate_webs(3)))
