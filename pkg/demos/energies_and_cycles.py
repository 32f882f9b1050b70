#!/usr/bin/env python
"""Walk through sumsets, product sets and energies on a few small sets.

Run it as a script, or paste it into a REPL a few lines at a time.
"""
from fractions import Fraction

import fewprimes as fp

# A geometric progression has a tiny product set and a large sumset
G = fp.geometric(2, 12)
print(len(G), len(fp.sumset(G, G)), fp.product_set_size(G, G))

# and an arithmetic progression goes the other way
P = fp.FiniteSet(range(1, 13))
print(len(P), len(fp.sumset(P, P)), fp.product_set_size(P, P))

# rationals are fine too; everything is exact
R = fp.FiniteSet([Fraction(1, 2), Fraction(2, 3), 1, 3])
print(fp.sumset(R, R).elements)

# E(A,B) counts a1 - a2 = b1 - b2; higher energies count m-fold coincidences
for m in (1, 2, 3):
    print("E_%d(P) =" % (2 * m), fp.higher_energy(P, m).value)

# the convolution behind it is an ordinary Counter
conv = fp.convolve(P, P)
print(conv.most_common(3))

# Hoelder: |3A| E_6(A) >= |A|^6, checked exactly
rep = fp.check_holder_energy(P, 3)
print(rep.name, rep.holds)

# even cycles in the bipartite "a + b in C" graph, via the biadjacency matrix
A = fp.FiniteSet(range(6))
B = fp.FiniteSet(range(0, 12, 2))
C = fp.FiniteSet(range(0, 9))
for k in (2, 3):
    fast = fp.cycle_homomorphism_count(A, B, C, k)
    slow = fp.cycle_homomorphism_count_brute(A, B, C, k)
    print("C_%d homomorphisms:" % (2 * k), fast, fast == slow)

# the two explicit steps behind the cycle bound; the last row is only reported
for r in fp.check_shkredov_steps(A, B, C, 2):
    print(r.name, r.holds, "(asserted)" if r.assertion else "(report)")

# a popular set of sums and its energy bound
pop = fp.popular_set(P, "sums")
print(len(pop.C), pop.K, [c.holds for c in pop.checks])
