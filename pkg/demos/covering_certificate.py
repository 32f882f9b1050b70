#!/usr/bin/env python
"""Build a covering certificate for two sets with few prime factors."""
import json
from fractions import Fraction

import fewprimes as fp

# each element has at most k (resp. l) prime factors from the first 8 primes
k, l = 2, 2
A = fp.random_few_prime(pool=fp.PrimePool.first(8), k=k, e_max=3, size=40, seed=1)
B = fp.random_few_prime(pool=fp.PrimePool.first(8), k=l, e_max=2, size=12, seed=2)
print(len(A), len(B), fp.product_set_size(A, B))

# which primes show up most often among the good pairs?
S, checks = fp.popular_primes(A, B, k, l)
print("popular primes:", S)

# the greedy chain picks primes one at a time and shrinks A as it goes
S_chain, A_prime, chain_checks = fp.greedy_prime_chain(A, B, k, l)
print("chain:", S_chain, "surviving:", len(A_prime))

# the full pipeline returns a certificate with every inequality it relied on
cert = fp.cover_pipeline(A, B, k, l)
print("rank", cert.rank, "dilates", cert.M, "degenerate", cert.degenerate)
for c in cert.checks:
    print(" ", c.name, c.holds)

# L <= 1 means the bound is vacuous, which is common for random sets
print(cert.params["L"])

# the certificate is plain data
text = cert.to_json()
print(json.loads(text)["S"])

# a dense box of exponents keeps |AB| small, so L climbs above 1
D = fp.FiniteSet(Fraction(2) ** i for i in range(-40, 40))
cert2 = fp.cover_pipeline(D, D, 1, 1)
print("dense box: L =", cert2.params["L"], "degenerate", cert2.degenerate, "all hold", cert2.all_hold)
