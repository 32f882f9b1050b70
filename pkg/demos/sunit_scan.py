#!/usr/bin/env python
"""Count solutions of a linear equation inside a finitely generated group."""
import fewprimes as fp

# the group generated by 2, 3 and -1
spec = fp.GroupSpec([2, 3])
print(spec.rank, spec.primes)

# elements with exponents in [-2, 2]
box = fp.ExponentBox(2)
elems = fp.enumerate_group(spec, box)
print(len(elems), box.size(spec))

# membership works for any rational
print(fp.group_membership(12, spec), fp.group_membership(5, spec))

# x + y = 1: the classic unit equation
eq = fp.EquationInstance(1, [1, 1])
res = fp.count_nondegenerate_solutions(eq, spec, box)
print("nondegenerate", res.nondegenerate, "degenerate", res.degenerate)
print(sorted(res.solutions)[:5])

# meet-in-the-middle agrees with the direct enumeration
naive = fp.count_nondegenerate_solutions(eq, spec, box, method="naive")
print(naive.nondegenerate == res.nondegenerate)

# grow the box and watch the count settle
scan = fp.stabilization_scan(eq, spec, range(1, 7))
print(scan.counts)
print("monotone", scan.monotone, "plateau from H =", scan.plateau_H)
print(scan.to_csv())

# a quotient graph on a small set: edges b -> b' when b/b' lies in the group
B = fp.FiniteSet([1, 2, 3, 5, 6, 10, 15])
g = fp.quotient_graph(B, spec, box, 1)
print(g.edge_count, g.max_out_degree)
