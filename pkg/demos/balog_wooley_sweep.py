#!/usr/bin/env python
"""The Balog-Wooley family and a small exponent sweep."""
import fewprimes as fp
from fewprimes.cli import run_sweep, sweep_jobs

# {1..M} times {M, M^2, ..., M^N}
A = fp.balog_wooley(6, 3)
print(len(A), 6 * 3 - 3 + 1)

for r in fp.check_balog_wooley(6, 3):
    print(r.name, r.holds, r.lhs, r.rhs)

# exponent row: exact sizes and log(size)/log|A|
row = fp.report_exponents(A, m_list=(3,))
for key in ("|A+A|", "|AA|", "log max(|A+A|,|AA|)/log|A|"):
    print(key, row[key])

# a sweep over families; rows are identical for any worker count
jobs = sweep_jobs(["geometric", "random_few_prime"], [8, 16], seed=0, bw=["4x2"])
text = run_sweep(jobs, m_list=(3,), workers=1, budgets=fp.DEFAULT_BUDGETS, seed=0)
print(text)
