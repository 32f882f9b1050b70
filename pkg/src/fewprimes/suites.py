"""Randomised instances for the inequality harness.

A trial draws small integer or rational sets from a seeded counter-based
generator and runs every requested check on them, so a suite run is a pure
function of ``(suite, seed, trials, max_size)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

import numpy as np

from .config import DEFAULT_BUDGETS, Budgets
from .reports import CheckReport
from .setops import FiniteSet, sumset
from .verify import (
    check_asymmetric_energy,
    check_cauchy_schwarz_sumset,
    check_energy_interpolation,
    check_holder_energy,
    check_nondegenerate_energy,
    check_shkredov_steps,
    popular_set,
)


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    # one independent stream per trial, so trials can be sharded freely
    return np.random.Generator(np.random.Philox(key=[seed, trial]))


def random_set(
    rng: np.random.Generator, size: int, spread: int = 40, zero_free: bool = False, rational: bool = False
) -> FiniteSet:
    size = max(1, size)
    pool = [v for v in range(-spread, spread + 1) if not (zero_free and v == 0)]
    vals = rng.choice(len(pool), size=min(size, len(pool)), replace=False)
    den = int(rng.integers(2, 7)) if rational else 1
    return FiniteSet(Fraction(pool[i], den) for i in sorted(vals.tolist()))


def _holder(rng, max_size, budgets):
    A = random_set(rng, int(rng.integers(1, max_size + 1)), rational=bool(rng.integers(2)))
    return [check_holder_energy(A, m, budgets) for m in (2, 3)]


def _interpolation(rng, max_size, budgets):
    A = random_set(rng, int(rng.integers(1, max_size + 1)), spread=15)
    els = A.elements
    out = []
    for _ in range(10):
        n = int(rng.integers(2, 7))
        r = int(rng.integers(1, n // 2 + 1))
        k = int(rng.integers((n + 1) // 2, 4))
        k = max(k, r)
        signs = [int(s) for s in rng.choice((-1, 1), size=n)]
        if rng.integers(2):
            x = sum(s * els[int(rng.integers(len(els)))] for s in signs)
        else:
            x = Fraction(int(rng.integers(-20, 21)))
        out.append(check_energy_interpolation(A, x, signs, r, k, budgets))
    return out


def _popular(rng, max_size, budgets):
    A = random_set(rng, int(rng.integers(1, max_size + 1)), rational=bool(rng.integers(2)))
    return [c for mode in ("sums", "differences") for c in popular_set(A, mode, budgets=budgets).checks]


def _shkredov(rng, max_size, budgets):
    A = random_set(rng, int(rng.integers(1, max_size + 1)), spread=12)
    B = random_set(rng, int(rng.integers(1, max_size + 1)), spread=12)
    AB = sumset(A, B).elements
    keep = rng.random(len(AB)) < rng.uniform(0.2, 1.0)
    C = FiniteSet(x for x, flag in zip(AB, keep) if flag)
    k = int(rng.integers(1, 4))
    return check_shkredov_steps(A, B, C, k, budgets)


def _asymmetric(rng, max_size, budgets):
    A = random_set(rng, int(rng.integers(1, max_size + 1)))
    B = random_set(rng, int(rng.integers(1, max_size + 1)))
    return [check_asymmetric_energy(A, B, m, n, budgets) for m, n in ((2, 2), (3, 2), (2, 3))]


def _cauchy_schwarz(rng, max_size, budgets):
    A = random_set(rng, int(rng.integers(1, max_size + 1)), rational=bool(rng.integers(2)))
    B = random_set(rng, int(rng.integers(1, max_size + 1)))
    return [check_cauchy_schwarz_sumset(A, B, budgets)]


def _nondegenerate(rng, max_size, budgets):
    A = random_set(rng, int(rng.integers(1, min(max_size, 6) + 1)), spread=10, zero_free=True)
    return [check_nondegenerate_energy(A, 2, budgets)]


SUITES: dict[str, Callable] = {
    "holder": _holder,
    "interpolation": _interpolation,
    "popular": _popular,
    "shkredov": _shkredov,
    "asymmetric": _asymmetric,
    "cauchy-schwarz": _cauchy_schwarz,
    "nondegenerate": _nondegenerate,
}


def run_trial(
    suite: str, seed: int, trial: int, max_size: int = 12, budgets: Budgets = DEFAULT_BUDGETS
) -> list[CheckReport]:
    names = list(SUITES) if suite == "all" else [suite]
    rng = trial_rng(seed, trial)
    out: list[CheckReport] = []
    for name in names:
        out.extend(SUITES[name](rng, max_size, budgets))
    return out


def run_suite(
    suite: str, seed: int, trials: int, max_size: int = 12, budgets: Budgets = DEFAULT_BUDGETS
) -> list[CheckReport]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(['all', *SUITES])}")
    return [r for t in range(trials) for r in run_trial(suite, seed, t, max_size, budgets)]
