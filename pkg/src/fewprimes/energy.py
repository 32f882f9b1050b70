"""Representation functions, additive energies and even-cycle counts, all exact.

Multiplicity functions are returned as :class:`collections.Counter` objects keyed
by :class:`~fractions.Fraction` with positive integer counts.  Internally every
computation runs on integer numerators over a common denominator.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Sequence

import numpy as np

from .config import DEFAULT_BUDGETS, Budgets
from .errors import BruteForceBudgetExceeded, MemoryBudgetExceeded, ZeroElement
from .factored import as_fraction
from .setops import FiniteSet, as_set

_INT64_SAFE = 1 << 62
_FLOAT_EXACT = 1 << 53


@dataclass(frozen=True)
class EnergyReport:
    m: int
    value: int
    method: str  # "convolution" or "brute-force"

    def __int__(self):
        return self.value


# -- integer-level helpers ---------------------------------------------------


def _lcm(*ds: int) -> int:
    out = 1
    for d in ds:
        out = out * d // gcd(out, d)
    return out


def _scaled(*sets: FiniteSet):
    den = _lcm(*(S.den for S in sets))
    return (den, *[S.scaled_to(den) for S in sets])


def _extend(counts: dict[int, int], ys: Sequence[int], sign: int, cap: int) -> dict[int, int]:
    """Convolve a multiplicity map with the indicator of ``sign * ys``."""
    if not counts:
        return {}
    keys = list(counts)
    mass = sum(counts.values())
    kmax = max(abs(k) for k in keys)
    ymax = max(abs(y) for y in ys)
    # float64 bincount weights are exact while totals stay below 2**53
    if kmax + ymax < _INT64_SAFE and mass * len(ys) < _FLOAT_EXACT and len(keys) * len(ys) > 4096:
        k_arr = np.asarray(keys, dtype=np.int64)
        w_arr = np.asarray([counts[k] for k in keys], dtype=np.int64)
        y_arr = sign * np.asarray(ys, dtype=np.int64)
        sums = (k_arr[:, None] + y_arr[None, :]).ravel()
        weights = np.repeat(w_arr, len(ys))
        uniq, inv = np.unique(sums, return_inverse=True)
        if len(uniq) > cap:
            raise MemoryBudgetExceeded("convolution support", len(uniq), cap)
        tot = np.bincount(inv.ravel(), weights=weights, minlength=len(uniq))
        return dict(zip(uniq.tolist(), (int(t) for t in tot)))
    out: dict[int, int] = {}
    for k, c in counts.items():
        for y in ys:
            key = k + sign * y
            out[key] = out.get(key, 0) + c
        if len(out) > cap:
            raise MemoryBudgetExceeded("convolution support", len(out), cap)
    return out


def _signed_counts(xs: Sequence[int], signs: Sequence[int], cap: int) -> dict[int, int]:
    """Multiplicities of ``sum(eps_i * a_i)`` over ``a_i`` in ``xs``."""
    counts = {0: 1}
    for eps in signs:
        counts = _extend(counts, xs, eps, cap)
    return counts


def _m_fold(xs: Sequence[int], m: int, cap: int) -> dict[int, int]:
    return _signed_counts(xs, [1] * m, cap)


def _to_counter(counts: dict[int, int], den: int) -> Counter:
    return Counter({Fraction(k, den): c for k, c in counts.items()})


def _coconv_counts(xs, ys, cap) -> dict[int, int]:
    counts = {x: 1 for x in xs}
    return _extend(counts, ys, -1, cap)


# -- convolutions ------------------------------------------------------------


def convolve(A, B, budgets: Budgets = DEFAULT_BUDGETS) -> Counter:
    """``1_A * 1_B``: ``x -> #{(a, b): a + b = x}``."""
    A, B = as_set(A), as_set(B)
    den, xs, ys = _scaled(A, B)
    return _to_counter(_extend({x: 1 for x in xs}, ys, 1, budgets.counter_support), den)


def co_convolve(A, B, budgets: Budgets = DEFAULT_BUDGETS) -> Counter:
    """``1_A o 1_B``: ``x -> #{(a, b): a - b = x}``."""
    A, B = as_set(A), as_set(B)
    den, xs, ys = _scaled(A, B)
    return _to_counter(_coconv_counts(xs, ys, budgets.counter_support), den)


def m_fold_convolution(A, m: int, budgets: Budgets = DEFAULT_BUDGETS) -> Counter:
    """``1_A^(m)``, the m-fold convolution of the indicator of ``A``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    A = as_set(A)
    return _to_counter(_m_fold(list(A.nums), m, budgets.counter_support), A.den)


# -- energies ----------------------------------------------------------------


def _sum_squares(counts: dict[int, int]) -> int:
    return sum(c * c for c in counts.values())


def additive_energy(A, B, budgets: Budgets = DEFAULT_BUDGETS) -> EnergyReport:
    """``E(A, B) = #{a1 - a2 = b1 - b2}``."""
    A, B = as_set(A), as_set(B)
    _, xs, ys = _scaled(A, B)
    return EnergyReport(2, _sum_squares(_coconv_counts(xs, ys, budgets.counter_support)), "convolution")


def _brute_energy(xs: list[int], m: int, budgets: Budgets) -> int:
    n_tuples = len(xs) ** (2 * m)
    if n_tuples > budgets.brute_force:
        raise BruteForceBudgetExceeded(f"brute-force E_{2 * m}", n_tuples, budgets.brute_force)
    total = 0
    for t in product(xs, repeat=2 * m):
        if sum(t[:m]) == sum(t[m:]):
            total += 1
    return total


def higher_energy(A, m: int, method: str = "convolution", budgets: Budgets = DEFAULT_BUDGETS) -> EnergyReport:
    """``E_{2m}(A) = #{a_1 + ... + a_m = a_{m+1} + ... + a_{2m}}``.

    The default method sums squares of the m-fold convolution; ``"brute-force"``
    walks all ``|A|^(2m)`` tuples and exists as an oracle.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    A = as_set(A)
    xs = list(A.nums)
    if method == "brute-force":
        return EnergyReport(m, _brute_energy(xs, m, budgets), method)
    if method != "convolution":
        raise ValueError(f"unknown method {method!r}")
    if not xs:
        return EnergyReport(m, 0, method)
    return EnergyReport(m, _sum_squares(_m_fold(xs, m, budgets.counter_support)), method)


def _is_nondegenerate(values: Sequence[int]) -> bool:
    """No nonempty proper subset of ``values`` sums to zero."""
    n = len(values)
    full = (1 << n) - 1
    sums = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + values[low.bit_length() - 1]
        if sums[mask] == 0 and mask != full:
            return False
    return True


def nondegenerate_energy(A, m: int, budgets: Budgets = DEFAULT_BUDGETS) -> EnergyReport:
    """``E*_{2m}(A)``: solutions of ``a_1 + ... + a_m - a_{m+1} - ... - a_{2m} = 0``
    in which no nonempty proper subset of the signed summands sums to zero."""
    if m < 1:
        raise ValueError("m must be >= 1")
    A = as_set(A)
    if not A.zero_free:
        raise ZeroElement("nondegenerate energy needs a set without 0")
    xs = list(A.nums)
    n_tuples = len(xs) ** (2 * m)
    if n_tuples > budgets.brute_force:
        raise BruteForceBudgetExceeded(f"E*_{2 * m}", n_tuples, budgets.brute_force)
    by_sum: dict[int, list[tuple[int, ...]]] = {}
    for t in product(xs, repeat=m):
        by_sum.setdefault(sum(t), []).append(t)
    total = 0
    for tuples in by_sum.values():
        for left in tuples:
            for right in tuples:
                if _is_nondegenerate(left + tuple(-y for y in right)):
                    total += 1
    return EnergyReport(m, total, "brute-force")


def signed_representation_count(A, x, signs: Sequence[int], budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """``#{(a_1..a_n) in A^n : sum eps_i a_i = x}`` by meet-in-the-middle."""
    if not signs:
        raise ValueError("signs must be nonempty")
    if any(s not in (1, -1) for s in signs):
        raise ValueError("signs must be +1 or -1")
    A = as_set(A)
    target = as_fraction(x) * A.den
    if target.denominator != 1 or len(A) == 0:
        return 0
    target = target.numerator
    xs = list(A.nums)
    half = len(signs) // 2
    left = _signed_counts(xs, signs[:half], budgets.counter_support)
    right = _signed_counts(xs, signs[half:], budgets.counter_support)
    return sum(c * right.get(target - s, 0) for s, c in left.items())


def moment_sum(A, k: int, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """``sum over x != 0 of (1_A o 1_A)(x)^k``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    A = as_set(A)
    xs = list(A.nums)
    counts = _coconv_counts(xs, xs, budgets.counter_support)
    return sum(c**k for x, c in counts.items() if x != 0)


def max_nonzero_coconv(A, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """``max over x != 0 of (1_A o 1_A)(x)``; 0 when ``|A| <= 1``."""
    A = as_set(A)
    xs = list(A.nums)
    counts = _coconv_counts(xs, xs, budgets.counter_support)
    return max((c for x, c in counts.items() if x != 0), default=0)


def mixed_moment(A, B, k: int, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """``sum over x != 0 of (1_A o 1_A)(x)^k (1_B o 1_B)(x)^k``."""
    A, B = as_set(A), as_set(B)
    _, xs, ys = _scaled(A, B)
    ca = _coconv_counts(xs, xs, budgets.counter_support)
    cb = _coconv_counts(ys, ys, budgets.counter_support)
    return sum((c**k) * (cb[x] ** k) for x, c in ca.items() if x != 0 and x in cb)


# -- even cycles in the sum graph ---------------------------------------------


def biadjacency(A, B, C) -> np.ndarray:
    """0/1 matrix with rows ``A``, columns ``B`` and ``[a, b] = 1`` iff ``a + b`` is in ``C``."""
    A, B, C = as_set(A), as_set(B), as_set(C)
    den, xs, ys, cs = _scaled(A, B, C)
    cset = set(cs)
    return np.array([[1 if x + y in cset else 0 for y in ys] for x in xs], dtype=np.int64).reshape(len(xs), len(ys))


def cycle_homomorphism_count(A, B, C, k: int, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """``V_{2k}``: tuples ``(a_1, b_1, ..., a_k, b_k)`` with every ``a_i + b_i`` and
    ``b_i + a_{i+1}`` in ``C`` (indices mod k), as ``trace((N N^T)^k)``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    A, B = as_set(A), as_set(B)
    dim = max(len(A), len(B))
    if dim > budgets.matrix_dim:
        raise MemoryBudgetExceeded("biadjacency matrix dimension", dim, budgets.matrix_dim)
    if len(A) == 0 or len(B) == 0:
        return 0
    N = biadjacency(A, B, C)
    if (len(A) * len(B)) ** k >= _INT64_SAFE:
        N = N.astype(object)
    M = N @ N.T
    P = M
    for _ in range(k - 1):
        P = P @ M
    return int(sum(P[i, i] for i in range(P.shape[0])))


def cycle_homomorphism_count_brute(A, B, C, k: int, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """Enumerate closed walks ``a_1 b_1 a_2 ... b_k a_1`` one vertex at a time."""
    if k < 1:
        raise ValueError("k must be >= 1")
    A, B, C = as_set(A), as_set(B), as_set(C)
    den, xs, ys, cs = _scaled(A, B, C)
    cset = set(cs)
    visited = 0

    def walk(start, a, depth):
        nonlocal visited
        total = 0
        for b in ys:
            visited += 1
            if visited > budgets.brute_force:
                raise BruteForceBudgetExceeded("brute-force cycle count", visited, budgets.brute_force)
            if a + b not in cset:
                continue
            if depth == k:
                total += b + start in cset
                continue
            for a2 in xs:
                if b + a2 in cset:
                    total += walk(start, a2, depth + 1)
        return total

    return sum(walk(a, a, 1) for a in xs)


def edge_mass(A, B, C, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """``sum over c in C of (1_A * 1_B)(c)``: the number of edges of the sum graph."""
    A, B, C = as_set(A), as_set(B), as_set(C)
    den, xs, ys, cs = _scaled(A, B, C)
    counts = _extend({x: 1 for x in xs}, ys, 1, budgets.counter_support)
    return sum(counts.get(c, 0) for c in cs)


# -- output ------------------------------------------------------------------


def counter_to_csv(counter: Counter, stream=None) -> str:
    """Write ``value,multiplicity`` rows in ascending value order; returns the text."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["value", "multiplicity"])
    for x in sorted(counter):
        if counter[x]:
            w.writerow([str(x), str(counter[x])])
    text = buf.getvalue()
    if stream is not None:
        stream.write(text)
    return text
