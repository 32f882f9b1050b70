"""Finite sets of rationals and their sum, difference and product sets.

A :class:`FiniteSet` keeps its elements as sorted integer numerators over one
common denominator (the lcm of the reduced denominators), so all arithmetic is
integer arithmetic and equal sets have identical internal form.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd
from typing import Iterable

import numpy as np

from . import _kernels
from .config import DEFAULT_BUDGETS, Budgets
from .errors import ZeroElement
from .factored import (
    DEFAULT_BOUND,
    FactoredRational,
    as_fraction,
    element_from_json,
    element_to_json,
    factor,
    factor_over,
)


class FiniteSet:
    """An immutable finite set of rationals.

    ``primes`` is an optional hint: a set of primes known to contain the support
    of every element, which makes factorising elements cheap.
    """

    __slots__ = ("_den", "_nums", "_primes", "_factors", "_elements", "_lookup")

    def __init__(self, values: Iterable = (), primes: Iterable[int] | None = None):
        given: dict[Fraction, FactoredRational] = {}
        fracs = []
        for v in values:
            q = as_fraction(v)
            if isinstance(v, FactoredRational):
                given[q] = v
            fracs.append(q)
        den = 1
        for q in fracs:
            den = den * q.denominator // gcd(den, q.denominator)
        nums = sorted({q.numerator * (den // q.denominator) for q in fracs})
        self._init(den, nums, primes)
        if given:
            self._factors.update(given)
            if primes is None and len(given) == len(self._nums):
                self._primes = frozenset(p for x in given.values() for p in x.support)

    def _init(self, den, nums, primes):
        self._den = den
        self._nums = tuple(nums)
        self._primes = frozenset(primes) if primes is not None else None
        self._factors = {}
        self._elements = None
        self._lookup = None

    @classmethod
    def _from_scaled(cls, den: int, nums, primes=None) -> "FiniteSet":
        """Build from numerators over ``den`` that are already sorted and distinct."""
        g = gcd(den, _kernels.gcd_all(nums))
        nums = _kernels.as_int_list(nums)
        if g > 1:
            den //= g
            nums = [n // g for n in nums]
        obj = cls.__new__(cls)
        obj._init(den, nums, primes)
        return obj

    @classmethod
    def from_factored(cls, xs: Iterable[FactoredRational]) -> "FiniteSet":
        return cls(list(xs))

    # -- basic protocol ------------------------------------------------------

    @property
    def den(self) -> int:
        return self._den

    @property
    def nums(self) -> tuple[int, ...]:
        return self._nums

    @property
    def primes(self) -> frozenset[int] | None:
        return self._primes

    @property
    def elements(self) -> tuple[Fraction, ...]:
        if self._elements is None:
            d = self._den
            self._elements = tuple(Fraction(n, d) for n in self._nums)
        return self._elements

    @property
    def zero_free(self) -> bool:
        return 0 not in self._nums

    def require_zero_free(self, what: str = "this operation") -> None:
        if not self.zero_free:
            raise ZeroElement(f"{what} needs a set without 0")

    def __len__(self):
        return len(self._nums)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        q = as_fraction(x)
        scaled = q * self._den
        if scaled.denominator != 1:
            return False
        if self._lookup is None:
            self._lookup = frozenset(self._nums)
        return scaled.numerator in self._lookup

    def __eq__(self, other):
        if not isinstance(other, FiniteSet):
            return NotImplemented
        return self._den == other._den and self._nums == other._nums

    def __hash__(self):
        return hash((self._den, self._nums))

    def __repr__(self):
        shown = ", ".join(str(x) for x in self.elements[:8])
        more = ", ..." if len(self) > 8 else ""
        return f"FiniteSet({{{shown}{more}}}, size={len(self)})"

    def scaled_to(self, den: int) -> list[int]:
        """Numerators of the elements over a multiple ``den`` of this set's denominator."""
        f = den // self._den
        return list(self._nums) if f == 1 else [n * f for n in self._nums]

    # -- factorisations ------------------------------------------------------

    def factorization(self, x, bound: int = DEFAULT_BOUND) -> FactoredRational:
        q = as_fraction(x)
        fx = self._factors.get(q)
        if fx is None:
            if q not in self:
                raise KeyError(f"{q} is not an element")
            if self._primes is not None:
                fx = factor_over(q, sorted(self._primes))
            if fx is None:
                fx = factor(q, bound)
            self._factors[q] = fx
        return fx

    def factorizations(self, bound: int = DEFAULT_BOUND) -> dict[Fraction, FactoredRational]:
        self.require_zero_free("factorisation")
        return {x: self.factorization(x, bound) for x in self.elements}

    def support_primes(self, bound: int = DEFAULT_BOUND) -> frozenset[int]:
        if self._primes is None:
            self._primes = frozenset(p for f in self.factorizations(bound).values() for p in f.support)
        return self._primes

    # -- serialisation -------------------------------------------------------

    def to_json(self, bound: int = DEFAULT_BOUND) -> list[dict]:
        """List of canonical element objects in ascending value order (no zero allowed)."""
        return [element_to_json(self.factorization(x, bound)) for x in self.elements]

    @classmethod
    def from_json(cls, items, bound: int = DEFAULT_BOUND) -> "FiniteSet":
        return cls([element_from_json(obj, bound) for obj in items])

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def as_set(A) -> FiniteSet:
    return A if isinstance(A, FiniteSet) else FiniteSet(A)


def _common(A: FiniteSet, B: FiniteSet):
    den = A.den * B.den // gcd(A.den, B.den)
    return den, A.scaled_to(den), B.scaled_to(den)


def _merge_hint(A: FiniteSet, B: FiniteSet):
    if A.primes is None or B.primes is None:
        return None
    return A.primes | B.primes


# -- additive -----------------------------------------------------------------


def sumset(A, B, budgets: Budgets = DEFAULT_BUDGETS) -> FiniteSet:
    """``A + B = {a + b}``."""
    A, B = as_set(A), as_set(B)
    den, xs, ys = _common(A, B)
    return FiniteSet._from_scaled(den, _kernels.pairwise(xs, ys, "add", budgets, "sumset"))


def difference_set(A, B, budgets: Budgets = DEFAULT_BUDGETS) -> FiniteSet:
    """``A - B = {a - b}``."""
    A, B = as_set(A), as_set(B)
    den, xs, ys = _common(A, B)
    return FiniteSet._from_scaled(den, _kernels.pairwise(xs, ys, "sub", budgets, "difference set"))


def sumset_size(A, B, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    A, B = as_set(A), as_set(B)
    den, xs, ys = _common(A, B)
    return len(_kernels.pairwise(xs, ys, "add", budgets, "sumset"))


def difference_set_size(A, B, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    A, B = as_set(A), as_set(B)
    den, xs, ys = _common(A, B)
    return len(_kernels.pairwise(xs, ys, "sub", budgets, "difference set"))


def dilate(c, A) -> FiniteSet:
    """``c * A`` for a nonzero rational ``c``."""
    c = as_fraction(c)
    if c == 0:
        raise ValueError("dilation factor must be nonzero")
    A = as_set(A)
    nums = sorted(n * c.numerator for n in A.nums)
    den = A.den * c.denominator
    hint = None
    if A.primes is not None:
        hint = A.primes | factor(c).support
    return FiniteSet._from_scaled(den, nums, hint)


def negate(A) -> FiniteSet:
    return dilate(-1, A)


def iterated_sumset(A, m: int, budgets: Budgets = DEFAULT_BUDGETS) -> FiniteSet:
    """``mA``; deduplicates after every pairwise step."""
    if m < 1:
        raise ValueError("m must be >= 1")
    A = as_set(A)
    cur = A
    for _ in range(m - 1):
        cur = sumset(cur, A, budgets)
    return cur


def iterated_sumset_size(A, m: int, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    if m < 1:
        raise ValueError("m must be >= 1")
    A = as_set(A)
    if m == 1:
        return len(A)
    ys = list(A.nums)
    cur = ys
    for _ in range(m - 1):
        cur = _kernels.pairwise(cur, ys, "add", budgets, f"iterated sumset (m={m})")
    return len(cur)


# -- multiplicative -----------------------------------------------------------


def _products(A: FiniteSet, B: FiniteSet, budgets: Budgets):
    A.require_zero_free("product set")
    B.require_zero_free("product set")
    return A.den * B.den, _kernels.pairwise(list(A.nums), list(B.nums), "mul", budgets, "product set")


def product_set(A, B, budgets: Budgets = DEFAULT_BUDGETS) -> FiniteSet:
    """``AB = {ab}``; both sets must avoid 0."""
    A, B = as_set(A), as_set(B)
    den, vals = _products(A, B, budgets)
    return FiniteSet._from_scaled(den, vals, _merge_hint(A, B))


def iterated_product(A, m: int, budgets: Budgets = DEFAULT_BUDGETS) -> FiniteSet:
    """``A^(m) = {a_1 ... a_m}``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    A = as_set(A)
    A.require_zero_free("iterated product")
    cur = A
    for _ in range(m - 1):
        cur = product_set(cur, A, budgets)
    return cur


def a_plus_aa(A, budgets: Budgets = DEFAULT_BUDGETS) -> FiniteSet:
    """``A + AA = {a1 + a2 a3}``."""
    A = as_set(A)
    return sumset(A, product_set(A, A, budgets), budgets)


def a_plus_aa_size(A, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    A = as_set(A)
    return sumset_size(A, product_set(A, A, budgets), budgets)


# sizes of product sets through exponent vectors -------------------------------


def _exponent_codes(operands: list[FiniteSet]):
    """Encode each operand's elements as int64 codes whose sums encode products.

    Returns ``(codes_per_operand, sign_radix)`` or ``None`` if the code space would
    overflow.  The lowest digit counts negative factors; only its parity matters.
    """
    primes = sorted(set().union(*(X.support_primes() for X in operands)))
    facts = [[X.factorization(x) for x in X.elements] for X in operands]
    lows, spans = [], []
    for j, p in enumerate(primes):
        lo_total = hi_total = 0
        for fs in facts:
            es = [dict(f.exps).get(p, 0) for f in fs]
            lo_total += min(es)
            hi_total += max(es)
        lows.append(lo_total)
        spans.append(hi_total - lo_total + 1)
    sign_radix = len(operands) + 1
    weight = sign_radix
    weights = []
    for s in spans:
        weights.append(weight)
        weight *= s
        if weight >= _kernels._INT64_SAFE:
            return None
    codes = []
    for fs in facts:
        # per-operand offset: subtract that operand's own minimum per prime
        mins = [min(dict(f.exps).get(p, 0) for f in fs) for p in primes]
        arr = []
        for f in fs:
            d = dict(f.exps)
            c = 1 if f.sign < 0 else 0
            for w, p, lo in zip(weights, primes, mins):
                c += (d.get(p, 0) - lo) * w
            arr.append(c)
        codes.append(np.unique(np.asarray(arr, dtype=np.int64)))
    return codes, sign_radix


def _reduce_sign(codes: np.ndarray, radix: int) -> np.ndarray:
    s = codes % radix
    return np.unique(codes - s + (s % 2))


def _product_size_by_codes(operands: list[FiniteSet], budgets: Budgets) -> int | None:
    enc = _exponent_codes(operands)
    if enc is None:
        return None
    codes, radix = enc
    cur = _reduce_sign(codes[0], radix)
    for nxt in codes[1:]:
        if len(cur) * len(nxt) > budgets.vector_pairs:
            return None
        cur = _reduce_sign(_kernels._vector_unique(cur, nxt, "add"), radix)
    return len(cur)


def product_set_size(A, B, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    A, B = as_set(A), as_set(B)
    A.require_zero_free("product set")
    B.require_zero_free("product set")
    if not _kernels.fits_int64(A.nums, B.nums, "mul") and A.primes is not None and B.primes is not None:
        n = _product_size_by_codes([A, B], budgets)
        if n is not None:
            return n
    return len(_products(A, B, budgets)[1])


def iterated_product_size(A, m: int, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    if m < 1:
        raise ValueError("m must be >= 1")
    A = as_set(A)
    A.require_zero_free("iterated product")
    if m == 1:
        return len(A)
    if A.primes is not None:
        n = _product_size_by_codes([A] * m, budgets)
        if n is not None:
            return n
    ys = list(A.nums)
    cur = ys
    for _ in range(m - 1):
        cur = _kernels.pairwise(cur, ys, "mul", budgets, f"iterated product (m={m})")
    return len(cur)
