"""Nonzero rationals with their prime factorisation.

A :class:`FactoredRational` is a sign together with a finite map from primes to
nonzero exponents, so that ``3/4`` is stored as ``+1, {2: -2, 3: 1}``.  Plain
:class:`fractions.Fraction` is used everywhere addition is involved; the
factored form is only needed when prime support matters (valuations, the
number of distinct primes, membership in ``Q_S``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from .errors import UnfactoredResidue

DEFAULT_BOUND = 10**6

# Miller-Rabin with these bases is exact below 3.317e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Exact for ``n < 3.3e24``; above that the same fixed Miller-Rabin bases are
    used, so the answer is reproducible but not proven.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_BASES if n < _MR_LIMIT else _MR_BASES + (43, 47, 53, 59, 61, 67, 71)
    for a in bases:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=8)
def primes_up_to(bound: int) -> tuple[int, ...]:
    """All primes ``<= bound`` by the sieve of Eratosthenes."""
    if bound < 2:
        return ()
    sieve = np.ones(bound + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(bound**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return tuple(int(p) for p in np.flatnonzero(sieve))


@dataclass(frozen=True)
class PrimePool:
    """An ascending list of distinct primes, plus the factorisation bound in force."""

    primes: tuple[int, ...]
    bound: int = DEFAULT_BOUND

    def __post_init__(self):
        ps = tuple(int(p) for p in self.primes)
        if list(ps) != sorted(set(ps)):
            raise ValueError("prime pool must be strictly ascending")
        for p in ps:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "primes", ps)

    @classmethod
    def first(cls, count: int, bound: int = DEFAULT_BOUND) -> "PrimePool":
        out, n = [], 1
        while len(out) < count:
            n += 1
            if is_prime(n):
                out.append(n)
        return cls(tuple(out), bound)

    def __len__(self):
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)


@dataclass(frozen=True)
class FactoredRational:
    """``sign * prod(p**e for p, e in exps)``, with ``exps`` sorted by prime and no zero exponents."""

    sign: int
    exps: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        primes = [p for p, _ in self.exps]
        if primes != sorted(set(primes)):
            raise ValueError("exponent map keys must be distinct and ascending")
        if any(e == 0 for _, e in self.exps):
            raise ValueError("zero exponents are not stored")

    @classmethod
    def from_map(cls, sign: int, factors: Mapping[int, int], validate: bool = False) -> "FactoredRational":
        items = []
        for p, e in factors.items():
            p, e = int(p), int(e)
            if e == 0:
                continue
            if validate and not is_prime(p):
                raise ValueError(f"{p} is not prime")
            items.append((p, e))
        items.sort()
        return cls(sign, tuple(items))

    @property
    def factors(self) -> dict[int, int]:
        return dict(self.exps)

    @property
    def support(self) -> frozenset[int]:
        """``P(x)``: the primes with nonzero exponent."""
        return frozenset(p for p, _ in self.exps)

    def to_exact(self) -> Fraction:
        num = den = 1
        for p, e in self.exps:
            if e > 0:
                num *= p**e
            else:
                den *= p ** (-e)
        return Fraction(self.sign * num, den)

    def __mul__(self, other: "FactoredRational") -> "FactoredRational":
        merged = dict(self.exps)
        for p, e in other.exps:
            merged[p] = merged.get(p, 0) + e
        return FactoredRational.from_map(self.sign * other.sign, merged)

    def inverse(self) -> "FactoredRational":
        return FactoredRational(self.sign, tuple((p, -e) for p, e in self.exps))

    def __truediv__(self, other: "FactoredRational") -> "FactoredRational":
        return self * other.inverse()

    def __pow__(self, k: int) -> "FactoredRational":
        if k == 0:
            return ONE
        sign = self.sign if k % 2 else 1
        return FactoredRational(sign, tuple((p, e * k) for p, e in self.exps))

    def __str__(self):
        return str(self.to_exact())


ONE = FactoredRational(1, ())


def to_exact(x: FactoredRational) -> Fraction:
    return x.to_exact()


def mul(x: FactoredRational, y: FactoredRational) -> FactoredRational:
    return x * y


def div(x: FactoredRational, y: FactoredRational) -> FactoredRational:
    return x / y


def inverse(x: FactoredRational) -> FactoredRational:
    return x.inverse()


def as_fraction(value) -> Fraction:
    """Coerce an int, Fraction, decimal-free string or FactoredRational to a Fraction."""
    if isinstance(value, FactoredRational):
        return value.to_exact()
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _trial_divide(n: int, bound: int, exps: dict[int, int], direction: int, original) -> None:
    rem = n
    for p in primes_up_to(bound):
        if p * p > rem:
            break
        if rem % p == 0:
            k = 0
            while rem % p == 0:
                rem //= p
                k += 1
            exps[p] = exps.get(p, 0) + direction * k
    if rem > 1:
        # rem is prime if we stopped on p*p > rem, otherwise every factor exceeds bound
        if rem > bound:
            raise UnfactoredResidue(original, rem, bound)
        exps[rem] = exps.get(rem, 0) + direction


def factor(value, bound: int = DEFAULT_BOUND) -> FactoredRational:
    """Factor a nonzero integer or rational by trial division over primes ``<= bound``.

    >>> factor(12).factors
    {2: 2, 3: 1}
    >>> factor(Fraction(3, 4)).factors
    {2: -2, 3: 1}
    """
    if isinstance(value, FactoredRational):
        return value
    q = as_fraction(value)
    if q == 0:
        raise ValueError("0 has no factorisation")
    exps: dict[int, int] = {}
    _trial_divide(abs(q.numerator), bound, exps, 1, value)
    _trial_divide(q.denominator, bound, exps, -1, value)
    return FactoredRational.from_map(1 if q > 0 else -1, exps)


def factor_over(value, primes: Iterable[int]) -> FactoredRational | None:
    """Factor using only the given primes; ``None`` if some other prime divides ``value``."""
    q = as_fraction(value)
    if q == 0:
        raise ValueError("0 has no factorisation")
    num, den = abs(q.numerator), q.denominator
    exps = {}
    for p in primes:
        k = 0
        while num % p == 0:
            num //= p
            k += 1
        while den % p == 0:
            den //= p
            k -= 1
        if k:
            exps[p] = k
    if num != 1 or den != 1:
        return None
    return FactoredRational.from_map(1 if q > 0 else -1, exps)


def omega(x: FactoredRational) -> int:
    """Number of distinct primes with nonzero exponent."""
    return len(x.exps)


def nu(x: FactoredRational, p: int) -> int:
    """The p-adic valuation (0 if ``p`` does not appear)."""
    for q, e in x.exps:
        if q == p:
            return e
    return 0


def in_QS(x: FactoredRational, S: Iterable[int]) -> bool:
    """True iff every prime of ``x`` lies in ``S``."""
    S = frozenset(S)
    return all(p in S for p, _ in x.exps)


def s_free_part(x: FactoredRational, S: Iterable[int]) -> tuple[FactoredRational, FactoredRational]:
    """Split ``x = x1 * x2`` with ``x1`` free of ``S`` and ``x2`` in ``Q_S``.

    The sign travels with ``x1``, so ``x2`` is always positive.
    """
    S = frozenset(S)
    outside = tuple((p, e) for p, e in x.exps if p not in S)
    inside = tuple((p, e) for p, e in x.exps if p in S)
    return FactoredRational(x.sign, outside), FactoredRational(1, inside)


# -- JSON element schema -----------------------------------------------------


def element_from_json(obj, bound: int = DEFAULT_BOUND) -> FactoredRational:
    """Parse ``{"sign": 1, "factors": {"2": 3}}`` or ``{"int": "360"}``.

    ``{"rat": "3/4"}`` is accepted as well and factored on ingestion like ``int``.
    """
    if not isinstance(obj, dict):
        raise ValueError(f"element must be a JSON object, got {obj!r}")
    if "factors" in obj:
        sign = int(obj.get("sign", 1))
        return FactoredRational.from_map(sign, {int(p): int(e) for p, e in obj["factors"].items()}, validate=True)
    if "int" in obj:
        return factor(int(str(obj["int"])), bound)
    if "rat" in obj:
        return factor(Fraction(str(obj["rat"])), bound)
    raise ValueError(f"unrecognised element {obj!r}")


def element_to_json(x: FactoredRational) -> dict:
    """Canonical form: factors keyed by ascending prime (numeric order)."""
    return {"sign": x.sign, "factors": {str(p): e for p, e in x.exps}}


def dumps_element(x: FactoredRational) -> str:
    return json.dumps(element_to_json(x), separators=(",", ":"))
