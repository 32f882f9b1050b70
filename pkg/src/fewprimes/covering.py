"""Covering few-prime sets by few dilates of ``Q_S``.

The pipeline picks a small prime set ``S`` so that most pairs ``(a, b)`` share
only primes from ``S``, then groups ``A`` by S-free part and keeps the classes
that are large compared with ``L = |A||B| / (2^(k+l+2) |AB|)``.  Every constant
is carried as an exact rational and every inequality is re-checked on the
output, so a :class:`CoveringCertificate` can be verified without trusting the
code that produced it.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .config import DEFAULT_BUDGETS, Budgets
from .errors import HypothesisViolated
from .factored import FactoredRational, factor, omega
from .reports import CheckReport, exact_check, format_number
from .setops import FiniteSet, as_set, product_set, product_set_size


@dataclass
class CoveringCertificate:
    S: tuple[int, ...]
    A_prime: FiniteSet
    C: tuple[Fraction, ...]
    classes: dict[Fraction, tuple[Fraction, ...]]
    params: dict
    checks: list[CheckReport] = field(default_factory=list)

    @property
    def M(self) -> int:
        """Number of dilates used, ``|C|``."""
        return len(self.C)

    @property
    def rank(self) -> int:
        return len(self.S)

    @property
    def degenerate(self) -> bool:
        """``L <= 1``: every class survives and the decomposition says nothing."""
        return self.params["L"] <= 1

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks if c.assertion)

    def failed(self) -> list[CheckReport]:
        return [c for c in self.checks if c.assertion and not c.holds]

    def to_dict(self) -> dict:
        return {
            "S": list(self.S),
            "C": [str(c) for c in self.C],
            "classes": {str(c): [str(g) for g in self.classes[c]] for c in self.C},
            "A_prime": [str(a) for a in self.A_prime.elements],
            "params": {k: format_number(v) for k, v in self.params.items()},
            "degenerate": self.degenerate,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)


def _check_omega(A: FiniteSet, bound: int, which: str, name: str) -> None:
    for x in A.elements:
        if omega(A.factorization(x)) > bound:
            raise HypothesisViolated(f"omega({x}) > {bound} for an element of {which}", offending=x)
    if not A.zero_free:
        raise HypothesisViolated(f"{which} contains 0", offending=0)


def _prime_counts(A: FiniteSet, among=None) -> Counter:
    counts: Counter = Counter()
    for x in among if among is not None else A.elements:
        counts.update(A.factorization(x).support)
    return counts


def good_pair_count(A, B, S) -> int:
    """``#{(a, b) : P(a) and P(b) share no prime outside S}``."""
    A, B = as_set(A), as_set(B)
    S = frozenset(S)
    ga = Counter(A.factorization(a).support - S for a in A.elements)
    gb = Counter(B.factorization(b).support - S for b in B.elements)
    return sum(ca * cb for sa, ca in ga.items() for sb, cb in gb.items() if sa.isdisjoint(sb))


def popular_primes(A, B, k: int, l: int) -> tuple[tuple[int, ...], list[CheckReport]]:
    """All primes dividing at least ``|A| / 2l`` elements of ``A``."""
    A, B = as_set(A), as_set(B)
    _check_omega(A, k, "A", "k")
    _check_omega(B, l, "B", "l")
    counts = _prime_counts(A)
    S = tuple(sorted(p for p, c in counts.items() if 2 * l * c >= len(A)))
    good = good_pair_count(A, B, S)
    checks = [
        exact_check("|S| <= 2kl", len(S), 2 * k * l, "<=", k=k, l=l),
        exact_check("good pairs >= |A||B|/2", good, Fraction(len(A) * len(B), 2), ">="),
    ]
    return S, checks


def greedy_prime_chain(A, B, k: int, l: int) -> tuple[tuple[int, ...], FiniteSet, list[CheckReport]]:
    """Grow ``S`` one prime at a time, each dividing ``>= 1/2l`` of the surviving subset.

    Ties go to the prime dividing the most survivors, then the smallest prime.
    """
    A, B = as_set(A), as_set(B)
    _check_omega(A, k, "A", "k")
    _check_omega(B, l, "B", "l")
    S: list[int] = []
    current = list(A.elements)
    while current:
        counts = _prime_counts(A, current)
        for p in S:
            counts.pop(p, None)
        eligible = [(c, p) for p, c in counts.items() if 2 * l * c >= len(current)]
        if not eligible:
            break
        _, p = min(eligible, key=lambda cp: (-cp[0], cp[1]))
        S.append(p)
        current = [x for x in current if p in A.factorization(x).support]
    S_sorted = tuple(sorted(S))
    A0 = FiniteSet([A.factorization(x) for x in current])
    good = good_pair_count(A0, B, S_sorted)
    checks = [
        exact_check("|S| <= k", len(S), k, "<=", k=k),
        exact_check("|A0| >= (2l)^-|S| |A|", len(A0), Fraction(len(A), (2 * l) ** len(S)), ">=", l=l),
        exact_check("good pairs >= |A0||B|/2", good, Fraction(len(A0) * len(B), 2), ">="),
    ]
    return S_sorted, A0, checks


def split_by_s_free_part(A, S) -> dict[Fraction, tuple[Fraction, ...]]:
    """Group ``A`` as disjoint dilates ``c * Gamma_c``.

    Representatives ``c`` are positive and S-free; each ``Gamma_c`` lies in
    ``Q_S`` and carries the sign of its elements.
    """
    A = as_set(A)
    S = frozenset(S)
    classes: dict[Fraction, list[Fraction]] = {}
    for x in A.elements:
        fx = A.factorization(x)
        c = FactoredRational(1, tuple((p, e) for p, e in fx.exps if p not in S)).to_exact()
        classes.setdefault(c, []).append(x / c)
    return {c: tuple(sorted(classes[c])) for c in sorted(classes)}


def m_covered_check(A, S, C) -> tuple[bool, object]:
    """Is every ``a`` in ``Q_S * c`` for some ``c`` in ``C``?

    Returns ``(True, {a: c})`` or ``(False, first uncovered a)``.
    """
    A = as_set(A)
    S = frozenset(S)
    reps = [(Fraction(c), factor(c)) for c in C]
    witness = {}
    for a in A.elements:
        fa = A.factorization(a)
        for c, fc in reps:
            if (fa / fc).support <= S:
                witness[a] = c
                break
        else:
            return False, a
    return True, witness


def covering_decomposition(A, B, S, k: int, l: int, budgets: Budgets = DEFAULT_BUDGETS) -> CoveringCertificate:
    """Keep the S-free classes of ``A`` with at least ``L`` members."""
    A, B = as_set(A), as_set(B)
    _check_omega(A, k, "A", "k")
    _check_omega(B, l, "B", "l")
    S = tuple(sorted(S))
    good = good_pair_count(A, B, S)
    if 2 * good < len(A) * len(B):
        raise HypothesisViolated(
            f"only {good} good pairs, need at least {Fraction(len(A) * len(B), 2)}", offending=good
        )
    ab = product_set_size(A, B, budgets)
    scale = 2 ** (k + l + 2)
    L = Fraction(len(A) * len(B), scale * ab)
    classes = split_by_s_free_part(A, S)
    kept = {c: g for c, g in classes.items() if len(g) >= L}
    A_prime = FiniteSet([A.factorization(c * g) for c, gamma in kept.items() for g in gamma])
    C = tuple(kept)
    covered, _ = m_covered_check(A_prime, S, C)
    checks = [
        exact_check("good pairs >= |A||B|/2", good, Fraction(len(A) * len(B), 2), ">="),
        exact_check("|A'| >= |A|/4", len(A_prime), Fraction(len(A), 4), ">="),
        exact_check("|C| L <= |A'|", len(C) * L, len(A_prime), "<="),
        exact_check("|C| <= 2^(k+l+2) |AB|/|B|", len(C), Fraction(scale * ab, len(B)), "<=", AB=ab),
        exact_check("A' in Q_S C", int(covered), 1, "="),
    ]
    params = {"k": k, "l": l, "L": L, "|A|": len(A), "|B|": len(B), "|AB|": ab, "M": len(C)}
    return CoveringCertificate(S, A_prime, C, kept, params, checks)


def cover_pipeline(A, B, k: int, l: int, variant: int = 1, budgets: Budgets = DEFAULT_BUDGETS) -> CoveringCertificate:
    """Choose ``S`` (variant 1: popular primes, variant 2: greedy chain) and decompose."""
    A, B = as_set(A), as_set(B)
    if variant == 1:
        S, pre = popular_primes(A, B, k, l)
        cert = covering_decomposition(A, B, S, k, l, budgets)
    elif variant == 2:
        S, A0, pre = greedy_prime_chain(A, B, k, l)
        cert = covering_decomposition(A0, B, S, k, l, budgets)
        pre.append(
            exact_check("|A'| >= (2l)^-k |A|/4", len(cert.A_prime), Fraction(len(A), 4 * (2 * l) ** k), ">=", k=k, l=l)
        )
        cert.params["|A0|"] = len(A0)
    else:
        raise ValueError("variant must be 1 or 2")
    cert.checks = pre + cert.checks
    cert.params["variant"] = variant
    cert.params["|A|"] = len(A)
    return cert


class PigeonholeLevel(NamedTuple):
    i: int
    B: FiniteSet
    ratio: Fraction
    check: CheckReport


def pigeonhole_level(A, m: int, budgets: Budgets = DEFAULT_BUDGETS) -> PigeonholeLevel:
    """The ``1 <= i < m`` minimising ``|A A^(i)| / |A^(i)|`` (smallest ``i`` on ties)."""
    if m < 2:
        raise ValueError("m must be >= 2")
    A = as_set(A)
    A.require_zero_free("pigeonhole level")
    levels = [A]
    for _ in range(m - 1):
        levels.append(product_set(levels[-1], A, budgets))
    ratios = [Fraction(len(levels[i]), len(levels[i - 1])) for i in range(1, m)]
    best = min(range(m - 1), key=lambda j: (ratios[j], j))
    ratio = ratios[best]
    check = exact_check(
        "ratio^(m-1) <= |A^(m)|/|A|", ratio ** (m - 1), Fraction(len(levels[-1]), len(A)), "<=", m=m, i=best + 1
    )
    return PigeonholeLevel(best + 1, levels[best], ratio, check)
