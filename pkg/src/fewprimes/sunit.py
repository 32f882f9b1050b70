"""Linear equations over finitely generated subgroups of the nonzero rationals.

The group is never enumerated in full: a finite box of exponents
``|e_i| <= H`` gives a finite slice, and counts over growing boxes are nested.
Solutions are split into nondegenerate ones (no nonempty subsum of the
right-hand side vanishes) and degenerate ones.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Sequence

from .config import DEFAULT_BUDGETS, Budgets
from .errors import BudgetExceeded
from .factored import FactoredRational, as_fraction, factor, factor_over
from .setops import FiniteSet, as_set


def _rank(rows: list[list[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def _solve(G: list[list[int]], v: list[int]) -> list[Fraction] | None:
    """Solve ``sum_i e_i G[i] = v`` (unique solution when rows are independent)."""
    r, ncols = len(G), len(v)
    # augmented system: one equation per prime column
    rows = [[Fraction(G[i][j]) for i in range(r)] + [Fraction(v[j])] for j in range(ncols)]
    piv_cols = []
    rank = 0
    for col in range(r):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        rows[rank] = [a / p for a in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        piv_cols.append(col)
        rank += 1
    if any(rows[i][r] != 0 for i in range(rank, len(rows))):
        return None
    e = [Fraction(0)] * r
    for i, col in enumerate(piv_cols):
        e[col] = rows[i][r]
    return e


@dataclass(frozen=True)
class GroupSpec:
    """The group generated by multiplicatively independent rationals, optionally with -1.

    The rank counts generators only; adjoining -1 does not change it.
    """

    generators: tuple[FactoredRational, ...] = ()
    include_torsion: bool = True

    def __post_init__(self):
        gens = tuple(g if isinstance(g, FactoredRational) else factor(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if any(not g.exps for g in gens):
            raise ValueError("generators must not be +-1")
        if gens and _rank([[Fraction(e) for e in row] for row in self.exponent_matrix]) != len(gens):
            raise ValueError("generators are not multiplicatively independent")

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(sorted({p for g in self.generators for p in g.support}))

    @property
    def exponent_matrix(self) -> list[list[int]]:
        ps = self.primes
        return [[dict(g.exps).get(p, 0) for p in ps] for g in self.generators]


@dataclass(frozen=True)
class ExponentBox:
    H: int

    def __post_init__(self):
        if self.H < 1:
            raise ValueError("H must be >= 1")

    def size(self, spec: GroupSpec) -> int:
        return (2 * self.H + 1) ** spec.rank * (2 if spec.include_torsion else 1)


@dataclass(frozen=True)
class EquationInstance:
    """``a0 = a1 z1 + ... + am zm``."""

    a0: Fraction
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "a0", as_fraction(self.a0))
        object.__setattr__(self, "coeffs", tuple(as_fraction(c) for c in self.coeffs))
        if self.a0 == 0 or any(c == 0 for c in self.coeffs):
            raise ValueError("a0 and all coefficients must be nonzero")
        if not self.coeffs:
            raise ValueError("need at least one coefficient")

    @property
    def m(self) -> int:
        return len(self.coeffs)


def boxed_elements(spec: GroupSpec, box: ExponentBox, budgets: Budgets = DEFAULT_BUDGETS) -> dict[Fraction, tuple]:
    """Map each element of the box to ``(sign, exponents)``."""
    n = box.size(spec)
    if n > budgets.group_elements:
        raise BudgetExceeded("boxed group slice", n, budgets.group_elements)
    values = [g.to_exact() for g in spec.generators]
    out: dict[Fraction, tuple] = {}
    rng = range(-box.H, box.H + 1)
    powers = [{e: v**e for e in rng} for v in values]
    for es in product(rng, repeat=spec.rank):
        x = Fraction(1)
        for pw, e in zip(powers, es):
            x *= pw[e]
        out[x] = (1, es)
        if spec.include_torsion:
            out[-x] = (-1, es)
    return out


def enumerate_group(spec: GroupSpec, box: ExponentBox, budgets: Budgets = DEFAULT_BUDGETS) -> FiniteSet:
    """All ``+-prod g_i^e_i`` with ``|e_i| <= H`` (sign only if torsion is adjoined)."""
    return FiniteSet(boxed_elements(spec, box, budgets), primes=spec.primes)


def group_membership(x, spec: GroupSpec, box: ExponentBox | None = None) -> tuple[int, tuple[int, ...]] | None:
    """Exponents of ``x`` over the generators, or ``None`` if ``x`` is not in the (boxed) group.

    Decided by factoring ``x`` over the generators' primes and solving the
    integer linear system, never by enumeration.
    """
    q = as_fraction(x)
    if q == 0:
        return None
    fx = factor_over(q, spec.primes)
    if fx is None:
        return None
    v = [dict(fx.exps).get(p, 0) for p in spec.primes]
    if not spec.generators:
        e: list[Fraction] = []
        if any(v):
            return None
    else:
        e = _solve(spec.exponent_matrix, v)
        if e is None or any(c.denominator != 1 for c in e):
            return None
    es = tuple(int(c) for c in e)
    if box is not None and any(abs(c) > box.H for c in es):
        return None
    sign = 1
    for g, c in zip(spec.generators, es):
        if g.sign < 0 and c % 2:
            sign = -sign
    torsion = 1 if sign == fx.sign else -1
    if torsion == -1 and not spec.include_torsion:
        return None
    return torsion, es


def is_degenerate(terms: Sequence[Fraction]) -> bool:
    """Some nonempty subset of ``terms`` sums to zero."""
    n = len(terms)
    sums = [Fraction(0)] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + terms[low.bit_length() - 1]
        if sums[mask] == 0:
            return True
    return False


@dataclass
class SolutionCount:
    nondegenerate: int
    degenerate: int
    solutions: list[tuple[Fraction, ...]] = field(default_factory=list)
    degenerate_solutions: list[tuple[Fraction, ...]] = field(default_factory=list)

    @property
    def total(self) -> int:
        return self.nondegenerate + self.degenerate


def _classify(eq: EquationInstance, sols) -> SolutionCount:
    good, bad = [], []
    for z in sorted(sols):
        terms = [a * zi for a, zi in zip(eq.coeffs, z)]
        (bad if is_degenerate(terms) else good).append(z)
    return SolutionCount(len(good), len(bad), good, bad)


def count_nondegenerate_solutions(
    eq: EquationInstance,
    spec: GroupSpec,
    box: ExponentBox,
    method: str = "mitm",
    budgets: Budgets = DEFAULT_BUDGETS,
) -> SolutionCount:
    """Count solutions ``z`` in the boxed group, split by degeneracy.

    ``method="mitm"`` matches hash-keyed partial sums of the two halves;
    ``"naive"`` tries every m-tuple and is kept as an oracle.
    """
    gamma = sorted(boxed_elements(spec, box, budgets))
    m = eq.m
    if m == 1:
        z = eq.a0 / eq.coeffs[0]
        hit = group_membership(z, spec, box) is not None
        return _classify(eq, [(z,)] if hit else [])
    if method not in ("mitm", "naive"):
        raise ValueError(f"unknown method {method!r}")
    # every term a_i z becomes an integer over one common denominator
    den = 1
    for q in (eq.a0, *eq.coeffs, *gamma):
        den = den * q.denominator // gcd(den, q.denominator)
    gamma_scaled = [z * den for z in gamma]
    scale = 1
    for a in (eq.a0, *eq.coeffs):
        scale = scale * a.denominator // gcd(scale, a.denominator)
    terms = [[int(a * scale * g) for g in gamma_scaled] for a in eq.coeffs]
    target = int(eq.a0 * scale * den)
    idx = range(len(gamma))
    if method == "naive":
        work = len(gamma) ** m
        if work > budgets.brute_force:
            raise BudgetExceeded("naive solution enumeration", work, budgets.brute_force)
        hits = [t for t in product(idx, repeat=m) if sum(terms[i][j] for i, j in enumerate(t)) == target]
    else:
        h = m // 2
        work = len(gamma) ** max(h, m - h)
        if work > budgets.brute_force:
            raise BudgetExceeded("meet-in-the-middle table", work, budgets.brute_force)
        right: dict[int, list[tuple]] = {}
        for t in product(idx, repeat=m - h):
            right.setdefault(sum(terms[h + i][j] for i, j in enumerate(t)), []).append(t)
        hits = [
            t + tail
            for t in product(idx, repeat=h)
            for tail in right.get(target - sum(terms[i][j] for i, j in enumerate(t)), ())
        ]
    return _classify(eq, [tuple(gamma[j] for j in t) for t in hits])


@dataclass
class ScanResult:
    rows: list[tuple[int, int, int]]  # (H, nondegenerate, degenerate)

    @property
    def counts(self) -> list[int]:
        return [r[1] for r in self.rows]

    @property
    def monotone(self) -> bool:
        c = self.counts
        return all(a <= b for a, b in zip(c, c[1:]))

    @property
    def plateau_H(self) -> int | None:
        """Smallest scanned H from which the nondegenerate count stays constant."""
        if not self.rows:
            return None
        last = self.rows[-1][1]
        H = self.rows[-1][0]
        for h, n, _ in reversed(self.rows):
            if n != last:
                break
            H = h
        return H

    @property
    def stable(self) -> bool:
        """The final count was already reached at an earlier scanned H."""
        return len(self.rows) >= 2 and self.rows[-1][1] == self.rows[-2][1]

    def to_csv(self, stream=None) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["H", "nondegenerate_count", "degenerate_count"])
        w.writerows(self.rows)
        text = buf.getvalue()
        if stream is not None:
            stream.write(text)
        return text


def stabilization_scan(
    eq: EquationInstance,
    spec: GroupSpec,
    H_list: Sequence[int],
    method: str = "mitm",
    budgets: Budgets = DEFAULT_BUDGETS,
) -> ScanResult:
    """Nondegenerate counts over increasing boxes; reports, never asserts, stabilisation."""
    rows = []
    for H in sorted(H_list):
        res = count_nondegenerate_solutions(eq, spec, ExponentBox(H), method, budgets)
        rows.append((H, res.nondegenerate, res.degenerate))
    return ScanResult(rows)


@dataclass
class QuotientGraph:
    """Directed graph on ``B``: ``b1 -> b2`` when ``g1 b1 - g2 b2 = x`` for boxed ``g1, g2``.

    ``edges`` maps each edge to the number of ``(g1, g2)`` pairs realising it.
    """

    vertices: tuple[Fraction, ...]
    x: Fraction
    edges: dict[tuple[Fraction, Fraction], int]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def representations(self) -> int:
        return sum(self.edges.values())

    @property
    def max_solutions_per_edge(self) -> int:
        return max(self.edges.values(), default=0)

    @property
    def out_degrees(self) -> dict[Fraction, int]:
        deg = {b: 0 for b in self.vertices}
        for b1, _ in self.edges:
            deg[b1] += 1
        return deg

    @property
    def max_out_degree(self) -> int:
        return max(self.out_degrees.values(), default=0)

    @property
    def d(self) -> Fraction:
        """Average out-degree ``edges / |B|``."""
        return Fraction(self.edge_count, len(self.vertices)) if self.vertices else Fraction(0)


def quotient_graph(B, spec: GroupSpec, box: ExponentBox, x, budgets: Budgets = DEFAULT_BUDGETS) -> QuotientGraph:
    B = as_set(B)
    x = as_fraction(x)
    if x == 0:
        raise ValueError("x must be nonzero")
    B.require_zero_free("quotient graph")
    gamma = boxed_elements(spec, box, budgets)
    work = len(B) ** 2 * len(gamma)
    if work > budgets.brute_force:
        raise BudgetExceeded("quotient graph", work, budgets.brute_force)
    edges: dict[tuple[Fraction, Fraction], int] = {}
    bs = B.elements
    for b1 in bs:
        for g1 in gamma:
            y = g1 * b1 - x
            for b2 in bs:
                if y / b2 in gamma:
                    edges[(b1, b2)] = edges.get((b1, b2), 0) + 1
    return QuotientGraph(bs, x, dict(sorted(edges.items())))
