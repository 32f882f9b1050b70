"""Inequality harness.

Each ``check_*`` function returns :class:`~fewprimes.reports.CheckReport`
objects.  Inequalities with explicit constants are assertions: exact when both
sides are rational, log-space otherwise.  Statements whose constants are not
explicit appear only as report rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath

from .config import DEFAULT_BUDGETS, Budgets
from .energy import (
    additive_energy,
    co_convolve,
    convolve,
    cycle_homomorphism_count,
    edge_mass,
    higher_energy,
    mixed_moment,
    nondegenerate_energy,
    signed_representation_count,
)
from .errors import BudgetExceeded
from .reports import LOG_PREC_BITS, CheckReport, exact_check, log_check, log_of, log_product, report_only
from .setops import (
    FiniteSet,
    a_plus_aa_size,
    as_set,
    difference_set_size,
    iterated_product_size,
    iterated_sumset_size,
    product_set_size,
    sumset_size,
)


def check_holder_energy(A, m: int, budgets: Budgets = DEFAULT_BUDGETS) -> CheckReport:
    """``|mA| E_{2m}(A) >= |A|^{2m}``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    A = as_set(A)
    mA = iterated_sumset_size(A, m, budgets)
    E = higher_energy(A, m, budgets=budgets).value
    return exact_check("|mA| E_2m(A) >= |A|^2m", mA * E, len(A) ** (2 * m), ">=", m=m, mA=mA, E=E)


def check_energy_interpolation(
    A, x, signs: Sequence[int], r: int, k: int, budgets: Budgets = DEFAULT_BUDGETS
) -> CheckReport:
    """Solutions of ``sum eps_i a_i = x`` versus the interpolated energy bound."""
    n = len(signs)
    if not (r >= 1 and 2 * r <= n <= 2 * k):
        raise ValueError(f"need 2k >= n >= 2r >= 2, got n={n}, r={r}, k={k}")
    A = as_set(A)
    count = signed_representation_count(A, x, signs, budgets)
    Ek = higher_energy(A, k, budgets=budgets).value
    if k == r:
        terms = [(Ek, 1)]
        Er = Ek
    else:
        Er = higher_energy(A, r, budgets=budgets).value
        terms = [(Er, Fraction(2 * k - n, 2 * k - 2 * r)), (Ek, Fraction(n - 2 * r, 2 * k - 2 * r))]
    ctx = dict(n=n, r=r, k=k, x=Fraction(x), count=count, E_2r=Er, E_2k=Ek)
    if count == 0:
        return log_check("count <= E_2r^a E_2k^b", mpmath.ninf, log_product(terms), "<=", **ctx)
    return log_check("count <= E_2r^a E_2k^b", log_of(count), log_product(terms), "<=", **ctx)


@dataclass
class PopularSet:
    C: FiniteSet
    K: Fraction
    mode: str
    mass: int
    checks: list[CheckReport] = field(default_factory=list)


def popular_set(A, mode: str = "sums", l: int = 2, budgets: Budgets = DEFAULT_BUDGETS) -> PopularSet:
    """Values where the (co-)convolution of ``A`` with itself reaches ``|A| / 2K``."""
    A = as_set(A)
    if not len(A):
        raise ValueError("A must be nonempty")
    if mode == "sums":
        rep = convolve(A, A, budgets)
    elif mode == "differences":
        rep = co_convolve(A, A, budgets)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    n = len(A)
    K = Fraction(len(rep), n)
    C_vals = [x for x, c in rep.items() if 2 * K * c >= n]
    mass = sum(rep[x] for x in C_vals)
    C = FiniteSet(C_vals)
    EC = higher_energy(C, l, budgets=budgets).value
    EA = higher_energy(A, 2 * l, budgets=budgets).value
    checks = [
        exact_check("mass(C) >= |A|^2/2", mass, Fraction(n * n, 2), ">=", mode=mode),
        exact_check("|C| <= K|A|", len(C), K * n, "<=", mode=mode),
        exact_check(
            "E_2l(C) <= (2K)^2l |A|^-2l E_4l(A)",
            EC,
            (2 * K) ** (2 * l) * Fraction(EA, n ** (2 * l)),
            "<=",
            mode=mode,
            l=l,
        ),
    ]
    return PopularSet(C, K, mode, mass, checks)


def check_shkredov_steps(A, B, C, k: int, budgets: Budgets = DEFAULT_BUDGETS) -> list[CheckReport]:
    """The two explicit steps behind the even-cycle energy bound, plus their combination.

    (i)  ``V_2k >= mass^2k / (|A||B|)^k``
    (ii) ``V_2k^2 <= E_2k(C) (V_2k + S)`` where ``S`` is the mixed moment over ``x != 0``.
    Combining them gives ``mass^4k <= 4 (|A||B|)^2k E_2k(C) (E_2k(C) + S)``; that
    line is reported rather than asserted.
    """
    A, B, C = as_set(A), as_set(B), as_set(C)
    V = cycle_homomorphism_count(A, B, C, k, budgets)
    mass = edge_mass(A, B, C, budgets)
    ab = len(A) * len(B)
    E = higher_energy(C, k, budgets=budgets).value if len(C) else 0
    S = mixed_moment(A, B, k, budgets)
    rhs_i = Fraction(mass ** (2 * k), ab**k) if ab else 0
    combined_lhs = mass ** (4 * k)
    combined_rhs = 4 * ab ** (2 * k) * E * (E + S)
    return [
        exact_check("V_2k >= mass^2k / (|A||B|)^k", V, rhs_i, ">=", k=k, mass=mass),
        exact_check("V_2k^2 <= E_2k(C)(V_2k + S)", V * V, E * (V + S), "<=", k=k, E_2k=E, S=S),
        report_only(
            "mass^4k <= 4 (|A||B|)^2k E(E + S)",
            combined_lhs,
            combined_rhs,
            "<=",
            combined_lhs <= combined_rhs,
            k=k,
        ),
    ]


def check_asymmetric_energy(A, B, m: int, n: int, budgets: Budgets = DEFAULT_BUDGETS) -> CheckReport:
    """``E(A,B) <= E_2m(A)^(1/m) E_2n(B)^(1/(m(n-1))) |B|^(1 - n/(m(n-1)))``."""
    if m < 2 or n < 2:
        raise ValueError("need m, n >= 2")
    A, B = as_set(A), as_set(B)
    E = additive_energy(A, B, budgets).value
    Ea = higher_energy(A, m, budgets=budgets).value
    Eb = higher_energy(B, n, budgets=budgets).value
    d = m * (n - 1)
    rhs = log_product([(Ea, Fraction(1, m)), (Eb, Fraction(1, d)), (len(B), 1 - Fraction(n, d))])
    return log_check("E(A,B) <= E_2m(A)^1/m E_2n(B)^1/(m(n-1)) |B|^...", log_of(E), rhs, "<=", m=m, n=n, E=E)


def check_cauchy_schwarz_sumset(A, B, budgets: Budgets = DEFAULT_BUDGETS) -> CheckReport:
    """``|A+B| E(A,B) >= |A|^2 |B|^2``."""
    A, B = as_set(A), as_set(B)
    s = sumset_size(A, B, budgets)
    E = additive_energy(A, B, budgets).value
    return exact_check("|A+B| E(A,B) >= |A|^2|B|^2", s * E, (len(A) * len(B)) ** 2, ">=", sumset=s, E=E)


def check_nondegenerate_energy(A, m: int, budgets: Budgets = DEFAULT_BUDGETS) -> CheckReport:
    """``E*_2m(A) <= E_2m(A)``; the reverse direction hides a constant and is not checked."""
    A = as_set(A)
    Es = nondegenerate_energy(A, m, budgets).value
    E = higher_energy(A, m, budgets=budgets).value
    return exact_check("E*_2m(A) <= E_2m(A)", Es, E, "<=", m=m)


# -- example families ---------------------------------------------------------


def check_balog_wooley(M: int, N: int, A=None, budgets: Budgets = DEFAULT_BUDGETS) -> list[CheckReport]:
    """Exact size and product-set checks for ``{1..M} * {M, ..., M^N}``.

    The energy is compared with the disjoint pieces
    ``A_j = P M^j \\ (earlier pieces)``; ``E(A) / (N M^3)`` is reported.
    """
    from .families import balog_wooley

    A = balog_wooley(M, N) if A is None else as_set(A)
    AA = product_set_size(A, A, budgets)
    E = additive_energy(A, A, budgets).value
    seen: set = set()
    pieces = []
    for j in range(1, N + 1):
        piece = [p * M**j for p in range(1, M + 1) if p * M**j not in seen]
        seen.update(piece)
        pieces.append(piece)
    piece_sum = sum(additive_energy(p, p, budgets).value for p in pieces)
    ratio = Fraction(E, N * M**3)
    return [
        exact_check("|A| = MN - N + 1", len(A), M * N - N + 1, "=", M=M, N=N),
        exact_check("|AA| <= M^2 (2N - 1)", AA, M * M * (2 * N - 1), "<=", M=M, N=N),
        exact_check("E(A) >= sum_j E(A_j)", E, piece_sum, ">=", M=M, N=N),
        report_only("E(A) / (N M^3)", ratio, Fraction(1, 8), ">=", ratio >= Fraction(1, 8), M=M, N=N, E=E),
    ]


# -- exponent rows ------------------------------------------------------------


def _log_ratio(size: int | None, n: int) -> str:
    if size is None or n < 2 or size < 1:
        return ""
    with mpmath.workprec(LOG_PREC_BITS):
        # 12 fixed decimals of a 256-bit quotient: stable across platforms
        return f"{float(log_of(size) / log_of(n)):.12f}"


def _safe(fn, *args):
    try:
        return fn(*args)
    except BudgetExceeded:
        return None


def report_exponents(A, m_list: Sequence[int] = (3,), budgets: Budgets = DEFAULT_BUDGETS) -> dict[str, object]:
    """Exact sizes of the standard sum/product constructions plus ``log(size)/log|A|``.

    Values that would exceed a budget, and multiplicative ones when ``0`` is in
    ``A``, come back as ``None``.
    """
    A = as_set(A)
    n = len(A)
    mult = A.zero_free
    sizes: dict[str, int | None] = {
        "|A+A|": _safe(sumset_size, A, A, budgets),
        "|A-A|": _safe(difference_set_size, A, A, budgets),
        "|AA|": _safe(product_set_size, A, A, budgets) if mult else None,
        "|A+AA|": _safe(a_plus_aa_size, A, budgets) if mult else None,
    }
    for m in m_list:
        sizes[f"|{m}A|"] = _safe(iterated_sumset_size, A, m, budgets)
    for m in m_list:
        sizes[f"|A^({m})|"] = _safe(iterated_product_size, A, m, budgets) if mult else None
    row: dict[str, object] = {"n": n, **sizes}
    for key, v in sizes.items():
        row[f"log{key}/log|A|"] = _log_ratio(v, n)
    s, p = sizes["|A+A|"], sizes["|AA|"]
    row["log max(|A+A|,|AA|)/log|A|"] = _log_ratio(max(s, p) if s is not None and p is not None else None, n)
    return row
