"""Exact sum-product experiments on sets whose elements have few prime factors."""

from .config import DEFAULT_BUDGETS, Budgets
from .covering import (
    CoveringCertificate,
    cover_pipeline,
    covering_decomposition,
    greedy_prime_chain,
    m_covered_check,
    pigeonhole_level,
    popular_primes,
    split_by_s_free_part,
)
from .energy import (
    additive_energy,
    co_convolve,
    convolve,
    cycle_homomorphism_count,
    cycle_homomorphism_count_brute,
    higher_energy,
    m_fold_convolution,
    max_nonzero_coconv,
    nondegenerate_energy,
    signed_representation_count,
)
from .errors import (
    BudgetExceeded,
    CheckFailed,
    ExhaustedSampler,
    FewPrimesError,
    HypothesisViolated,
    UnfactoredResidue,
    ZeroElement,
)
from .factored import FactoredRational, PrimePool, factor, factor_over, in_QS, nu, omega, s_free_part
from .families import FamilySpec, balog_wooley, geometric, random_few_prime
from .reports import CheckReport
from .setops import (
    FiniteSet,
    a_plus_aa,
    difference_set,
    iterated_product,
    iterated_sumset,
    product_set,
    product_set_size,
    sumset,
    sumset_size,
)
from .sunit import (
    EquationInstance,
    ExponentBox,
    GroupSpec,
    count_nondegenerate_solutions,
    enumerate_group,
    group_membership,
    quotient_graph,
    stabilization_scan,
)
from .verify import (
    PopularSet,
    check_asymmetric_energy,
    check_balog_wooley,
    check_cauchy_schwarz_sumset,
    check_energy_interpolation,
    check_holder_energy,
    check_nondegenerate_energy,
    check_shkredov_steps,
    popular_set,
    report_exponents,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Budgets",
    "CheckFailed",
    "CheckReport",
    "CoveringCertificate",
    "DEFAULT_BUDGETS",
    "EquationInstance",
    "ExhaustedSampler",
    "ExponentBox",
    "FactoredRational",
    "FamilySpec",
    "FewPrimesError",
    "FiniteSet",
    "GroupSpec",
    "HypothesisViolated",
    "PopularSet",
    "PrimePool",
    "UnfactoredResidue",
    "ZeroElement",
    "a_plus_aa",
    "additive_energy",
    "balog_wooley",
    "check_asymmetric_energy",
    "check_balog_wooley",
    "check_cauchy_schwarz_sumset",
    "check_energy_interpolation",
    "check_holder_energy",
    "check_nondegenerate_energy",
    "check_shkredov_steps",
    "co_convolve",
    "convolve",
    "count_nondegenerate_solutions",
    "cover_pipeline",
    "covering_decomposition",
    "cycle_homomorphism_count",
    "cycle_homomorphism_count_brute",
    "difference_set",
    "enumerate_group",
    "factor",
    "factor_over",
    "geometric",
    "greedy_prime_chain",
    "group_membership",
    "higher_energy",
    "in_QS",
    "iterated_product",
    "iterated_sumset",
    "m_covered_check",
    "m_fold_convolution",
    "max_nonzero_coconv",
    "nondegenerate_energy",
    "nu",
    "omega",
    "pigeonhole_level",
    "popular_primes",
    "popular_set",
    "product_set",
    "product_set_size",
    "quotient_graph",
    "random_few_prime",
    "report_exponents",
    "s_free_part",
    "signed_representation_count",
    "split_by_s_free_part",
    "stabilization_scan",
    "sumset",
    "sumset_size",
]
