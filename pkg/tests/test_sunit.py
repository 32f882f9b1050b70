from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fewprimes.config import Budgets
from fewprimes.energy import co_convolve
from fewprimes.errors import BudgetExceeded
from fewprimes.factored import factor
from fewprimes.setops import FiniteSet, product_set
from fewprimes.sunit import (
    EquationInstance,
    ExponentBox,
    GroupSpec,
    count_nondegenerate_solutions,
    enumerate_group,
    group_membership,
    quotient_graph,
    stabilization_scan,
)
import oracles as o

TWO = GroupSpec((factor(2),), True)
TWO_THREE = GroupSpec((factor(2), factor(3)), False)


def test_enumeration_examples():
    assert set(enumerate_group(TWO, ExponentBox(1)).elements) == {
        Fraction(x) for x in (-2, -1, Fraction(-1, 2), Fraction(1, 2), 1, 2)
    }
    assert set(enumerate_group(GroupSpec((), True), ExponentBox(3)).elements) == {-1, 1}
    G = enumerate_group(TWO_THREE, ExponentBox(1))
    assert len(G) == 9 and set(G.elements) == o.boxed_group([2, 3], 1, False)


def test_spec_validation():
    with pytest.raises(ValueError):
        GroupSpec((factor(2), factor(4)))
    with pytest.raises(ValueError):
        GroupSpec((factor(6), factor(Fraction(2, 3)), factor(3)))
    with pytest.raises(ValueError):
        GroupSpec((factor(-1),))
    assert GroupSpec((factor(6), factor(Fraction(2, 3)))).rank == 2
    with pytest.raises(ValueError):
        ExponentBox(0)
    with pytest.raises(ValueError):
        EquationInstance(0, (1,))
    with pytest.raises(ValueError):
        EquationInstance(1, (1, 0))


def test_group_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_group(TWO_THREE, ExponentBox(50), Budgets(group_elements=100))


def test_membership():
    spec = GroupSpec((factor(6), factor(Fraction(2, 3))), True)
    assert group_membership(Fraction(4), spec) == (1, (1, 1))
    assert group_membership(Fraction(-9), spec) == (-1, (1, -1))
    assert group_membership(Fraction(2), spec) is None
    assert group_membership(Fraction(4), spec, ExponentBox(1)) == (1, (1, 1))
    assert group_membership(Fraction(16), spec, ExponentBox(1)) is None
    assert group_membership(Fraction(-2), GroupSpec((factor(2),), False)) is None


def test_unit_equation_has_three_solutions():
    eq = EquationInstance(1, (1, -1))
    expected = [(Fraction(-1), Fraction(-2)), (Fraction(1, 2), Fraction(-1, 2)), (Fraction(2), Fraction(1))]
    for H in (1, 2, 3, 4):
        res = count_nondegenerate_solutions(eq, TWO, ExponentBox(H))
        assert res.nondegenerate == 3 and res.solutions == expected
        good, bad = o.equation_solutions(1, (1, -1), o.boxed_group([2], H, True))
        assert (len(good), len(bad)) == (3, 0)


def test_single_term_equation():
    assert count_nondegenerate_solutions(EquationInstance(4, (1,)), TWO, ExponentBox(2)).nondegenerate == 1
    assert count_nondegenerate_solutions(EquationInstance(4, (1,)), TWO, ExponentBox(1)).nondegenerate == 0
    scan = stabilization_scan(EquationInstance(5, (1,)), TWO, [1, 2, 3])
    assert scan.counts == [0, 0, 0]


def test_degenerate_solutions_are_split_off():
    res = count_nondegenerate_solutions(EquationInstance(1, (1, 1, -1)), TWO, ExponentBox(1), method="naive")
    good, bad = o.equation_solutions(1, (1, 1, -1), o.boxed_group([2], 1, True))
    assert (res.nondegenerate, res.degenerate) == (len(good), len(bad))
    assert res.degenerate > 0


def test_scan_csv_and_plateau():
    scan = stabilization_scan(EquationInstance(1, (1, -1)), TWO, [1, 2, 3, 4])
    assert scan.to_csv() == "H,nondegenerate_count,degenerate_count\n1,3,0\n2,3,0\n3,3,0\n4,3,0\n"
    assert scan.stable and scan.plateau_H == 1 and scan.monotone


coeff = st.sampled_from([Fraction(c) for c in (1, -1, 2, -2, 3, Fraction(1, 2), -6)])


@settings(max_examples=15, deadline=None)
@given(coeff, coeff, coeff, st.sampled_from([Fraction(c) for c in (1, 2, 5, -1, Fraction(3, 2))]))
def test_mitm_matches_naive_and_oracle(c1, c2, c3, a0):
    eq = EquationInstance(a0, (c1, c2, c3))
    prev = -1
    for H in (1, 2):
        mitm = count_nondegenerate_solutions(eq, TWO_THREE, ExponentBox(H))
        naive = count_nondegenerate_solutions(eq, TWO_THREE, ExponentBox(H), method="naive")
        assert (mitm.nondegenerate, mitm.degenerate) == (naive.nondegenerate, naive.degenerate)
        assert mitm.solutions == naive.solutions
        assert mitm.nondegenerate >= prev
        prev = mitm.nondegenerate
    good, bad = o.equation_solutions(a0, (c1, c2, c3), o.boxed_group([2, 3], 1, False))
    one = count_nondegenerate_solutions(eq, TWO_THREE, ExponentBox(1))
    assert (one.nondegenerate, one.degenerate) == (len(good), len(bad))


def test_quotient_graph_self_loop():
    g = quotient_graph([1], TWO, ExponentBox(2), 1)
    assert (Fraction(1), Fraction(1)) in g.edges
    assert quotient_graph([1], TWO, ExponentBox(2), 7).edge_count == 0


def test_quotient_graph_counts_representations():
    B = FiniteSet([1, 3, 5, 7])
    box = ExponentBox(2)
    A = product_set(enumerate_group(TWO, box), B)
    diffs = co_convolve(A, A)
    for x in (1, 2, 3, Fraction(1, 2), 6):
        g = quotient_graph(B, TWO, box, x)
        assert g.representations == diffs.get(Fraction(x), 0)
        assert diffs.get(Fraction(x), 0) <= g.edge_count * g.max_solutions_per_edge
        assert g.d == Fraction(g.edge_count, 4)


def test_quotient_graph_reversal():
    B = [1, 3, 5]
    g = quotient_graph(B, TWO, ExponentBox(2), 3)
    h = quotient_graph(B, TWO, ExponentBox(2), -3)
    assert set(h.edges) == {(b2, b1) for b1, b2 in g.edges}
