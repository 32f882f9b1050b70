from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fewprimes.errors import UnfactoredResidue
from fewprimes.factored import (
    ONE,
    FactoredRational,
    PrimePool,
    dumps_element,
    element_from_json,
    element_to_json,
    factor,
    factor_over,
    in_QS,
    inverse,
    is_prime,
    mul,
    nu,
    omega,
    primes_up_to,
    s_free_part,
    to_exact,
)
from oracles import support


def test_factor_examples():
    assert factor(12, 100) == FactoredRational(1, ((2, 2), (3, 1)))
    assert factor(Fraction(3, 4), 100).factors == {2: -2, 3: 1}
    assert factor(-1, 100) == FactoredRational(-1, ())


def test_unfactored_residue():
    with pytest.raises(UnfactoredResidue):
        factor(101 * 103, 100)


def test_zero_rejected():
    with pytest.raises(ValueError):
        factor(0)


@pytest.mark.parametrize("x, expected", [(360, 3), (1, 0), (Fraction(3, 4), 2)])
def test_omega(x, expected):
    assert omega(factor(x)) == expected


def test_nu():
    assert nu(factor(12), 2) == 2
    assert nu(factor(12), 5) == 0
    assert nu(factor(Fraction(3, 4)), 2) == -2


def test_in_qs():
    assert in_QS(factor(Fraction(4, 3)), {2, 3})
    assert not in_QS(factor(5), {2, 3})
    assert in_QS(ONE, set())


def test_s_free_part_examples():
    assert [to_exact(y) for y in s_free_part(factor(12), {2})] == [3, 4]
    assert [to_exact(y) for y in s_free_part(factor(27), {2})] == [27, 1]
    assert [to_exact(y) for y in s_free_part(factor(-8), {2})] == [-1, 8]


def test_arithmetic_examples():
    assert to_exact(FactoredRational.from_map(1, {2: -2, 3: 1})) == Fraction(3, 4)
    assert mul(factor(2), factor(Fraction(1, 2))) == ONE
    assert to_exact(inverse(factor(Fraction(3, 4)))) == Fraction(4, 3)


def test_primes_and_pool():
    assert primes_up_to(30) == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
    assert all(is_prime(p) == (p in primes_up_to(1000)) for p in range(1000))
    assert is_prime(2**61 - 1) and not is_prime(2**61 + 1)
    assert PrimePool.first(5).primes == (2, 3, 5, 7, 11)
    with pytest.raises(ValueError):
        PrimePool((3, 2))
    with pytest.raises(ValueError):
        PrimePool((2, 4))


def test_invalid_representation():
    with pytest.raises(ValueError):
        FactoredRational(1, ((2, 0),))
    with pytest.raises(ValueError):
        FactoredRational(1, ((3, 1), (2, 1)))
    with pytest.raises(ValueError):
        FactoredRational(0, ())


def test_factor_over():
    assert factor_over(Fraction(12, 5), [2, 3, 5]).factors == {2: 2, 3: 1, 5: -1}
    assert factor_over(14, [2, 3]) is None


def test_json_roundtrip_and_canonical_order():
    x = element_from_json({"sign": -1, "factors": {"5": -1, "2": 3, "11": 1}})
    assert to_exact(x) == Fraction(-8 * 11, 5)
    assert dumps_element(x) == '{"sign":-1,"factors":{"2":3,"5":-1,"11":1}}'
    assert element_from_json({"int": "360"}) == factor(360)
    assert element_from_json({"rat": "3/4"}) == factor(Fraction(3, 4))
    assert element_from_json(element_to_json(x)) == x
    with pytest.raises(ValueError):
        element_from_json({"sign": 1, "factors": {"4": 1}})


rationals = st.builds(
    lambda n, d, s: Fraction(s * n, d),
    st.integers(1, 10**6),
    st.integers(1, 10**4),
    st.sampled_from([1, -1]),
)


@given(rationals)
def test_roundtrip(q):
    fx = factor(q)
    assert to_exact(fx) == q
    assert fx.support == support(q)


@given(rationals, rationals)
def test_valuations_add(x, y):
    fx, fy = factor(x), factor(y)
    fxy = mul(fx, fy)
    for p in fx.support | fy.support:
        assert nu(fxy, p) == nu(fx, p) + nu(fy, p)
    assert omega(fxy) <= omega(fx) + omega(fy)
    if not fx.support & fy.support:
        assert omega(fxy) == omega(fx) + omega(fy)


@given(rationals, st.sets(st.sampled_from([2, 3, 5, 7, 11])))
def test_s_free_part_reconstructs(q, S):
    x1, x2 = s_free_part(factor(q), S)
    assert to_exact(x1) * to_exact(x2) == q
    assert in_QS(x2, S) and not (x1.support & S)
    assert to_exact(x2) > 0
