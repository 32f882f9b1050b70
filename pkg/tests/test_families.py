from fractions import Fraction

import pytest

from fewprimes.errors import ExhaustedSampler
from fewprimes.factored import PrimePool, factor, omega
from fewprimes.families import FamilySpec, balog_wooley, geometric, random_few_prime
from fewprimes.setops import product_set_size, sumset_size


def test_balog_wooley_examples():
    assert balog_wooley(2, 2).elements == (2, 4, 8)
    assert set(balog_wooley(7, 1).elements) == {7 * p for p in range(1, 8)}


@pytest.mark.parametrize("M, N", [(2, 1), (3, 4), (6, 3), (8, 4), (11, 2)])
def test_balog_wooley_size_and_products(M, N):
    A = balog_wooley(M, N)
    assert len(A) == M * N - N + 1 <= M * N
    assert product_set_size(A, A) <= M * M * (2 * N - 1)
    assert A.zero_free


def test_geometric():
    assert geometric(2, 4).elements == (2, 4, 8, 16)
    A = geometric(Fraction(-3, 5), 6)
    assert all(omega(A.factorization(x)) <= 2 for x in A.elements)
    with pytest.raises(ValueError):
        geometric(-1, 3)


@pytest.mark.parametrize("n", [1, 5, 12, 20])
def test_geometric_sumset_and_products(n):
    A = geometric(3, n)
    assert sumset_size(A, A) == n * (n + 1) // 2
    assert product_set_size(A, A) == 2 * n - 1


def test_random_few_prime():
    A = random_few_prime([2], 1, 6, 4, seed=1)
    assert set(A.elements) <= {2, 4, 8, 16, 32, 64}
    pool = PrimePool.first(10)
    B = random_few_prime(pool, 3, 4, 200, seed=5, mode="rational", signed=True)
    assert len(B) == 200 and B.zero_free
    assert max(omega(B.factorization(x)) for x in B.elements) <= 3
    assert B == random_few_prime(pool, 3, 4, 200, seed=5, mode="rational", signed=True)
    assert B != random_few_prime(pool, 3, 4, 200, seed=6, mode="rational", signed=True)
    assert any(x.denominator > 1 for x in B.elements) and any(x < 0 for x in B.elements)


def test_sampler_exhaustion_and_validation():
    with pytest.raises(ExhaustedSampler):
        random_few_prime([2], 1, 3, 4, seed=0)
    with pytest.raises(ValueError):
        random_few_prime([2], 2, 3, 1, seed=0)


def test_family_spec_roundtrip():
    spec = FamilySpec.from_args("random_few_prime", ["pool=8", "k=2", "size=30", "seed=4"])
    assert spec.seed == 4
    again = FamilySpec.from_json('{"kind": "random_few_prime", "params": {"pool": 8, "k": 2, "size": 30, "seed": 4}}')
    assert again.build() == spec.build()
    assert FamilySpec("balog_wooley", {"M": 4, "N": 3}).build() == balog_wooley(4, 3)
    assert FamilySpec.from_args("geometric", ["q=3/2", "n=5"]).build() == geometric(factor(Fraction(3, 2)), 5)
    with pytest.raises(ValueError):
        FamilySpec("cantor", {})
