import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brieskorn.errors import (
    DegenerateBase,
    ExponentTooSmall,
    NotPairwiseCoprime,
    NotPrime,
    PrimeDividesExponent,
    PrimeDoesNotDivide,
    TooFewExponents,
)
from brieskorn.seifert import (
    BrieskornExponents,
    branched_pair,
    brieskorn_seifert_data,
    free_quotient_data,
)
from brieskorn.sweeps import coprime_triples

import oracles


@pytest.mark.parametrize("a, e0, b", [
    ((2, 3, 7), -1, (1, 1, 1)),
    ((2, 3, 5), -2, (1, 2, 4)),
])
def test_known_seifert_data_matches_brute_force(a, e0, b):
    assert oracles.seifert_solutions(a) == [(e0, b)]
    sd = brieskorn_seifert_data(a)
    assert (sd.e0, sd.b) == (e0, b)


def test_unique_solution_for_small_triples():
    for t in coprime_triples(5000):
        sols = oracles.seifert_solutions(t, range(-3, 0))
        sd = brieskorn_seifert_data(t)
        assert sols == [(sd.e0, sd.b)], t


def test_defining_identity_all_triples_up_to_a_million():
    for t in coprime_triples(10 ** 6):
        sd = brieskorn_seifert_data(t)
        assert sd.identity_residual() == 0
        assert sd.e0 < 0
        assert all(0 < bj < aj for aj, bj in sd.pairs())


def _random_tuple(rng, r):
    out = []
    while len(out) < r:
        x = rng.randint(2, 60)
        if all(oracles.coprime((x, y)) for y in out):
            out.append(x)
    return tuple(out)


@pytest.mark.parametrize("r", [4, 5])
def test_defining_identity_random_longer_tuples(r):
    rng = random.Random(r)
    for _ in range(300):
        a = _random_tuple(rng, r)
        sd = brieskorn_seifert_data(a)
        assert sd.identity_residual() == 0 and sd.e0 < 0


def test_values_sorted_original_kept():
    a = BrieskornExponents((7, 2, 3))
    assert a.values == (2, 3, 7)
    assert a.original == (7, 2, 3)
    assert str(a) == "Sigma(7,2,3)"


def test_arbitrary_precision():
    big = (2 ** 61 - 1, 2 ** 89 - 1, 2 ** 107 - 1)
    sd = brieskorn_seifert_data(big)
    assert sd.identity_residual() == 0


@pytest.mark.parametrize("a, exc", [
    ((2, 3), TooFewExponents),
    ((1, 3, 5), ExponentTooSmall),
    ((2, 4, 5), NotPairwiseCoprime),
])
def test_validation(a, exc):
    with pytest.raises(exc):
        BrieskornExponents(a)


def test_branched_pair():
    assert branched_pair((2, 3, 35), 5).base.values == (2, 3, 7)
    assert branched_pair((2, 3, 35), 7).base.values == (2, 3, 5)
    bp = branched_pair((4, 3, 5), 2)
    assert bp.base.values == (2, 3, 5) and bp.divided == 4
    with pytest.raises(PrimeDoesNotDivide):
        branched_pair((2, 3, 7), 5)
    with pytest.raises(DegenerateBase):
        branched_pair((2, 3, 7), 2)
    with pytest.raises(NotPrime):
        branched_pair((2, 3, 35), 35)
    # a quotient exponent of 1 drops out when enough remain
    assert branched_pair((2, 3, 5, 7), 7).base.values == (2, 3, 5)


@given(st.sampled_from([2, 3, 5, 7, 11, 13]), st.integers(2, 40), st.integers(2, 40))
@settings(max_examples=200, deadline=None)
def test_branched_pair_product_invariant(p, x, y):
    t = (p * x, y, x * y + 1)
    if not oracles.coprime(t) or any(v <= 1 for v in t):
        return
    try:
        bp = branched_pair(t, p)
    except DegenerateBase:
        return
    assert bp.base.product * p == bp.total.product
    assert oracles.coprime(bp.base.values)


def test_free_quotient_data():
    assert free_quotient_data(brieskorn_seifert_data((2, 3, 7)), 5) == (-5, ((2, 5), (3, 5), (7, 5)))
    assert free_quotient_data(brieskorn_seifert_data((2, 3, 5)), 7) == (-14, ((2, 7), (3, 14), (5, 28)))
    with pytest.raises(PrimeDividesExponent):
        free_quotient_data(brieskorn_seifert_data((2, 3, 7)), 7)
