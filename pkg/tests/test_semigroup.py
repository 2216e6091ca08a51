import pytest

from brieskorn.errors import NotInSemigroup, UnsupportedCase
from brieskorn.semigroup import (
    bound_N,
    build_membership,
    kappa,
    lattice_count_tau1,
    unique_representation,
)
from brieskorn.sweeps import coprime_triples

import oracles


@pytest.mark.parametrize("a, N", [((2, 3, 5), -1), ((2, 3, 7), 1), ((3, 4, 7), 23),
                                  ((2, 3, 5, 7), 2 * 210 - 105 - 70 - 42 - 30)])
def test_bound_N(a, N):
    assert bound_N(a) == N


def test_small_membership():
    assert build_membership((2, 3, 7)).elements() == [0]
    assert build_membership((2, 3, 13)).elements() == [0, 6]
    assert build_membership((2, 3, 5)).elements() == []


def test_membership_matches_enumeration():
    for t in coprime_triples(3000):
        G = build_membership(t)
        assert set(G.elements()) == oracles.semigroup_members(G.generators, G.N), t


def test_membership_closure_and_N_not_in_G():
    for t in coprime_triples(10000):
        G = build_membership(t)
        if G.N < 0:
            continue
        assert G.N not in G
        for g in G.elements():
            for s in G.generators:
                if g + s <= G.N:
                    assert g + s in G


@pytest.mark.parametrize("a, k", [((2, 3, 5), 0), ((2, 3, 7), 1), ((2, 3, 13), 2)])
def test_kappa(a, k):
    assert kappa(a) == k


def test_kappa_needs_triple():
    with pytest.raises(UnsupportedCase):
        kappa((2, 3, 5, 7))


def test_lattice_count_matches_brute_force_and_kappa():
    assert lattice_count_tau1((2, 3, 5)) == 0
    assert lattice_count_tau1((2, 3, 7)) == 1
    for t in coprime_triples(2000):
        assert lattice_count_tau1(t) == oracles.lattice_points(*t) == kappa(t), t


def test_unique_representation():
    assert unique_representation(6, (2, 3, 13)) == (0, 0, 1)
    assert unique_representation(0, (2, 3, 13)) == (0, 0, 0)
    with pytest.raises(NotInSemigroup):
        unique_representation(5, (2, 3, 13))


def test_unique_representation_exhaustive():
    for a, b, c in coprime_triples(5000):
        for n in build_membership((a, b, c)).elements():
            reps = oracles.representations(n, a, b, c)
            assert reps == [unique_representation(n, (a, b, c))], (a, b, c, n)
