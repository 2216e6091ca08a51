"""The numerical semigroup G generated by the cofactors A/a_j.

For a triple (a, b, c) this is the semigroup generated by bc, ac, ab.  Its
intersection with [0, N] controls the delta sequence, and its size there is
the count ``kappa`` that feeds the Casson invariant.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import kernels
from .errors import NotInSemigroup, UnsupportedCase
from .seifert import BrieskornExponents


def bound_N(a: Sequence[int] | BrieskornExponents) -> int:
    """(r - 2) * A - sum A/a_j.  Negative only for (2,3,5) among triples."""
    a = BrieskornExponents.of(a)
    return (a.r - 2) * a.product - sum(a.cofactors())


@dataclass(frozen=True, eq=False)
class Semigroup:
    generators: tuple[int, ...]
    N: int
    table: np.ndarray  # bool, index n <-> n in G, for 0 <= n <= N

    def __contains__(self, n: int) -> bool:
        return 0 <= n <= self.N and bool(self.table[n])

    def elements(self) -> list[int]:
        return np.flatnonzero(self.table).tolist()

    def __len__(self):
        return int(self.table.sum())


def build_membership(a: Sequence[int] | BrieskornExponents) -> Semigroup:
    a = BrieskornExponents.of(a)
    return _membership(a.values)


@lru_cache(maxsize=64)
def _membership(values: tuple[int, ...]) -> Semigroup:
    a = BrieskornExponents(values)
    N = bound_N(a)
    gens = a.cofactors()
    table = kernels.membership(gens, N)
    table.setflags(write=False)
    return Semigroup(gens, N, table)


def _triple(a) -> BrieskornExponents:
    a = BrieskornExponents.of(a)
    if a.r != 3:
        raise UnsupportedCase(f"defined for three exponents only, got {a.r}")
    return a


def kappa(a: Sequence[int] | BrieskornExponents) -> int:
    """|G ∩ [0, N]| for a triple; 0 when N < 0."""
    return len(build_membership(_triple(a)))


def unique_representation(n: int, a: Sequence[int] | BrieskornExponents) -> tuple[int, int, int]:
    """The digits (i, j, k) with n = bc*i + ac*j + ab*k and 0 <= i < a, 0 <= j < b, 0 <= k < c.

    Requires n ∈ G ∩ [0, N].  The digits are recovered modulo each exponent:
    reducing n mod a kills ac*j and ab*k, so i = n * (bc)^{-1} mod a.
    """
    x, y, z = _triple(a).values
    if n not in build_membership((x, y, z)):
        raise NotInSemigroup(f"{n} is not in G ∩ [0, N] for ({x},{y},{z})")
    i = n * pow(y * z, -1, x) % x
    j = n * pow(x * z, -1, y) % y
    k = n * pow(x * y, -1, z) % z
    # membership plus n < abc forces the reduced digits to be the representation
    assert i * y * z + j * x * z + k * x * y == n
    return i, j, k


def lattice_count_tau1(a: Sequence[int] | BrieskornExponents) -> int:
    """#{0<x<a, 0<y<b, 0<z<c : x/a + y/b + z/c < 1}, by cross-multiplied comparison."""
    x, y, z = _triple(a).values
    return kernels.lattice_count(x, y, z)
