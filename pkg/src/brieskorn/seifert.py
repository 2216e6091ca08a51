"""Seifert invariants of Brieskorn homology spheres.

A Brieskorn sphere Sigma(a_1, ..., a_r) is the Seifert fibered homology sphere
M(e0, (a_1, b_1), ..., (a_r, b_r)) whose invariants satisfy

    A * e0 + sum_j b_j * (A / a_j) = -1,    0 < b_j < a_j,

with A = a_1 * ... * a_r.  Everything here is exact integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, prod
from typing import Iterable, Sequence

from .errors import (
    DegenerateBase,
    ExponentTooSmall,
    NotPairwiseCoprime,
    NotPrime,
    PrimeDividesExponent,
    PrimeDoesNotDivide,
    TooFewExponents,
)


def is_prime(n: int) -> bool:
    from sympy.ntheory import isprime

    return bool(isprime(n))


def require_prime(p: int) -> int:
    p = int(p)
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return p


@dataclass(frozen=True)
class BrieskornExponents:
    """Pairwise coprime exponents a_1, ..., a_r (r >= 3, each a_j > 1).

    ``original`` keeps the order the caller gave; ``values`` is sorted
    ascending and is what every computation uses.
    """

    original: tuple[int, ...]
    values: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        a = tuple(int(x) for x in self.original)
        if len(a) < 3:
            raise TooFewExponents(f"need at least 3 exponents, got {len(a)}")
        small = [x for x in a if x <= 1]
        if small:
            raise ExponentTooSmall(f"exponents must be > 1, got {small[0]}")
        for i in range(len(a)):
            for j in range(i + 1, len(a)):
                if gcd(a[i], a[j]) != 1:
                    raise NotPairwiseCoprime(
                        f"gcd({a[i]}, {a[j]}) = {gcd(a[i], a[j])}")
        object.__setattr__(self, "original", a)
        object.__setattr__(self, "values", tuple(sorted(a)))

    @classmethod
    def of(cls, a: Iterable[int] | "BrieskornExponents") -> "BrieskornExponents":
        if isinstance(a, cls):
            return a
        return cls(tuple(a))

    @property
    def r(self) -> int:
        return len(self.values)

    @property
    def product(self) -> int:
        return prod(self.values)

    def cofactors(self) -> tuple[int, ...]:
        """The semigroup generators A / a_j, aligned with ``values``."""
        A = self.product
        return tuple(A // x for x in self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __str__(self):
        return "Sigma(" + ",".join(map(str, self.original)) + ")"


@dataclass(frozen=True)
class SeifertData:
    """Seifert invariants (e0, b); ``b`` is aligned with ``a.values``."""

    a: BrieskornExponents
    e0: int
    b: tuple[int, ...]

    @property
    def A(self) -> int:
        return self.a.product

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.a.values, self.b))

    def identity_residual(self) -> int:
        """A*e0 + sum b_j A/a_j + 1; zero for valid data."""
        return self.A * self.e0 + sum(
            bj * c for bj, c in zip(self.b, self.a.cofactors())) + 1


@dataclass(frozen=True)
class BranchedPair:
    """Y = Sigma(total) branched over Y0 = Sigma(base) with a Z_p action."""

    total: BrieskornExponents
    base: BrieskornExponents
    p: int
    divided: int  # the exponent of ``total`` that p divides


def brieskorn_seifert_data(a: Sequence[int] | BrieskornExponents) -> SeifertData:
    a = BrieskornExponents.of(a)
    A = a.product
    b = []
    for aj, cj in zip(a.values, a.cofactors()):
        # b_j = -(A/a_j)^{-1} mod a_j, which lies in (0, a_j) since a_j > 1
        b.append((-pow(cj, -1, aj)) % aj)
    num = -1 - sum(bj * cj for bj, cj in zip(b, a.cofactors()))
    e0, rem = divmod(num, A)
    assert rem == 0, "CRT guarantees exact division"
    return SeifertData(a, e0, tuple(b))


def branched_pair(a: Sequence[int] | BrieskornExponents, p: int) -> BranchedPair:
    a = BrieskornExponents.of(a)
    p = require_prime(p)
    hits = [x for x in a.original if x % p == 0]
    if not hits:
        raise PrimeDoesNotDivide(f"{p} divides none of {a.original}")
    # pairwise coprimality leaves at most one hit
    target = hits[0]
    base = [x if x != target else x // p for x in a.original]
    base = [x for x in base if x > 1]
    if len(base) < 3:
        raise DegenerateBase(
            f"quotient of {a} by Z_{p} has fewer than 3 exponents > 1")
    base_e = BrieskornExponents(tuple(base))
    assert base_e.product * p == a.product
    return BranchedPair(a, base_e, p, target)


def free_quotient_data(sd: SeifertData, p: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Unnormalized Seifert descriptor (p*e0, (a_j, p*b_j)) of Y/Z_p."""
    p = require_prime(p)
    bad = [x for x in sd.a.values if x % p == 0]
    if bad:
        raise PrimeDividesExponent(
            f"{p} divides exponent {bad[0]}; the action is not free "
            f"(use the branched computation)")
    return p * sd.e0, tuple((aj, p * bj) for aj, bj in sd.pairs())
