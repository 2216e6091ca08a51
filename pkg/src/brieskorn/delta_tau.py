"""Delta and tau sequences of Brieskorn spheres and their free Z_p quotients.

With Seifert data (e0, b_j) the (p-scaled) delta sequence is

    Delta_p(n) = 1 - n p e0 - sum_j ceil(n p b_j / a_j),

p = 1 giving the manifold itself, and tau is its sequence of prefix sums
starting at tau(0) = 0.  Past N_p = floor(N / p) the sequence Delta_p is
nonnegative, so tau is kept on [0, N_p + 1] only.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .errors import OutOfRange, PrimeDividesExponent, ProfileTooLarge, UnsupportedCase
from .semigroup import build_membership, bound_N
from .seifert import SeifertData, require_prime

#: longest tau sequence we are willing to materialise
MAX_PROFILE_LENGTH = 200_000_000


def _ceil_div(x: int, y: int) -> int:
    return -((-x) // y)


def _check_scale(sd: SeifertData, p: int, strict: bool) -> int:
    p = int(p)
    if p < 1:
        raise ValueError(f"scale must be positive, got {p}")
    if p == 1 or not strict:
        return p
    require_prime(p)
    for aj in sd.a.values:
        if aj % p == 0:
            raise PrimeDividesExponent(f"{p} divides exponent {aj}")
    return p


def delta_at(sd: SeifertData, p: int, n: int, *, strict: bool = True) -> int:
    """Delta_p(n) by exact ceilings."""
    p = _check_scale(sd, p, strict)
    if n < 0:
        raise OutOfRange(f"n must be >= 0, got {n}")
    return 1 - n * p * sd.e0 - sum(
        _ceil_div(n * p * bj, aj) for aj, bj in sd.pairs())


def delta_via_semigroup(a, n: int) -> int:
    """Delta(n) on [0, N] for a triple: 1 on G, -1 on N - G, 0 elsewhere."""
    G = build_membership(a)
    if len(G.generators) != 3:
        raise UnsupportedCase("the semigroup rule is stated for triples only")
    if not 0 <= n <= G.N:
        raise OutOfRange(f"n={n} outside [0, {G.N}]")
    if n in G:
        return 1
    if G.N - n in G:
        return -1
    return 0


def delta_window(sd: SeifertData, p: int, start: int, count: int,
                 *, strict: bool = True) -> np.ndarray:
    """Delta_p(n) for n in [start, start + count)."""
    p = _check_scale(sd, p, strict)
    if count > MAX_PROFILE_LENGTH:
        raise ProfileTooLarge(f"{count} terms requested")
    return kernels.delta_sequence(sd.a.values, sd.b, sd.e0, p, start, count)


@dataclass(frozen=True, eq=False)
class TauProfile:
    source: SeifertData
    p: int
    N_p: int           # floor(N / p), or -1 when N < 0
    delta: np.ndarray  # Delta_p(0 .. N_p)
    tau: np.ndarray    # tau(0 .. N_p + 1)

    @property
    def domain_end(self) -> int:
        return len(self.tau) - 1

    @property
    def N(self) -> int:
        return bound_N(self.source.a)


def tau_profile(sd: SeifertData, p: int = 1, *, strict: bool = True) -> TauProfile:
    """Prefix sums of Delta_p over [0, N_p].

    ``strict=False`` skips the requirement that p be a prime coprime to every
    exponent; the formula is still evaluated as written.
    """
    p = _check_scale(sd, p, strict)
    N = bound_N(sd.a)
    if N < 0:
        delta = np.zeros(0, dtype=np.int64)
        tau = np.zeros(1, dtype=np.int64)
        N_p = -1
    else:
        N_p = N // p
        if N_p + 2 > MAX_PROFILE_LENGTH:
            raise ProfileTooLarge(
                f"tau profile of {sd.a} at p={p} needs {N_p + 2} terms")
        delta = kernels.delta_sequence(sd.a.values, sd.b, sd.e0, p, 0, N_p + 1)
        tau = np.zeros(N_p + 2, dtype=delta.dtype)
        np.cumsum(delta, out=tau[1:])
    delta.setflags(write=False)
    tau.setflags(write=False)
    return TauProfile(sd, p, N_p, delta, tau)


def min_tau(tp: TauProfile) -> int:
    return int(tp.tau.min())


@dataclass(frozen=True)
class MaximaClassification:
    max_value: int
    all_trivial: bool
    witness: Optional[int] = None


def classify_maxima(tp: TauProfile) -> MaximaClassification:
    """Scan the global maxima of tau for the trivial-maximum property.

    A global maximum n is trivial when tau equals the maximum on all of
    [1, n] or on all of [n, N].
    """
    if tp.p != 1 or tp.source.a.r != 3:
        raise UnsupportedCase("maxima classification needs p = 1 and three exponents")
    if tp.N < 1:
        raise UnsupportedCase("Sigma(2,3,5) has no nontrivial tau profile")
    tau = tp.tau
    N = tp.N
    top = int(tau.max())
    assert top == 1, f"tau exceeds 1 on {tp.source.a}"
    at_top = tau == top
    pre = 0
    while pre + 1 <= N and at_top[pre + 1]:
        pre += 1
    suf = N + 1
    while suf - 1 >= 1 and at_top[suf - 1]:
        suf -= 1
    inner = np.flatnonzero(at_top[pre + 1:suf])
    if len(inner):
        return MaximaClassification(top, False, int(inner[0]) + pre + 1)
    return MaximaClassification(top, True)
