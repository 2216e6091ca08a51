"""Numerical invariants assembled from the semigroup and graded-root data.

Orientation: graded-root quantities describe HF^+(-Sigma).  Reported values
say which orientation they belong to; the conversions are
lambda(-Y) = -lambda(Y), delta(-Y) = -delta(Y), and reduced ranks agree.
Absolute gradings and the Casson invariant are only available for three
exponents.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .delta_tau import TauProfile, min_tau, tau_profile
from .errors import (
    CrossCheckFailure,
    IntegralityViolation,
    NegativeBound,
    NegativeDifference,
    ParityViolation,
    PrimeDividesExponent,
    PrimeDividesProduct,
    UnsupportedCase,
)
from .graded_root import (
    UModule,
    build_root,
    reduced_rank,
    top_reduced_degree_rel,
    tower_decomposition,
)
from .semigroup import bound_N, kappa
from .seifert import (
    BranchedPair,
    BrieskornExponents,
    brieskorn_seifert_data,
    require_prime,
)

Exponents = Sequence[int] | BrieskornExponents


@lru_cache(maxsize=512)
def _analysis(values: tuple[int, ...], p: int, strict: bool) -> tuple[TauProfile, UModule]:
    sd = brieskorn_seifert_data(values)
    tp = tau_profile(sd, p, strict=strict)
    return tp, tower_decomposition(build_root(tp))


def analyse(a: Exponents, p: int = 1, *, strict: bool = True) -> tuple[TauProfile, UModule]:
    """Tau profile and tower decomposition of -Sigma(a) (p = 1) or of its Z_p quotient."""
    return _analysis(BrieskornExponents.of(a).values, int(p), strict)


def hf_red_rank(a: Exponents, p: int = 1, *, strict: bool = True) -> int:
    """Rank of HF^+_red(-Y) for p = 1, or of HF^+_red(-Y/Z_p, s0) for a free Z_p action."""
    return reduced_rank(analyse(a, p, strict=strict)[1])


def _triple(a: Exponents) -> BrieskornExponents:
    a = BrieskornExponents.of(a)
    if a.r != 3:
        raise UnsupportedCase("absolute invariants need exactly three exponents")
    return a


def casson(a: Exponents) -> int:
    """lambda(Sigma(a,b,c)) from 8 lambda = -(a-1)(b-1)(c-1) + 4 kappa."""
    x, y, z = _triple(a).values
    num = -(x - 1) * (y - 1) * (z - 1) + 4 * kappa((x, y, z))
    if num % 8:
        raise IntegralityViolation(f"8*lambda = {num} is not divisible by 8")
    return num // 8


def d_invariant_minus(a: Exponents) -> int:
    """d(-Sigma(a,b,c)) = 2 (kappa + lambda(Sigma) + min tau)."""
    a = _triple(a)
    tp, _ = analyse(a)
    d = 2 * (kappa(a) + casson(a) + min_tau(tp))
    if d % 2:
        raise ParityViolation(f"d = {d} is odd")
    return d


def delta_sigma(a: Exponents) -> int:
    """delta(Sigma) = d(Sigma)/2 = -d(-Sigma)/2."""
    return -d_invariant_minus(a) // 2


def ell_plus_minus(a: Exponents) -> Optional[int]:
    """Top degree of HF^+_red(-Sigma) in absolute grading; None if it vanishes.

    The infinite tower starts at 2 min tau in the root grading and at
    d(-Sigma) in absolute grading, which fixes the shift.
    """
    tp, module = analyse(_triple(a))
    if not module.towers:
        return None
    return top_reduced_degree_rel(module) + d_invariant_minus(a) - 2 * min_tau(tp)


def _require_free(a: BrieskornExponents, p: int) -> int:
    p = require_prime(p)
    for x in a.values:
        if x % p == 0:
            raise PrimeDividesExponent(
                f"{p} divides {x}; the Z_{p} action on {a} is not free")
    return p


def delta_inf_minus_delta_free(a: Exponents, p: int) -> int:
    """delta_inf^(p)(Y) - delta(Y) = rk HF_red(Y) - rk HF_red(Y/Z_p, s0)."""
    a = BrieskornExponents.of(a)
    p = _require_free(a, p)
    diff = hf_red_rank(a) - hf_red_rank(a, p)
    if diff < 0:
        raise NegativeDifference(f"rank difference {diff} < 0 for {a}, p={p}")
    return diff


def delta_inf_free_absolute(a: Exponents, p: int) -> int:
    """delta_inf^(p)(Sigma) for a free action; equals -lambda once p > N."""
    a = _triple(a)
    value = delta_sigma(a) + delta_inf_minus_delta_free(a, p)
    if p > bound_N(a) and value != -casson(a):
        raise CrossCheckFailure(
            f"delta_inf = {value} but -lambda = {-casson(a)} for {a}, p={p} > N")
    return value


def branched_bound(bp: BranchedPair) -> int:
    """rk HF_red(Y) - p rk HF_red(Y0); a lower bound for delta(-Y) - delta_inf^(p)(-Y)."""
    value = hf_red_rank(bp.total) - bp.p * hf_red_rank(bp.base)
    if value < 0:
        raise NegativeBound(
            f"rk({bp.total}) < {bp.p} rk({bp.base}): bound {value}")
    return value


def sigma_equivariant(a: int, b: int, c: int) -> int:
    """sigma^(c)(T_{a,b}) = 8 lambda(Sigma(a,b,c))."""
    _torus_triple(a, b, c)
    return 8 * casson((a, b, c))


def _torus_triple(a, b, c) -> BrieskornExponents:
    c = require_prime(c)
    if (a * b) % c == 0:
        raise PrimeDividesProduct(f"{c} divides {a}*{b}")
    return BrieskornExponents((a, b, c))


@dataclass(frozen=True)
class TorusKnotReport:
    a: int
    b: int
    c: int
    kappa: int
    casson_lambda: int   # lambda(Sigma(a,b,c))
    sigma_c: int         # sigma^(c)(T_{a,b})
    j_inv: int           # j^(c)(-T_{a,b})
    theta: Fraction      # theta^(c)(T_{a,b})
    milnor_value: Fraction

    @property
    def theta_matches_milnor(self) -> bool:
        return self.theta == self.milnor_value

    def to_dict(self) -> dict:
        d = asdict(self)
        d["theta_matches_milnor"] = self.theta_matches_milnor
        return d


def torus_knot_report(a: int, b: int, c: int) -> TorusKnotReport:
    """j^(c), sigma^(c) and theta^(c) of the torus knot T_{a,b}.

    The c-fold branched cover of T_{a,b} is Sigma(a,b,c).  With j' = j for
    odd c and j' = j/2 for c = 2, one expression covers both cases:
    theta = max(0, (2 j' - sigma/2) / (c - 1)).
    """
    triple = _torus_triple(a, b, c)
    k = kappa(triple)
    lam = casson(triple)
    sigma = 8 * lam
    j_inv = 2 * k if c == 2 else k
    j_prime = Fraction(j_inv, 2) if c == 2 else Fraction(j_inv)
    theta = max(Fraction(0), (2 * j_prime - Fraction(sigma, 2)) / (c - 1))
    milnor = Fraction((a - 1) * (b - 1), 2)
    return TorusKnotReport(a, b, c, k, lam, sigma, j_inv, theta, milnor)


def j_prime_crosscheck(a: Exponents) -> bool:
    """ell^+(-Sigma)/2 + lambda(-Sigma) == kappa; vacuously true when HF_red = 0."""
    a = _triple(a)
    ell = ell_plus_minus(a)
    if ell is None:
        return True
    return Fraction(ell, 2) - casson(a) == kappa(a)


@dataclass(frozen=True)
class InvariantReport:
    exponents: tuple[int, ...]
    N: int
    hf_red_rank: int
    min_tau: int
    kappa: Optional[int] = None
    casson_lambda: Optional[int] = None   # lambda(Sigma)
    d_minus: Optional[int] = None         # d(-Sigma)
    delta_sigma: Optional[int] = None     # delta(Sigma) = -d(-Sigma)/2
    ell_plus_minus: Optional[int] = None  # top degree of HF_red^+(-Sigma)
    towers: tuple[tuple[int, int], ...] = ()  # (bottom, length), root grading

    ORIENTATION = {
        "hf_red_rank": "either (rank is orientation independent)",
        "min_tau": "-Sigma (tau function)",
        "casson_lambda": "+Sigma",
        "d_minus": "-Sigma",
        "delta_sigma": "+Sigma",
        "ell_plus_minus": "-Sigma",
        "towers": "-Sigma, relative grading 2*chi",
    }

    def to_dict(self) -> dict:
        d = asdict(self)
        d["towers"] = [list(t) for t in self.towers]
        d["orientation"] = dict(self.ORIENTATION)
        return d


def invariant_report(a: Exponents) -> InvariantReport:
    a = BrieskornExponents.of(a)
    tp, module = analyse(a)
    towers = tuple((t.bottom, t.length) for t in module.towers)
    base = dict(exponents=a.original, N=bound_N(a), hf_red_rank=reduced_rank(module),
                min_tau=min_tau(tp), towers=towers)
    if a.r != 3:
        return InvariantReport(**base)
    lam = casson(a)
    d = d_invariant_minus(a)
    rep = InvariantReport(**base, kappa=kappa(a), casson_lambda=lam, d_minus=d,
                          delta_sigma=-d // 2, ell_plus_minus=ell_plus_minus(a))
    if rep.hf_red_rank != -rep.delta_sigma - lam:
        raise CrossCheckFailure(
            f"rank {rep.hf_red_rank} != -delta - lambda = {-rep.delta_sigma - lam}")
    return rep
