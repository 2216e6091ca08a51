"""Non-extension verdicts for cyclic group actions on Brieskorn spheres.

Every verdict is one-sided: ``obstructed`` comes with a certificate whose
numbers can be recomputed (see :func:`replay`), while
``not-obstructed-by-these-criteria`` makes no claim that an extension exists.
Hypotheses about the bounding 4-manifold that cannot be checked here are
listed as caveats.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence

from . import invariants as inv
from .errors import (
    ActionFreeOnSummand,
    DegenerateBase,
    PreconditionError,
    UnsupportedCase,
    UnsupportedScenario,
)
from .seifert import BranchedPair, BrieskornExponents, branched_pair, require_prime

OBSTRUCTED = "obstructed"
NOT_OBSTRUCTED = "not-obstructed-by-these-criteria"

SCENARIOS = (
    "free-rational-ball",
    "branched-rational-ball",
    "positive-definite",
    "connected-sum-rational-ball",
    "connected-sum-positive-definite",
)

def _h2_caveat(p: int) -> str:
    return f"requires {p} not dividing |H^2(W;Z)|"


HOMOLOGICAL_CAVEAT = "requires the extension to be homologically trivial"
B1_CAVEAT = "requires b_1(W) = 0"
ADDITIVITY_CAVEAT = "uses additivity of delta under connected sum"


@dataclass(frozen=True)
class ObstructionVerdict:
    scenario: str
    conclusion: str
    inputs: dict
    certificate: Optional[dict] = None
    caveats: tuple[str, ...] = ()
    notes: tuple[str, ...] = field(default=())

    @property
    def obstructed(self) -> bool:
        return self.conclusion == OBSTRUCTED

    def to_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "conclusion": self.conclusion,
            "inputs": self.inputs,
            "certificate": self.certificate,
            "caveats": list(self.caveats),
            "notes": list(self.notes),
        }


def _certificate(kind: str, statement: str, terms: dict) -> dict:
    return {"kind": kind, "statement": statement, "terms": terms,
            "value": _FORMULAS[kind](terms), "relation": "> 0"}


_FORMULAS = {
    # delta_inf(Y) - delta(Y) with delta(Y) = 0 for a rational-ball boundary
    "free-rank-gap": lambda t: t["rank_Y"] - t["rank_Y0"],
    # |delta(Y)| > 0 means Y bounds no rational homology ball
    "delta-nonzero": lambda t: abs(t["delta_Y"]),
    "branched-rank-gap": lambda t: t["rank_Y"] - t["p"] * t["rank_Y0"],
    # delta_inf(Y) itself, exact for free actions
    "free-delta-inf": lambda t: t["delta_Y"] + t["rank_Y"] - t["rank_Y0"],
    # delta(Y) + bound > 0 forces delta_inf(-Y) < 0
    "branched-delta-chain": lambda t: t["delta_Y"] + t["rank_Y"] - t["p"] * t["rank_Y0"],
    # delta_inf(Y) >= delta(Y) > 0
    "delta-lower-bound": lambda t: t["delta_Y"],
    "sum-branched-rank-gap": lambda t: t["rank_Yi"] - t["p"] * t["rank_Yi0"],
    "sum-delta-chain": lambda t: t["delta_Y"] + sum(t["bounds"]),
}


def _exceptional(a: BrieskornExponents) -> bool:
    return a.values in ((2, 3, 5), (2, 3, 11))


def _prime_divisors(m: int) -> list[int]:
    from sympy.ntheory import primefactors

    return [int(q) for q in primefactors(m)]


def free_rational_ball_verdict(a, m: int) -> ObstructionVerdict:
    """Does a free Z_m action on Y extend over a rational homology ball W?"""
    a = BrieskornExponents.of(a)
    m = int(m)
    if m <= 1:
        raise UnsupportedScenario(f"need m > 1, got {m}")
    if gcd(m, a.product) != 1:
        raise UnsupportedScenario(
            f"Z_{m} does not act freely on {a}; use the branched verdict")
    inputs = {"exponents": list(a.original), "m": m}
    for p in _prime_divisors(m):
        r0, rp = inv.hf_red_rank(a), inv.hf_red_rank(a, p)
        if r0 - rp > 0:
            cert = _certificate(
                "free-rank-gap",
                f"delta_inf^({p})(Y) - delta(Y) = rk HF_red(Y) - rk HF_red(Y/Z_{p}) > 0 "
                f"and delta(Y) = 0 for a rational-ball boundary",
                {"p": p, "rank_Y": r0, "rank_Y0": rp})
            return ObstructionVerdict("free-rational-ball", OBSTRUCTED, inputs, cert,
                                      (_h2_caveat(p),))
    if a.r == 3 and _exceptional(a):
        d = inv.delta_sigma(a)
        if d != 0:
            cert = _certificate(
                "delta-nonzero",
                "delta(Y) != 0, so Y bounds no rational homology 4-ball",
                {"delta_Y": d})
            return ObstructionVerdict("free-rational-ball", OBSTRUCTED, inputs, cert)
    return ObstructionVerdict("free-rational-ball", NOT_OBSTRUCTED, inputs,
                              caveats=tuple(_h2_caveat(p) for p in _prime_divisors(m)))


def _family_note(bp: BranchedPair) -> tuple[str, ...]:
    v = bp.total.values
    if bp.p == 5 and len(v) == 3 and v[:2] == (2, 3) and (v[2] - 5) % 30 == 0 and v[2] > 5:
        n = (v[2] - 5) // 30
        return (f"equality family Sigma(2,3,30n+5), p=5 with n={n}: "
                f"rk HF_red(Y) = 5 rk HF_red(Y0) = {5 * n}",)
    return ()


def branched_rational_ball_verdict(bp: BranchedPair) -> ObstructionVerdict:
    """Does the Z_p action with fixed points extend over a rational homology ball?"""
    inputs = {"exponents": list(bp.total.original), "p": bp.p}
    r0, rb = inv.hf_red_rank(bp.total), inv.hf_red_rank(bp.base)
    bound = inv.branched_bound(bp)
    if bound > 0:
        cert = _certificate(
            "branched-rank-gap",
            f"rk HF_red(Y) > {bp.p} rk HF_red(Y/Z_{bp.p})",
            {"p": bp.p, "rank_Y": r0, "rank_Y0": rb, "base": list(bp.base.original)})
        return ObstructionVerdict("branched-rational-ball", OBSTRUCTED, inputs, cert,
                                  (_h2_caveat(bp.p),))
    return ObstructionVerdict("branched-rational-ball", NOT_OBSTRUCTED, inputs,
                              caveats=(_h2_caveat(bp.p),), notes=_family_note(bp))


def positive_definite_verdict(a, p: int) -> ObstructionVerdict:
    """Does the Z_p action extend homologically trivially over a positive definite W?"""
    a = BrieskornExponents.of(a)
    if a.r != 3:
        raise UnsupportedCase("needs absolute delta, available for three exponents only")
    p = require_prime(p)
    inputs = {"exponents": list(a.original), "p": p}
    caveats = (HOMOLOGICAL_CAVEAT, B1_CAVEAT)
    d = inv.delta_sigma(a)
    if a.product % p:
        r0, rp = inv.hf_red_rank(a), inv.hf_red_rank(a, p)
        dinf = inv.delta_inf_free_absolute(a, p)
        if dinf > 0:
            cert = _certificate(
                "free-delta-inf",
                f"delta_inf^({p})(Y) = delta(Y) + rk HF_red(Y) - rk HF_red(Y/Z_{p}) > 0",
                {"p": p, "delta_Y": d, "rank_Y": r0, "rank_Y0": rp})
            return ObstructionVerdict("positive-definite", OBSTRUCTED, inputs, cert, caveats)
        return ObstructionVerdict("positive-definite", NOT_OBSTRUCTED, inputs, caveats=caveats)
    try:
        bp = branched_pair(a, p)
    except DegenerateBase:
        if d > 0:
            cert = _certificate(
                "delta-lower-bound", f"delta_inf^({p})(Y) >= delta(Y) > 0",
                {"p": p, "delta_Y": d})
            return ObstructionVerdict("positive-definite", OBSTRUCTED, inputs, cert, caveats)
        return ObstructionVerdict(
            "positive-definite", NOT_OBSTRUCTED, inputs,
            caveats=caveats + ("quotient has fewer than three singular fibres; "
                               "rank bound unavailable",))
    r0, rb = inv.hf_red_rank(bp.total), inv.hf_red_rank(bp.base)
    bound = inv.branched_bound(bp)
    if d + bound > 0:
        cert = _certificate(
            "branched-delta-chain",
            f"delta_inf^({p})(-Y) <= delta(-Y) - (rk HF_red(Y) - {p} rk HF_red(Y0)) < 0",
            {"p": p, "delta_Y": d, "rank_Y": r0, "rank_Y0": rb})
        return ObstructionVerdict("positive-definite", OBSTRUCTED, inputs, cert, caveats)
    return ObstructionVerdict("positive-definite", NOT_OBSTRUCTED, inputs, caveats=caveats)


def connected_sum_verdict(summands: Sequence, p: int,
                          scenario: str = "rational-ball") -> ObstructionVerdict:
    """Equivariant connected sum of Brieskorn spheres, each with fixed points."""
    p = require_prime(p)
    key = {"rational-ball": "connected-sum-rational-ball",
           "positive-definite": "connected-sum-positive-definite"}.get(scenario, scenario)
    if key not in ("connected-sum-rational-ball", "connected-sum-positive-definite"):
        raise UnsupportedScenario(f"unknown scenario {scenario!r}")
    parts = [BrieskornExponents.of(s) for s in summands]
    if not parts:
        raise UnsupportedScenario("need at least one summand")
    for s in parts:
        if s.product % p:
            raise ActionFreeOnSummand(f"Z_{p} acts freely on {s}")
    inputs = {"summands": [list(s.original) for s in parts], "p": p}
    pairs: list[Optional[BranchedPair]] = []
    for s in parts:
        try:
            pairs.append(branched_pair(s, p))
        except DegenerateBase:
            pairs.append(None)
    skipped = tuple(f"{s}: quotient degenerate, bound taken as 0"
                    for s, bp in zip(parts, pairs) if bp is None)
    if key == "connected-sum-rational-ball":
        for s, bp in zip(parts, pairs):
            if bp is not None and inv.branched_bound(bp) > 0:
                cert = _certificate(
                    "sum-branched-rank-gap",
                    f"rk HF_red(Y_i) > {p} rk HF_red(Y_i/Z_{p}) for Y_i = {s}",
                    {"p": p, "summand": list(s.original),
                     "rank_Yi": inv.hf_red_rank(bp.total),
                     "rank_Yi0": inv.hf_red_rank(bp.base)})
                return ObstructionVerdict(key, OBSTRUCTED, inputs, cert, (_h2_caveat(p),))
        return ObstructionVerdict(key, NOT_OBSTRUCTED, inputs, caveats=(_h2_caveat(p),),
                                  notes=skipped)
    caveats = (HOMOLOGICAL_CAVEAT, B1_CAVEAT, ADDITIVITY_CAVEAT)
    if any(s.r != 3 for s in parts):
        return ObstructionVerdict(
            key, NOT_OBSTRUCTED, inputs,
            caveats=caveats + ("absolute delta unavailable for summands with r > 3",))
    delta_total = sum(inv.delta_sigma(s) for s in parts)
    bounds = [inv.branched_bound(bp) if bp is not None else 0 for bp in pairs]
    if delta_total + sum(bounds) > 0:
        cert = _certificate(
            "sum-delta-chain",
            "delta(Y) + sum_k (rk HF_red(Y_k) - p rk HF_red(Y_k/Z_p)) > 0",
            {"p": p, "delta_Y": delta_total, "bounds": bounds})
        return ObstructionVerdict(key, OBSTRUCTED, inputs, cert, caveats, notes=skipped)
    return ObstructionVerdict(key, NOT_OBSTRUCTED, inputs, caveats=caveats, notes=skipped)


def replay(verdict: ObstructionVerdict) -> bool:
    """Recompute every number in an ``obstructed`` certificate from scratch.

    Returns True when the recomputed terms match and the stated inequality
    holds; verdicts without a certificate replay trivially.
    """
    cert = verdict.certificate
    if cert is None:
        return not verdict.obstructed
    t = cert["terms"]
    p = t.get("p")
    kind = cert["kind"]
    fresh: dict = {"p": p} if p is not None else {}
    ex = verdict.inputs.get("exponents")
    if kind == "free-rank-gap":
        fresh.update(rank_Y=inv.hf_red_rank(ex), rank_Y0=inv.hf_red_rank(ex, p))
    elif kind == "delta-nonzero":
        fresh.update(delta_Y=inv.delta_sigma(ex))
    elif kind == "branched-rank-gap":
        bp = branched_pair(ex, p)
        fresh.update(rank_Y=inv.hf_red_rank(bp.total), rank_Y0=inv.hf_red_rank(bp.base),
                     base=list(bp.base.original))
    elif kind == "free-delta-inf":
        fresh.update(delta_Y=inv.delta_sigma(ex), rank_Y=inv.hf_red_rank(ex),
                     rank_Y0=inv.hf_red_rank(ex, p))
    elif kind == "branched-delta-chain":
        bp = branched_pair(ex, p)
        fresh.update(delta_Y=inv.delta_sigma(ex), rank_Y=inv.hf_red_rank(bp.total),
                     rank_Y0=inv.hf_red_rank(bp.base))
    elif kind == "delta-lower-bound":
        fresh.update(delta_Y=inv.delta_sigma(ex))
    elif kind == "sum-branched-rank-gap":
        bp = branched_pair(t["summand"], p)
        fresh.update(summand=t["summand"], rank_Yi=inv.hf_red_rank(bp.total),
                     rank_Yi0=inv.hf_red_rank(bp.base))
    elif kind == "sum-delta-chain":
        parts = verdict.inputs["summands"]
        bounds = []
        for s in parts:
            try:
                bounds.append(inv.branched_bound(branched_pair(s, p)))
            except DegenerateBase:
                bounds.append(0)
        fresh.update(delta_Y=sum(inv.delta_sigma(s) for s in parts), bounds=bounds)
    else:
        raise PreconditionError(f"unknown certificate kind {kind!r}")
    return fresh == t and _FORMULAS[kind](fresh) == cert["value"] and cert["value"] > 0
