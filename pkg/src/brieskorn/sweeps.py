"""Parameter sweeps that check the identities and inequalities over ranges.

Each check returns a :class:`SweepResult` with the number of cases examined
and the violations found.  Triple sweeps go through the fused kernels
(:func:`kernels.scan_triple`, :func:`kernels.profile_rank`); the library
functions are exercised on the same identities at smaller scale by the tests.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd, prod
from multiprocessing import get_context
from typing import Iterable, Iterator, Optional

from sympy import primerange

from . import invariants as inv
from . import kernels
from .graded_root import build_root, tower_decomposition, vertex_counts
from .invariants import analyse
from .semigroup import bound_N
from .errors import DegenerateBase
from .seifert import branched_pair, brieskorn_seifert_data

CHECKS = ("theta", "exceptions", "kl", "kappa", "symmetry", "free2")
MAX_LISTED = 50


@dataclass
class SweepResult:
    check: str
    cases: int = 0
    violations: list = field(default_factory=list)
    violation_count: int = 0
    summary: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.violation_count == 0

    def add(self, case, detail: str):
        self.violation_count += 1
        self.violations.append({"case": list(case), "detail": detail})

    def finish(self) -> "SweepResult":
        self.violations.sort(key=lambda v: (v["case"], v["detail"]))
        del self.violations[MAX_LISTED:]
        return self

    def to_dict(self) -> dict:
        return {"check": self.check, "cases": self.cases, "ok": self.ok,
                "violation_count": self.violation_count,
                "violations": self.violations, "summary": self.summary}


def _pairwise_coprime(xs) -> bool:
    return all(gcd(x, y) == 1 for x, y in combinations(xs, 2))


def coprime_triples(max_product: int, min_product: int = 0) -> Iterator[tuple[int, int, int]]:
    """Pairwise coprime a < b < c with min_product <= abc <= max_product."""
    a = 2
    while a * (a + 1) * (a + 2) <= max_product:
        b = a + 1
        while a * b * (b + 1) <= max_product:
            if gcd(a, b) == 1:
                c0 = max(b + 1, -(-min_product // (a * b)))
                for c in range(c0, max_product // (a * b) + 1):
                    if gcd(a, c) == 1 and gcd(b, c) == 1:
                        yield a, b, c
            b += 1
        a += 1


def coprime_tuples(max_product: int, r: int) -> Iterator[tuple[int, ...]]:
    """Pairwise coprime increasing r-tuples of integers > 1 with product <= max_product."""
    def extend(prefix, lo, budget, left):
        if left == 0:
            yield tuple(prefix)
            return
        x = lo
        while x ** left <= budget:
            if all(gcd(x, y) == 1 for y in prefix):
                yield from extend(prefix + [x], x + 1, budget // x, left - 1)
            x += 1
    yield from extend([], 2, max_product, r)


def coprime_primes_above(n: int, exponents, count: int = 3) -> list[int]:
    """The ``count`` smallest primes p > n not dividing any exponent."""
    A = prod(exponents)
    out = []
    p = max(n, 1)
    while len(out) < count:
        p += 1
        if A % p and _isprime(p):
            out.append(p)
    return out


def _isprime(n: int) -> bool:
    from sympy import isprime

    return bool(isprime(n))


def _is_listed_family(t) -> bool:
    # (2,3,6n-1) and (2,3,6n+1): every c coprime to 6 is one of these
    return t[0] == 2 and t[1] == 3


# -- per-triple worker --------------------------------------------------------

@lru_cache(maxsize=None)
def _rank(values: tuple[int, ...], p: int = 1) -> int:
    sd = brieskorn_seifert_data(values)
    N = bound_N(sd.a)
    if N < 0:
        return 0
    return kernels.profile_rank(sd.a.values, sd.b, sd.e0, p, N // p + 1)[0]


def _triple_record(t, checks, primes) -> list[tuple[str, tuple, str]]:
    """All violations for one triple, as (check, case, detail)."""
    a, b, c = t
    out = []
    (N, kap, mismatch, in_range, symmetric, tmax, tmin, rank, top, top_len1,
     all_trivial) = kernels.scan_triple(a, b, c)
    eight_lambda = -(a - 1) * (b - 1) * (c - 1) + 4 * kap
    if "kappa" in checks:
        if mismatch >= 0:
            out.append(("kappa", t, f"ceiling formula and semigroup rule differ at n={mismatch}"))
        lat = kernels.lattice_count(a, b, c)
        if lat != kap:
            out.append(("kappa", t, f"lattice count {lat} != kappa {kap}"))
        if eight_lambda % 8:
            out.append(("kappa", t, f"8*lambda = {eight_lambda} not divisible by 8"))
        else:
            lam = eight_lambda // 8
            d = 2 * (kap + lam + tmin)
            if rank != kap + tmin:
                out.append(("kappa", t, f"rank {rank} != -delta - lambda = {kap + tmin}"))
            if rank:
                ell = (2 * top - 2) + d - 2 * tmin
                if Fraction(ell, 2) - lam != kap:
                    out.append(("kappa", t, f"ell+/2 + lambda(-Sigma) = {Fraction(ell, 2) - lam} != {kap}"))
    if "symmetry" in checks:
        if not symmetric:
            out.append(("symmetry", t, "tau(N+1-n) != tau(n)"))
        if not in_range:
            out.append(("symmetry", t, "Delta leaves {-1,0,1} on [0,N]"))
        if N >= 1 and tmax != 1:
            out.append(("symmetry", t, f"max tau = {tmax} != 1"))
        if N >= 1 and not all_trivial and not _is_listed_family(t):
            out.append(("symmetry", t, "nontrivial maximum outside the (2,3,6n+-1) families"))
        if rank and all_trivial and not top_len1:
            out.append(("symmetry", t, "top reduced degree meets the image of U"))
        if rank and top != 1:
            out.append(("symmetry", t, f"top reduced degree {2 * top - 2} != 0"))
    if "exceptions" in checks:
        sd = brieskorn_seifert_data(t)
        for p in primes:
            if (a * b * c) % p == 0:
                continue
            if N < 0:
                rp, wmin = 0, None
            else:
                Np = N // p
                rp, wmin = kernels.profile_rank(sd.a.values, sd.b, sd.e0, p, Np + 1,
                                                max(2 * Np, 1))
            if rp > rank:
                out.append(("exceptions", t + (p,), f"quotient rank {rp} > rank {rank}"))
            if rp == rank:
                out.append(("exceptions:equal", t + (p,), str(rank)))
            if wmin is not None and wmin < 0:
                out.append(("exceptions", t + (p,), f"Delta_p negative past N/p (min {wmin})"))
    if "kl" in checks:
        out.extend(_kl_record(t, rank))
    return out


def _kl_record(t, rank=None) -> list:
    out = []
    if rank is None:
        rank = _rank(t)
    for p in _prime_divisors_of_tuple(t):
        try:
            bp = branched_pair(t, p)
        except DegenerateBase:
            continue
        bound = rank - p * _rank(bp.base.values)
        if bound < 0:
            out.append(("kl", t + (p,), f"branched bound {bound} < 0"))
        out.append(("kl:case", t + (p,), ""))
    return out


def _prime_divisors_of_tuple(t) -> list[int]:
    from sympy.ntheory import primefactors

    return sorted({int(q) for x in t for q in primefactors(x)})


def _chunk_worker(args):
    chunk, checks, primes = args
    out = []
    for t in chunk:
        out.extend(_triple_record(t, checks, primes))
    return len(chunk), out


def _kl_worker(args):
    chunk, = args
    out = []
    for t in chunk:
        out.extend(_kl_record(t))
    return len(chunk), out


def _fan_out(fn, items: list, extra: tuple, workers: int, chunk: int = 2000):
    jobs = [(items[i:i + chunk],) + extra for i in range(0, len(items), chunk)]
    if workers <= 1 or len(jobs) <= 1:
        yield from map(fn, jobs)
        return
    with get_context("fork").Pool(workers) as pool:
        yield from pool.imap_unordered(fn, jobs)


# -- public sweeps ------------------------------------------------------------

def triple_sweep(max_product: int, checks: Iterable[str], primes: Iterable[int] = (),
                 workers: int = 1) -> dict[str, SweepResult]:
    """Run the per-triple checks (kappa, symmetry, exceptions, kl) over abc <= max_product.

    For ``kl`` the triples are joined by all pairwise coprime tuples with
    four or more exponents in the same product range.
    """
    checks = frozenset(checks) & {"kappa", "symmetry", "exceptions", "kl"}
    primes = tuple(sorted(primes))
    results = {c: SweepResult(c) for c in checks}
    triples = list(coprime_triples(max_product))
    equal: list[tuple] = []
    kl_cases = 0
    for n, recs in _fan_out(_chunk_worker, triples, (checks, primes), workers):
        for c in checks:
            if c != "kl":
                results[c].cases += n
        for name, case, detail in recs:
            if name == "exceptions:equal":
                equal.append(case)
            elif name == "kl:case":
                kl_cases += 1
            else:
                results[name].add(case, detail)
    if "kl" in checks:
        wide = []
        r = 4
        while prod(range(2, 2 + r)) <= max_product:
            wide.extend(coprime_tuples(max_product, r))
            r += 1
        for _, recs in _fan_out(_kl_worker, wide, (), workers, chunk=200):
            for name, case, detail in recs:
                if name == "kl:case":
                    kl_cases += 1
                else:
                    results["kl"].add(case, detail)
        results["kl"].cases = kl_cases
        results["kl"].summary = {"tuples": len(triples) + len(wide)}
    if "exceptions" in checks:
        res = results["exceptions"]
        res.cases = sum(1 for t in triples for p in primes if (t[0] * t[1] * t[2]) % p)
        equal.sort()
        expected = _expected_equalities(max_product, primes)
        found = [list(e) for e in equal]
        res.summary = {"equalities": found, "expected": [list(e) for e in expected]}
        for e in sorted(set(equal) ^ set(expected)):
            res.add(e, "unexpected equality" if e in set(equal) else "missing equality")
    return {c: r.finish() for c, r in results.items()}


def _expected_equalities(max_product: int, primes) -> list[tuple]:
    out = []
    if 30 <= max_product:
        out += [(2, 3, 5, p) for p in primes if 30 % p]
    if 66 <= max_product and 5 in primes:
        out.append((2, 3, 11, 5))
    return sorted(out)


def theta_sweep(max_ab: int = 12, max_c: int = 37) -> SweepResult:
    """theta^(c)(T_{a,b}) against (a-1)(b-1)/2 for coprime 1 < a < b <= max_ab, primes c."""
    res = SweepResult("theta")
    for b in range(3, max_ab + 1):
        for a in range(2, b):
            if gcd(a, b) != 1:
                continue
            for c in primerange(2, max_c + 1):
                if (a * b) % c == 0:
                    continue
                res.cases += 1
                rep = inv.torus_knot_report(a, b, int(c))
                if not rep.theta_matches_milnor:
                    res.add((a, b, int(c)), f"theta {rep.theta} != {rep.milnor_value}")
    return res.finish()


def random_triples(count: int, max_product: int, seed: int = 0) -> list[tuple[int, int, int]]:
    """``count`` distinct coprime triples a < b < c with abc <= max_product, seeded."""
    rng = random.Random(seed)
    seen: set = set()
    while len(seen) < count:
        a = rng.randint(2, 98)
        b = rng.randint(a + 1, max(a + 1, max_product // (a * (a + 2))))
        cmax = max_product // (a * b)
        if cmax <= b:
            continue
        c = rng.randint(b + 1, cmax)
        if _pairwise_coprime((a, b, c)):
            seen.add((a, b, c))
    return sorted(seen)


def free2_sweep(count: int = 200, max_product: int = 10 ** 6, seed: int = 0,
                primes_per_triple: int = 3) -> SweepResult:
    """delta_inf for p > N, computed from ranks, against -lambda."""
    res = SweepResult("free2")
    for t in random_triples(count, max_product, seed):
        for p in coprime_primes_above(bound_N(t), t, primes_per_triple):
            res.cases += 1
            lam = inv.casson(t)
            value = inv.delta_sigma(t) + inv.hf_red_rank(t) - inv.hf_red_rank(t, p)
            if value != -lam:
                res.add(t + (p,), f"delta_inf = {value} != -lambda = {-lam}")
    res.summary = {"seed": seed, "triples": count, "max_product": max_product}
    return res.finish()


def tiebreak_sweep(max_product: int = 10 ** 4) -> SweepResult:
    """Leftmost-first and rightmost-first leaf orders give the same module,
    and its rank per degree matches a direct vertex count of the root."""
    res = SweepResult("tiebreak")
    for t in coprime_triples(max_product):
        res.cases += 1
        tp, left = analyse(t)
        gr = build_root(tp)
        right = tower_decomposition(gr, "rightmost")
        if sorted(left.towers) != sorted(right.towers):
            res.add(t, "tower multisets differ between tie-breaks")
        ranks = left.rank_by_degree()
        if ranks != right.rank_by_degree():
            res.add(t, "rank by degree differs between tie-breaks")
        for k, vc in vertex_counts(gr).items():
            if vc - 1 != ranks.get(2 * k, 0):
                res.add(t, f"{vc} root vertices at chi={k} but reduced rank {ranks.get(2 * k, 0)}")
                break
    return res.finish()


def run_checks(names: Iterable[str], max_product: int, primes=(), workers: int = 1,
               tiebreak_max: Optional[int] = None) -> list[SweepResult]:
    names = set(names)
    if "all" in names:
        names = set(CHECKS)
    out = []
    if "theta" in names:
        out.append(theta_sweep())
    tr = triple_sweep(max_product, names, primes, workers)
    out.extend(tr[c] for c in sorted(tr))
    if "symmetry" in names:
        out.append(tiebreak_sweep(min(max_product, tiebreak_max or 10 ** 4)))
    if "free2" in names:
        out.append(free2_sweep())
    return out


def parse_prime_range(text: str) -> tuple[int, ...]:
    """'LO..HI' (inclusive) to the primes in that range."""
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"expected LO..HI, got {text!r}")
    return tuple(int(p) for p in primerange(int(lo), int(hi) + 1))


__all__ = [
    "CHECKS", "SweepResult", "coprime_triples", "coprime_tuples", "coprime_primes_above",
    "triple_sweep", "theta_sweep", "free2_sweep", "tiebreak_sweep", "random_triples",
    "run_checks", "parse_prime_range",
]
