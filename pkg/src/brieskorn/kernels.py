"""Backend selection for the inner loops.

The compiled extension (``_ckernels``) is used when it imports; otherwise, or
when the environment variable ``BRIESKORN_PURE_PYTHON`` is set to a non-empty
value, the pure-Python module is used.  Calls whose intermediate values could
leave the signed 64-bit range are always routed to the pure-Python code.
"""
from __future__ import annotations

import os

from . import _pykernels as python

compiled = None
if not os.environ.get("BRIESKORN_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled
    except ImportError:  # extension not built
        compiled = None

BACKEND = "cython" if compiled is not None else "python"
_impl = compiled if compiled is not None else python

_LIMIT = 1 << 62


def _fits(*vals) -> bool:
    return all(abs(v) < _LIMIT for v in vals)


def delta_sequence(a, b, e0, p, start, count):
    end = start + max(count, 0)
    wide = max(max(a), max(b), abs(e0), 1)
    if compiled is not None and _fits(end * p * wide * 2, sum(a) * p):
        return compiled.delta_sequence(a, b, e0, p, start, count)
    return python.delta_sequence(a, b, e0, p, start, count)


def membership(gens, N):
    if compiled is not None and _fits(*gens, N):
        return compiled.membership(gens, N)
    return python.membership(gens, N)


def extrema(tau):
    return _impl.extrema(tau)


def towers(values, rightmost=False):
    return _impl.towers(values, rightmost)


def lattice_count(a, b, c):
    if compiled is not None and _fits(a * b * c * max(a, b, c)):
        return compiled.lattice_count(a, b, c)
    return python.lattice_count(a, b, c)


def scan_triple(a, b, c):
    if compiled is not None and _fits(a * b * c * max(a, b, c) * 4):
        return compiled.scan_triple(a, b, c)
    return python.scan_triple(a, b, c)


def profile_rank(a, b, e0, p, count, window=0):
    end = count + window
    wide = max(max(a), max(b), abs(e0), 1)
    if compiled is not None and _fits(end * p * wide * 2, sum(a) * p):
        return compiled.profile_rank(a, b, e0, p, count, window)
    return python.profile_rank(a, b, e0, p, count, window)
