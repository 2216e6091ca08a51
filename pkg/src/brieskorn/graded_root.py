"""Graded roots built from tau sequences, and their U-module of towers.

The graded root of tau only depends on the ordered list of local minima and
maxima of tau, so a root is stored as that alternating list: entries at even
indices are minima (leaves), entries at odd indices are maxima (merges).
Module degrees use the convention deg = 2 * chi.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .delta_tau import TauProfile
from .errors import EmptyReduced


@dataclass(frozen=True)
class GradedRoot:
    positions: tuple[int, ...]  # index in the tau domain where each extremum starts
    values: tuple[int, ...]     # chi of each extremum, min/max alternating

    def __post_init__(self):
        v = self.values
        if len(v) % 2 != 1:
            raise ValueError("extremum list must start and end with a minimum")
        for k in range(1, len(v), 2):
            if not (v[k] > v[k - 1] and v[k] > v[k + 1]):
                raise ValueError(f"entry {k} is not a local maximum")

    @property
    def minima(self) -> tuple[int, ...]:
        return self.values[0::2]

    @property
    def maxima(self) -> tuple[int, ...]:
        return self.values[1::2]

    def to_json(self) -> dict:
        return {
            "extrema": [
                {"kind": "min" if k % 2 == 0 else "max", "position": p, "chi": v}
                for k, (p, v) in enumerate(zip(self.positions, self.values))
            ],
        }

    def to_dot(self, name: str = "graded_root") -> str:
        """DOT graph: one node per leaf and per merge vertex, edges toward higher chi.

        Maxima of equal height with nothing higher between them are the same
        root vertex and share a node.  The highest merge points at ``top``,
        which stands for the infinite stem.
        """
        v = self.values
        rep, parent = _merge_structure(v)
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for k in range(0, len(v), 2):
            lines.append(f'  n{k} [shape=circle, label="@{self.positions[k]}\\nchi={v[k]}"];')
        for k in sorted(set(rep.values())):
            where = ",".join(str(self.positions[j]) for j in rep if rep[j] == k)
            lines.append(f'  n{k} [shape=box, label="@{where}\\nchi={v[k]}"];')
        lines.append('  top [shape=point];')
        for k in range(len(v)):
            if k % 2 == 1 and rep[k] != k:
                continue
            target = parent[k]
            lines.append(f"  n{k} -> {'top' if target is None else f'n{target}'};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _merge_structure(v):
    """Representative of each maximum and the parent of each extremum."""
    n = len(v)
    maxima = list(range(1, n, 2))
    rep = {}
    # nearest maximum to the left with value >= own; equal means same vertex
    stack: list[int] = []
    left_greater = {}
    for k in maxima:
        while stack and v[stack[-1]] < v[k]:
            stack.pop()
        if stack and v[stack[-1]] == v[k]:
            rep[k] = rep[stack[-1]]
            stack.pop()
        else:
            rep[k] = k
        left_greater[k] = stack[-1] if stack else None
        stack.append(k)
    stack = []
    right_greater = {}
    for k in reversed(maxima):
        while stack and v[stack[-1]] <= v[k]:
            stack.pop()
        right_greater[k] = stack[-1] if stack else None
        stack.append(k)
    parent: list[Optional[int]] = [None] * n
    for k in range(0, n, 2):
        side = [j for j in (k - 1, k + 1) if 0 <= j < n]
        if side:
            parent[k] = rep[min(side, key=lambda j: v[j])]
    last = {}
    for k in maxima:
        last[rep[k]] = k
    for k in maxima:
        if rep[k] != k:
            continue
        # the vertex spans all its aliases; look past the rightmost one
        cands = [j for j in (left_greater[k], right_greater[last[k]]) if j is not None]
        if cands:
            parent[k] = rep[min(cands, key=lambda j: v[j])]
    return rep, parent


def build_root(tp: TauProfile) -> GradedRoot:
    pos, val = kernels.extrema(tp.tau)
    return GradedRoot(tuple(pos.tolist()), tuple(val.tolist()))


@dataclass(frozen=True, order=True)
class Tower:
    bottom: int  # even; lowest degree
    length: int

    @property
    def top(self) -> int:
        return self.bottom + 2 * self.length - 2


@dataclass(frozen=True)
class UModule:
    """F[U]_{infinite_bottom} plus a direct sum of finite towers."""

    infinite_bottom: int
    towers: tuple[Tower, ...]  # sorted

    def rank_by_degree(self, reduced: bool = True) -> dict[int, int]:
        """Rank in each even degree up to the top of the reduced part."""
        counts: Counter = Counter()
        for t in self.towers:
            for d in range(t.bottom, t.top + 1, 2):
                counts[d] += 1
        if not reduced:
            hi = max([self.infinite_bottom] + [t.top for t in self.towers])
            for d in range(self.infinite_bottom, hi + 1, 2):
                counts[d] += 1
        return dict(sorted(counts.items()))


def tower_decomposition(gr: GradedRoot, tiebreak: str = "leftmost") -> UModule:
    """Split the module of a graded root into one infinite and finite towers.

    Leaves are taken in order of increasing chi (ties broken by position as
    ``tiebreak`` says); each later leaf v contributes the tower
    T_{2 chi(v)}(chi(w) - chi(v)), where chi(w) is the smallest over earlier
    leaves u of the highest merge between u and v.
    """
    if tiebreak not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown tiebreak {tiebreak!r}")
    first, leaf, merge = kernels.towers(np.asarray(gr.values, dtype=np.int64),
                                        tiebreak == "rightmost")
    pairs = sorted(zip((2 * leaf).tolist(), (merge - leaf).tolist()))
    towers = tuple(Tower(b, n) for b, n in pairs)
    return UModule(2 * int(first), towers)


def reduced_rank(m: UModule) -> int:
    return sum(t.length for t in m.towers)


def top_reduced_degree_rel(m: UModule) -> int:
    if not m.towers:
        raise EmptyReduced("reduced part is zero")
    return max(t.top for t in m.towers)


def u_image_top_degree_check(m: UModule) -> bool:
    """True iff no element of the top reduced degree lies in the image of U."""
    top = top_reduced_degree_rel(m)
    return all(t.length == 1 for t in m.towers if t.top == top)


def vertex_counts(gr: GradedRoot) -> dict[int, int]:
    """Number of root vertices at each chi level, counted from the root itself.

    At level k the vertices are the connected pieces of {tau <= k}; tau is
    monotone between consecutive extrema, so these are the maximal runs of
    consecutive extrema with value <= k.  Levels above the highest extremum
    carry the single stem vertex.
    """
    v = np.asarray(gr.values, dtype=np.int64)
    lo, hi = int(v.min()), int(v.max())
    # a run starts at i on the levels k with v[i] <= k < v[i-1]
    diff = np.zeros(hi - lo + 2, dtype=np.int64)
    diff[v[0] - lo] += 1
    starts = v[1:] < v[:-1]
    np.add.at(diff, v[1:][starts] - lo, 1)
    np.add.at(diff, v[:-1][starts] - lo, -1)
    counts = np.cumsum(diff)[:-1]
    return {lo + k: int(x) for k, x in enumerate(counts)}
