import json
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brieskorn.delta_tau import tau_profile
from brieskorn.errors import EmptyReduced
from brieskorn.graded_root import (
    GradedRoot,
    Tower,
    UModule,
    build_root,
    reduced_rank,
    top_reduced_degree_rel,
    tower_decomposition,
    u_image_top_degree_check,
    vertex_counts,
)
from brieskorn.invariants import analyse
from brieskorn.seifert import brieskorn_seifert_data as sdata
from brieskorn.sweeps import coprime_triples

import oracles


def root_of(tau):
    from brieskorn import kernels

    pos, val = kernels.extrema(np.asarray(tau, dtype=np.int64))
    return GradedRoot(tuple(pos.tolist()), tuple(val.tolist()))


@st.composite
def alternating(draw, max_leaves=12):
    L = draw(st.integers(1, max_leaves))
    v = [draw(st.integers(-8, 3))]
    for _ in range(L - 1):
        v.append(v[-1] + draw(st.integers(1, 4)))
        v.append(v[-1] - draw(st.integers(1, 4)))
    return v


@pytest.mark.parametrize("a, minima, maxima", [
    ((2, 3, 7), (0, 0), (1,)),
    ((2, 3, 13), (0, 0, 0), (1, 1)),
    ((2, 3, 5), (0,), ()),
])
def test_build_root_examples(a, minima, maxima):
    gr = build_root(tau_profile(sdata(a)))
    assert gr.minima == minima and gr.maxima == maxima


def test_plateau_collapses_to_one_minimum():
    gr = build_root(tau_profile(sdata((2, 3, 13))))
    assert gr.positions == (0, 1, 2, 7, 8)


def test_extrema_oracle():
    rng = random.Random(3)
    for _ in range(500):
        tau = list(np.cumsum([0] + [rng.choice([-1, 0, 0, 1]) for _ in range(rng.randint(0, 25))]))
        assert list(root_of(tau).values) == oracles.extrema_values(tau)


@pytest.mark.parametrize("a, towers", [
    ((2, 3, 7), [Tower(0, 1)]),
    ((2, 3, 13), [Tower(0, 1), Tower(0, 1)]),
    ((2, 3, 5), []),
])
def test_tower_examples(a, towers):
    m = tower_decomposition(build_root(tau_profile(sdata(a))))
    assert list(m.towers) == towers and m.infinite_bottom == 0


@pytest.mark.parametrize("a, rank", [((2, 3, 11), 1), ((3, 4, 7), 2), ((2, 3, 5), 0)])
def test_reduced_rank_examples(a, rank):
    assert reduced_rank(analyse(a)[1]) == rank


@given(alternating())
@settings(max_examples=300, deadline=None)
def test_towers_match_definition(values):
    gr = GradedRoot(tuple(range(len(values))), tuple(values))
    for tb, rightmost in (("leftmost", False), ("rightmost", True)):
        m = tower_decomposition(gr, tb)
        assert [(t.bottom, t.length) for t in m.towers] == oracles.towers(values, rightmost)
        assert m.infinite_bottom == 2 * min(values)


@given(alternating())
@settings(max_examples=300, deadline=None)
def test_rank_by_degree_is_vertex_count(values):
    gr = GradedRoot(tuple(range(len(values))), tuple(values))
    ranks = tower_decomposition(gr).rank_by_degree()
    for k, n in vertex_counts(gr).items():
        assert ranks.get(2 * k, 0) == n - 1
    assert ranks == tower_decomposition(gr, "rightmost").rank_by_degree()


def test_rank_by_degree_unreduced_adds_stem():
    m = UModule(-2, (Tower(0, 1),))
    assert m.rank_by_degree() == {0: 1}
    assert m.rank_by_degree(reduced=False) == {-2: 1, 0: 2}


def test_top_degree():
    assert top_reduced_degree_rel(analyse((2, 3, 7))[1]) == 0
    assert top_reduced_degree_rel(analyse((2, 3, 13))[1]) == 0
    with pytest.raises(EmptyReduced):
        top_reduced_degree_rel(analyse((2, 3, 5))[1])


def test_u_image_check():
    assert u_image_top_degree_check(UModule(-4, (Tower(-4, 2), Tower(0, 1))))
    assert not u_image_top_degree_check(UModule(-2, (Tower(-2, 2),)))


def test_triples_towers_below_zero_and_above_min():
    for t in coprime_triples(8000):
        tp, m = analyse(t)
        lo = 2 * int(tp.tau.min())
        for tw in m.towers:
            assert tw.bottom >= lo and tw.top <= 0 and tw.bottom % 2 == 0


def test_quotient_rank_never_exceeds_rank():
    for t in coprime_triples(5000):
        r0 = reduced_rank(analyse(t)[1])
        for p in (2, 3, 5, 7, 11, 13):
            if all(x % p for x in t):
                assert reduced_rank(analyse(t, p)[1]) <= r0


def test_invalid_root_rejected():
    with pytest.raises(ValueError):
        GradedRoot((0, 1), (0, 1))
    with pytest.raises(ValueError):
        GradedRoot((0, 1, 2), (0, -1, 0))
    with pytest.raises(ValueError):
        tower_decomposition(GradedRoot((0,), (0,)), "middle")


def test_json_export():
    gr = build_root(tau_profile(sdata((2, 3, 7))))
    data = json.loads(gr.dumps())
    assert [e["kind"] for e in data["extrema"]] == ["min", "max", "min"]
    assert [e["chi"] for e in data["extrema"]] == [0, 1, 0]


def _dot_edges(dot):
    return [tuple(x.strip(" ;").split(" -> ")) for x in dot.splitlines() if "->" in x]


def test_dot_export_shares_equal_merges():
    dot = build_root(tau_profile(sdata((2, 3, 13)))).to_dot()
    assert dot.startswith("digraph graded_root {") and dot.rstrip().endswith("}")
    assert sorted(_dot_edges(dot)) == [("n0", "n1"), ("n1", "top"), ("n2", "n1"), ("n4", "n1")]


@given(alternating())
@settings(max_examples=200, deadline=None)
def test_dot_tree_has_one_more_leaf_than_merges_per_level(values):
    # every leaf and merge has exactly one parent, edges go up in chi
    gr = GradedRoot(tuple(range(len(values))), tuple(values))
    edges = _dot_edges(gr.to_dot())
    sources = [s for s, _ in edges]
    assert len(sources) == len(set(sources))
    chi = {f"n{k}": v for k, v in enumerate(values)}
    for s, t in edges:
        if t != "top":
            assert chi[t] > chi[s]
    assert sum(1 for _, t in edges if t == "top") == 1
