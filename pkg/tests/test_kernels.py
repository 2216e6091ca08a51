import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from brieskorn import _pykernels as py
from brieskorn import kernels
from brieskorn.seifert import brieskorn_seifert_data

import oracles

needs_compiled = pytest.mark.skipif(kernels.compiled is None, reason="extension not built")


def _triple(draw):
    a = draw(st.integers(2, 9))
    b = draw(st.integers(2, 13))
    c = draw(st.integers(2, 41))
    return a, b, c


triples = st.composite(_triple)().filter(oracles.coprime)
tau_walks = st.lists(st.integers(-1, 1), min_size=0, max_size=60).map(
    lambda ds: list(np.cumsum([0] + ds)))


@needs_compiled
@settings(max_examples=150, deadline=None)
@given(triples)
def test_scan_triple_backends_agree(t):
    assert kernels.compiled.scan_triple(*t) == py.scan_triple(*t)


@needs_compiled
@settings(max_examples=150, deadline=None)
@given(tau_walks, st.booleans())
def test_extrema_and_towers_backends_agree(tau, right):
    tau = np.array(tau, dtype=np.int64)
    cp, cv = kernels.compiled.extrema(tau)
    pp, pv = py.extrema(tau)
    assert list(cp) == list(pp) and list(cv) == list(pv)
    if len(cv):
        c, p = kernels.compiled.towers(cv, right), py.towers(pv, right)
        assert c[0] == p[0]
        assert list(c[1]) == list(p[1]) and list(c[2]) == list(p[2])


@needs_compiled
@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(2, 30), min_size=1, max_size=4), st.integers(0, 400))
def test_membership_backends_agree(gens, N):
    assert list(kernels.compiled.membership(gens, N)) == list(py.membership(gens, N))


@needs_compiled
@settings(max_examples=100, deadline=None)
@given(triples, st.sampled_from([1, 2, 3, 5, 7, 11]), st.integers(0, 50), st.integers(0, 5))
def test_profile_and_delta_backends_agree(t, p, count, window):
    sd = brieskorn_seifert_data(t)
    a, b, e0 = sd.a.values, sd.b, sd.e0
    assert list(kernels.compiled.delta_sequence(a, b, e0, p, 3, count)) == \
        list(py.delta_sequence(a, b, e0, p, 3, count))
    assert kernels.compiled.profile_rank(a, b, e0, p, count, window) == \
        py.profile_rank(a, b, e0, p, count, window)


@needs_compiled
@settings(max_examples=100, deadline=None)
@given(triples)
def test_lattice_count_backends_agree(t):
    assert kernels.compiled.lattice_count(*t) == py.lattice_count(*t) == oracles.lattice_points(*t)


def test_big_values_use_python_path():
    a = (2, 3, 10**20 + 1)
    sd = brieskorn_seifert_data(a)
    out = kernels.delta_sequence(sd.a.values, sd.b, sd.e0, 1, 10**19, 3)
    expect = [oracles.delta(sd.a.values, sd.e0, sd.b, 1, n) for n in range(10**19, 10**19 + 3)]
    assert [int(x) for x in out] == expect


def test_pure_python_switch():
    env = dict(os.environ, BRIESKORN_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import brieskorn; print(brieskorn.BACKEND, brieskorn.hf_red_rank((2,3,11)))"],
        env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "1"]
