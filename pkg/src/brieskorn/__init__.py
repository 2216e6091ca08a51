"""Exact invariants of Brieskorn homology spheres from delta/tau sequences,
numerical semigroups and graded roots."""
from .errors import BrieskornError, ConsistencyError, PreconditionError
from .invariants import (
    casson,
    d_invariant_minus,
    delta_sigma,
    hf_red_rank,
    invariant_report,
    torus_knot_report,
)
from .kernels import BACKEND
from .obstruction import (
    branched_rational_ball_verdict,
    connected_sum_verdict,
    free_rational_ball_verdict,
    positive_definite_verdict,
)
from .seifert import BrieskornExponents, branched_pair, brieskorn_seifert_data

__version__ = "0.1.0"
