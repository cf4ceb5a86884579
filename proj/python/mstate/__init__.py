"""Exact multipartite state transformation tools.

Rationals are accepted as Fraction, int, float or "p/q" text and returned as Fraction.
"""

import json
from fractions import Fraction

from . import _mstate
from ._mstate import MstateError, NoCertificateError, ResourceError, UnsupportedError

__all__ = [
    "MstateError",
    "NoCertificateError",
    "ResourceError",
    "UnsupportedError",
    "acceptance_criteria",
    "catalyzes",
    "construct_qubit_solution",
    "decide_ghz_transform",
    "enumerate_solutions",
    "find_catalyst",
    "ghz_protocol_success",
    "joint_closed_form",
    "k_copy_comparable",
    "lu_equivalent",
    "majorizes",
    "nonadditivity_gap",
    "pmax_joint",
    "rado_decompose",
    "source_entanglement",
    "three_branch_success",
]


def _q(x):
    return str(x) if isinstance(x, (Fraction, int, str)) else repr(float(x))


def _qs(xs):
    return [_q(x) for x in xs]


def _frac(s):
    return Fraction(s)


def majorizes(a, b):
    return _mstate.majorizes(_qs(a), _qs(b))


def rado_decompose(target, source):
    """Terms (p, sigma) with sum_k p_k permute(source, sigma_k) equal to the sorted target."""
    return [(_frac(p), list(s)) for p, s in _mstate.rado_decompose(_qs(target), _qs(source))]


def decide_ghz_transform(n, src, dst):
    return _mstate.decide_ghz_transform(n, _qs(src), _qs(dst))


def ghz_protocol_success(n, src, dst):
    return _mstate.ghz_protocol_success(n, _qs(src), _qs(dst))


def catalyzes(src, dst, cat):
    return _mstate.catalyzes(_qs(src), _qs(dst), _qs(cat))


def k_copy_comparable(src, dst, k):
    return _mstate.k_copy_comparable(_qs(src), _qs(dst), k)


def find_catalyst(src, dst, cat_dim=4, grid=100):
    c = _mstate.find_catalyst(_qs(src), _qs(dst), cat_dim, grid)
    return None if c is None else [_frac(x) for x in c]


def joint_closed_form(eps):
    return _frac(_mstate.joint_closed_form(_q(eps)))


def pmax_joint(eps):
    return _frac(_mstate.pmax_joint(_q(eps)))


def three_branch_success(eps):
    return _mstate.three_branch_success(float(eps))


def lu_equivalent(mu, lam, mu_bar, lam_bar):
    return _mstate.lu_equivalent(_qs(mu), _qs(lam), _qs(mu_bar), _qs(lam_bar))


def enumerate_solutions(d_mu, d_lam, include_direct_sum=False, include_trivial=False):
    return json.loads(_mstate.enumerate_solutions(d_mu, d_lam, include_direct_sum, include_trivial))


def construct_qubit_solution(d, d1, d2):
    return json.loads(_mstate.construct_qubit_solution(d, d1, d2))


def source_entanglement(lam):
    return _frac(_mstate.source_entanglement(_qs(lam)))


def nonadditivity_gap(a="1/2", b="1/3", c="1/4", b_prime="1/5", c_prime="1/6"):
    """(lu_equivalent, gap) for the seven-level direct-sum construction."""
    ok, gap = _mstate.nonadditivity_gap(_q(a), _q(b), _q(c), _q(b_prime), _q(c_prime))
    return ok, _frac(gap)


def acceptance_criteria():
    """List of (name, passed, detail)."""
    return _mstate.acceptance_criteria()
