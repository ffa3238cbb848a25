"""Jack polynomials, Jack hypergeometric series and Dunkl-Laplace transform checks."""

import json as _json

from ._jackdunkl import (
    CacheError,
    QuadratureError,
    SeriesDomainError,
    eigenvalues,
    eval_E_at_one,
    eval_series,
    gamma_n,
    jack_E_str,
    jack_E_terms,
    jack_P_str,
    jack_P_terms,
    set_thread_count,
    verify_main1,
    verify_master,
)
from ._jackdunkl import run_suite as _run_suite


def run_suite(name="desk", criteria=(), seed=1):
    """Run a verification suite and return its summary as a dict."""
    return _json.loads(_run_suite(name, list(criteria), seed))


__all__ = [
    "CacheError",
    "QuadratureError",
    "SeriesDomainError",
    "eigenvalues",
    "eval_E_at_one",
    "eval_series",
    "gamma_n",
    "jack_E_str",
    "jack_E_terms",
    "jack_P_str",
    "jack_P_terms",
    "run_suite",
    "set_thread_count",
    "verify_main1",
    "verify_master",
]
