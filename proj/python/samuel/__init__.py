"""Hilbert-Samuel coefficients of parameter ideals in local rings."""

import json as _json

from . import _core
from ._core import (
    Error,
    Ideal,
    LocalRing,
    builtin_corpus,
    ed_colon_formula,
    fit_coefficients,
    graded_series,
    groebner_basis,
    hilbert_samuel_table,
    idealization_coeffs,
    load_ring,
    local_colength,
    ring,
)

__all__ = [
    "Error",
    "Ideal",
    "LocalRing",
    "builtin_corpus",
    "ed_colon_formula",
    "fit_coefficients",
    "graded_series",
    "groebner_basis",
    "hilbert_samuel_table",
    "idealization_coeffs",
    "idealization_cross_check",
    "is_d_sequence",
    "is_regular_sequence",
    "is_superficial",
    "load_ring",
    "local_colength",
    "ring",
    "run_corpus",
]


def is_regular_sequence(ring, elements):
    return _json.loads(_core.is_regular_sequence(ring, list(elements)))


def is_d_sequence(ring, elements):
    return _json.loads(_core.is_d_sequence(ring, list(elements)))


def is_superficial(ideal, element, c_window=3, n_max=12):
    return _json.loads(_core.is_superficial(ideal, element, c_window, n_max))


def idealization_cross_check(ring, p, q, n_max):
    return _json.loads(_core.idealization_cross_check(ring, list(p), list(q), n_max))


def run_corpus(text=None, n_max=12):
    """Runs a corpus (the built-in one when text is None) and returns the JSON report."""
    return _json.loads(_core.run_corpus(text, n_max))
