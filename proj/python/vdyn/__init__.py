"""Promotion and rowmotion dynamics on V x [n]."""

import json

from ._vdyn import (
    KrewerasWord,
    Labeling,
    VdynError,
    Word,
    action_names,
    double_arcs,
    enumerate_labelings,
    enumerate_words,
    kreweras_count,
    kreweras_words,
    labeling_of_word,
    layer_decomposition,
    promote_kreweras,
    promote_labeling,
    promote_word,
    render_kreweras,
    render_word,
    standardize,
    suite_names,
    swap_bc,
    word_of_labeling,
)
from . import _vdyn


def orbit_report(action, ell, q, max_elements=5_000_000):
    return json.loads(_vdyn._orbit_report(action, ell, q, max_elements))


def run_suite(suite, ell_max=None, q_max=None):
    return json.loads(_vdyn._run_suite(suite, ell_max, q_max))


__all__ = [
    "KrewerasWord",
    "Labeling",
    "VdynError",
    "Word",
    "action_names",
    "double_arcs",
    "enumerate_labelings",
    "enumerate_words",
    "kreweras_count",
    "kreweras_words",
    "labeling_of_word",
    "layer_decomposition",
    "orbit_report",
    "promote_kreweras",
    "promote_labeling",
    "promote_word",
    "render_kreweras",
    "render_word",
    "run_suite",
    "standardize",
    "suite_names",
    "swap_bc",
    "word_of_labeling",
]
