# Copyright 2026 The phasekit Authors
# SPDX-License-Identifier: Apache-2.0
"""Generalized oscillator algebra, phase operators, phase states and MUBs."""

import json as _json

from ._phasekit import (  # noqa: F401
    KappaSpec,
    SchemaError,
    basis,
    energy,
    evolve,
    gauss_sum,
    hamiltonian,
    is_prime,
    ladder,
    ladder3,
    lie_closure_residual,
    mub_vector,
    mub_vector_e3route,
    number_operator,
    operator_roundtrip_json,
    overlap_formula,
    phase_operator,
    phase_state,
    quadrature_average,
    quantized_phase,
    shift_operator,
    structure_function,
    truncated_ladders,
)
from . import _phasekit


def mub_set(N, route="e1"):
    """B_N and B_0a as a dict with "bases" and "certificate"."""
    return _json.loads(_phasekit.mub_set_json(N, route))


def verify_all(k=3, phi=0.0, sigma=4, N=5, seed=1, tolerance=1e-10):
    """Full verification report as a dict."""
    return _json.loads(_phasekit.verify_all_json(k, phi, sigma, N, seed, tolerance))
