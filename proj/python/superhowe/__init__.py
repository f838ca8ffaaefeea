"""Exact spinor-oscillator engine for the spo(2n|1) / osp(2|2) duality on S(E).

The compiled extension carries the exact-rational core; this package adds
small conveniences (JSON decoding of decomposition reports).
"""

import json as _json

from _superhowe import (
    AuditError,
    SuperPoly,
    decompose_json,
    dim_of_degree,
    gamma_poly,
    harmonic_dim,
    is_joint_harmonic_hwv,
    joint_weights,
    nu_vector,
    omega,
    omega_tilde,
    p_vector,
    run_cli,
    s_vector,
    verify,
    verify_targets,
)

__all__ = [
    "AuditError",
    "SuperPoly",
    "decompose",
    "decompose_json",
    "dim_of_degree",
    "gamma_poly",
    "harmonic_dim",
    "is_joint_harmonic_hwv",
    "joint_weights",
    "nu_vector",
    "omega",
    "omega_tilde",
    "p_vector",
    "run_cli",
    "s_vector",
    "verify",
    "verify_targets",
]


def decompose(n: int, dmax: int) -> dict:
    """Harmonic decomposition reports for degrees 0..dmax as a dict.

    Raises AuditError when one of the structural audits fails.
    """
    return _json.loads(decompose_json(n, dmax))
