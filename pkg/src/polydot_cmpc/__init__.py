"""Coded multi-party matrix multiplication over prime fields.

Exact GF(q) arithmetic, the PolyDot share construction, worker-count
closed forms with a brute-force oracle, a deterministic protocol
simulator, and a privacy auditor.
"""

from polydot_cmpc.counts import (
    WorkerCountReport,
    best_scheme,
    lemma_region,
    n_entangled,
    n_gcsa,
    n_polydot,
    n_ssmm,
    region_label,
)
from polydot_cmpc.field import DEFAULT_MODULUS, MERSENNE61, EvaluationPoints, FieldModulus
from polydot_cmpc.powersets import (
    SchemeParams,
    check_conditions,
    important_powers,
    p_CA,
    p_CB,
    p_SA,
    p_SB,
    sumset,
    support_H,
)
from polydot_cmpc.protocol import (
    AuditReport,
    ProtocolConfig,
    Transcript,
    audit_privacy,
    run_protocol,
    setup_points,
)
from polydot_cmpc.shares import SharePolynomial, build_FA, build_FB, evaluate_share

__version__ = "0.1.0"

__all__ = [
    "AuditReport", "DEFAULT_MODULUS", "EvaluationPoints", "FieldModulus",
    "MERSENNE61", "ProtocolConfig", "SchemeParams", "SharePolynomial",
    "Transcript", "WorkerCountReport", "audit_privacy", "best_scheme",
    "build_FA", "build_FB", "check_conditions", "evaluate_share",
    "important_powers", "lemma_region", "n_entangled", "n_gcsa", "n_polydot",
    "n_ssmm", "p_CA", "p_CB", "p_SA", "p_SB", "region_label", "run_protocol",
    "setup_points", "sumset", "support_H",
]
