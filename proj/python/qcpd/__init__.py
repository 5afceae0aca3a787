"""Change-point and machine-failure detection on multivariate time series.

Samples are mapped to projected quantum features (per-qubit Pauli
coefficients of a parameterized circuit) and sliding windows are scored
with a least-squares density-ratio estimate of the Pearson divergence.
"""

from ._qcpd import (
    UlsifModel,
    anomaly_scores,
    change_scores,
    evaluate_ratio,
    find_peaks,
    fit_density_ratio,
    generate_failure_sequence,
    generate_synthetic,
    pearson_divergence,
    project,
    roc_auc,
    transform,
)

__all__ = [
    "UlsifModel",
    "anomaly_scores",
    "change_scores",
    "evaluate_ratio",
    "find_peaks",
    "fit_density_ratio",
    "generate_failure_sequence",
    "generate_synthetic",
    "pearson_divergence",
    "project",
    "roc_auc",
    "transform",
]
