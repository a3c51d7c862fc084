"""Entanglement quantification from correlations in two mutually unbiased bases."""

from ._core import (
    CameraConfig,
    analyze_counts,
    analyze_probabilities,
    ebit_estimate,
    eof_lower_bound,
    ghz,
    gme_bound,
    ideal_config,
    paper_3x3_config,
    paper_7x7_config,
    phi_plus,
    scan_noise,
    schmidt_lower_bound,
    simulate_counts,
    witness_b,
)

__all__ = [
    "CameraConfig",
    "analyze_counts",
    "analyze_probabilities",
    "ebit_estimate",
    "eof_lower_bound",
    "ghz",
    "gme_bound",
    "ideal_config",
    "paper_3x3_config",
    "paper_7x7_config",
    "phi_plus",
    "scan_noise",
    "schmidt_lower_bound",
    "simulate_counts",
    "witness_b",
]
