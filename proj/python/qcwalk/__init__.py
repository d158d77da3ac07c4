"""Continuous-time quantum walks under decoherence.

Graph spectra, Lindblad dynamics for intrinsic / Haken-Strobl / quantum
stochastic walk noise, and the fidelity-based distance to the classical
random walk. The heavy lifting lives in the compiled `_core` extension.
"""

from ._core import (
    Graph,
    __version__,
    asymptotic_qc_distance,
    classical_evolve,
    evolve,
    fidelity,
    numerical_asymptote,
    qc_distance_curve,
    spectrum,
    theorem_check,
)

__all__ = [
    "Graph",
    "__version__",
    "asymptotic_qc_distance",
    "classical_evolve",
    "evolve",
    "fidelity",
    "numerical_asymptote",
    "qc_distance_curve",
    "spectrum",
    "theorem_check",
]
