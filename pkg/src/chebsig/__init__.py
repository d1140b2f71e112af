"""Chebyshev and trigonometric interpolation toolkit.

Library layers:

- :mod:`chebsig.cheb` — Chebyshev nodes, series, evaluation, calculus.
- :mod:`chebsig.fourier` — DFT, spectral resampling, cardinal interpolation.
- :mod:`chebsig.nodes` — Legendre points, node comparisons, probes.
- :mod:`chebsig.conditioning` — basis quasimatrix singular values.
- :mod:`chebsig.signals` — gamma-variate signals, noise, filtering.
- :mod:`chebsig.experiments` — the reproducible experiment harness.

Randomness everywhere is numpy's PCG64 seeded explicitly, so results are
reproducible from (parameters, seed).
"""

from .cheb import (
    ChebInterpolant,
    Domain,
    NodeKind,
    NodeSet,
    UnresolvedFunctionError,
    cheb_extrema_nodes,
    cheb_points_first_kind,
    cheb_points_second_kind,
    cheb_root_nodes,
    derivative,
    eval_cheb_poly,
    evaluate,
    evaluate_barycentric,
    interpolant_from_function,
    interpolant_from_values,
    min_and_max,
    truncate,
    values_at_nodes,
)
from .conditioning import (
    Basis,
    BasisMatrix,
    NumericallySingularError,
    build_basis_matrix,
    clenshaw_curtis_weights,
    condition_number,
    conditioning_sweep,
    singular_values,
)
from .fourier import (
    SpectrumReport,
    UnevenSpacingError,
    UniformSignal,
    amplitude_spectrum,
    dft_forward,
    dft_inverse,
    resample_spectral,
    trig_cardinal,
    trig_interpolate,
)
from .nodes import (
    DistanceProfile,
    compare_nodes,
    legendre_points,
    mean_distance,
    smallest_nonzero_midpoint,
    uniform_points,
)
from .report import ExperimentReport, Series, write_report
from .signals import (
    GammaForm,
    GammaParams,
    PeakMetrics,
    Signal,
    add_noise,
    gamma_variate,
    moving_average,
    peak_metrics,
    read_signal_csv,
    signal_from_samples,
    uneven_grid,
    write_signal_csv,
)

__version__ = "0.1.0"
