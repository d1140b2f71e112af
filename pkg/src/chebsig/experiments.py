"""End-to-end experiment drivers behind the command-line harness.

Each ``run_*`` function assembles an :class:`~chebsig.report.ExperimentReport`
and optionally writes it (CSV series + report.json, plus SVG line plots on
request).  Everything is deterministic given its arguments; wall-clock
timings are reported as scalars in the JSON only, so CSV output is
byte-identical across reruns.
"""

from __future__ import annotations

import math
import time

import numpy as np

from .cheb import (
    Domain,
    UnresolvedFunctionError,
    cheb_points_first_kind,
    cheb_points_second_kind,
    evaluate,
    evaluate_barycentric,
    interpolant_from_function,
    interpolant_from_values,
    min_and_max,
    truncate,
)
from .conditioning import (
    Basis,
    build_basis_matrix,
    clenshaw_curtis_weights,
    condition_number,
    conditioning_sweep,
    singular_values,
)
from .fourier import (
    UnevenSpacingError,
    UniformSignal,
    amplitude_spectrum,
    resample_spectral,
    trig_interpolate,
)
from .nodes import (
    compare_nodes,
    legendre_points,
    mean_distance,
    smallest_nonzero_midpoint,
    uniform_points,
)
from .report import ExperimentReport, write_report
from .signals import (
    GammaForm,
    GammaParams,
    Signal,
    add_noise,
    gamma_variate,
    moving_average,
    peak_metrics,
    uneven_grid,
)
from .svg import write_line_plot

__all__ = [
    "GAMMA_SPAN",
    "GAMMA_SAMPLES",
    "NOISE_SIGMA",
    "run_random",
    "run_converge",
    "run_scale",
    "run_wavelen",
    "run_coeffs",
    "run_gamma",
    "run_spectrum",
    "run_deviation",
    "run_filter",
    "run_nodes",
    "run_condition",
    "run_all",
]

UNIT = Domain(-1.0, 1.0)

GAMMA_SPAN = 3 * np.pi
GAMMA_SAMPLES = 31
GAMMA_DOMAIN = Domain(0.0, GAMMA_SPAN)
GAMMA_PARAMS = GammaParams(shape=2.0, scale=1.0, form=GammaForm.NORMALIZED_PDF)
NOISE_SIGMA = 0.02
FOURIER_DENSE = 1000
FILTER_SAMPLES = 301

#: Coefficient magnitudes below this (relative) count as "significant" when
#: classifying even/odd structure of a series.
PARITY_TOL = 1e-14


def _emit(report, out_dir, svg):
    if out_dir is not None:
        exp_dir = write_report(report, out_dir)
        if svg:
            for s in report.series:
                names = list(s.columns)
                x = s.columns[names[0]]
                ys = {n: s.columns[n] for n in names[1:]}
                if ys:
                    write_line_plot(exp_dir / f"{s.label}.svg", f"{report.name}: {s.label}", x, ys)
    return report


def run_random(points=10, seed=0, out_dir=None, values=None, svg=False):
    """Interpolate seeded uniform(-1, 1) data at second-kind points.

    ``values`` overrides the random draw (used by tests for fixed data).
    """
    if points < 2:
        raise ValueError("need at least 2 points")
    if values is None:
        rng = np.random.default_rng(seed)
        data = rng.uniform(-1.0, 1.0, points)
    else:
        data = np.asarray(values, dtype=float)
    start = time.perf_counter()
    p = interpolant_from_values(data, UNIT)
    lo, hi = min_and_max(p)
    elapsed = time.perf_counter() - start

    report = ExperimentReport(f"random_{points}")
    report.add_scalar("min", lo)
    report.add_scalar("max", hi)
    report.add_scalar("elapsed_seconds", elapsed)
    report.metadata.update(points=str(points), seed=str(seed))
    xd = np.linspace(-1.0, 1.0, 2001)
    report.add_series("dense", {"x": xd, "p": evaluate(p, xd)})
    xz = np.linspace(0.9999, 1.0, 201)
    report.add_series("zoom", {"x": xz, "p": evaluate(p, xz)})
    return _emit(report, out_dir, svg)


def _cc_norm(weights, values):
    return math.sqrt(float(np.sum(weights * values ** 2)))


def run_converge(out_dir=None, svg=False, n_max=300):
    """Interpolation error of e^x and the Runge function versus degree.

    Records quadrature-weighted L2 errors (2048-point grid) and sup errors
    (10^4+1 uniform points) for degrees 1..n_max, and the first degree at
    which both L2 errors drop below 2^-52 times the function norm.
    """
    grid_n = 2047
    xg = cheb_points_second_kind(grid_n, UNIT).points
    wg = clenshaw_curtis_weights(grid_n)
    xu = np.linspace(-1.0, 1.0, 10001)

    funcs = {"exp": np.exp, "runge": lambda x: 1.0 / (1.0 + 25.0 * x ** 2)}
    ref_g = {k: f(xg) for k, f in funcs.items()}
    ref_u = {k: f(xu) for k, f in funcs.items()}
    norms_l2 = {k: _cc_norm(wg, v) for k, v in ref_g.items()}
    norms_sup = {k: float(np.max(np.abs(v))) for k, v in ref_u.items()}

    eps = 2.0 ** -52
    ns = np.arange(1, n_max + 1)
    errs_l2 = {k: np.empty(n_max) for k in funcs}
    errs_sup = {k: np.empty(n_max) for k in funcs}
    threshold_l2 = None
    threshold_sup = None
    for i, n in enumerate(ns):
        for key, f in funcs.items():
            p = interpolant_from_function(f, UNIT, n=int(n))
            errs_l2[key][i] = _cc_norm(wg, ref_g[key] - evaluate(p, xg))
            errs_sup[key][i] = np.max(np.abs(ref_u[key] - evaluate(p, xu)))
        if threshold_l2 is None and all(
            errs_l2[k][i] < eps * norms_l2[k] for k in funcs
        ):
            threshold_l2 = int(n)
        if threshold_sup is None and all(
            errs_sup[k][i] < eps * norms_sup[k] for k in funcs
        ):
            threshold_sup = int(n)

    report = ExperimentReport("converge")
    report.add_series(
        "errors",
        {
            "n": ns.astype(float),
            "err_l2_exp": errs_l2["exp"],
            "err_l2_runge": errs_l2["runge"],
            "err_sup_exp": errs_sup["exp"],
            "err_sup_runge": errs_sup["runge"],
        },
    )
    if threshold_l2 is not None:
        report.add_scalar("threshold_l2", threshold_l2)
    else:
        report.metadata["threshold_l2"] = f"not reached within n_max={n_max}"
    if threshold_sup is not None:
        report.add_scalar("threshold_sup", threshold_sup)
    else:
        report.metadata["threshold_sup"] = f"not reached within n_max={n_max}"
    report.add_scalar("exp_err_l2_at_20", errs_l2["exp"][19])
    e = errs_l2["runge"]
    ratios = e[59:120] / e[57:118]  # e(n)/e(n-2) for n = 60..120
    report.add_scalar("runge_ratio_mean", float(np.mean(ratios)))
    report.add_scalar("runge_ratio_worst", float(np.max(np.abs(
        ratios - np.mean(ratios)))))
    report.metadata["norm"] = "Clenshaw-Curtis weighted L2 plus sup on uniform grid"
    return _emit(report, out_dir, svg)


def run_scale(out_dir=None, svg=False):
    """Degree-9 interpolants of sin scaled to [-6, 6] versus [0, 6]."""
    full = Domain(-6.0, 6.0)
    part = Domain(0.0, 6.0)
    p_full = interpolant_from_function(np.sin, full, n=9)
    p_part = interpolant_from_function(np.sin, part, n=9)
    x = np.linspace(-6.0, 6.0, 1000)
    err_full = np.abs(np.sin(x) - evaluate(p_full, x))
    err_part = np.abs(np.sin(x) - evaluate(p_part, x))  # extrapolates below 0

    report = ExperimentReport("scale")
    report.add_series(
        "overlay",
        {"x": x, "sin": np.sin(x), "p_full": evaluate(p_full, x),
         "p_scaled": evaluate(p_part, x)},
    )
    report.add_series("errors", {"x": x, "err_full": err_full, "err_scaled": err_part})
    nodes = cheb_points_second_kind(9, full).points
    report.add_scalar(
        "max_node_err_full",
        float(np.max(np.abs(np.sin(nodes) - evaluate(p_full, nodes)))),
    )
    report.add_scalar("max_err_full", float(np.max(err_full)))
    report.add_scalar("max_err_scaled_indomain", float(np.max(err_part[x >= 0.0])))
    report.add_scalar("err_scaled_at_minus6", float(err_part[0]))
    return _emit(report, out_dir, svg)


def run_wavelen(out_dir=None, svg=False):
    """Adaptive series length against wave number for two test families."""
    ks = 2 ** np.arange(11)
    lengths = {"sin": [], "runge": []}
    unresolved = []
    for k in ks:
        for key, f in (
            ("sin", lambda x, k=k: np.sin(k * x)),
            ("runge", lambda x, k=k: 1.0 / (1.0 + (k * x) ** 2)),
        ):
            try:
                lengths[key].append(float(len(interpolant_from_function(f, UNIT))))
            except UnresolvedFunctionError:
                lengths[key].append(-1.0)
                unresolved.append(f"{key}@k={k}")
    report = ExperimentReport("wavelen")
    report.add_series(
        "lengths",
        {"k": ks.astype(float),
         "length_sin": lengths["sin"],
         "length_runge": lengths["runge"]},
    )
    if unresolved:
        report.metadata["unresolved"] = ", ".join(unresolved)
    return _emit(report, out_dir, svg)


def _coeff_series(p):
    c = np.abs(p.coeffs)
    return {"k": np.arange(c.size, dtype=float), "abs_coeff": c}


def run_coeffs(function_id="atan", out_dir=None, svg=False):
    """Chebyshev coefficient magnitudes of selected test functions."""
    report = ExperimentReport(f"coeffs_{function_id}")
    if function_id == "atan":
        p = interpolant_from_function(np.arctan, UNIT)
        report.add_series("coefficients", _coeff_series(p))
        report.add_scalar("a1", float(p.coeffs[1]))
        report.add_scalar("a3", float(p.coeffs[3]))
        report.add_scalar("a5", float(p.coeffs[5]))
        report.add_scalar("length", float(len(p)))
    elif function_id == "tanh_sum":
        parts = {
            "f": lambda x: np.tanh(x),
            "g": lambda x: 1e-5 * np.tanh(10 * x),
            "h": lambda x: 1e-10 * np.tanh(100 * x),
        }
        ps = {k: interpolant_from_function(f, UNIT) for k, f in parts.items()}
        # The sum is formed in coefficient space, so the huge small-scale
        # tail of h survives verbatim until truncation removes everything
        # negligible against the summed scale.
        ps["s"] = ps["f"] + ps["g"] + ps["h"]
        for k, p in ps.items():
            report.add_series(f"coefficients_{k}", _coeff_series(p))
        simplified = truncate(ps["s"], 2.0 ** -52)
        report.add_series("coefficients_s_truncated", _coeff_series(simplified))
        report.add_scalar("length_sum", float(len(ps["s"])))
        report.add_scalar("length_sum_truncated", float(len(simplified)))
    elif function_id == "stripe":
        p = interpolant_from_function(
            lambda x: np.exp(x) / (1.0 + 10000.0 * x ** 2), UNIT
        )
        report.add_series("coefficients", _coeff_series(p))
        c = np.abs(p.coeffs[:51])
        cutoff = PARITY_TOL
        report.add_scalar("even_significant", float(np.sum(c[0::2] > cutoff)))
        report.add_scalar("odd_significant", float(np.sum(c[1::2] > cutoff)))
        report.add_scalar("length", float(len(p)))
    else:
        raise ValueError(f"unknown coeffs function id {function_id!r}")
    return _emit(report, out_dir, svg)


def _gamma_samples(spacing, noise, seed, uneven_mode):
    if spacing == "even":
        t = np.linspace(0.0, GAMMA_SPAN, GAMMA_SAMPLES)
    elif spacing == "uneven":
        t = uneven_grid(GAMMA_SAMPLES, GAMMA_SPAN, seed, mode=uneven_mode)
    else:
        raise ValueError(f"unknown spacing {spacing!r}")
    clean = gamma_variate(GAMMA_PARAMS, t)
    observed = add_noise(clean, NOISE_SIGMA, seed) if noise else clean
    return clean, observed


def run_gamma(
    spacing="even",
    noise=False,
    seed=0,
    out_dir=None,
    cheb_fit="node-values",
    uneven_mode="sorted",
    svg=False,
):
    """Reconstruct the gamma-variate curve by Chebyshev and Fourier routes.

    The default Chebyshev fit ("node-values") treats the raw samples as
    values at the second-kind points of [0, 3*pi] and reads them back at
    those points, which is exactly what a value-vector constructor does
    when handed raw samples; the alternative "resample" fit evaluates the
    known generator at true Chebyshev points, which is the mathematically
    meaningful reconstruction.  The Fourier route needs an even grid and is recorded
    as unsupported, not raised, when the grid is uneven.
    """
    clean, observed = _gamma_samples(spacing, noise, seed, uneven_mode)
    t = observed.t
    report = ExperimentReport(
        f"gamma_{spacing}_{'noise' if noise else 'clean'}"
    )
    report.metadata.update(
        spacing=spacing,
        noise="on" if noise else "off",
        seed=str(seed),
        cheb_fit=cheb_fit,
        sigma=str(NOISE_SIGMA if noise else 0.0),
    )
    if spacing == "uneven":
        report.metadata["uneven_mode"] = uneven_mode
    report.add_series("samples", {"t": t, "clean": clean.y, "observed": observed.y})
    report.add_scalar("observed_max", float(np.max(observed.y)))

    cheb_nodes = cheb_points_second_kind(GAMMA_SAMPLES - 1, GAMMA_DOMAIN)
    if cheb_fit == "node-values":
        p = interpolant_from_values(observed.y, GAMMA_DOMAIN)
        # Exact at construction nodes by the coincidence branch; the values
        # come back associated with the sample grid, as in the figures.
        cheb_at_samples = evaluate_barycentric(observed.y, cheb_nodes, cheb_nodes.points)
        node_err = np.max(np.abs(evaluate(p, cheb_nodes.points) - observed.y))
    elif cheb_fit == "resample":
        gen = gamma_variate(GAMMA_PARAMS, cheb_nodes.points)
        gen = add_noise(gen, NOISE_SIGMA, seed) if noise else gen
        p = interpolant_from_values(gen.y, GAMMA_DOMAIN)
        cheb_at_samples = evaluate(p, t)
        node_err = np.max(np.abs(cheb_at_samples - observed.y))
    else:
        raise ValueError(f"unknown cheb fit mode {cheb_fit!r}")

    xd = np.linspace(0.0, GAMMA_SPAN, FOURIER_DENSE)
    report.add_series("cheb_dense", {"t": xd, "p": evaluate(p, xd)})
    report.add_series("cheb_at_nodes", {"t": t, "p": cheb_at_samples})
    report.add_scalar("cheb_max_node_error", float(node_err))
    gap = peak_metrics(observed, Signal(t, cheb_at_samples))
    report.add_scalar("cheb_peak", gap.cand_max)
    report.add_scalar("cheb_peak_gap", gap.abs_gap)

    try:
        fourier_at_nodes = trig_interpolate(t, observed.y, t)
        step = (t[-1] - t[0]) / (len(t) - 1)
        dense = resample_spectral(UniformSignal(t[0], step, observed.y), FOURIER_DENSE)
        dense_t = dense.times()
        keep = dense_t <= GAMMA_SPAN * (1 + 1e-12)
        report.add_series("fourier_dense", {"t": dense_t[keep], "p": dense.values[keep]})
        report.add_scalar(
            "fourier_max_node_error",
            float(np.max(np.abs(fourier_at_nodes - observed.y))),
        )
        fgap = peak_metrics(observed, Signal(dense_t[keep], dense.values[keep]))
        report.add_scalar("fourier_peak", fgap.cand_max)
        report.add_scalar("fourier_peak_gap", fgap.abs_gap)
        report.metadata["fourier"] = "ok"
    except UnevenSpacingError as exc:
        report.metadata["fourier"] = f"unsupported: {exc}"
    return _emit(report, out_dir, svg)


def run_spectrum(out_dir=None, svg=False):
    """Amplitude spectrum of the clean, evenly sampled gamma curve."""
    clean, _ = _gamma_samples("even", False, 0, "sorted")
    step = (clean.t[-1] - clean.t[0]) / (len(clean) - 1)
    spec = amplitude_spectrum(UniformSignal(clean.t[0], step, clean.y))
    report = ExperimentReport("spectrum")
    report.add_series(
        "spectrum",
        {
            "frequency": spec.frequencies,
            "amplitude": spec.amplitudes,
            "phase": spec.phases,
            "polar_theta": 2 * np.pi * spec.frequencies,
            "polar_rho": spec.amplitudes,
        },
    )
    report.add_scalar("dc_amplitude", float(spec.amplitudes[0]))
    report.add_scalar("sum_sq_values", float(np.sum(clean.y ** 2)))
    report.add_scalar(
        "sum_sq_spectrum_over_n",
        float(np.sum(spec.amplitudes ** 2) / len(clean)),
    )
    report.add_scalar("length", float(len(spec)))
    return _emit(report, out_dir, svg)


def run_deviation(out_dir=None, svg=False):
    """Pointwise deviation of the clean gamma fit at its sample nodes."""
    clean, _ = _gamma_samples("even", False, 0, "sorted")
    p = interpolant_from_values(clean.y, GAMMA_DOMAIN)
    nodes = cheb_points_second_kind(GAMMA_SAMPLES - 1, GAMMA_DOMAIN).points
    dev = np.abs(evaluate(p, nodes) - clean.y)
    report = ExperimentReport("deviation")
    report.add_series("deviation", {"t": clean.t, "abs_deviation": dev})
    report.add_scalar("mean_abs_deviation", float(np.mean(dev)))
    report.add_scalar("max_deviation", float(np.max(dev)))
    return _emit(report, out_dir, svg)


def run_filter(seed=0, window=5, out_dir=None, svg=False):
    """Moving-average smoothing of the noisy gamma curve on a fine grid."""
    if window < 1:
        raise ValueError("window must be >= 1")
    t = np.linspace(0.0, GAMMA_SPAN, FILTER_SAMPLES)
    clean = gamma_variate(GAMMA_PARAMS, t)
    noisy = add_noise(clean, NOISE_SIGMA, seed)
    filtered = moving_average(noisy, window)
    report = ExperimentReport("filter")
    report.add_series(
        "overlay",
        {"t": t, "raw": noisy.y, "clean": clean.y, "filtered": filtered.y},
    )
    report.add_scalar("rms_raw", float(np.sqrt(np.mean((noisy.y - clean.y) ** 2))))
    report.add_scalar(
        "rms_filtered", float(np.sqrt(np.mean((filtered.y - clean.y) ** 2)))
    )
    report.metadata.update(window=str(window), seed=str(seed))
    return _emit(report, out_dir, svg)


def run_nodes(n=100, out_dir=None, svg=False):
    """Node tables, node-set comparisons, and mean-distance profiles."""
    if n < 2:
        raise ValueError("n must be >= 2")
    report = ExperimentReport("nodes")
    report.metadata["n"] = str(n)
    first = cheb_points_first_kind(n)
    second = cheb_points_second_kind(n - 1)
    leg = legendre_points(n)
    uni = uniform_points(n)
    report.add_series(
        "node_tables",
        {
            "index": np.arange(n, dtype=float),
            "first_kind": first.points,
            "second_kind": second.points,
            "legendre": leg.points,
            "uniform": uni.points,
        },
    )
    # The 0.0084 reference value belongs to the chebpts-style grid, which
    # is the second-kind set; the true first-kind comparison is reported too.
    report.add_scalar("compare_max_diff", compare_nodes(second, leg))
    report.add_scalar("compare_first_kind_max_diff", compare_nodes(first, leg))
    for count in (5, 10, 20):
        for label, pts in (
            ("cheb", cheb_points_second_kind(count - 1).points),
            ("legendre", legendre_points(count).points),
            ("uniform", uniform_points(count).points),
        ):
            prof = mean_distance(pts)
            report.add_series(
                f"mean_distance_{count}_{label}",
                {"x": prof.points, "gm_distance": prof.gm_distance},
            )
    report.add_scalar("smallest_nonzero_midpoint", float(smallest_nonzero_midpoint()))
    return _emit(report, out_dir, svg)


def run_condition(out_dir=None, svg=False):
    """Condition numbers of the Chebyshev and monomial bases by degree."""
    report = ExperimentReport("condition")
    cheb_sweep = conditioning_sweep(Basis.CHEBYSHEV, UNIT, 10)
    mono_sweep = conditioning_sweep(Basis.MONOMIAL, UNIT, 10)
    report.add_series(
        "sweep",
        {
            "degree": np.arange(11, dtype=float),
            "cond_chebyshev": cheb_sweep,
            "cond_monomial": mono_sweep,
        },
    )
    report.add_scalar("cond_chebyshev_deg10", float(cheb_sweep[-1]))
    report.add_scalar("cond_monomial_deg10", float(mono_sweep[-1]))
    mono01 = build_basis_matrix(Basis.MONOMIAL, Domain(0.0, 1.0), 10)
    report.add_scalar("cond_monomial_01_deg10", condition_number(mono01))
    sv = singular_values(build_basis_matrix(Basis.CHEBYSHEV, UNIT, 10))
    report.add_scalar("sigma_max_chebyshev", float(sv[0]))
    report.add_scalar("sigma_min_chebyshev", float(sv[-1]))
    return _emit(report, out_dir, svg)


def run_all(seed=0, out_dir=None, svg=False):
    """Run every experiment with shared defaults; returns the reports."""
    reports = [
        run_random(10, seed, out_dir, svg=svg),
        run_random(1000, seed, out_dir, svg=svg),
        run_converge(out_dir, svg=svg),
        run_scale(out_dir, svg=svg),
        run_wavelen(out_dir, svg=svg),
        run_coeffs("atan", out_dir, svg=svg),
        run_coeffs("tanh_sum", out_dir, svg=svg),
        run_coeffs("stripe", out_dir, svg=svg),
        run_gamma("even", False, seed, out_dir, svg=svg),
        run_gamma("even", True, seed, out_dir, svg=svg),
        run_gamma("uneven", True, seed, out_dir, svg=svg),
        run_spectrum(out_dir, svg=svg),
        run_deviation(out_dir, svg=svg),
        run_filter(seed, 5, out_dir, svg=svg),
        run_nodes(100, out_dir, svg=svg),
        run_condition(out_dir, svg=svg),
    ]
    return reports
