"""Golden-value assertions behind the CLI's --check flag.

Each checker re-runs its experiment and compares against the frozen
reference values; the CLI prints one line per assertion and exits nonzero
if any fails.
"""

from __future__ import annotations

import numpy as np

from . import experiments as exp
from .cheb import interpolant_from_values, evaluate
from .nodes import smallest_nonzero_midpoint

__all__ = ["CHECKS", "run_checks"]

RHO_INV_SQ = ((1.0 + np.sqrt(26.0)) / 5.0) ** -2


def _c(label, ok, detail=""):
    return (label, bool(ok), detail)


def check_random(seed):
    out = []
    r = exp.run_random(10, seed)
    have = set(r.scalars)
    out.append(_c("random: report schema", {"min", "max", "elapsed_seconds"} <= have
                  and len(r.series) == 2, f"scalars={sorted(have)}"))
    rng = np.random.default_rng(seed)
    data = rng.uniform(-1.0, 1.0, 10)
    p = interpolant_from_values(data)
    dense = evaluate(p, np.linspace(-1.0, 1.0, 10 ** 6 + 1))
    out.append(_c("random: min/max vs dense-grid scan",
                  abs(r.scalars["min"] - dense.min()) < 1e-8
                  and abs(r.scalars["max"] - dense.max()) < 1e-8,
                  f"min={r.scalars['min']:.10g} max={r.scalars['max']:.10g}"))
    flat = exp.run_random(2, seed, values=[0.0, 0.0])
    out.append(_c("random: zero data gives zero extrema",
                  flat.scalars["min"] == 0.0 and flat.scalars["max"] == 0.0))
    return out


def check_converge(seed):
    r = exp.run_converge()
    t = r.scalars.get("threshold_l2", -1)
    out = [
        _c("converge: machine-precision degree in [180, 260]",
           180 <= t <= 260, f"threshold={t}"),
        _c("converge: exp error at degree 20 below 1e-14",
           r.scalars["exp_err_l2_at_20"] < 1e-14,
           f"err={r.scalars['exp_err_l2_at_20']:.3e}"),
    ]
    s = r.get_series("errors")
    e = s.columns["err_l2_runge"]
    ratios = e[59:120] / e[57:118]
    out.append(_c("converge: Runge decay ratio within 5% of rho^-2",
                  np.all(np.abs(ratios - RHO_INV_SQ) < 0.05 * RHO_INV_SQ),
                  f"mean={np.mean(ratios):.6f} target={RHO_INV_SQ:.6f}"))
    return out


def check_scale(seed):
    r = exp.run_scale()
    return [
        _c("scale: interpolant exact at its nodes",
           r.scalars["max_node_err_full"] < 1e-13,
           f"err={r.scalars['max_node_err_full']:.3e}"),
        _c("scale: degree 9 on [-6,6] visibly imperfect",
           r.scalars["max_err_full"] > 1e-3, f"err={r.scalars['max_err_full']:.3e}"),
        _c("scale: [0,6] fit blows up extrapolated to -6",
           r.scalars["err_scaled_at_minus6"] > 1.0,
           f"err={r.scalars['err_scaled_at_minus6']:.3e}"),
    ]


def check_wavelen(seed):
    r = exp.run_wavelen()
    s = r.get_series("lengths")
    ls = np.asarray(s.columns["length_sin"])
    out = [
        _c("wavelen: sin lengths nondecreasing", bool(np.all(np.diff(ls) >= 0))),
        _c("wavelen: sin(x) length at most 20", ls[0] <= 20, f"L(1)={ls[0]:.0f}"),
    ]
    # The affine offset in L(k) keeps early ratios below 2; the doubling
    # band is only meaningful once the linear term dominates (k >= 64).
    ratios = ls[7:] / ls[6:-1]  # L(2k)/L(k) for k = 64..512
    out.append(_c("wavelen: sin length doubles with k (k >= 64)",
                  bool(np.all((ratios >= 1.6) & (ratios <= 2.4))),
                  f"ratios={np.round(ratios, 2)}"))
    return out


def check_coeffs(seed):
    r = exp.run_coeffs("atan")
    golden = {"a1": 0.828427124746190, "a3": -0.047378541243650,
              "a5": 0.004877323527903}
    out = [
        _c(f"coeffs: arctan {k} matches to 1e-12",
           abs(r.scalars[k] - v) < 1e-12, f"{r.scalars[k]:.15f}")
        for k, v in golden.items()
    ]
    rt = exp.run_coeffs("tanh_sum")
    out.append(_c("coeffs: simplification shortens the tanh sum",
                  rt.scalars["length_sum_truncated"] < rt.scalars["length_sum"],
                  f"{rt.scalars['length_sum']:.0f} -> "
                  f"{rt.scalars['length_sum_truncated']:.0f}"))
    rs = exp.run_coeffs("stripe")
    out.append(_c("coeffs: stripe function is neither even nor odd",
                  rs.scalars["even_significant"] > 0 and rs.scalars["odd_significant"] > 0))
    return out


def check_gamma(seed):
    out = []
    clean = exp.run_gamma("even", False, seed)
    out.append(_c("gamma even/clean: Chebyshev reproduces samples to 1e-10",
                  clean.scalars["cheb_max_node_error"] < 1e-10,
                  f"err={clean.scalars['cheb_max_node_error']:.3e}"))
    out.append(_c("gamma even/clean: Chebyshev peak gap is zero",
                  clean.scalars["cheb_peak_gap"] == 0.0))
    out.append(_c("gamma even/clean: Fourier reproduces samples to 1e-10",
                  clean.scalars["fourier_max_node_error"] < 1e-10,
                  f"err={clean.scalars['fourier_max_node_error']:.3e}"))
    noisy = exp.run_gamma("even", True, seed)
    out.append(_c("gamma even/noise: Chebyshev peak gap zero, Fourier gap positive",
                  noisy.scalars["cheb_peak_gap"] == 0.0
                  and noisy.scalars["fourier_peak_gap"] > 0.0,
                  f"fourier gap={noisy.scalars['fourier_peak_gap']:.3e}"))
    uneven = exp.run_gamma("uneven", True, seed)
    out.append(_c("gamma uneven: Fourier recorded as unsupported",
                  uneven.metadata["fourier"].startswith("unsupported"),
                  uneven.metadata["fourier"]))
    out.append(_c("gamma uneven: Chebyshev still passes through samples",
                  uneven.scalars["cheb_peak_gap"] == 0.0
                  and uneven.scalars["cheb_max_node_error"] < 1e-10))
    return out


def check_spectrum(seed):
    r = exp.run_spectrum()
    t = np.linspace(0.0, exp.GAMMA_SPAN, exp.GAMMA_SAMPLES)
    dc_expected = abs(np.sum(t * np.exp(-t)))
    parseval = abs(r.scalars["sum_sq_values"] - r.scalars["sum_sq_spectrum_over_n"])
    return [
        _c("spectrum: DC bin equals |sum of samples|",
           abs(r.scalars["dc_amplitude"] - dc_expected) < 1e-12 * dc_expected,
           f"dc={r.scalars['dc_amplitude']:.10g}"),
        _c("spectrum: Parseval identity to 1e-9 relative",
           parseval < 1e-9 * r.scalars["sum_sq_values"], f"gap={parseval:.3e}"),
        _c("spectrum: 31 bins", r.scalars["length"] == 31.0),
    ]


def check_deviation(seed):
    r = exp.run_deviation()
    return [
        _c("deviation: mean absolute deviation below 1e-10",
           r.scalars["mean_abs_deviation"] < 1e-10,
           f"mean={r.scalars['mean_abs_deviation']:.3e}"),
        _c("deviation: max deviation below 1e-9",
           r.scalars["max_deviation"] < 1e-9),
        _c("deviation: one row per sample", len(r.get_series("deviation")) == 31),
    ]


def check_filter(seed):
    r = exp.run_filter(seed, 5)
    ident = exp.run_filter(seed, 1)
    return [
        _c("filter: smoothing reduces RMS error",
           r.scalars["rms_filtered"] < r.scalars["rms_raw"],
           f"{r.scalars['rms_raw']:.4f} -> {r.scalars['rms_filtered']:.4f}"),
        _c("filter: window 1 is the identity",
           ident.scalars["rms_filtered"] == ident.scalars["rms_raw"]),
        _c("filter: window and seed recorded",
           ident.metadata.get("window") == "1" and "seed" in ident.metadata),
    ]


def check_nodes(seed):
    r = exp.run_nodes(100)
    tables = r.get_series("node_tables")
    sorted_ok = all(
        bool(np.all(np.diff(tables.columns[c]) > 0))
        for c in ("first_kind", "second_kind", "legendre", "uniform")
    )
    return [
        _c("nodes: 100-node comparison value 0.0084 +- 0.0005",
           abs(r.scalars["compare_max_diff"] - 0.0084) <= 0.0005,
           f"diff={r.scalars['compare_max_diff']:.6f}"),
        _c("nodes: tables sorted ascending", sorted_ok),
        _c("nodes: midpoint probe matches library",
           r.scalars["smallest_nonzero_midpoint"] == float(smallest_nonzero_midpoint())),
    ]


def check_condition(seed):
    r = exp.run_condition()
    return [
        _c("condition: Chebyshev basis 3.7126 within 1%",
           abs(r.scalars["cond_chebyshev_deg10"] - 3.7126) < 0.01 * 3.7126,
           f"cond={r.scalars['cond_chebyshev_deg10']:.6f}"),
        _c("condition: monomials on [-1,1] 3.073e3 within 2%",
           abs(r.scalars["cond_monomial_deg10"] - 3.073e3) < 0.02 * 3.073e3,
           f"cond={r.scalars['cond_monomial_deg10']:.6g}"),
        _c("condition: monomials on [0,1] 2.2871e7 within 5%",
           abs(r.scalars["cond_monomial_01_deg10"] - 2.2871e7) < 0.05 * 2.2871e7,
           f"cond={r.scalars['cond_monomial_01_deg10']:.6g}"),
    ]


CHECKS = {
    "random": check_random,
    "converge": check_converge,
    "scale": check_scale,
    "wavelen": check_wavelen,
    "coeffs": check_coeffs,
    "gamma": check_gamma,
    "spectrum": check_spectrum,
    "deviation": check_deviation,
    "filter": check_filter,
    "nodes": check_nodes,
    "condition": check_condition,
}


def run_checks(names, seed) -> list[tuple[str, bool, str]]:
    results = []
    for name in names:
        results.extend(CHECKS[name](seed))
    return results
