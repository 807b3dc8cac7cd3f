"""Seeded randomized identity and property suites, run from the CLI."""

from __future__ import annotations

import numpy as np

from .closed_forms import PolarW
from .params import EffectiveParams
from .quadrature import PeriodicGrid, check_uv_zero_integral, check_uvw_excess_integral
from .smatrix import ScatteringGeometry, dcs_from_smatrix, dcs_general

__all__ = ["SUITES", "DEFAULT_TRIALS", "run_checks"]

SUITES = ("eq13", "eq19", "oracle", "symmetry")
DEFAULT_TRIALS = {"eq13": 100, "eq19": 100, "oracle": 10_000, "symmetry": 1000}
MAX_REPORTED_FAILURES = 10

ORACLE_RTOL = 1e-10
SYMMETRY_RTOL = 1e-12
QUADRATURE_N = 512


def _random_angles(rng, min_gap):
    while True:
        theta, theta0 = rng.uniform(0.0, 2 * np.pi, 2)
        gap = abs((theta - theta0 + np.pi) % (2 * np.pi) - np.pi)
        if gap >= min_gap:
            return theta, theta0


def _random_params(rng, w_zero=False):
    u, v = rng.uniform(-50.0, 50.0, 2)
    w = 0j if w_zero else rng.uniform(0.0, 50.0) * np.exp(1j * rng.uniform(0.0, 2 * np.pi))
    alpha = rng.uniform(0.01, 0.99)
    return EffectiveParams(u, v, w, alpha)


def _rel(a, b):
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0 else abs(a - b) / scale


def _summary(name, trials, residuals, tolerance, failures):
    return {
        "suite": name,
        "trials": trials,
        "max_residual": float(max(residuals)) if residuals else 0.0,
        "tolerance": tolerance,
        "passed": not failures,
        "n_failures": len(failures),
        "failures": failures[:MAX_REPORTED_FAILURES],
    }


def _suite_eq13(rng, trials):
    residuals, failures, tol = [], [], 0.0
    for _ in range(trials):
        pw = PolarW(rng.uniform(0.0, 20.0), rng.uniform(0.0, 2 * np.pi))
        alpha = rng.uniform(0.01, 0.99)
        grid = PeriodicGrid(QUADRATURE_N, theta0=rng.uniform(0.0, 2 * np.pi))
        rep = check_uv_zero_integral(alpha, 1.0, pw, grid)
        residuals.append(rep.residual)
        tol = max(tol, rep.tolerance)
        if not rep.passed:
            failures.append(rep.as_dict())
    return _summary("eq13", trials, residuals, tol, failures)


def _suite_eq19(rng, trials):
    residuals, failures = [], []
    for _ in range(trials):
        alpha = rng.uniform(0.01, 0.99)
        u = rng.uniform(0.01, 10.0)
        grid = PeriodicGrid(QUADRATURE_N, theta0=rng.uniform(0.0, 2 * np.pi))
        rep = check_uvw_excess_integral(alpha, 1.0, u, grid)
        residuals.append(rep.residual / max(abs(rep.expected), 1e-3))
        if not rep.passed:
            failures.append(rep.as_dict())
    return _summary("eq19", trials, residuals, "1e-07 relative or 1e-10 absolute", failures)


def _suite_oracle(rng, trials):
    residuals, failures = [], []
    for _ in range(trials):
        ep = _random_params(rng)
        theta, theta0 = _random_angles(rng, 1e-3)
        g = ScatteringGeometry(theta, theta0)
        r = _rel(float(dcs_general(ep, g)), float(dcs_from_smatrix(ep, g)))
        residuals.append(r)
        if not r < ORACLE_RTOL:
            failures.append({"u": ep.u, "v": ep.v, "w": [ep.w.real, ep.w.imag], "alpha": float(ep.alpha),
                             "theta": theta, "theta0": theta0, "residual": r})
    return _summary("oracle", trials, residuals, ORACLE_RTOL, failures)


def _suite_symmetry(rng, trials):
    residuals, failures = [], []
    for _ in range(trials):
        theta, theta0 = _random_angles(rng, 0.1)
        shift = rng.uniform(-np.pi, np.pi)
        g = ScatteringGeometry(theta, theta0)
        g_shift = ScatteringGeometry(theta + shift, theta0 + shift)

        ep = _random_params(rng, w_zero=True)
        r_rot = _rel(float(dcs_general(ep, g)), float(dcs_general(ep, g_shift)))

        ep_w = _random_params(rng)
        ep_rot = EffectiveParams(ep_w.u, ep_w.v, ep_w.w * np.exp(1j * shift), ep_w.alpha)
        r_phase = _rel(float(dcs_general(ep_rot, g)), float(dcs_general(ep_w, g_shift)))

        r = max(r_rot, r_phase)
        residuals.append(r)
        if not r < SYMMETRY_RTOL:
            failures.append({"theta": theta, "theta0": theta0, "shift": shift,
                             "rotation_residual": r_rot, "phase_residual": r_phase})
    return _summary("symmetry", trials, residuals, SYMMETRY_RTOL, failures)


_RUNNERS = {"eq13": _suite_eq13, "eq19": _suite_eq19, "oracle": _suite_oracle, "symmetry": _suite_symmetry}


def run_checks(selection, seed=0, trials=None):
    """Run the selected suites with a seeded generator.

    ``trials`` overrides every suite's default trial count. Each suite gets
    its own generator spawned from ``seed``, so results do not depend on
    which other suites were selected.
    """
    unknown = set(selection) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown check suites: {sorted(unknown)}")
    if trials is not None and trials < 1:
        raise ValueError("trials must be >= 1")
    suites = []
    for idx, name in enumerate(SUITES):
        if name not in selection:
            continue
        rng = np.random.default_rng([seed, idx])
        suites.append(_RUNNERS[name](rng, trials or DEFAULT_TRIALS[name]))
    return {"seed": seed, "passed": all(s["passed"] for s in suites), "suites": suites}
