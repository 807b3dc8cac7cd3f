"""Exit criteria for the build; each test records a PASS/FAIL summary line.

Run with ``pytest tests/test_acceptance.py``; the summary is printed at the end.
"""

import math
from pathlib import Path

import numpy as np
import pytest

from abscatter import EffectiveParams, ScatteringGeometry, dcs_from_smatrix, dcs_general
from abscatter import cli
from abscatter.closed_forms import (
    PolarW,
    dcs_pure_ab,
    dcs_uv_equal_alpha_half,
    dcs_uv_zero,
    dcs_uvw_equal,
    dcs_w_infinity,
    dcs_w_zero,
)
from abscatter.quadrature import PeriodicGrid, check_uv_zero_integral, check_uvw_excess_integral
from abscatter.smatrix import det_n
from abscatter.sweep import SHAPE_ONE_MINIMUM, SHAPE_TWO_MINIMA, CrossSectionCurve, classify_shape, read_csv, theta_grid

TWO_PI = 2 * math.pi
GOLDEN = Path(__file__).parent / "golden"
SEED = 20260101


def rng(offset):
    return np.random.default_rng([SEED, offset])


def random_angles(gen, min_gap=1e-3):
    while True:
        theta, theta0 = gen.uniform(0, TWO_PI, 2)
        if abs((theta - theta0 + math.pi) % TWO_PI - math.pi) >= min_gap:
            return theta, theta0


def random_params(gen):
    u, v = gen.uniform(-50, 50, 2)
    w = gen.uniform(0, 50) * np.exp(1j * gen.uniform(0, TWO_PI))
    return EffectiveParams(u, v, w, gen.uniform(0.01, 0.99))


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b))


def test_c1_oracle_equivalence(acceptance):
    gen = rng(1)
    worst = 0.0
    for _ in range(10_000):
        ep = random_params(gen)
        g = ScatteringGeometry(*random_angles(gen))
        worst = max(worst, rel(float(dcs_general(ep, g)), float(dcs_from_smatrix(ep, g))))
    ok = acceptance("C1", "general formula vs scattering matrix, 1e4 tuples", worst < 1e-10, f"max rel {worst:.2e} < 1e-10")
    assert ok


def _slice_cases(gen):
    """Yield (name, closed form value, general value, pure AB scale) over 1e3 tuples per slice."""
    for _ in range(1000):
        alpha = gen.uniform(0.01, 0.99)
        g = ScatteringGeometry(*random_angles(gen))
        ab = float(dcs_pure_ab(alpha, 1.0, g))
        u, v = gen.uniform(-50, 50, 2)
        up = gen.uniform(0.01, 50)
        pw = PolarW(gen.uniform(0, 50), gen.uniform(0, TWO_PI))
        yield "pure_ab", ab, dcs_general(EffectiveParams(0, 0, 0, alpha), g), ab
        yield "uv_zero", dcs_uv_zero(alpha, 1.0, pw, g), dcs_general(EffectiveParams(0, 0, pw.w, alpha), g), ab
        yield "uvw_equal", dcs_uvw_equal(alpha, 1.0, up, g), dcs_general(EffectiveParams(up, up, up, alpha), g), ab
        yield "w_zero", dcs_w_zero(alpha, 1.0, u, v, g), dcs_general(EffectiveParams(u, v, 0, alpha), g), ab
        ab_half = float(dcs_pure_ab(0.5, 1.0, g))
        yield "uv_equal_alpha_half", dcs_uv_equal_alpha_half(1.0, u, g), dcs_general(EffectiveParams(u, u, 0, 0.5), g), ab_half


def test_c2_special_case_restrictions(acceptance):
    # Near zeros of the cross section the printed closed forms sum O(pure AB)
    # terms down to a tiny value, so their relative accuracy degrades as
    # pure_ab/value. The relative gate applies to tuples with value >= 1e-3 * pure AB;
    # every tuple must also agree to 1e-11 on the pure AB scale.
    worst_rel, worst_scaled, skipped, count = {}, {}, {}, {}
    for name, a, b, ab in _slice_cases(rng(2)):
        a, b = float(a), float(b)
        count[name] = count.get(name, 0) + 1
        worst_scaled[name] = max(worst_scaled.get(name, 0.0), abs(a - b) / max(abs(a), abs(b), ab))
        if b < 1e-3 * ab:
            skipped[name] = skipped.get(name, 0) + 1
            continue
        worst_rel[name] = max(worst_rel.get(name, 0.0), rel(a, b))
    ok = all(v < 1e-11 for v in worst_rel.values()) and all(v < 1e-11 for v in worst_scaled.values())
    ok = ok and all(c - skipped.get(n, 0) >= 1000 * 0.99 for n, c in count.items())
    detail = "; ".join(
        f"{n} rel {worst_rel[n]:.1e} scaled {worst_scaled[n]:.1e} (skipped {skipped.get(n, 0)})" for n in count
    )
    assert acceptance("C2", "special cases vs general formula, 1e3 tuples each, < 1e-11", ok, detail)


def test_c3_uv_zero_integral_vanishes(acceptance):
    gen = rng(3)
    worst = 0.0
    for _ in range(100):
        pw = PolarW(gen.uniform(0, 50), gen.uniform(0, TWO_PI))
        rep = check_uv_zero_integral(gen.uniform(0.01, 0.99), 1.0, pw, PeriodicGrid(512, theta0=gen.uniform(0, TWO_PI)))
        worst = max(worst, rep.residual)
    assert acceptance("C3", "integral of (u=v=0) minus pure AB, 100 tuples, n=512", worst < 1e-10, f"max |residual| {worst:.2e} < 1e-10")


def test_c4_uvw_excess_integral(acceptance):
    gen = rng(4)
    worst, ok = 0.0, True
    for _ in range(100):
        alpha, theta0, u = gen.uniform(0.01, 0.99), gen.uniform(0, TWO_PI), gen.uniform(0.01, 10)
        rep = check_uvw_excess_integral(alpha, 1.0, u, PeriodicGrid(512, theta0=theta0), rtol=1e-7, atol=1e-10)
        ok &= rep.passed
        worst = max(worst, rep.residual / max(abs(rep.expected), 1e-3))
    half_ok = True
    for theta0, u in [(0.0, 1.0), (1.3, 5.0), (4.0, 0.2)]:
        rep = check_uvw_excess_integral(0.5, 1.0, u, PeriodicGrid(512, theta0=theta0))
        half_ok &= abs(rep.computed) < 1e-10 and abs(rep.expected) < 1e-10
    ok = ok and half_ok
    assert acceptance("C4", "principal value of (u=v=w) minus pure AB vs closed form, 100 tuples", ok,
                      f"max rel {worst:.2e} < 1e-7; alpha=1/2 both sides zero: {half_ok}")


def _generic_angles(count, gen):
    out = []
    while len(out) < count:
        theta, theta0 = random_angles(gen, 0.05)
        d = abs((theta - theta0 + math.pi) % TWO_PI - math.pi)
        if abs(d - math.pi / 3) > 0.05:
            out.append((theta, theta0))
    return out


def test_c5_large_w_limit(acceptance):
    gen = rng(5)
    worst_w, worst_u = 0.0, 0.0
    for theta, theta0 in _generic_angles(64, gen):
        alpha = gen.uniform(0.01, 0.99)
        g = ScatteringGeometry(theta, theta0)
        worst_w = max(worst_w, rel(float(dcs_uv_zero(alpha, 1.0, PolarW(1e6, gen.uniform(0, TWO_PI)), g)),
                                   float(dcs_w_infinity(alpha, 1.0, g))))
        worst_u = max(worst_u, rel(float(dcs_uv_equal_alpha_half(1.0, 1e4, g)), float(dcs_w_infinity(0.5, 1.0, g))))
    ok = worst_w < 1e-5 and worst_u < 1e-5
    assert acceptance("C5", "|w| -> inf and u=v -> inf limits, 64 angles", ok,
                      f"rho=1e6 max rel {worst_w:.2e}; u=1e4 max rel {worst_u:.2e} (< 1e-5)")


def test_c6a_rotation_invariance_without_w(acceptance):
    gen = rng(61)
    worst = 0.0
    for _ in range(1000):
        ep = random_params(gen)
        ep = EffectiveParams(ep.u, ep.v, 0, ep.alpha)
        theta, theta0 = random_angles(gen, 0.1)
        shift = gen.uniform(-math.pi, math.pi)
        a = float(dcs_general(ep, ScatteringGeometry(theta, theta0)))
        b = float(dcs_general(ep, ScatteringGeometry(theta + shift, theta0 + shift)))
        worst = max(worst, rel(a, b))
    assert acceptance("C6a", "w=0 rotational invariance", worst < 1e-12, f"max rel {worst:.2e} < 1e-12")


def test_c6b_phase_covariance(acceptance):
    gen = rng(62)
    worst = 0.0
    for _ in range(1000):
        ep = random_params(gen)
        theta, theta0 = random_angles(gen, 0.1)
        shift = gen.uniform(-math.pi, math.pi)
        rotated = EffectiveParams(ep.u, ep.v, ep.w * np.exp(1j * shift), ep.alpha)
        a = float(dcs_general(rotated, ScatteringGeometry(theta, theta0)))
        b = float(dcs_general(ep, ScatteringGeometry(theta + shift, theta0 + shift)))
        worst = max(worst, rel(a, b))
    assert acceptance("C6b", "phase of w <-> common rotation of both angles", worst < 1e-12, f"max rel {worst:.2e} < 1e-12")


def test_c6c_forward_divergence_ratio(acceptance):
    gen = rng(63)
    worst = 0.0
    for _ in range(100):
        ep = random_params(gen)
        theta0 = gen.uniform(0, TWO_PI)
        for d in (1e-4, -1e-4):
            val = float(dcs_general(ep, ScatteringGeometry(theta0 + d, theta0)))
            ratio = math.sin(d / 2) ** 2 * val * TWO_PI * ep.k / math.sin(math.pi * ep.alpha) ** 2
            worst = max(worst, abs(ratio - 1))
    ok = worst < 1e-6
    assert acceptance("C6c", "forward divergence ratio at |theta - theta0| = 1e-4", ok, f"max |ratio - 1| {worst:.2e} (< 1e-6)")


def test_c7_det_n_nonvanishing(acceptance):
    gen = rng(7)
    smallest, worst = math.inf, 0.0
    for _ in range(100_000):
        ep = random_params(gen)
        d = det_n(ep)
        smallest = min(smallest, abs(d))
        expected = math.sin(math.pi * ep.alpha) * (ep.u + ep.v)
        worst = max(worst, abs(d.imag - expected) / max(1.0, abs(ep.u) + abs(ep.v)))
    ok = smallest > 0 and worst <= 1e-14
    assert acceptance("C7", "det N nonzero and Im det N = sin(pi alpha)(u+v), 1e5 tuples", ok,
                      f"min |det N| {smallest:.2e}; max dev {worst:.2e} <= 1e-14")


def test_c8_shape_dichotomy(acceptance):
    big = theta_grid(1024, 1e-3)
    g = ScatteringGeometry.from_plot_angle(big, 0.0)
    pure = classify_shape(CrossSectionCurve(big, dcs_pure_ab(0.5, 1.0, g)))
    limit = classify_shape(CrossSectionCurve(big, dcs_w_infinity(0.5, 1.0, g)))
    back = ScatteringGeometry.from_plot_angle(0.0, 0.0)
    factor = float(dcs_w_infinity(0.5, 1.0, back) / dcs_pure_ab(0.5, 1.0, back))
    lim_back = float(dcs_w_infinity(0.5, 1.0, back))
    ok = (pure == SHAPE_ONE_MINIMUM and limit == SHAPE_TWO_MINIMA and abs(factor - 9) < 1e-12
          and abs(lim_back - 9 / TWO_PI) < 1e-12)
    assert acceptance("C8", "shape dichotomy and backward enhancement", ok,
                      f"pure AB {pure}; limit {limit}; backward ratio {factor!r}")


@pytest.mark.parametrize("name", ["fig1", "fig2", "fig3"])
def test_c9_figure_golden_files(name, tmp_path, acceptance):
    import sys

    sys.path.insert(0, str(GOLDEN))
    try:
        from make_golden import GOLDEN_ARGS, golden_argv
    finally:
        sys.path.pop(0)
    golden = (GOLDEN / f"{name}.csv").read_bytes()
    out = tmp_path / f"{name}.csv"
    assert cli.main(golden_argv(name, out)) == 0
    identical = out.read_bytes() == golden

    # the default (condensed-formula) route agrees with the pinned oracle values
    fast = tmp_path / f"{name}_general.csv"
    assert cli.main(GOLDEN_ARGS[name] + ["--output", str(fast)]) == 0
    _, _, want = read_csv(golden.decode())
    _, _, got = read_csv(fast.read_text())
    worst = float(np.max(np.abs(got - want) / np.maximum(np.abs(want), 1e-300)))
    ok = identical and got.shape == want.shape and worst < 1e-10
    assert acceptance(f"C9[{name}]", "figure data vs pinned golden file", ok,
                      f"bitwise identical: {identical}; general route max rel {worst:.2e}")
