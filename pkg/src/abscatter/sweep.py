"""Cross-section sweeps over the plotting angle and their file formats.

Curves are tabulated against ``Theta = theta - theta0 + pi`` reduced into
``(-pi, pi)``: ``Theta = 0`` is backward scattering and ``Theta = +-pi`` the
(singular, excluded) forward direction.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .closed_forms import W_INFINITY_BOUNDARY_CONDITION, dcs_pure_ab, dcs_w_infinity
from .errors import ParameterError
from .params import BoundaryCondition, EffectiveParams, FluxAlpha, rescale
from .smatrix import ScatteringGeometry, dcs_from_smatrix, normalized_dcs

__all__ = [
    "PRESETS",
    "ROUTES",
    "SweepSpec",
    "CrossSectionCurve",
    "CrossSectionSurface",
    "SweepResult",
    "theta_grid",
    "run_sweep",
    "classify_shape",
    "count_extrema",
    "write_csv",
    "write_json",
    "read_csv",
]

PRESETS = ("fig1", "fig2", "fig3", "custom")
ROUTES = ("general", "smatrix")
QUANTITY = "2*pi*|S|^2 = k*dsigma/dtheta"

FIG1_PARAMS = ((25.0, 1.0, 3 + 3j), (20.0, 0.0, 3 + 0j), (1.0, 10.0, 0j))
FIG3_U = 5.0
FIG3_THETA0_POINTS = 64

MIN_SHAPE_SAMPLES = 255
SHAPE_ONE_MINIMUM = "one_minimum"
SHAPE_TWO_MINIMA = "two_minima_one_maximum"
SHAPE_OTHER = "other"


def _fmt(x):
    return format(float(x), ".17g")


@dataclass
class SweepSpec:
    """What to tabulate.

    ``u``, ``v``, ``w`` are dimensionless unless ``physical`` is set, in
    which case they are the primed parameters and get rescaled at ``k``.
    ``theta0_range`` is ``(lo, hi, n)`` sampled inclusively and produces a
    surface instead of a curve.
    """

    preset: str = "custom"
    alpha: float = 0.5
    theta0: float = 0.0
    theta0_range: tuple | None = None
    u: float = 0.0
    v: float = 0.0
    w: complex = 0j
    k: float = 1.0
    physical: bool = False
    n_theta: int = 1024
    exclusion: float = 1e-3
    route: str = "general"

    def __post_init__(self):
        if self.preset not in PRESETS:
            raise ParameterError(f"unknown preset {self.preset!r}")
        if self.route not in ROUTES:
            raise ParameterError(f"unknown route {self.route!r}")
        if int(self.n_theta) != self.n_theta or self.n_theta < 16:
            raise ParameterError(f"n_theta must be an integer >= 16, got {self.n_theta!r}")
        if not 0.0 < self.exclusion < math.pi / 8:
            raise ParameterError(f"exclusion must lie in (0, pi/8), got {self.exclusion!r}")
        if self.k <= 0:
            raise ParameterError(f"k must be positive, got {self.k!r}")
        if self.theta0_range is not None:
            lo, hi, n = self.theta0_range
            if int(n) != n or n < 1 or (n > 1 and not lo < hi):
                raise ParameterError(f"empty theta0 range {self.theta0_range!r}")
        FluxAlpha(self.alpha)

    def effective_params(self) -> EffectiveParams:
        if self.physical:
            return rescale(BoundaryCondition(self.u, self.v, self.w), self.alpha, self.k)
        return EffectiveParams(self.u, self.v, self.w, self.alpha, self.k)

    def theta0_values(self):
        if self.theta0_range is None:
            return np.array([float(self.theta0)])
        lo, hi, n = self.theta0_range
        return np.linspace(float(lo), float(hi), int(n))


def theta_grid(n_theta, exclusion):
    """Nodes ``-pi + j*2*pi/n_theta`` inside ``(-pi, pi)`` outside the forward window."""
    big = -np.pi + np.arange(1, n_theta) * (2.0 * np.pi / n_theta)
    return big[np.pi - np.abs(big) >= exclusion]


@dataclass
class CrossSectionCurve:
    theta_big: np.ndarray
    values: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.theta_big = np.asarray(self.theta_big, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        if self.theta_big.shape != self.values.shape or self.values.ndim != 1:
            raise ParameterError("Theta and value arrays must be 1-D and of equal length")
        if np.any(np.diff(self.theta_big) <= 0):
            raise ParameterError("Theta grid must be strictly increasing")
        if not np.all(np.isfinite(self.values)) or np.any(self.values < 0):
            raise ParameterError("curve values must be finite and nonnegative")


@dataclass
class CrossSectionSurface:
    """Values on a ``(theta0, Theta)`` grid; ``values[i, j]`` is at ``theta0[i]``, ``theta_big[j]``."""

    theta_big: np.ndarray
    theta0: np.ndarray
    values: np.ndarray
    metadata: dict = field(default_factory=dict)

    def curve(self, i) -> CrossSectionCurve:
        meta = dict(self.metadata, theta0=float(self.theta0[i]))
        return CrossSectionCurve(self.theta_big, self.values[i], meta)


@dataclass
class SweepResult:
    metadata: dict
    curves: list = field(default_factory=list)
    surface: CrossSectionSurface | None = None


def _param_meta(ep: EffectiveParams):
    return {"u": ep.u, "v": ep.v, "w_re": ep.w.real, "w_im": ep.w.imag, "alpha": float(ep.alpha), "k": ep.k}


def _eval_general(ep, big, theta0, route):
    g = ScatteringGeometry.from_plot_angle(big, theta0)
    if route == "smatrix":
        return ep.k * dcs_from_smatrix(ep, g)
    return normalized_dcs(ep, g)


def _general_curve(ep, big, theta0, route):
    meta = {"formula": "smatrix" if route == "smatrix" else "general", **_param_meta(ep), "theta0": theta0}
    return CrossSectionCurve(big, _eval_general(ep, big, theta0, route), meta)


def _surface(ep, big, theta0s, route):
    vals = np.vstack([_eval_general(ep, big, t0, route) for t0 in theta0s])
    meta = {"formula": "smatrix" if route == "smatrix" else "general", **_param_meta(ep)}
    return CrossSectionSurface(big, np.asarray(theta0s, dtype=float), vals, meta)


def run_sweep(spec: SweepSpec) -> SweepResult:
    """Tabulate ``2 pi |S|^2`` against Theta for a preset or custom parameters."""
    big = theta_grid(spec.n_theta, spec.exclusion)
    meta = {
        "abscatter_version": __version__,
        "preset": spec.preset,
        "quantity": QUANTITY,
        "route": spec.route,
        "n_theta": spec.n_theta,
        "exclusion": spec.exclusion,
    }
    result = SweepResult(meta)

    if spec.preset == "fig1":
        meta.update(alpha=0.5, theta0=0.0)
        for u, v, w in FIG1_PARAMS:
            ep = EffectiveParams(u, v, w, 0.5)
            result.curves.append(_general_curve(ep, big, 0.0, spec.route))
    elif spec.preset == "fig2":
        meta.update(alpha=0.5, theta0=0.0, w_infinity_boundary_condition=W_INFINITY_BOUNDARY_CONDITION)
        g = ScatteringGeometry.from_plot_angle(big, 0.0)
        result.curves.append(
            CrossSectionCurve(big, dcs_w_infinity(0.5, 1.0, g),
                              {"formula": "w_infinity", "u": 0.0, "v": 0.0, "alpha": 0.5, "k": 1.0})
        )
        if spec.route == "smatrix":
            result.curves.append(_general_curve(EffectiveParams(0, 0, 0, 0.5), big, 0.0, "smatrix"))
        else:
            result.curves.append(
                CrossSectionCurve(big, dcs_pure_ab(0.5, 1.0, g),
                                  {"formula": "pure_ab", "u": 0.0, "v": 0.0, "w_re": 0.0, "w_im": 0.0,
                                   "alpha": 0.5, "k": 1.0})
            )
    elif spec.preset == "fig3":
        ep = EffectiveParams(FIG3_U, FIG3_U, FIG3_U, 0.5)
        if spec.theta0_range is None:
            theta0s = np.arange(FIG3_THETA0_POINTS) * (2.0 * np.pi / FIG3_THETA0_POINTS)
        else:
            theta0s = spec.theta0_values()
        result.surface = _surface(ep, big, theta0s, spec.route)
    else:
        ep = spec.effective_params()
        if spec.physical:
            meta.update(u_prime=spec.u, v_prime=spec.v, w_prime_re=complex(spec.w).real,
                        w_prime_im=complex(spec.w).imag)
        if spec.theta0_range is None:
            result.curves.append(_general_curve(ep, big, float(spec.theta0), spec.route))
        else:
            result.surface = _surface(ep, big, spec.theta0_values(), spec.route)
    for c in result.curves:
        if len(c.values) >= MIN_SHAPE_SAMPLES:
            c.metadata["shape"] = classify_shape(c)
    return result


def _dedupe(values, rtol=1e-12):
    out = [values[0]]
    for x in values[1:]:
        if abs(x - out[-1]) <= rtol * max(abs(x), abs(out[-1])):
            continue
        out.append(x)
    return np.array(out)


def count_extrema(values):
    """Strict interior ``(minima, maxima)`` of a sampled sequence, plateaus merged."""
    v = _dedupe(np.asarray(values, dtype=float))
    mid, left, right = v[1:-1], v[:-2], v[2:]
    minima = int(np.sum((mid < left) & (mid < right)))
    maxima = int(np.sum((mid > left) & (mid > right)))
    return minima, maxima


def classify_shape(curve: CrossSectionCurve) -> str:
    """Label a curve by its interior extrema: one minimum, or two minima around one maximum."""
    if len(curve.values) < MIN_SHAPE_SAMPLES:
        raise ParameterError(
            f"shape classification needs at least {MIN_SHAPE_SAMPLES} samples, got {len(curve.values)}"
        )
    counts = count_extrema(curve.values)
    if counts == (1, 0):
        return SHAPE_ONE_MINIMUM
    if counts == (2, 1):
        return SHAPE_TWO_MINIMA
    return SHAPE_OTHER


def _header_lines(result: SweepResult):
    lines = [f"# {k}={_meta_value(v)}" for k, v in result.metadata.items()]
    if result.surface is not None:
        lines += [f"# surface.{k}={_meta_value(v)}" for k, v in result.surface.metadata.items()]
    for i, c in enumerate(result.curves, start=1):
        lines += [f"# value_{i}.{k}={_meta_value(v)}" for k, v in c.metadata.items()]
    return lines


def _meta_value(v):
    if isinstance(v, float):
        return _fmt(v)
    return str(v)


def format_csv(result: SweepResult) -> str:
    buf = io.StringIO()
    for line in _header_lines(result):
        buf.write(line + "\n")
    if result.surface is not None:
        s = result.surface
        buf.write("Theta,theta0,value\n")
        for i, t0 in enumerate(s.theta0):
            t0s = _fmt(t0)
            for big, val in zip(s.theta_big, s.values[i]):
                buf.write(f"{_fmt(big)},{t0s},{_fmt(val)}\n")
        return buf.getvalue()
    if len(result.curves) == 1:
        buf.write("Theta,value\n")
    else:
        names = ",".join(f"value_{i}" for i in range(1, len(result.curves) + 1))
        buf.write(f"Theta,{names}\n")
    big = result.curves[0].theta_big
    cols = np.vstack([c.values for c in result.curves])
    for j, b in enumerate(big):
        buf.write(_fmt(b) + "," + ",".join(_fmt(x) for x in cols[:, j]) + "\n")
    return buf.getvalue()


def write_csv(result: SweepResult, fh):
    fh.write(format_csv(result))


def format_json(result: SweepResult) -> str:
    doc = {
        "metadata": result.metadata,
        "curves": [
            {"metadata": c.metadata, "Theta": c.theta_big.tolist(), "value": c.values.tolist()}
            for c in result.curves
        ],
    }
    if result.surface is not None:
        s = result.surface
        doc["surface"] = {
            "metadata": s.metadata,
            "Theta": s.theta_big.tolist(),
            "theta0": s.theta0.tolist(),
            "value": s.values.tolist(),
        }
    return json.dumps(doc, indent=1) + "\n"


def write_json(result: SweepResult, fh):
    fh.write(format_json(result))


def read_csv(text):
    """Parse emitted CSV text into ``(metadata, column_names, data)``."""
    meta = {}
    rows = []
    columns = None
    for line in text.splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            meta[key] = value
        elif columns is None:
            columns = line.split(",")
        elif line:
            rows.append([float(x) for x in line.split(",")])
    return meta, columns, np.array(rows)
