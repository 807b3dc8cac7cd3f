"""Periodic quadrature and the symmetric principal-value rule.

Both rules sample at half-cell offsets ``theta0 + (j - 1/2) * 2*pi/n``, so no
node ever lands on ``theta0``. The principal-value rule adds samples in
mirror pairs ``f(theta0 + t) + f(theta0 - t)`` before accumulating, which
cancels any part of ``f`` that is odd about ``theta0`` (such as a simple
pole) pair by pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .closed_forms import PolarW, dcs_pure_ab, dcs_uv_zero_excess, dcs_uvw_equal
from .errors import ParameterError, QuadratureError
from .params import FluxAlpha
from .smatrix import ScatteringGeometry

__all__ = [
    "PeriodicGrid",
    "IdentityReport",
    "integrate_periodic",
    "integrate_pv_symmetric",
    "uvw_excess_integral",
    "check_uv_zero_integral",
    "check_uvw_excess_integral",
]

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class PeriodicGrid:
    """``n`` equispaced nodes on the circle centred on ``theta0``.

    ``epsilon`` drops mirror pairs closer than that to ``theta0``; the
    default 0 keeps every pair (the innermost pair sits at ``pi/n``).
    """

    n: int = 512
    theta0: float = 0.0
    epsilon: float = 0.0

    def __post_init__(self):
        if self.n < 8 or self.n % 2:
            raise ParameterError(f"n must be an even integer >= 8, got {self.n!r}")
        if not 0.0 <= self.epsilon < math.pi / 4:
            raise ParameterError(f"epsilon must lie in [0, pi/4), got {self.epsilon!r}")

    @property
    def step(self) -> float:
        return TWO_PI / self.n

    def offsets(self):
        """Positive offsets ``t_j`` of the mirror pairs that are kept."""
        t = (np.arange(1, self.n // 2 + 1) - 0.5) * self.step
        return t[t >= self.epsilon]

    def nodes(self):
        return self.theta0 + (np.arange(self.n) + 0.5) * self.step


def _sample(f, theta):
    vals = np.asarray(f(theta), dtype=float)
    vals = np.broadcast_to(vals, np.shape(theta))
    if not np.all(np.isfinite(vals)):
        raise QuadratureError("integrand returned non-finite samples")
    return vals


def integrate_periodic(f, grid: PeriodicGrid) -> float:
    """Periodic trapezoidal approximation of the integral of ``f`` over one period.

    ``f`` is called once with an array of angles. Exact for trigonometric
    polynomials of degree below ``n``, spectrally accurate for smooth
    periodic integrands.
    """
    return grid.step * math.fsum(_sample(f, grid.nodes()))


def integrate_pv_symmetric(f, grid: PeriodicGrid) -> float:
    """Principal value about ``grid.theta0`` with the odd part cancelled pairwise."""
    t = grid.offsets()
    pairs = _sample(f, grid.theta0 + t) + _sample(f, grid.theta0 - t)
    return grid.step * math.fsum(pairs)


def uvw_excess_integral(alpha, k, u, theta0) -> float:
    """Closed-form principal value of ``dcs_uvw_equal - dcs_pure_ab`` over one period.

    Zero whenever ``alpha = 1/2`` or ``cos(theta0) = -cos(pi alpha)``.
    """
    alpha = FluxAlpha(alpha)
    pa = math.pi * alpha
    s2 = math.sin(pa) ** 2
    c = math.cos(pa)
    return 16.0 * s2 * c * (c + math.cos(theta0)) * u**2 / (k * (1.0 + 4.0 * s2 * u**2))


@dataclass
class IdentityReport:
    name: str
    computed: float
    expected: float
    residual: float
    tolerance: float
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tolerance)

    def as_dict(self):
        return {
            "name": self.name,
            "computed": self.computed,
            "expected": self.expected,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "params": self.params,
        }


def check_uv_zero_integral(alpha, k, pw: PolarW, grid: PeriodicGrid, rtol=1e-10):
    """Integrate ``dcs_uv_zero - dcs_pure_ab`` over the circle; the result should be 0."""

    def excess(theta):
        return dcs_uv_zero_excess(alpha, k, pw, ScatteringGeometry(theta, grid.theta0))

    value = integrate_periodic(excess, grid)
    scale = float(np.max(np.abs(excess(grid.nodes()))))
    return IdentityReport(
        name="uv_zero_integral",
        computed=value,
        expected=0.0,
        residual=abs(value),
        tolerance=rtol * max(1.0, scale),
        params={"alpha": float(alpha), "k": k, "rho": pw.rho, "varphi": pw.varphi,
                "theta0": grid.theta0, "n": grid.n},
    )


def check_uvw_excess_integral(alpha, k, u, grid: PeriodicGrid, rtol=1e-7, atol=1e-10):
    """Principal value of ``dcs_uvw_equal - dcs_pure_ab`` against :func:`uvw_excess_integral`."""
    theta0 = grid.theta0

    def excess(theta):
        g = ScatteringGeometry(theta, theta0)
        return dcs_uvw_equal(alpha, k, u, g, exclusion=0.0) - dcs_pure_ab(alpha, k, g, exclusion=0.0)

    value = integrate_pv_symmetric(excess, grid)
    expected = uvw_excess_integral(alpha, k, u, theta0)
    return IdentityReport(
        name="uvw_excess_integral",
        computed=value,
        expected=expected,
        residual=abs(value - expected),
        tolerance=max(rtol * abs(expected), atol),
        params={"alpha": float(alpha), "k": k, "u": u, "theta0": theta0, "n": grid.n},
    )
