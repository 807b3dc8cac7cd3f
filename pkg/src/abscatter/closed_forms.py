"""Closed-form cross sections on special slices of the parameter space.

Each function here is the general formula restricted to a slice, written
out explicitly. They are independent evaluators: the test suite checks
every one of them against :func:`abscatter.smatrix.dcs_general`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .params import FluxAlpha
from .smatrix import DEFAULT_EXCLUSION, ScatteringGeometry

__all__ = [
    "PolarW",
    "W_INFINITY_BOUNDARY_CONDITION",
    "W_INFINITY_INTERPRETATIONS",
    "limit_bc_check",
    "dcs_pure_ab",
    "dcs_uv_zero",
    "dcs_uv_zero_excess",
    "dcs_w_infinity",
    "dcs_uvw_equal",
    "f_function",
    "singular_weight",
    "dcs_difference_uvw",
    "dcs_w_zero",
    "dcs_uv_equal_alpha_half",
]

W_INFINITY_BOUNDARY_CONDITION = "Phi_2^1(psi) = Phi_2^2(psi) = 0"
W_INFINITY_INTERPRETATIONS = (
    "u' = v' = 0 with w' fixed and the particle energy taken large",
    "energy fixed with |w'| -> infinity, i.e. " + W_INFINITY_BOUNDARY_CONDITION,
)


def limit_bc_check():
    """Describe the boundary condition reached as ``|w| -> infinity`` with ``u = v = 0``."""
    return {
        "boundary_condition": W_INFINITY_BOUNDARY_CONDITION,
        "interpretations": list(W_INFINITY_INTERPRETATIONS),
    }


@dataclass(frozen=True)
class PolarW:
    """``w = rho * exp(i * varphi)``."""

    rho: float
    varphi: float = 0.0

    def __post_init__(self):
        if not self.rho >= 0:
            raise ParameterError(f"rho must be nonnegative, got {self.rho!r}")

    @classmethod
    def from_complex(cls, w):
        w = complex(w)
        return cls(abs(w), float(np.angle(w)))

    @property
    def w(self) -> complex:
        return complex(self.rho * np.exp(1j * self.varphi))


def _ab_factor(alpha, k, g, exclusion):
    # sin^2(pi alpha) / (2 pi k sin^2(delta/2)), plus the half angle
    alpha = FluxAlpha(alpha)
    half, _ = g.half_angles(exclusion)
    return np.sin(np.pi * alpha) ** 2 / (2.0 * np.pi * k * np.sin(half) ** 2), half


def dcs_pure_ab(alpha, k, g: ScatteringGeometry, exclusion=DEFAULT_EXCLUSION):
    """Regular boundary condition (``u = v = w = 0``)."""
    base, _ = _ab_factor(alpha, k, g, exclusion)
    return base


def dcs_uv_zero_excess(alpha, k, pw: PolarW, g: ScatteringGeometry):
    """``dcs_uv_zero - dcs_pure_ab``, computed without subtracting singular values.

    Smooth on the whole circle, including the forward direction.
    """
    alpha = FluxAlpha(alpha)
    r2 = pw.rho**2
    weight = 8.0 * r2 / (1.0 + r2) ** 2
    delta = g.theta - g.theta0
    corr = np.cos(g.theta + g.theta0 + 2.0 * pw.varphi) - np.cos(delta) * r2
    return np.sin(np.pi * alpha) ** 2 / (2.0 * np.pi * k) * weight * corr


def dcs_uv_zero(alpha, k, pw: PolarW, g: ScatteringGeometry, exclusion=DEFAULT_EXCLUSION):
    """Slice ``u = v = 0``, ``w = rho e^{i varphi}``."""
    return dcs_pure_ab(alpha, k, g, exclusion) + dcs_uv_zero_excess(alpha, k, pw, g)


def dcs_w_infinity(alpha, k, g: ScatteringGeometry, exclusion=DEFAULT_EXCLUSION):
    """Limit of :func:`dcs_uv_zero` as ``rho -> infinity``.

    Vanishes at ``theta - theta0 = +-pi/3``. See :data:`W_INFINITY_BOUNDARY_CONDITION`
    for the boundary condition this limit corresponds to.
    """
    base, half = _ab_factor(alpha, k, g, exclusion)
    return base * (1.0 - 2.0 * np.cos(2.0 * half)) ** 2


dcs_w_infinity.boundary_condition = W_INFINITY_BOUNDARY_CONDITION
dcs_w_infinity.interpretations = W_INFINITY_INTERPRETATIONS


def _check_positive_u(u):
    if not u > 0:
        raise ParameterError(f"u must be positive on the u = v = w slice, got {u!r}")


def dcs_uvw_equal(alpha, k, u, g: ScatteringGeometry, exclusion=DEFAULT_EXCLUSION):
    """Slice ``u = v = w > 0`` (so ``uv - |w|^2 = 0``).

    Depends on ``theta`` and ``theta0`` separately, not just on their difference.
    """
    _check_positive_u(u)
    base, _ = _ab_factor(alpha, k, g, exclusion)
    pa = np.pi * alpha
    b = np.sin(g.theta) - np.sin(g.theta0) - np.sin(pa - g.theta + g.theta0)
    s2 = np.sin(pa) ** 2
    return base * (1.0 + 4.0 * b**2 * u**2) / (1.0 + 4.0 * s2 * u**2)


def f_function(alpha, theta, theta0):
    """Smooth part of the ``u = v = w`` excess over the pure AB cross section."""
    pa = np.pi * alpha
    c = np.cos(pa)
    return (
        8.0 * c * (c + np.cos(theta0))
        + 7.0 * np.cos(pa - theta)
        + np.cos(pa + theta)
        - 2.0 * np.sin(pa) * np.sin(theta - 2.0 * theta0)
        + np.cos(2.0 * pa + theta - theta0)
        + 3.0 * np.cos(2.0 * pa - theta + theta0)
        + 4.0 * np.cos(theta + theta0)
    )


def singular_weight(alpha, theta0):
    """Coefficient of ``cos^3(delta/2) / sin(delta/2)`` in the ``u = v = w`` excess."""
    pa = np.pi * alpha
    return 8.0 * np.sin(pa) * (np.cos(pa) + np.cos(theta0))


def dcs_difference_uvw(alpha, k, u, g: ScatteringGeometry, exclusion=DEFAULT_EXCLUSION):
    """``dcs_uvw_equal - dcs_pure_ab`` as smooth part plus an odd pole. Signed.

    The odd term ``cos^3(delta/2)/sin(delta/2)`` carries the weight
    :func:`singular_weight`; its symmetric principal value over a period is zero.
    """
    alpha = FluxAlpha(alpha)
    half, _ = g.half_angles(exclusion)
    s2 = np.sin(np.pi * alpha) ** 2
    pref = s2 * u**2 / (np.pi * k * (1.0 + 4.0 * s2 * u**2))
    odd = singular_weight(alpha, g.theta0) * np.cos(half) ** 3 / np.sin(half)
    return pref * (f_function(alpha, g.theta, g.theta0) - odd)


def dcs_w_zero(alpha, k, u, v, g: ScatteringGeometry, exclusion=DEFAULT_EXCLUSION):
    """Slice ``w = 0`` (angular momentum conserved); a function of ``theta - theta0`` only."""
    base, half = _ab_factor(alpha, k, g, exclusion)
    pa = np.pi * alpha
    ca, sa = np.cos(pa), np.sin(pa)
    x = 2.0 * half
    cx = np.cos(x)
    cpx = np.cos(pa - x)
    uv = u * v
    gnum = (
        (1.0 + u * u) * (1.0 + v * v)
        + 4.0 * uv * np.sin(pa - x) ** 2
        + 4.0 * uv * uv * cx**2
        - 2.0 * (u - v) * (1.0 + uv) * cpx
        - 4.0 * uv * (1.0 + uv) * cx
        + 4.0 * (u - v) * uv * cpx * cx
    )
    # completed squares: 1 + u^2 - 2u cos = (u - cos)^2 + sin^2
    du = (u - ca) ** 2 + sa**2
    dv = (v + ca) ** 2 + sa**2
    return base * gnum / (du * dv)


def dcs_uv_equal_alpha_half(k, u, g: ScatteringGeometry, exclusion=DEFAULT_EXCLUSION):
    """Slice ``w = 0``, ``u = v``, ``alpha = 1/2``."""
    half, _ = g.half_angles(exclusion)
    num = 1.0 + u**2 * (1.0 - 2.0 * np.cos(2.0 * half)) ** 2
    return num / (2.0 * np.pi * k * (1.0 + u**2) * np.sin(half) ** 2)
