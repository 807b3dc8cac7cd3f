"""Scattering matrix and the general differential cross section.

Two independent routes to ``|S|^2`` live here: the explicit continuous
part of the scattering matrix (:func:`s_continuous`) and the condensed
cross-section formula (:func:`dcs_general`). Tests use each as the oracle
for the other.

All evaluators accept scalar or array angles and broadcast with numpy.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ForwardSingularityError
from .params import EffectiveParams

__all__ = [
    "DEFAULT_EXCLUSION",
    "ScatteringGeometry",
    "SigmaMatrix",
    "reduce_angle",
    "reduce_difference",
    "det_n",
    "sigma_matrix",
    "s_continuous",
    "dcs_general",
    "dcs_from_smatrix",
    "normalized_dcs",
]

TWO_PI = 2.0 * np.pi

#: Radius (rad) around theta = theta0 inside which evaluation is refused.
DEFAULT_EXCLUSION = 1e-9


def reduce_angle(x):
    """Reduce angles into ``[0, 2*pi)``."""
    r = np.mod(x, TWO_PI)
    # np.mod can round up to exactly 2*pi for tiny negative inputs
    return np.where(r >= TWO_PI, 0.0, r)


def reduce_difference(x):
    """Reduce angle differences into ``(-pi, pi]``."""
    r = np.pi - np.mod(np.pi - np.asarray(x, dtype=float), TWO_PI)
    return np.where(r <= -np.pi, r + TWO_PI, r)


@dataclass(frozen=True)
class ScatteringGeometry:
    """Outgoing direction ``theta`` and incident direction ``theta0`` (radians).

    Both are stored reduced into ``[0, 2*pi)``; either may be an array.
    """

    theta: object
    theta0: object = 0.0

    def __post_init__(self):
        object.__setattr__(self, "theta", reduce_angle(np.asarray(self.theta, dtype=float)))
        object.__setattr__(self, "theta0", reduce_angle(np.asarray(self.theta0, dtype=float)))

    @classmethod
    def from_plot_angle(cls, big_theta, theta0=0.0):
        """Build from the plotting angle ``Theta = theta - theta0 + pi``."""
        return cls(np.asarray(big_theta, dtype=float) + theta0 - np.pi, theta0)

    @property
    def delta(self):
        """``theta - theta0`` reduced into ``(-pi, pi]``."""
        return reduce_difference(self.theta - self.theta0)

    def half_angles(self, exclusion=DEFAULT_EXCLUSION):
        """Return ``(delta/2, theta0 + delta/2)`` after the forward-direction check.

        The second value stands in for ``(theta + theta0)/2`` on the same
        branch as ``delta/2``, so sign flips of the half-angle factors stay
        consistent with each other.
        """
        d = self.delta
        if np.any(np.abs(d) < exclusion):
            raise ForwardSingularityError(
                f"forward direction |theta - theta0| < {exclusion:g} is singular"
            )
        half = 0.5 * d
        return half, self.theta0 + half


@dataclass(frozen=True)
class SigmaMatrix:
    s11: complex
    s12: complex
    s21: complex
    s22: complex
    det_n: complex

    def as_array(self):
        return np.array([[self.s11, self.s12], [self.s21, self.s22]])


def det_n(ep: EffectiveParams) -> complex:
    """``uv - |w|^2 + e^{i pi alpha} u - e^{-i pi alpha} v - 1``; never zero for admissible input."""
    ea = np.exp(1j * np.pi * ep.alpha)
    return ep.u * ep.v - abs(ep.w) ** 2 + ea * ep.u - ea.conjugate() * ep.v - 1.0


def sigma_matrix(ep: EffectiveParams) -> SigmaMatrix:
    ea = complex(np.exp(1j * np.pi * ep.alpha))
    q = ep.u * ep.v - abs(ep.w) ** 2
    d = complex(det_n(ep))
    off = -2j * np.sin(np.pi * ep.alpha) / d
    return SigmaMatrix(
        s11=(ea.conjugate() * q + ep.u - ep.v - ea) / d,
        s12=off * ep.w.conjugate(),
        s21=off * ep.w,
        s22=(ea * q + ep.u - ep.v - ea.conjugate()) / d,
        det_n=d,
    )


def s_continuous(ep: EffectiveParams, g: ScatteringGeometry, exclusion=DEFAULT_EXCLUSION):
    """Continuous part of the scattering matrix ``S(k; theta, theta0)``.

    The ``cos(pi alpha) delta(theta - theta0)`` term is not included; the
    forward direction itself raises :class:`ForwardSingularityError`.
    """
    half, _ = g.half_angles(exclusion)
    sig = sigma_matrix(ep)
    ea = np.exp(1j * np.pi * ep.alpha)
    sa = np.sin(np.pi * ep.alpha)
    singular = sa * np.exp(-1j * half) / np.sin(half)
    regular = (
        (sig.s11 - ea) * np.exp(-2j * half)
        + sig.s12 * np.exp(-1j * g.theta)
        + sig.s21 * np.exp(1j * g.theta0)
        + sig.s22
        - ea.conjugate()
    )
    return (singular + regular) / TWO_PI


def dcs_general(ep: EffectiveParams, g: ScatteringGeometry, exclusion=DEFAULT_EXCLUSION):
    """Differential cross section ``d sigma / d theta`` for arbitrary ``(u, v, w)``."""
    half, half_sum = g.half_angles(exclusion)
    u, v, w = ep.u, ep.v, ep.w
    pa = np.pi * ep.alpha
    sh = np.sin(half)
    bracket = (
        2.0 * sh * (u * v - abs(w) ** 2)
        + 1j * np.exp(1j * (pa - half)) * u
        + 1j * np.exp(-1j * (pa - half)) * v
        + 2j * np.real(np.exp(1j * half_sum) * w)
    )
    amp = 0.5 / sh - bracket / det_n(ep)
    return 2.0 * np.sin(pa) ** 2 / (np.pi * ep.k) * np.abs(amp) ** 2


def dcs_from_smatrix(ep: EffectiveParams, g: ScatteringGeometry, exclusion=DEFAULT_EXCLUSION):
    """``(2 pi / k) |S|^2`` from the scattering matrix; the oracle for :func:`dcs_general`."""
    return TWO_PI / ep.k * np.abs(s_continuous(ep, g, exclusion)) ** 2


def normalized_dcs(ep: EffectiveParams, g: ScatteringGeometry, exclusion=DEFAULT_EXCLUSION):
    """Dimensionless ``k * d sigma / d theta = 2 pi |S|^2``."""
    return ep.k * dcs_general(ep, g, exclusion)
