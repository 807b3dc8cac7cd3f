"""Physical inputs, flux reduction and the dimensionless boundary parameters.

Everything downstream works with :class:`EffectiveParams` only; the
physical quantities here are a front door for callers that start from a
mass, an energy and a flux.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, IntegerFluxError, ParameterError

__all__ = [
    "PhysicalInput",
    "FluxAlpha",
    "BoundaryCondition",
    "EffectiveParams",
    "reduce_flux",
    "wavenumber",
    "gamma_fn",
    "rescale",
]

# Lanczos approximation, g = 7, n = 9.
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)

GAMMA_DOMAIN = (0.0, 2.5)


def _require_finite(name, value):
    if not math.isfinite(value):
        raise ParameterError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class PhysicalInput:
    """Particle and solenoid data in a caller-chosen unit system."""

    m: float
    e: float
    E: float
    phi: float
    hbar: float = 1.0
    c: float = 1.0

    def __post_init__(self):
        for name in ("m", "e", "E", "phi", "hbar", "c"):
            _require_finite(name, getattr(self, name))
        for name in ("m", "E", "hbar", "c"):
            if getattr(self, name) <= 0:
                raise ParameterError(f"{name} must be positive, got {getattr(self, name)!r}")


class FluxAlpha(float):
    """Reduced flux, a float restricted to the open interval (0, 1)."""

    def __new__(cls, value):
        value = float(value)
        if not 0.0 < value < 1.0:
            raise ParameterError(f"alpha must lie in (0, 1), got {value!r}")
        return super().__new__(cls, value)

    def __repr__(self):
        return f"FluxAlpha({float(self)!r})"


@dataclass(frozen=True)
class BoundaryCondition:
    """Primed boundary parameters: real ``u_prime``, ``v_prime`` and complex ``w_prime``."""

    u_prime: float = 0.0
    v_prime: float = 0.0
    w_prime: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "u_prime", float(self.u_prime))
        object.__setattr__(self, "v_prime", float(self.v_prime))
        object.__setattr__(self, "w_prime", complex(self.w_prime))
        _require_finite("u_prime", self.u_prime)
        _require_finite("v_prime", self.v_prime)
        _require_finite("w_prime", abs(self.w_prime))


@dataclass(frozen=True)
class EffectiveParams:
    """Momentum-dependent dimensionless parameters ``(u, v, w)`` with ``alpha`` and ``k``.

    The pure Aharonov-Bohm case is ``u = v = w = 0``.
    """

    u: float
    v: float
    w: complex
    alpha: FluxAlpha
    k: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "u", float(self.u))
        object.__setattr__(self, "v", float(self.v))
        object.__setattr__(self, "w", complex(self.w))
        object.__setattr__(self, "k", float(self.k))
        if not isinstance(self.alpha, FluxAlpha):
            object.__setattr__(self, "alpha", FluxAlpha(self.alpha))
        _require_finite("u", self.u)
        _require_finite("v", self.v)
        _require_finite("w", abs(self.w))
        _require_finite("k", self.k)
        if self.k <= 0:
            raise ParameterError(f"k must be positive, got {self.k!r}")


def reduce_flux(p: PhysicalInput) -> FluxAlpha:
    """Return the flux ``-e*phi / (2*pi*hbar*c)`` reduced modulo one.

    Fluxes differing by a whole flux quantum are indistinguishable, so only
    the fractional part is kept. An integer number of quanta gives zero,
    which the model excludes; that case raises :class:`IntegerFluxError`.
    """
    if p.e == 0:
        raise ParameterError("charge e must be nonzero")
    raw = -p.e * p.phi / (2.0 * math.pi * p.hbar * p.c)
    frac = raw - math.floor(raw)
    if frac == 0.0 or frac == 1.0:
        raise IntegerFluxError(f"flux is an integer number of quanta ({raw!r})")
    return FluxAlpha(frac)


def wavenumber(p: PhysicalInput) -> float:
    """Return ``k = sqrt(2 m E) / hbar``."""
    if p.m <= 0 or p.E <= 0:
        raise ParameterError("mass and energy must be positive")
    return math.sqrt(2.0 * p.m * p.E) / p.hbar


def _lanczos(x):
    # valid for x >= 0.5
    z = x - 1.0
    acc = _LANCZOS_COEFFS[0]
    for i, c in enumerate(_LANCZOS_COEFFS[1:], start=1):
        acc += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _SQRT_TWO_PI * t ** (z + 0.5) * math.exp(-t) * acc


def gamma_fn(x: float) -> float:
    """Gamma function on ``(0, 2.5)``.

    Lanczos approximation above 1/2, reflection formula below. Relative
    error is below 1e-13 on the whole domain.
    """
    x = float(x)
    lo, hi = GAMMA_DOMAIN
    if not lo < x < hi:
        raise DomainError(f"gamma_fn supports arguments in {GAMMA_DOMAIN}, got {x!r}")
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * _lanczos(1.0 - x))
    return _lanczos(x)


def rescale(bc: BoundaryCondition, alpha, k: float) -> EffectiveParams:
    """Map primed boundary parameters to the dimensionless ``(u, v, w)`` at momentum ``k``."""
    alpha = FluxAlpha(alpha)
    k = float(k)
    if not (k > 0 and math.isfinite(k)):
        raise ParameterError(f"k must be positive and finite, got {k!r}")
    a = float(alpha)
    half_k = 0.5 * k
    u = gamma_fn(a) / gamma_fn(2.0 - a) * half_k ** (2.0 - 2.0 * a) * bc.u_prime
    v = gamma_fn(1.0 - a) / gamma_fn(1.0 + a) * half_k ** (2.0 * a) * bc.v_prime
    w = half_k * bc.w_prime
    return EffectiveParams(u=u, v=v, w=w, alpha=alpha, k=k)
