"""Aharonov-Bohm scattering with non-regular boundary conditions at the flux line."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    DomainError,
    ForwardSingularityError,
    IntegerFluxError,
    ParameterError,
    QuadratureError,
)
from .params import (  # noqa: E402
    BoundaryCondition,
    EffectiveParams,
    FluxAlpha,
    PhysicalInput,
    gamma_fn,
    reduce_flux,
    rescale,
    wavenumber,
)
from .smatrix import (  # noqa: E402
    ScatteringGeometry,
    SigmaMatrix,
    dcs_from_smatrix,
    dcs_general,
    normalized_dcs,
    s_continuous,
    sigma_matrix,
)

__all__ = [
    "__version__",
    "DomainError",
    "ForwardSingularityError",
    "IntegerFluxError",
    "ParameterError",
    "QuadratureError",
    "BoundaryCondition",
    "EffectiveParams",
    "FluxAlpha",
    "PhysicalInput",
    "gamma_fn",
    "reduce_flux",
    "rescale",
    "wavenumber",
    "ScatteringGeometry",
    "SigmaMatrix",
    "dcs_from_smatrix",
    "dcs_general",
    "normalized_dcs",
    "s_continuous",
    "sigma_matrix",
]
