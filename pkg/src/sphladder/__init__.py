"""Exact spherical harmonics and their su(2), l-ladder and u(1,1) operators."""

__version__ = "0.1.0"

from .scalar import Scalar, scalar_sqrt  # noqa: E402
from .sphere import LadderOperator, SphereFunction, ThetaForm  # noqa: E402
from .harmonics import HarmonicIndex, closed_form  # noqa: E402
from .inner import inner_exact  # noqa: E402

__all__ = [
    "Scalar",
    "scalar_sqrt",
    "ThetaForm",
    "SphereFunction",
    "LadderOperator",
    "HarmonicIndex",
    "closed_form",
    "inner_exact",
]
