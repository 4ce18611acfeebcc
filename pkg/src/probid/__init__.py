"""Exact, series and Monte Carlo verification of binomial and orthogonal-polynomial identities."""

__version__ = "0.1.0"

from .exact_core import (  # noqa: E402
    BigRational,
    CompositionMismatch,
    binomial,
    central_binomial,
    factorial,
    multinomial,
    pochhammer,
)
from .quadext import DiscriminantMismatch, IrrationalResidue, QuadExtScalar  # noqa: E402
from .verdict import Verdict  # noqa: E402

__all__ = [
    "BigRational",
    "CompositionMismatch",
    "DiscriminantMismatch",
    "IrrationalResidue",
    "QuadExtScalar",
    "Verdict",
    "binomial",
    "central_binomial",
    "factorial",
    "multinomial",
    "pochhammer",
]
