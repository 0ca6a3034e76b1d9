"""iqrep: exact polynomial representations of quasi-split affine iquantum
groups on partially invariant Laurent-polynomial rings, with mechanical
verification of the defining loop-generator relations and of the agreement
between the convolution pushforward and the combinatorial shift operators."""

from . import combinat, exactring, kconv, polyrep, relcheck
from .combinat import C_ODD, D_EVEN, Variant

__version__ = "0.1.0"

__all__ = [
    "C_ODD",
    "D_EVEN",
    "Variant",
    "combinat",
    "exactring",
    "kconv",
    "polyrep",
    "relcheck",
]
