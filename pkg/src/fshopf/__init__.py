"""Exact Frobenius-Schur indicators for split semisimple Hopf algebras over Q and Q(i)."""

from .algebra import StructureAlgebra
from .constructions import FiniteGroup, group_algebra, presets
from .field import GaussianRational, Polynomial, parse_scalar
from .hopf import HopfData
from .indicators import indicator_report
from .wedderburn import BlockDecomposition, decompose

__all__ = [
    "BlockDecomposition",
    "FiniteGroup",
    "GaussianRational",
    "HopfData",
    "Polynomial",
    "StructureAlgebra",
    "decompose",
    "group_algebra",
    "indicator_report",
    "parse_scalar",
    "presets",
]
