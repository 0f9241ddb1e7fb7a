"""Algebraic semigroup structures on smooth projective surfaces, in exact arithmetic."""

from .classifier import (
    Abelian,
    Bielliptic,
    Blowup,
    ClassificationReport,
    EllipticFibration,
    Enriques,
    GeneralType,
    K3,
    ModuliDescription,
    ModuliKind,
    ProductCurves,
    Ruled,
    Verdict,
    blowup_transfer,
    classify,
    explain,
    moduli_of_sections,
)
from .errors import SurfaceError

__all__ = [
    "Abelian", "Bielliptic", "Blowup", "ClassificationReport", "EllipticFibration", "Enriques",
    "GeneralType", "K3", "ModuliDescription", "ModuliKind", "ProductCurves", "Ruled", "SurfaceError",
    "Verdict", "blowup_transfer", "classify", "explain", "moduli_of_sections",
]
