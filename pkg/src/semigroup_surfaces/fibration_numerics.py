"""Numerical invariants of elliptic fibrations ``phi: S -> B``.

Everything is exact: rationals where the formulas divide, integers
elsewhere.  Integrality failures are reported as flags rather than raised,
since they usually point at inconsistent input the caller wants to explain.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BadFiberChiError, InvalidFibrationError


class FiberShape(enum.Enum):
    SMOOTH_ELLIPTIC = "smooth_elliptic"
    RATIONAL_NODE = "rational_node"
    RATIONAL_CUSP = "rational_cusp"
    TREE_OF_MINUS2_RATIONALS = "tree_of_minus2_rationals"
    MULTIPLE = "multiple"


_MULTIPLE_INNER = (FiberShape.SMOOTH_ELLIPTIC, FiberShape.RATIONAL_NODE, FiberShape.TREE_OF_MINUS2_RATIONALS)


@dataclass(frozen=True)
class KodairaFiberTag:
    """A fibre shape; ``MULTIPLE`` carries its multiplicity and the shape of the reduced fibre."""

    shape: FiberShape
    m: int | None = None
    inner: FiberShape | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "shape", FiberShape(self.shape))
        if self.shape is FiberShape.MULTIPLE:
            if self.m is None or self.m < 2:
                raise InvalidFibrationError(f"multiple fibre needs m >= 2, got {self.m}")
            inner = FiberShape(self.inner) if self.inner is not None else FiberShape.SMOOTH_ELLIPTIC
            if inner not in _MULTIPLE_INNER:
                raise InvalidFibrationError(f"a multiple fibre cannot have reduced shape {inner.value}")
            object.__setattr__(self, "inner", inner)
        elif self.m is not None or self.inner is not None:
            raise InvalidFibrationError(f"{self.shape.value} fibre takes no multiplicity")

    @classmethod
    def multiple(cls, m: int, inner: FiberShape = FiberShape.SMOOTH_ELLIPTIC) -> KodairaFiberTag:
        return cls(FiberShape.MULTIPLE, m, inner)

    @property
    def is_multiple_of_smooth(self) -> bool:
        return self.shape is FiberShape.MULTIPLE and self.inner is FiberShape.SMOOTH_ELLIPTIC


@dataclass(frozen=True)
class FibrationData:
    g_B: int
    chi_OS: int
    fibers: tuple[KodairaFiberTag, ...] = field(default_factory=tuple)
    K_squared: int = 0
    minimal: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "fibers", tuple(self.fibers))
        if self.g_B < 0:
            raise InvalidFibrationError(f"base genus must be nonnegative, got {self.g_B}")
        if self.minimal and self.K_squared != 0:
            raise InvalidFibrationError("a minimal elliptic fibration has K^2 = 0")

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(t.m for t in self.fibers if t.shape is FiberShape.MULTIPLE)

    @classmethod
    def with_multiplicities(cls, g_B: int, chi_OS: int, ms: Iterable[int]) -> FibrationData:
        return cls(g_B, chi_OS, tuple(KodairaFiberTag.multiple(m) for m in ms))


def _orbifold_excess(ms: Iterable[int]) -> Fraction:
    return sum((1 - Fraction(1, m) for m in ms), Fraction(0))


def delta_invariant(f: FibrationData) -> Fraction:
    """``chi(O_S) + 2 g(B) - 2 + sum(1 - 1/m_i)``."""
    return f.chi_OS + 2 * f.g_B - 2 + _orbifold_excess(f.multiplicities)


def kodaira_dim_is_one(f: FibrationData) -> bool:
    return delta_invariant(f) > 0


def noether_chi(k_squared: int, chi_top: int) -> tuple[Fraction, bool]:
    """``(K^2 + chi_top) / 12`` and whether it is an integer."""
    chi = Fraction(k_squared + chi_top, 12)
    return chi, chi.denominator == 1


def chi_top_total(g_B: int, chi_top_general_fiber: int,
                  fibers: Sequence[tuple[KodairaFiberTag, int]]) -> int:
    """Euler number of ``S`` from the base, the general fibre and the singular fibres.

    Euler numbers of singular fibres are supplied by the caller; a multiple
    of a smooth elliptic curve must be given 0.
    """
    total = (2 - 2 * g_B) * chi_top_general_fiber
    for tag, chi in fibers:
        if tag.is_multiple_of_smooth and chi != 0:
            raise BadFiberChiError(f"a multiple of a smooth elliptic fibre has Euler number 0, got {chi}")
        total += chi - chi_top_general_fiber
    return total


class HurwitzVerdict(enum.Enum):
    CONSISTENT = "consistent"
    CONTRADICTION = "contradiction"


def hurwitz_multiplicity_bound(ms: Sequence[int]) -> tuple[Fraction, HurwitzVerdict]:
    """``sum(1 - 1/m_i) - 2``, which a section through every multiple fibre forces to be ``<= 0``."""
    if any(m < 2 for m in ms):
        raise InvalidFibrationError("multiplicities must be at least 2")
    value = _orbifold_excess(ms) - 2
    return value, HurwitzVerdict.CONSISTENT if value <= 0 else HurwitzVerdict.CONTRADICTION


class SectionCase(enum.Enum):
    SECTION_OF_PI = "section_of_pi"
    K3_SECTION = "k3_section"


def section_normal_degree(f: FibrationData | None, g_C: int, case: SectionCase) -> int:
    """Degree of the normal bundle of a section curve.

    For a section of the fibration, adjunction with ``K_S = phi^*(...)``
    gives ``-chi(O_S)``; a smooth rational curve on a K3 has degree ``-2``.
    """
    case = SectionCase(case)
    if case is SectionCase.K3_SECTION:
        return -2
    if f is None:
        raise InvalidFibrationError("SECTION_OF_PI needs fibration data")
    return -f.chi_OS


class EnriquesVerdict(enum.Enum):
    NO_SECTION = "no_section"
    INVALID = "invalid"


def enriques_obstruction(section_assumed: bool = True, multiplicities: Sequence[int] = (2, 2)) -> EnriquesVerdict:
    """An elliptic fibration on an Enriques surface has no section.

    Its fibration has exactly two double fibres ``2F`` and ``2F'``; a section
    would meet the fibre class ``2F`` once, but ``sigma.2F`` is even.  Other
    multiplicity data cannot come from an Enriques surface.
    """
    if sorted(multiplicities) != [2, 2]:
        return EnriquesVerdict.INVALID
    # sigma . F0 = 1 while sigma . 2F = 2 (sigma . F) is even
    return EnriquesVerdict.NO_SECTION
