"""Intersection theory on a ruled surface ``S = P(E) -> C``.

``Num(S)`` is free on the class ``C0`` of the normalised section and the
fibre class ``f``, with ``C0^2 = -e``, ``C0.f = 1`` and ``f^2 = 0``.
All arithmetic is integral (genus computations return ``Fraction``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidDError, NagataBoundError, NonUniqueError, NoSolutionError


@dataclass(frozen=True)
class RuledSurfaceData:
    """Base genus ``g`` and invariant ``e``; Nagata's bound ``e >= -g`` is enforced here."""

    g: int
    e: int

    def __post_init__(self) -> None:
        if self.g < 0:
            raise NagataBoundError(f"base genus must be nonnegative, got {self.g}")
        if self.e < -self.g:
            raise NagataBoundError(f"invariant e={self.e} violates e >= -g = {-self.g}")


@dataclass(frozen=True, order=True)
class NumClass:
    """The numerical class ``a*C0 + b*f``."""

    a: int
    b: int

    def __add__(self, other: NumClass) -> NumClass:
        return NumClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: NumClass) -> NumClass:
        return NumClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> NumClass:
        return NumClass(-self.a, -self.b)

    def __rmul__(self, k: int) -> NumClass:
        return NumClass(k * self.a, k * self.b)

    def __str__(self) -> str:
        return f"{self.a}C0{self.b:+d}f"


C0 = NumClass(1, 0)
FIBRE = NumClass(0, 1)


def intersect(d1: NumClass, d2: NumClass, s: RuledSurfaceData) -> int:
    return d1.a * d2.b + d2.a * d1.b - s.e * d1.a * d2.a


def canonical_class(s: RuledSurfaceData) -> NumClass:
    return NumClass(-2, 2 * s.g - 2 - s.e)


def is_ample(d: NumClass, s: RuledSurfaceData) -> bool:
    if s.e >= 0:
        return d.a > 0 and d.b > d.a * s.e
    return d.a > 0 and 2 * d.b > d.a * s.e


def is_nef(d: NumClass, s: RuledSurfaceData) -> bool:
    if s.e >= 0:
        return d.a >= 0 and d.b >= d.a * s.e
    return d.a >= 0 and 2 * d.b >= d.a * s.e


def admissible_curve_class(d: NumClass, s: RuledSurfaceData) -> bool:
    """Whether ``d`` passes the numerical test for an irreducible curve class.

    ``C0`` and ``f`` are always admissible.  Otherwise, for ``e >= 0`` the
    class needs ``a > 0, b >= a*e``; for ``e < 0`` either ``a = 1, b > 0``
    or ``a >= 2, 2b >= a*e``.
    """
    if d in (C0, FIBRE):
        return True
    if s.e >= 0:
        return d.a > 0 and d.b >= d.a * s.e
    return (d.a == 1 and d.b > 0) or (d.a >= 2 and 2 * d.b >= d.a * s.e)


def search_bound(s: RuledSurfaceData) -> int:
    return 2 * max(1, abs(s.e)) + 2


def solve_second_fibration_class(s: RuledSurfaceData, section_class: NumClass = FIBRE) -> NumClass:
    """The class ``f0`` spanning the second extremal ray of the curve cone.

    Enumerates admissible classes ``a*C0 + b*f`` with ``0 < a <= bound`` that
    are not multiples of ``f`` and have ``d.d <= 0``, then keeps the
    primitive one (smallest ``a``).  For ``e < 0`` this is the isotropic
    class ``2*C0 + e*f``; for ``e >= 0`` it is ``C0``.  The section class is
    required to meet ``f0`` positively.
    """
    bound = search_bound(s)
    candidates = []
    for a in range(1, bound + 1):
        # d.d = a*(2b - a*e) <= 0  <=>  2b <= a*e; admissibility bounds b below
        lo = min(0, a * s.e) - 1
        for b in range(lo, a * abs(s.e) + 2):
            d = NumClass(a, b)
            if admissible_curve_class(d, s) and intersect(d, d, s) <= 0:
                candidates.append(d)
    if not candidates:
        raise NoSolutionError(f"no admissible class with non-positive square on {s}")
    a_min = min(d.a for d in candidates)
    primitive = [d for d in candidates if d.a == a_min]
    if len(primitive) != 1:
        raise NonUniqueError(f"several candidate classes {primitive} on {s}")
    f0 = primitive[0]
    # every other candidate must lie on the same ray
    for d in candidates:
        if d.a * f0.b != d.b * f0.a:
            raise NonUniqueError(f"candidates {f0} and {d} span different rays on {s}")
    if intersect(f0, section_class, s) <= 0:
        raise NoSolutionError(f"section class {section_class} does not meet {f0} positively")
    return f0


def genus_of_class(d: NumClass, s: RuledSurfaceData) -> Fraction:
    """Arithmetic genus ``1 + (d.d + d.K)/2``; a non-integral value flags a class no curve can have."""
    k = canonical_class(s)
    return 1 + Fraction(intersect(d, d, s) + intersect(d, k, s), 2)


def h0_p1(k: int) -> int:
    """``dim H^0(P^1, O(k))``."""
    return max(0, k + 1)


def ext1_dim(d1: int, d2: int) -> int:
    """``dim Ext^1(O(-d2), O(d1)) = h^0(O(-2 - d1 - d2))`` on ``P^1``."""
    return h0_p1(-2 - d1 - d2)


class SectionCase(enum.Enum):
    KERNEL_POSITIVE = "d2>0: L = O, N = O(-d)"
    KERNEL_TRIVIAL = "d2=0: N = O, L = O(-d)"


@dataclass(frozen=True)
class HirzebruchVerdict:
    d: int
    verdict: str
    cases: tuple[SectionCase, ...]


def hirzebruch_section_finiteness(d: int) -> HirzebruchVerdict:
    """Sections of ``P(O + O(-d)) -> P^1`` are finite modulo automorphisms.

    A section is a quotient ``O + O(-d) -> L`` with kernel ``N = O(-d2)``.
    When ``d2 > 0`` the extension splits (its Ext group vanishes), forcing
    ``L = O``; when ``d2 = 0`` the quotient is ``O(-d)`` up to a scalar.
    """
    if d < 0 or d == 1:
        raise InvalidDError(f"d must be a nonnegative integer other than 1, got {d}")
    # the splitting step: Ext^1(O(-d2), O(d1)) = 0 for d1 >= 0, d2 > 0
    assert ext1_dim(0, 1) == 0
    return HirzebruchVerdict(d, "FINITE_MOD_AUT", (SectionCase.KERNEL_POSITIVE, SectionCase.KERNEL_TRIVIAL))
