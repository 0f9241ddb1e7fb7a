"""Exact arithmetic on complex tori C/(Z + Z*tau).

Points are stored in lattice coordinates ``(p, q)`` meaning ``p + q*tau``
reduced into ``[0, 1)^2``; nothing here touches floating point.  Three
lattices are supported:

* ``GAUSSIAN``   -- tau = i,   tau^2 = -1
* ``EISENSTEIN`` -- tau = rho, tau^2 = -tau - 1 (primitive cube root of 1)
* ``GENERIC``    -- tau has no relation; only integer scalars act
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Union

from .errors import NonLatticeLinearError
from .intlinalg import Matrix, det2, solve_congruence_mod_lattice

Rational = Union[int, Fraction]


class FieldTag(enum.Enum):
    GAUSSIAN = "gaussian"
    EISENSTEIN = "eisenstein"
    GENERIC = "generic"


@dataclass(frozen=True)
class CMScalar:
    """The number ``re + im_coeff * tau`` in the CM field of ``field_tag``."""

    re: Fraction
    im_coeff: Fraction = Fraction(0)
    field_tag: FieldTag = FieldTag.GENERIC

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im_coeff", Fraction(self.im_coeff))
        if self.field_tag is FieldTag.GENERIC and self.im_coeff != 0:
            raise ValueError("GENERIC scalars have no tau component")

    @classmethod
    def tau(cls, field_tag: FieldTag) -> CMScalar:
        return cls(Fraction(0), Fraction(1), field_tag)

    def _coerce(self, other: CMScalar | Rational) -> CMScalar:
        if isinstance(other, CMScalar):
            if other.field_tag is not self.field_tag:
                raise ValueError(f"field mismatch: {self.field_tag} vs {other.field_tag}")
            return other
        return CMScalar(Fraction(other), Fraction(0), self.field_tag)

    def __add__(self, other: CMScalar | Rational) -> CMScalar:
        o = self._coerce(other)
        return CMScalar(self.re + o.re, self.im_coeff + o.im_coeff, self.field_tag)

    __radd__ = __add__

    def __neg__(self) -> CMScalar:
        return CMScalar(-self.re, -self.im_coeff, self.field_tag)

    def __sub__(self, other: CMScalar | Rational) -> CMScalar:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Rational) -> CMScalar:
        return self._coerce(other) - self

    def __mul__(self, other: CMScalar | Rational) -> CMScalar:
        o = self._coerce(other)
        a, b, c, d = self.re, self.im_coeff, o.re, o.im_coeff
        # (a + b t)(c + d t) = ac + (ad + bc) t + bd t^2
        bd = b * d
        if self.field_tag is FieldTag.GAUSSIAN:
            return CMScalar(a * c - bd, a * d + b * c, self.field_tag)
        if self.field_tag is FieldTag.EISENSTEIN:
            return CMScalar(a * c - bd, a * d + b * c - bd, self.field_tag)
        return CMScalar(a * c, Fraction(0), self.field_tag)

    __rmul__ = __mul__

    def conj(self) -> CMScalar:
        if self.field_tag is FieldTag.EISENSTEIN:
            # conj(rho) = rho^2 = -1 - rho
            return CMScalar(self.re - self.im_coeff, -self.im_coeff, self.field_tag)
        return CMScalar(self.re, -self.im_coeff, self.field_tag)

    def norm(self) -> Fraction:
        n = self * self.conj()
        assert n.im_coeff == 0
        return n.re

    def is_one(self) -> bool:
        return self.re == 1 and self.im_coeff == 0

    def matrix(self) -> list[list[Fraction]]:
        """Multiplication by ``self`` on coordinates ``(p, q)``, as columns ``self*1, self*tau``."""
        one = self
        tau = self * CMScalar.tau(self.field_tag) if self.field_tag is not FieldTag.GENERIC else None
        if tau is None:
            return [[self.re, Fraction(0)], [Fraction(0), self.re]]
        return [[one.re, tau.re], [one.im_coeff, tau.im_coeff]]

    def integer_matrix(self) -> Matrix:
        m = self.matrix()
        if any(x.denominator != 1 for row in m for x in row):
            raise NonLatticeLinearError(f"{self} does not preserve the lattice")
        return [[int(x) for x in row] for row in m]

    def preserves_lattice(self) -> bool:
        return all(x.denominator == 1 for row in self.matrix() for x in row)

    def __str__(self) -> str:
        sym = {FieldTag.GAUSSIAN: "i", FieldTag.EISENSTEIN: "rho", FieldTag.GENERIC: "tau"}[self.field_tag]
        if self.im_coeff == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im_coeff}*{sym}"
        return f"{self.re}{'+' if self.im_coeff > 0 else '-'}{abs(self.im_coeff)}*{sym}"


def scalar(re: Rational, im_coeff: Rational = 0, field: FieldTag = FieldTag.GENERIC) -> CMScalar:
    return CMScalar(Fraction(re), Fraction(im_coeff), field)


@dataclass(frozen=True, order=True)
class TorusPoint:
    """The class of ``p + q*tau`` modulo the lattice; always canonical."""

    p: Fraction = Fraction(0)
    q: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", Fraction(self.p) % 1)
        object.__setattr__(self, "q", Fraction(self.q) % 1)

    def order(self) -> int:
        """Order in the group C/Lambda (its denominators' lcm)."""
        from math import lcm
        return lcm(self.p.denominator, self.q.denominator)

    def __neg__(self) -> TorusPoint:
        return TorusPoint(-self.p, -self.q)

    def __add__(self, other: TorusPoint) -> TorusPoint:
        return TorusPoint(self.p + other.p, self.q + other.q)

    def __sub__(self, other: TorusPoint) -> TorusPoint:
        return TorusPoint(self.p - other.p, self.q - other.q)

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


ORIGIN = TorusPoint()


def point(p: Rational | str, q: Rational | str = 0) -> TorusPoint:
    return TorusPoint(Fraction(p), Fraction(q))


def add_points(a: TorusPoint, b: TorusPoint, field: FieldTag = FieldTag.GENERIC) -> TorusPoint:
    # The group law does not depend on tau; ``field`` is accepted for symmetry
    # with the other operations.
    return TorusPoint(a.p + b.p, a.q + b.q)


class _All:
    """Sentinel for the fixed-point set of the identity map."""

    _instance: _All | None = None

    def __new__(cls) -> _All:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ALL"

    def __reduce__(self) -> str:
        return "ALL"


ALL = _All()
AllType = _All


@dataclass(frozen=True)
class AffineTorusMap:
    """``x -> linear*x + shift`` on the torus of ``linear.field_tag``."""

    linear: CMScalar
    shift: TorusPoint = ORIGIN

    def __post_init__(self) -> None:
        if not self.linear.preserves_lattice():
            raise NonLatticeLinearError(f"linear part {self.linear} does not preserve the lattice")

    @property
    def field(self) -> FieldTag:
        return self.linear.field_tag

    @classmethod
    def translation(cls, shift: TorusPoint, field: FieldTag = FieldTag.GENERIC) -> AffineTorusMap:
        return cls(CMScalar(Fraction(1), Fraction(0), field), shift)

    @classmethod
    def identity(cls, field: FieldTag = FieldTag.GENERIC) -> AffineTorusMap:
        return cls.translation(ORIGIN, field)

    def is_identity(self) -> bool:
        return self.linear.is_one() and self.shift == ORIGIN

    def is_translation(self) -> bool:
        return self.linear.is_one()

    def compose(self, other: AffineTorusMap) -> AffineTorusMap:
        """``self o other``."""
        if other.field is not self.field:
            raise ValueError("cannot compose maps on different tori")
        return AffineTorusMap(self.linear * other.linear, apply_map(self, other.shift))

    def __call__(self, x: TorusPoint) -> TorusPoint:
        return apply_map(self, x)

    def __str__(self) -> str:
        return f"x -> {self.linear}*x + {self.shift}"


def _linear_action(m: Matrix, x: TorusPoint) -> TorusPoint:
    return TorusPoint(m[0][0] * x.p + m[0][1] * x.q, m[1][0] * x.p + m[1][1] * x.q)


def apply_map(m: AffineTorusMap, x: TorusPoint) -> TorusPoint:
    lin = _linear_action(m.linear.integer_matrix(), x)
    return lin + m.shift


def fixed_points(m: AffineTorusMap) -> frozenset[TorusPoint] | _All:
    """Fixed points of ``m`` as an exact finite set, or ``ALL`` for the identity.

    For a non-trivial linear part the count is ``|det(M - I)|`` where ``M``
    is the integer matrix of the linear part.
    """
    if m.linear.is_one():
        return ALL if m.shift == ORIGIN else frozenset()
    mat = m.linear.integer_matrix()
    a = [[mat[0][0] - 1, mat[0][1]], [mat[1][0], mat[1][1] - 1]]
    # (M - I) x = -shift  (mod Z^2)
    sols = solve_congruence_mod_lattice(a, (-m.shift.p, -m.shift.q))
    result = frozenset(TorusPoint(p, q) for p, q in sols)
    assert len(result) == abs(det2(a))
    return result


def fixed_point_count(m: AffineTorusMap) -> int | None:
    """``|det(M - I)|`` for non-translations; ``None`` for translations."""
    if m.linear.is_one():
        return None
    mat = m.linear.integer_matrix()
    return abs(det2([[mat[0][0] - 1, mat[0][1]], [mat[1][0], mat[1][1] - 1]]))


def torsion_points(n: int) -> list[TorusPoint]:
    """The ``n^2`` points of order dividing ``n``, sorted."""
    if n < 1:
        raise ValueError("n must be positive")
    return [TorusPoint(Fraction(i, n), Fraction(j, n)) for i, j in product(range(n), repeat=2)]
