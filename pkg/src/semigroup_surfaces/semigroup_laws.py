"""Kernel composition, induced laws and associativity checks.

Varieties are replaced by finite samples: ``X`` and ``Y`` become label
sets and the abelian part ``A`` a torsion subgroup of a torus, which is
enough to check the pointwise formulas exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Hashable, Iterable, Sequence

from .errors import (
    InvalidSignatureError,
    SectionViolationError,
    TripleMismatchError,
    UniverseNotClosedError,
)
from .lattice_tori import FieldTag, ORIGIN, TorusPoint, add_points, torsion_points


@dataclass(frozen=True)
class KernelTriple:
    """``X x A x Y``; ``A`` is ``n``-torsion of a torus, or trivial when ``torsion`` is None."""

    X: frozenset
    Y: frozenset
    torsion: int | None = None
    field: FieldTag = FieldTag.GENERIC

    def __post_init__(self) -> None:
        object.__setattr__(self, "X", frozenset(self.X))
        object.__setattr__(self, "Y", frozenset(self.Y))
        if not self.X or not self.Y:
            raise ValueError("X and Y must be nonempty")

    def A(self) -> list[TorusPoint]:
        return torsion_points(self.torsion) if self.torsion else [ORIGIN]

    def elements(self) -> list[KernelElement]:
        return [KernelElement(x, a, y, self)
                for x, a, y in product(sorted(self.X), self.A(), sorted(self.Y))]


@dataclass(frozen=True)
class KernelElement:
    x: Hashable
    a: TorusPoint
    y: Hashable
    triple: KernelTriple

    def __post_init__(self) -> None:
        t = self.triple
        if self.x not in t.X or self.y not in t.Y:
            raise ValueError("component outside the declared label sets")
        if t.torsion is None and self.a != ORIGIN:
            raise ValueError("A is trivial")
        if t.torsion is not None and (self.a.order() and t.torsion % self.a.order()):
            raise ValueError(f"{self.a} is not {t.torsion}-torsion")

    def sort_key(self) -> tuple:
        return (self.x, self.a, self.y)


def nu_compose(u: KernelElement, v: KernelElement) -> KernelElement:
    """``(x1, a1, y1) * (x2, a2, y2) = (x1, a1 + a2, y2)``."""
    if u.triple != v.triple:
        raise TripleMismatchError("elements belong to different kernels")
    return KernelElement(u.x, add_points(u.a, v.a, u.triple.field), v.y, u.triple)


@dataclass(frozen=True)
class DimensionSignature:
    dim_X: int
    dim_A: int
    dim_Y: int


class Triviality(enum.Enum):
    TRIVIAL = "trivial"
    NONTRIVIAL = "nontrivial"


@dataclass(frozen=True)
class CaseLabel:
    case_index: int
    triviality: Triviality


_CASES = {
    (0, 2, 0): 1, (0, 1, 0): 2, (0, 0, 0): 3, (1, 0, 0): 4, (0, 0, 1): 5,
    (1, 1, 0): 6, (0, 1, 1): 7, (2, 0, 0): 8, (0, 0, 2): 9, (1, 0, 1): 10,
}
NONTRIVIAL_CASES = frozenset({2, 4, 5})


def classify_signature(d: DimensionSignature) -> CaseLabel:
    dims = (d.dim_X, d.dim_A, d.dim_Y)
    if any(k not in (0, 1, 2) for k in dims) or sum(dims) > 2:
        raise InvalidSignatureError(f"no case for dimensions (X, A, Y) = {dims}")
    case = _CASES[dims]
    return CaseLabel(case, Triviality.NONTRIVIAL if case in NONTRIVIAL_CASES else Triviality.TRIVIAL)


class BaseLaw(enum.Enum):
    ADD = "add"
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class InducedLaw:
    """``mu(s1, s2) = section(base(retraction(s1), retraction(s2)))``.

    ``add`` is the group law of the base curve; it is only consulted for
    ``BaseLaw.ADD`` and defaults to torus addition.
    """

    retraction: Callable
    section: Callable
    base_law: BaseLaw
    add: Callable = add_points

    def base(self, c1, c2):
        if self.base_law is BaseLaw.ADD:
            return self.add(c1, c2)
        return c1 if self.base_law is BaseLaw.LEFT else c2

    def __call__(self, s1, s2):
        return self.section(self.base(self.retraction(s1), self.retraction(s2)))


def validate_section(law: InducedLaw, base_points: Iterable) -> None:
    for c in base_points:
        if law.retraction(law.section(c)) != c:
            raise SectionViolationError(f"retraction(section({c})) != {c}")


def induced_mu(law: InducedLaw, s1, s2):
    c = law.base(law.retraction(s1), law.retraction(s2))
    validate_section(law, {law.retraction(s1), law.retraction(s2), c})
    return law.section(c)


@dataclass(frozen=True)
class AssociativityResult:
    ok: bool
    triples_checked: int
    counterexample: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_associative(law: Callable, universe: Sequence, *, key: Callable | None = None,
                      strict_section: bool = False) -> AssociativityResult:
    """Exhaustively test ``law(law(a,b),c) == law(a,law(b,c))`` on ``universe``.

    ``law`` may be an :class:`InducedLaw` or any binary callable.  The
    counterexample, if any, is the lexicographically smallest violating
    triple in the universe sorted by ``key``.  With ``strict_section`` an
    induced law is first checked to have a genuine section over the sampled
    base.
    """
    pts = sorted(set(universe), key=key)
    if strict_section and isinstance(law, InducedLaw):
        validate_section(law, {law.retraction(s) for s in pts})
    index = {s: i for i, s in enumerate(pts)}
    n = len(pts)
    table = [[0] * n for _ in range(n)]
    for (i, a), (j, b) in product(enumerate(pts), repeat=2):
        r = law(a, b)
        if r not in index:
            raise UniverseNotClosedError(f"law({a}, {b}) = {r} leaves the universe")
        table[i][j] = index[r]
    # compare whole rows: (ab)c over c against a(bc) over c
    for i, j in product(range(n), repeat=2):
        left = table[table[i][j]]
        row_i = table[i]
        right = [row_i[x] for x in table[j]]
        if left != right:
            k = next(k for k in range(n) if left[k] != right[k])
            return AssociativityResult(False, (i * n + j) * n + k + 1, (pts[i], pts[j], pts[k]))
    return AssociativityResult(True, n ** 3)


def product_law(base_law: BaseLaw, fibre_point=ORIGIN, field: FieldTag = FieldTag.GENERIC) -> InducedLaw:
    """The induced law on ``S = C x F`` with ``pi = pr_1`` and ``sigma(c) = (c, fibre_point)``."""
    return InducedLaw(
        retraction=lambda s: s[0],
        section=lambda c: (c, fibre_point),
        base_law=base_law,
        add=lambda a, b: add_points(a, b, field),
    )


def cyclic_product_universe(n: int) -> list[tuple[TorusPoint, TorusPoint]]:
    """``<1/n> x <tau/n>`` inside ``C x E``: ``n^2`` points, closed under every product law."""
    return [(TorusPoint(Fraction(i, n), 0), TorusPoint(0, Fraction(j, n)))
            for i, j in product(range(n), repeat=2)]
