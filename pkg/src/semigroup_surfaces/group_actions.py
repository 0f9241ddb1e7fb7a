"""Finite abelian groups acting on a product of two tori ``E x F``.

``G`` acts on ``E`` by translations and on ``F`` by affine maps.  The seven
bielliptic families are available through :func:`instantiate_bielliptic`;
the decision procedures answer whether ``G`` has a common fixed point on
``F`` (so a constant equivariant map ``E -> F`` exists) and whether ``G``
acts on a factor by translations only.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import prod
from typing import Sequence

from .errors import (
    ActionInvalidError,
    BadTranslationOrderError,
    NotApplicableError,
    OrderMismatchError,
)
from .lattice_tori import (
    ALL,
    AffineTorusMap,
    AllType,
    CMScalar,
    FieldTag,
    TorusPoint,
    fixed_points,
    point,
    scalar,
)


class Factor(enum.Enum):
    E = "E"
    F = "F"


@dataclass(frozen=True)
class ActionGenerator:
    on_E: AffineTorusMap
    on_F: AffineTorusMap

    def __post_init__(self) -> None:
        if not self.on_E.is_translation():
            raise ActionInvalidError("generators must act on E by translations")


Element = tuple[AffineTorusMap, AffineTorusMap]


@dataclass(frozen=True)
class GroupAction:
    """A finite group given by generators acting on ``E x F``.

    Construction checks closure at ``declared_order`` and that ``G`` acts
    faithfully by translations on ``E``, which makes the action on
    ``E x F`` free.
    """

    E_field: FieldTag
    F_field: FieldTag
    generators: tuple[ActionGenerator, ...] = ()
    declared_order: int = 1
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.on_E.field is not self.E_field or g.on_F.field is not self.F_field:
                raise ActionInvalidError("generator lives on the wrong torus")
        elements = enumerate_elements(self)
        for on_E, on_F in elements[1:]:
            if on_E.is_identity():
                raise ActionInvalidError(
                    f"element ({on_E}, {on_F}) fixes E pointwise; action on E x F is not free")

    def identity(self) -> Element:
        return (AffineTorusMap.identity(self.E_field), AffineTorusMap.identity(self.F_field))


def trivial_action(E_field: FieldTag = FieldTag.GENERIC, F_field: FieldTag = FieldTag.GENERIC) -> GroupAction:
    return GroupAction(E_field, F_field, (), 1, label="trivial")


@lru_cache(maxsize=256)
def _closure(gens: tuple[ActionGenerator, ...], E_field: FieldTag, F_field: FieldTag, limit: int) -> tuple[Element, ...]:
    ident = (AffineTorusMap.identity(E_field), AffineTorusMap.identity(F_field))
    seen = {ident: None}
    queue = deque([ident])
    while queue:
        e, f = queue.popleft()
        for g in gens:
            nxt = (g.on_E.compose(e), g.on_F.compose(f))
            if nxt not in seen:
                seen[nxt] = None
                if len(seen) > limit:
                    return tuple(seen)
                queue.append(nxt)
    return tuple(seen)


def enumerate_elements(g: GroupAction) -> list[Element]:
    """All group elements as ``(on_E, on_F)`` pairs, identity first."""
    # cap the search so a bad declaration cannot loop forever
    elements = _closure(g.generators, g.E_field, g.F_field, 4 * g.declared_order + 64)
    if len(elements) != g.declared_order:
        raise OrderMismatchError(
            f"generators close at {len(elements)}{'+' if len(elements) > g.declared_order else ''}"
            f" elements, declared order is {g.declared_order}")
    return list(elements)


class BiellipticType(enum.IntEnum):
    T1 = 1
    T2 = 2
    T3 = 3
    T4 = 4
    T5 = 5
    T6 = 6
    T7 = 7


_I = CMScalar.tau(FieldTag.GAUSSIAN)
_RHO = CMScalar.tau(FieldTag.EISENSTEIN)


def _bielliptic_table(t: BiellipticType) -> tuple[FieldTag, list[tuple[int, AffineTorusMap]]]:
    """(F lattice, [(cyclic factor order, map on F)]) for each family."""
    gen, gau, eis = FieldTag.GENERIC, FieldTag.GAUSSIAN, FieldTag.EISENSTEIN
    half = Fraction(1, 2)
    third = Fraction(1, 3)
    if t == 1:
        return gen, [(2, AffineTorusMap(scalar(-1)))]
    if t == 2:
        # epsilon: the half period 1/2
        return gen, [(2, AffineTorusMap(scalar(-1))), (2, AffineTorusMap.translation(point(half), gen))]
    if t == 3:
        return gau, [(4, AffineTorusMap(_I))]
    if t == 4:
        # (1+i)/2
        return gau, [(4, AffineTorusMap(_I)), (2, AffineTorusMap.translation(point(half, half), gau))]
    if t == 5:
        return eis, [(3, AffineTorusMap(_RHO))]
    if t == 6:
        # (1-rho)/3
        return eis, [(3, AffineTorusMap(_RHO)), (3, AffineTorusMap.translation(point(third, -third), eis))]
    return eis, [(6, AffineTorusMap(-_RHO))]


def default_translations(orders: Sequence[int]) -> list[TorusPoint]:
    """One E-translation per cyclic factor, independent so the action is faithful."""
    if len(orders) > 2:
        raise ValueError("at most two cyclic factors")
    return [point(Fraction(1, n), 0) if k == 0 else point(0, Fraction(1, n))
            for k, n in enumerate(orders)]


def instantiate_bielliptic(t: int | BiellipticType, e_translation_data: Sequence[TorusPoint] | None = None) -> GroupAction:
    t = BiellipticType(t)
    F_field, table = _bielliptic_table(t)
    orders = [n for n, _ in table]
    shifts = list(e_translation_data) if e_translation_data is not None else default_translations(orders)
    if len(shifts) != len(table):
        raise BadTranslationOrderError(f"type {int(t)} needs {len(table)} E-translations, got {len(shifts)}")
    for n, s in zip(orders, shifts):
        if s.order() != n:
            raise BadTranslationOrderError(
                f"E-translation {s} has order {s.order()}, cyclic factor has order {n}")
    gens = tuple(ActionGenerator(AffineTorusMap.translation(s), f_map) for s, (_, f_map) in zip(shifts, table))
    try:
        return GroupAction(FieldTag.GENERIC, F_field, gens, prod(orders), label=f"bielliptic type {int(t)}")
    except (OrderMismatchError, ActionInvalidError) as exc:
        # independent cyclic factors are the caller's responsibility
        raise BadTranslationOrderError(str(exc)) from exc


def _nonidentity(g: GroupAction) -> list[Element]:
    return enumerate_elements(g)[1:]


def common_fixed_points_on_F(g: GroupAction) -> frozenset[TorusPoint] | AllType:
    """Points of ``F`` fixed by every element of ``G``.

    Elements acting trivially on ``F`` contribute ``ALL``; if every element
    does (e.g. the trivial group) the answer is ``ALL``.
    """
    sets = [fixed_points(f) for _, f in _nonidentity(g)]
    finite = [s for s in sets if s is not ALL]
    if not finite:
        return ALL
    return reduce(frozenset.intersection, finite)


def has_common_fixed_point(g: GroupAction) -> bool:
    fixed = common_fixed_points_on_F(g)
    return fixed is ALL or bool(fixed)


def acts_by_translations_on_factor(g: GroupAction, factor: Factor | str) -> bool:
    factor = Factor(factor)
    idx = 0 if factor is Factor.E else 1
    return all(el[idx].is_translation() for el in enumerate_elements(g))


def admits_equivariant_constant(g: GroupAction) -> bool:
    """Whether a G-equivariant map ``E -> F`` exists.

    With a non-trivial linear part on ``F`` an equivariant map cannot be
    surjective, so only constants remain and they exist exactly when ``G``
    has a common fixed point on ``F``.
    """
    if acts_by_translations_on_factor(g, Factor.F):
        raise NotApplicableError(
            "G acts on F by translations only; surjective equivariant maps are not excluded")
    return has_common_fixed_point(g)


def acts_faithfully_on_factor(g: GroupAction, factor: Factor | str) -> bool:
    idx = 0 if Factor(factor) is Factor.E else 1
    return all(not el[idx].is_identity() for el in _nonidentity(g))


def element_has_fixed_point_on_factor(el: Element, factor: Factor | str) -> bool:
    m = el[0] if Factor(factor) is Factor.E else el[1]
    fixed = fixed_points(m)
    return fixed is ALL or bool(fixed)
