"""Descriptors covering every variant, shared by classifier, CLI and acceptance tests."""

from fractions import Fraction as F

from semigroup_surfaces.classifier import (
    Abelian,
    Bielliptic,
    Blowup,
    EllipticFibration,
    Enriques,
    GeneralType,
    K3,
    ProductCurves,
    Ruled,
)
from semigroup_surfaces.fibration_numerics import FiberShape, FibrationData, KodairaFiberTag
from semigroup_surfaces.group_actions import ActionGenerator, GroupAction, instantiate_bielliptic
from semigroup_surfaces.lattice_tori import AffineTorusMap, FieldTag, point
from semigroup_surfaces.ruled_numerics import RuledSurfaceData


def translation_action(n: int = 3) -> GroupAction:
    gen = ActionGenerator(AffineTorusMap.translation(point(F(1, n))),
                          AffineTorusMap.translation(point(0, F(1, n))))
    return GroupAction(FieldTag.GENERIC, FieldTag.GENERIC, (gen,), n)


def smooth_fibration(g_B: int = 2) -> FibrationData:
    return FibrationData(g_B, 0)


DESCRIPTORS = [
    Abelian(),
    *[Bielliptic(t) for t in range(1, 8)],
    K3(True),
    K3(False),
    Enriques(),
    Ruled(RuledSurfaceData(0, 0)),
    Ruled(RuledSurfaceData(0, 2), 2),
    Ruled(RuledSurfaceData(0, 1), 1),
    Ruled(RuledSurfaceData(1, -1)),
    Ruled(RuledSurfaceData(3, 2)),
    ProductCurves(1, 1),
    ProductCurves(0, 0),
    ProductCurves(0, 2),
    ProductCurves(3, 1),
    ProductCurves(2, 3),
    EllipticFibration(FibrationData.with_multiplicities(0, 0, (2, 3, 7)), False),
    EllipticFibration(FibrationData.with_multiplicities(0, 1, (2, 2)), False),
    EllipticFibration(FibrationData(1, 2, (KodairaFiberTag(FiberShape.RATIONAL_NODE),
                                           KodairaFiberTag.multiple(3, FiberShape.TREE_OF_MINUS2_RATIONALS))), False),
    EllipticFibration(smooth_fibration(), True),
    EllipticFibration(smooth_fibration(), True, translation_action()),
    EllipticFibration(smooth_fibration(3), True, instantiate_bielliptic(3)),
    EllipticFibration(smooth_fibration(), True, None, False, 1),
    EllipticFibration(FibrationData.with_multiplicities(1, 1, (2,)), False, None, False, 1),
    EllipticFibration(FibrationData.with_multiplicities(0, 1, (3, 3)), False, None, False, 0),
    GeneralType(True),
    GeneralType(False),
    Blowup(Abelian()),
    Blowup(Bielliptic(2), 3),
    Blowup(Blowup(Ruled(RuledSurfaceData(0, 3), 3)), 2),
    Blowup(Enriques()),
]
