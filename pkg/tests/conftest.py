import os
import sys
from fractions import Fraction
from itertools import product
from math import lcm

from semigroup_surfaces.lattice_tori import AffineTorusMap, CMScalar, FieldTag, TorusPoint

sys.path.insert(0, os.path.dirname(__file__))


def brute_force_fixed_points(m: AffineTorusMap, k: int) -> set[TorusPoint]:
    """Fixed points with denominators dividing ``k``, by exhaustive search.

    Evaluates ``linear * (p + q tau)`` as a CM-field product rather than via
    the integer matrix the library uses.
    """
    lin = m.linear
    found = set()
    for i, j in product(range(k), repeat=2):
        x = (Fraction(i, k), Fraction(j, k))
        if lin.field_tag is FieldTag.GENERIC:
            image = (lin.re * x[0], lin.re * x[1])
        else:
            prod = lin * CMScalar(x[0], x[1], lin.field_tag)
            image = (prod.re, prod.im_coeff)
        if TorusPoint(image[0] + m.shift.p, image[1] + m.shift.q) == TorusPoint(*x):
            found.add(TorusPoint(*x))
    return found


def oracle_bound(m: AffineTorusMap) -> int:
    """|det(M - I)| times the lcm of the shift denominators."""
    mat = m.linear.matrix()
    det = abs((mat[0][0] - 1) * (mat[1][1] - 1) - mat[0][1] * mat[1][0])
    return int(det) * lcm(m.shift.p.denominator, m.shift.q.denominator)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, title, _, _ in acceptance.CRITERIA:
        if name in acceptance.RESULTS:
            terminalreporter.write_line(acceptance.summary_line(name, title))
