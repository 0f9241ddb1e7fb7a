from fractions import Fraction as F
from math import lcm

import pytest
from hypothesis import given, strategies as st

from semigroup_surfaces.errors import BadFiberChiError, InvalidFibrationError
from semigroup_surfaces.fibration_numerics import (
    EnriquesVerdict,
    FiberShape,
    FibrationData,
    HurwitzVerdict,
    KodairaFiberTag,
    SectionCase,
    chi_top_total,
    delta_invariant,
    enriques_obstruction,
    hurwitz_multiplicity_bound,
    kodaira_dim_is_one,
    noether_chi,
    section_normal_degree,
)

fd = FibrationData.with_multiplicities


def oracle_delta(chi, g_B, ms):
    # integer numerator over the lcm of the multiplicities
    den = lcm(*ms) if ms else 1
    num = (chi + 2 * g_B - 2) * den + sum(den - den // m for m in ms)
    return F(num, den)


GOLDEN = [
    (0, 1, ()), (1, 0, (2, 2)), (0, 0, (2, 3, 7)), (0, 0, (2, 2)), (2, 0, ()),
    (0, 0, (2, 2, 2, 2)), (0, 0, (2, 3, 6)), (0, 0, (3, 3, 3)), (0, 0, (2, 4, 4)), (0, 0, (2, 3, 8)),
    (1, 0, ()), (1, 0, (2,)), (1, 0, (2, 3)), (0, 1, (2,)), (0, 2, ()),
    (3, 0, (5,)), (0, 0, (2, 2, 2, 2, 2)), (1, 1, (7, 11)), (0, 0, (4, 5, 6)), (2, 3, (2, 2, 3, 12)),
]


class TestTags:
    def test_multiple_requires_m(self):
        with pytest.raises(InvalidFibrationError):
            KodairaFiberTag(FiberShape.MULTIPLE, 1)
        with pytest.raises(InvalidFibrationError):
            KodairaFiberTag(FiberShape.MULTIPLE)

    def test_no_cusp_inside_multiple(self):
        with pytest.raises(InvalidFibrationError):
            KodairaFiberTag.multiple(2, FiberShape.RATIONAL_CUSP)
        with pytest.raises(InvalidFibrationError):
            KodairaFiberTag.multiple(2, FiberShape.MULTIPLE)

    def test_plain_shape_has_no_m(self):
        with pytest.raises(InvalidFibrationError):
            KodairaFiberTag(FiberShape.RATIONAL_NODE, 2)

    def test_multiplicities_extracted(self):
        f = FibrationData(0, 1, (KodairaFiberTag(FiberShape.RATIONAL_NODE), KodairaFiberTag.multiple(3),
                                 KodairaFiberTag.multiple(2, FiberShape.TREE_OF_MINUS2_RATIONALS)))
        assert f.multiplicities == (3, 2)

    def test_minimal_forces_K2_zero(self):
        with pytest.raises(InvalidFibrationError):
            FibrationData(0, 1, (), K_squared=1)
        FibrationData(0, 1, (), K_squared=-1, minimal=False)


class TestDelta:
    @pytest.mark.parametrize("chi,g_B,ms", GOLDEN)
    def test_golden(self, chi, g_B, ms):
        assert delta_invariant(fd(g_B, chi, ms)) == oracle_delta(chi, g_B, ms)

    def test_examples(self):
        assert delta_invariant(fd(1, 0, ())) == 0
        assert delta_invariant(fd(0, 1, (2, 2))) == 0
        assert delta_invariant(fd(0, 0, (2, 3, 7))) == F(1, 42)

    def test_kodaira(self):
        assert kodaira_dim_is_one(fd(0, 0, (2, 3, 7)))
        assert not kodaira_dim_is_one(fd(1, 0, ()))
        assert not kodaira_dim_is_one(fd(0, 0, (2, 2)))
        assert delta_invariant(fd(0, 0, (2, 2))) == -1

    @given(st.lists(st.integers(2, 12), max_size=6), st.integers(0, 4), st.integers(0, 3), st.data())
    def test_monotone(self, ms, chi, g_B, data):
        base = delta_invariant(fd(g_B, chi, ms))
        assert delta_invariant(fd(g_B, chi + 1, ms)) > base
        assert delta_invariant(fd(g_B + 1, chi, ms)) > base
        assert delta_invariant(fd(g_B, chi, ms + [2])) > base
        if ms:
            i = data.draw(st.integers(0, len(ms) - 1))
            bumped = list(ms)
            bumped[i] += 1
            assert delta_invariant(fd(g_B, chi, bumped)) > base


class TestNoether:
    def test_examples(self):
        assert noether_chi(0, 0) == (0, True)
        assert noether_chi(0, 24) == (2, True)
        assert noether_chi(0, 7) == (F(7, 12), False)


class TestChiTop:
    def test_examples(self):
        m2 = KodairaFiberTag.multiple(2)
        assert chi_top_total(1, 0, [(m2, 0), (KodairaFiberTag.multiple(3), 0)]) == 0
        assert chi_top_total(0, 0, []) == 0
        node = KodairaFiberTag(FiberShape.RATIONAL_NODE)
        assert chi_top_total(0, 0, [(node, 12), (node, 12)]) == 24

    def test_bad_fiber_chi(self):
        with pytest.raises(BadFiberChiError):
            chi_top_total(0, 0, [(KodairaFiberTag.multiple(2), 1)])

    def test_multiple_of_singular_may_have_chi(self):
        tag = KodairaFiberTag.multiple(2, FiberShape.RATIONAL_NODE)
        assert chi_top_total(0, 0, [(tag, 1)]) == 1

    def test_general_fiber_term(self):
        assert chi_top_total(0, 2, []) == 4
        assert chi_top_total(3, 1, [(KodairaFiberTag(FiberShape.RATIONAL_NODE), 2)]) == -4 + 1


class TestHurwitz:
    def test_examples(self):
        assert hurwitz_multiplicity_bound((2, 2, 2, 2)) == (0, HurwitzVerdict.CONSISTENT)
        v, verdict = hurwitz_multiplicity_bound((2, 3, 7, 43))
        assert v > 0 and verdict is HurwitzVerdict.CONTRADICTION
        assert hurwitz_multiplicity_bound(()) == (-2, HurwitzVerdict.CONSISTENT)

    def test_rejects_small(self):
        with pytest.raises(InvalidFibrationError):
            hurwitz_multiplicity_bound((1,))


class TestContradictionChain:
    @given(st.lists(st.integers(2, 12), max_size=8), st.integers(0, 1))
    def test_kappa_one_excluded(self, ms, g_B):
        # multiple-of-smooth fibres only: chi_top = 0, so chi = 0 and delta <= hurwitz + 2 g_B
        tags = [KodairaFiberTag.multiple(m) for m in ms]
        chi_top = chi_top_total(g_B, 0, [(t, 0) for t in tags])
        assert chi_top == 0
        chi, integral = noether_chi(0, chi_top)
        assert integral and chi == 0
        f = FibrationData(g_B, int(chi), tuple(tags))
        h, verdict = hurwitz_multiplicity_bound(ms)
        assert delta_invariant(f) <= h + 2 * g_B
        if g_B == 0 and verdict is HurwitzVerdict.CONSISTENT:
            assert not kodaira_dim_is_one(f)
        if g_B == 1 and not ms:
            assert not kodaira_dim_is_one(f)


class TestSectionDegree:
    def test_examples(self):
        assert section_normal_degree(None, 0, SectionCase.K3_SECTION) == -2
        assert section_normal_degree(fd(1, 0, ()), 1, SectionCase.SECTION_OF_PI) == 0
        assert section_normal_degree(fd(0, 2, ()), 0, SectionCase.SECTION_OF_PI) == -2

    @given(st.integers(1, 48), st.integers(0, 3))
    def test_negative_when_not_smooth(self, chi_top, g_B):
        # a positive Euler number forces chi > 0 once Noether's formula is integral
        chi, integral = noether_chi(0, 12 * chi_top)
        assert integral
        assert section_normal_degree(fd(g_B, int(chi), ()), g_B, SectionCase.SECTION_OF_PI) < 0


class TestEnriques:
    def test_examples(self):
        assert enriques_obstruction() is EnriquesVerdict.NO_SECTION
        assert enriques_obstruction(multiplicities=()) is EnriquesVerdict.INVALID
        assert enriques_obstruction(section_assumed=False) is EnriquesVerdict.NO_SECTION
