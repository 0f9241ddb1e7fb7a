from fractions import Fraction as F
from itertools import product

import pytest

from semigroup_surfaces.errors import (
    InvalidSignatureError,
    SectionViolationError,
    TripleMismatchError,
    UniverseNotClosedError,
)
from semigroup_surfaces.lattice_tori import ORIGIN, TorusPoint, point, torsion_points
from semigroup_surfaces.semigroup_laws import (
    BaseLaw,
    DimensionSignature,
    InducedLaw,
    KernelElement,
    KernelTriple,
    Triviality,
    check_associative,
    classify_signature,
    cyclic_product_universe,
    induced_mu,
    nu_compose,
    product_law,
)


def full_product(n):
    return [(c, e) for c in torsion_points(n) for e in torsion_points(n)]


class TestNu:
    def test_trivial_A(self):
        t = KernelTriple({"x1", "x2"}, {"y1", "y2"})
        u = KernelElement("x1", ORIGIN, "y1", t)
        v = KernelElement("x2", ORIGIN, "y2", t)
        assert nu_compose(u, v) == KernelElement("x1", ORIGIN, "y2", t)

    def test_right_identity_on_A(self):
        t = KernelTriple({"x"}, {"y"}, torsion=4)
        a = point(F(1, 4), F(3, 4))
        assert nu_compose(KernelElement("x", a, "y", t), KernelElement("x", ORIGIN, "y", t)).a == a

    def test_mismatch(self):
        t1 = KernelTriple({"x"}, {"y"})
        t2 = KernelTriple({"x"}, {"y", "z"})
        with pytest.raises(TripleMismatchError):
            nu_compose(KernelElement("x", ORIGIN, "y", t1), KernelElement("x", ORIGIN, "y", t2))

    def test_element_validation(self):
        t = KernelTriple({"x"}, {"y"}, torsion=2)
        with pytest.raises(ValueError):
            KernelElement("x", point(F(1, 3)), "y", t)
        with pytest.raises(ValueError):
            KernelElement("z", ORIGIN, "y", t)

    def test_associative_12_cubed(self):
        t = KernelTriple({0, 1}, {"a", "b"}, torsion=3)
        # A = 3-torsion of a torus would be 9 points; take the cyclic 3-torsion
        els = [KernelElement(x, point(F(k, 3)), y, t) for x in (0, 1) for k in range(3) for y in ("a", "b")]
        assert len(els) == 12
        for u, v, w in product(els, repeat=3):
            assert nu_compose(nu_compose(u, v), w) == nu_compose(u, nu_compose(v, w))

    @pytest.mark.parametrize("nx,ny,n", [(1, 1, 1), (2, 3, 2), (3, 3, 1), (3, 2, 2), (1, 3, 3)])
    def test_associative_exhaustive(self, nx, ny, n):
        t = KernelTriple(set(range(nx)), set(range(ny)), torsion=n)
        res = check_associative(nu_compose, t.elements(), key=KernelElement.sort_key)
        assert res.ok and res.triples_checked == (nx * ny * n * n) ** 3


class TestSignature:
    @pytest.mark.parametrize("dims,case", [((0, 1, 0), 2), ((1, 0, 0), 4), ((0, 0, 1), 5), ((0, 2, 0), 1),
                                           ((0, 0, 0), 3), ((1, 1, 0), 6), ((0, 1, 1), 7), ((2, 0, 0), 8),
                                           ((0, 0, 2), 9), ((1, 0, 1), 10)])
    def test_cases(self, dims, case):
        label = classify_signature(DimensionSignature(*dims))
        assert label.case_index == case
        assert (label.triviality is Triviality.NONTRIVIAL) == (case in {2, 4, 5})

    def test_total_and_rejecting(self):
        accepted = 0
        for dims in product(range(3), repeat=3):
            if sum(dims) <= 2:
                classify_signature(DimensionSignature(*dims))
                accepted += 1
            else:
                with pytest.raises(InvalidSignatureError):
                    classify_signature(DimensionSignature(*dims))
        assert accepted == 10
        with pytest.raises(InvalidSignatureError):
            classify_signature(DimensionSignature(-1, 0, 0))


class TestInducedMu:
    def test_left(self):
        law = product_law(BaseLaw.LEFT)
        for s1, s2 in product(full_product(2), repeat=2):
            assert induced_mu(law, s1, s2) == law.section(law.retraction(s1))

    def test_add_by_substitution(self):
        law = product_law(BaseLaw.ADD)
        for (c1, e1), (c2, e2) in product(full_product(3), repeat=2):
            expected = (TorusPoint(c1.p + c2.p, c1.q + c2.q), TorusPoint(0, 0))
            assert induced_mu(law, (c1, e1), (c2, e2)) == expected

    def test_idempotent_at_section_of_identity(self):
        law = product_law(BaseLaw.ADD)
        s = law.section(ORIGIN)
        assert induced_mu(law, s, s) == s

    def test_section_violation(self):
        t = point(F(1, 3))
        bad = InducedLaw(lambda s: s[0], lambda c: (c + t, ORIGIN), BaseLaw.LEFT)
        with pytest.raises(SectionViolationError):
            induced_mu(bad, (ORIGIN, ORIGIN), (ORIGIN, ORIGIN))


def brute_first_violation(law, universe):
    pts = sorted(universe)
    for a, b, c in product(pts, repeat=3):
        if law(law(a, b), c) != law(a, law(b, c)):
            return (a, b, c)
    return None


class TestCheckAssociative:
    @pytest.mark.parametrize("base", list(BaseLaw))
    @pytest.mark.parametrize("n", range(1, 7))
    def test_valid_sections(self, base, n):
        law = product_law(base, fibre_point=point(0, F(1, n)) if n > 1 else ORIGIN)
        res = check_associative(law, cyclic_product_universe(n), strict_section=True)
        assert res.ok and res.counterexample is None

    @pytest.mark.parametrize("base", list(BaseLaw))
    @pytest.mark.parametrize("n", range(1, 7))
    def test_section_is_subsemigroup(self, base, n):
        law = product_law(base)
        cs = [c for c, _ in cyclic_product_universe(n)]
        for c1, c2 in product(cs, repeat=2):
            assert law(law.section(c1), law.section(c2)) == law.section(law.base(c1, c2))

    def test_full_three_torsion(self):
        res = check_associative(product_law(BaseLaw.ADD), full_product(3))
        assert res.ok and res.triples_checked == 81 ** 3

    def test_corrupted_left_section(self):
        t = point(F(1, 3))
        bad = InducedLaw(lambda s: s[0], lambda c: (c + t, ORIGIN), BaseLaw.LEFT)
        universe = [(c, ORIGIN) for c in torsion_points(3)]
        res = check_associative(bad, universe)
        assert not res.ok
        assert res.counterexample == brute_first_violation(bad, universe)
        a, b, c = res.counterexample
        assert bad(bad(a, b), c) != bad(a, bad(b, c))
        with pytest.raises(SectionViolationError):
            check_associative(bad, universe, strict_section=True)

    def test_corrupted_add_section(self):
        # sigma'(c) = (2c, 0)
        bad = InducedLaw(lambda s: s[0], lambda c: (c + c, ORIGIN), BaseLaw.ADD)
        universe = [(c, ORIGIN) for c in torsion_points(3)]
        res = check_associative(bad, universe)
        assert not res.ok
        assert res.counterexample == brute_first_violation(bad, universe)

    def test_translated_add_section_stays_associative(self):
        # pi(c, e) = c + e with sigma'(c) = (c + t, 0): defect cancels for ADD
        t = point(F(1, 3))
        odd = InducedLaw(lambda s: s[0] + s[1], lambda c: (c + t, ORIGIN), BaseLaw.ADD)
        universe = [(c, ORIGIN) for c in torsion_points(3)]
        assert check_associative(odd, universe).ok
        with pytest.raises(SectionViolationError):
            check_associative(odd, universe, strict_section=True)

    def test_singleton(self):
        assert check_associative(product_law(BaseLaw.ADD), [(ORIGIN, ORIGIN)]).ok

    def test_not_closed(self):
        law = product_law(BaseLaw.ADD)
        with pytest.raises(UniverseNotClosedError):
            check_associative(law, [(point(F(1, 2)), ORIGIN)])

    def test_cyclic_universe_size(self):
        assert check_associative(product_law(BaseLaw.ADD), cyclic_product_universe(3)).triples_checked == 729
