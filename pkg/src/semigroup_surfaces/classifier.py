"""Decide whether a surface carries a non-trivial algebraic semigroup law.

A non-trivial law is ``mu(s1, s2) = sigma(mu~(pi s1, pi s2))`` for a
fibration ``pi: S -> C`` with a section ``sigma``, so every branch below
really answers: does such a ``(pi, sigma)`` exist, what does it look like,
and what is the space ``Mor_pi(C, S)`` of sections.  Each conclusion is
recorded with the theorem it rests on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Union

from .errors import ActionInvalidError, InternalInvariantError, InvalidDescriptorError
from .fibration_numerics import (
    EnriquesVerdict,
    FibrationData,
    SectionCase,
    delta_invariant,
    enriques_obstruction,
    kodaira_dim_is_one,
    section_normal_degree,
)
from .group_actions import (
    Factor,
    GroupAction,
    acts_by_translations_on_factor,
    admits_equivariant_constant,
    common_fixed_points_on_F,
    element_has_fixed_point_on_factor,
    enumerate_elements,
    instantiate_bielliptic,
    trivial_action,
)
from .lattice_tori import ALL
from .ruled_numerics import (
    FIBRE,
    RuledSurfaceData,
    canonical_class,
    h0_p1,
    hirzebruch_section_finiteness,
    solve_second_fibration_class,
)

BIELLIPTIC_WITH_SECTIONS = frozenset({1, 3, 5, 7})


# --- descriptors -----------------------------------------------------------

@dataclass(frozen=True)
class Abelian:
    kind = "abelian"


@dataclass(frozen=True)
class Bielliptic:
    type: int
    kind = "bielliptic"

    def __post_init__(self) -> None:
        if self.type not in range(1, 8):
            raise InvalidDescriptorError(f"bielliptic type must be 1..7, got {self.type}")


@dataclass(frozen=True)
class K3:
    generic: bool
    kind = "k3"


@dataclass(frozen=True)
class Enriques:
    kind = "enriques"


@dataclass(frozen=True)
class Ruled:
    """A ruled surface; on a rational base ``twist_d`` names ``P(O + O(-d))``, which forces ``e = d``."""

    data: RuledSurfaceData
    twist_d: int | None = None
    kind = "ruled"

    def __post_init__(self) -> None:
        d = self.twist_d
        if d is None:
            return
        if self.data.g != 0:
            raise InvalidDescriptorError("twist_d only applies to a rational base")
        if d < 0 or d != self.data.e:
            raise InvalidDescriptorError(f"P(O + O(-{d})) has invariant e = {d}, got e = {self.data.e}")


@dataclass(frozen=True)
class ProductCurves:
    g1: int
    g2: int
    kind = "product"

    def __post_init__(self) -> None:
        if self.g1 < 0 or self.g2 < 0:
            raise InvalidDescriptorError("genera must be nonnegative")


@dataclass(frozen=True)
class EllipticFibration:
    """An elliptic fibration ``phi: S -> B``.

    ``pi_equals_phi`` says whether the semigroup fibration is ``phi`` itself;
    otherwise ``g_C`` is the genus of the target of ``pi``.  ``base_action``
    gives a ``(D x E)/G`` presentation of a smooth ``phi``; only its action
    on the fibre factor matters for the moduli.
    """

    data: FibrationData
    smooth: bool
    base_action: GroupAction | None = None
    pi_equals_phi: bool = True
    g_C: int | None = None
    kind = "elliptic_fibration"

    def __post_init__(self) -> None:
        if self.smooth and (self.data.fibers or self.data.chi_OS != 0):
            raise InvalidDescriptorError("a smooth elliptic fibration has no singular fibres and chi(O_S) = 0")
        if self.base_action is not None and not self.smooth:
            raise InvalidDescriptorError("a (D x E)/G presentation describes a smooth fibration")
        if not self.pi_equals_phi and (self.g_C is None or self.g_C < 0):
            raise InvalidDescriptorError("pi != phi needs the genus g_C of the target of pi")


@dataclass(frozen=True)
class GeneralType:
    is_product: bool
    kind = "general_type"


@dataclass(frozen=True)
class Blowup:
    inner: SurfaceDescriptor
    points: int = 1
    kind = "blowup"

    def __post_init__(self) -> None:
        if self.points < 1:
            raise InvalidDescriptorError(f"blow-up needs at least one point, got {self.points}")


SurfaceDescriptor = Union[Abelian, Bielliptic, K3, Enriques, Ruled, ProductCurves,
                          EllipticFibration, GeneralType, Blowup]


# --- reports ---------------------------------------------------------------

class Verdict(enum.Enum):
    YES = "YES"
    NO = "NO"
    CONDITIONAL = "CONDITIONAL"


class ModuliKind(enum.Enum):
    ISOLATED_REDUCED_POINTS = "ISOLATED_REDUCED_POINTS"
    ELLIPTIC_QUOTIENT = "ELLIPTIC_QUOTIENT"
    ABELIAN_FACTOR = "ABELIAN_FACTOR"
    FINITE_SET = "FINITE_SET"
    EMPTY = "EMPTY"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class ModuliDescription:
    kind: ModuliKind
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.kind.value} ({self.detail})" if self.detail else self.kind.value


EMPTY = ModuliDescription(ModuliKind.EMPTY, "no section of any admissible pi")


@dataclass(frozen=True)
class ClassificationReport:
    verdict: Verdict
    structure: str
    reasons: tuple[tuple[str, str], ...]
    moduli: ModuliDescription
    condition: str | None = None
    # genus of the base of pi, when determined; drives the blow-down transfer
    base_genus: int | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "reasons", tuple(self.reasons))
        if not self.reasons:
            raise InternalInvariantError("empty reason chain")
        if (self.verdict is Verdict.NO) != (self.moduli.kind is ModuliKind.EMPTY):
            raise InternalInvariantError(f"verdict {self.verdict.value} with moduli {self.moduli.kind.value}")
        if (self.verdict is Verdict.CONDITIONAL) != (self.condition is not None):
            raise InternalInvariantError("a condition accompanies exactly the CONDITIONAL verdict")

    @property
    def verdict_text(self) -> str:
        if self.verdict is Verdict.CONDITIONAL:
            return f"CONDITIONAL({self.condition})"
        return self.verdict.value


def explain(report: ClassificationReport) -> str:
    lines = [f"verdict: {report.verdict_text}",
             f"structure: {report.structure}",
             f"moduli: {report.moduli}",
             "reasons:"]
    lines += [f"  [{tag}] {text}" for tag, text in report.reasons]
    return "\n".join(lines)


# --- moduli of sections ----------------------------------------------------

def _presentation(s: SurfaceDescriptor) -> GroupAction:
    if isinstance(s, Bielliptic):
        return instantiate_bielliptic(s.type)
    if isinstance(s, Abelian) or (isinstance(s, ProductCurves) and s.g2 == 1):
        return trivial_action()
    if isinstance(s, EllipticFibration) and s.base_action is not None:
        return s.base_action
    raise ActionInvalidError(f"{s.kind} descriptor carries no (D x E)/G presentation")


def moduli_of_sections(s: SurfaceDescriptor) -> ModuliDescription:
    """``Mor_pi(D/G, S)`` for ``S = (D x E)/G`` fibred over ``D/G``.

    Translations on the fibre only move sections along ``E``, giving
    ``E/G``; an element with a fixed point on ``E`` pins sections down to
    reduced isolated points.
    """
    g = _presentation(s)
    if acts_by_translations_on_factor(g, Factor.F):
        detail = "E" if g.declared_order == 1 else f"E/G, |G| = {g.declared_order}"
        return ModuliDescription(ModuliKind.ELLIPTIC_QUOTIENT, detail)
    if any(element_has_fixed_point_on_factor(el, Factor.F) for el in enumerate_elements(g)[1:]):
        return ModuliDescription(ModuliKind.ISOLATED_REDUCED_POINTS, "an element of G has fixed points on E")
    # a non-translation affine map of a torus always has |det(M - I)| >= 1 fixed points
    raise InternalInvariantError("non-translation element without fixed points")


# --- branches --------------------------------------------------------------

M1 = "Theorem 2.1 (M1)"
M2 = "Theorem 3.3 (M2)"
M3 = "Theorem 3.4 (M3)"
M4 = "Theorem M4"
M5 = "Theorem 4.2 (M5)"
P1 = "Proposition 1.4 (P1)"
P2 = "Proposition 1.5 (P2)"


def _abelian() -> ClassificationReport:
    return ClassificationReport(
        Verdict.YES,
        "S ≅ C×E, π = pr₁, σ(x) = (x, y₀)",
        ((M3, "an abelian surface with a section of pi splits as C×E with C elliptic"),
         ("Theorem 3.11", "Mor_π(E,S) = S/E = ker(π)")),
        ModuliDescription(ModuliKind.ABELIAN_FACTOR, "ker(π) ≅ E, times the abelian part A"),
        base_genus=1,
    )


def _bielliptic(t: int) -> ClassificationReport:
    g = instantiate_bielliptic(t)
    computed = admits_equivariant_constant(g)
    if computed != (t in BIELLIPTIC_WITH_SECTIONS):
        raise InternalInvariantError(f"fixed-point engine disagrees with the type list for type {t}")
    fixed = common_fixed_points_on_F(g)
    lemma = ("Lemma 3.2", f"type {t}: |G| = {g.declared_order}, F over the {g.F_field.value} lattice")
    if not computed:
        return ClassificationReport(
            Verdict.NO,
            "none",
            (lemma,
             (M2, f"G has no fixed point on F, so no equivariant constant E → F; type {t} is excluded")),
            EMPTY,
        )
    p = min(fixed) if fixed is not ALL else None
    return ClassificationReport(
        Verdict.YES,
        f"S ≅ (E×F)/G, π = p₁: S → E/G, σ(x) = (x, {p})",
        (lemma,
         (M2, f"G fixes {p} on F ({len(fixed)} common fixed point(s)); σ(x) = (x, P)"),
         ("Theorem 3.10", "G acts on F with fixed points, so Mor_π(C,S) is reduced isolated points")),
        moduli_of_sections(Bielliptic(t)),
        base_genus=1,
    )


def _enriques() -> ClassificationReport:
    verdict = enriques_obstruction(section_assumed=True)
    assert verdict is EnriquesVerdict.NO_SECTION
    return ClassificationReport(
        Verdict.NO,
        "none",
        (("Lemma 3.13", "every elliptic fibration has exactly two double fibres 2F and 2F′"),
         (M4, "σ(C)·F₀ = 1 but σ(C)·2F is even and at least 2")),
        EMPTY,
    )


def _k3(generic: bool) -> ClassificationReport:
    if generic:
        return ClassificationReport(
            Verdict.NO, "none",
            ((M4, "a general K3 surface has no fibration with a section"),),
            EMPTY,
        )
    deg = section_normal_degree(None, 0, SectionCase.K3_SECTION)
    return ClassificationReport(
        Verdict.CONDITIONAL,
        "π: S → ℙ¹ an elliptic fibration, σ a section",
        (("Theorem 3.14", f"a section has normal bundle O({deg}), h⁰ = {h0_p1(deg)}: reduced isolated points"),),
        ModuliDescription(ModuliKind.ISOLATED_REDUCED_POINTS, "sections of the asserted fibration"),
        condition="an elliptic fibration with a section is asserted",
        base_genus=0,
    )


def _ruled(s: Ruled) -> ClassificationReport:
    data = s.data
    k = canonical_class(data)
    if data.g >= 1:
        f0 = solve_second_fibration_class(data, FIBRE)
        return ClassificationReport(
            Verdict.YES,
            f"S = ℙ(ℰ) → X ruled, g(X) = {data.g}, e = {data.e}, π = ruling",
            ((M1, "g(C) ≥ 1 forces π to be the ruling morphism, which has sections"),
             ("Lemma 2.4", f"K_S ≡ {k}, NE(S) spanned by f and f₀ = {f0}")),
            ModuliDescription(ModuliKind.UNKNOWN, "sections of the ruling"),
            base_genus=data.g,
        )
    d = data.e
    if d == 1:
        return ClassificationReport(
            Verdict.CONDITIONAL,
            "S ≅ ℙ(𝒪⊕𝒪(−1)) = ℙ² blown up at a point, π = ruling",
            (("Example 1.5", "ℙ(𝒪⊕𝒪(−1)) carries non-trivial laws through its ruling although ℙ² carries none"),
             (M1, "the minimal case requires d ≠ 1")),
            ModuliDescription(ModuliKind.UNKNOWN, "S is not minimal"),
            condition="d = 1: not minimal, classified through the ruling rather than a blow-up transfer",
            base_genus=0,
        )
    verdict = hirzebruch_section_finiteness(d)
    return ClassificationReport(
        Verdict.YES,
        f"S ≅ ℙ(𝒪⊕𝒪(−{d})), π = ruling",
        ((M1, f"g(C) = 0 with rational fibres: S ≅ ℙ(𝒪⊕𝒪(−d)) with d = {d} ≠ 1"),
         ("Theorem 2.9", f"Ext¹ vanishes, sections split ({len(verdict.cases)} cases): {verdict.verdict}")),
        ModuliDescription(ModuliKind.FINITE_SET, "finitely many laws modulo Aut(S)"),
        base_genus=0,
    )


def _product(s: ProductCurves) -> ClassificationReport:
    g1, g2 = s.g1, s.g2
    if g1 == g2 == 1:
        return _abelian()
    if g1 == 0 and g2 == 0:
        return _ruled(Ruled(RuledSurfaceData(0, 0), 0))
    if 0 in (g1, g2):
        g = max(g1, g2)
        return ClassificationReport(
            Verdict.YES,
            f"S ≅ ℙ¹×X, g(X) = {g}, π = pr₁",
            ((M1, "g(C) = 0 with non-rational fibres: S ≅ ℙ¹×X and π = pr₁"),),
            ModuliDescription(ModuliKind.UNKNOWN, "constant sections x ↦ (x, y₀), y₀ ∈ X"),
            base_genus=0,
        )
    if 1 in (g1, g2):
        base = g1 if g2 == 1 else g2
        return ClassificationReport(
            Verdict.YES,
            f"S ≅ D×E, g(D) = {base}, π = pr₁, σ(x) = (x, y₀)",
            ((M5, "S is the product B×C with φ and π the two projections"),
             ("Theorem 6.1", "G trivial acts on E by translations, so Mor_π(D,S) ≅ E")),
            moduli_of_sections(ProductCurves(base, 1)),
            base_genus=base,
        )
    return ClassificationReport(
        Verdict.YES,
        f"S ≅ C×C′, g = ({g1}, {g2}), π = pr₁, σ(x) = (x, y₀)",
        (("Theorem 5.2", "finiteness of sections excludes products; constant sections exist"),),
        ModuliDescription(ModuliKind.UNKNOWN, "contains the constant sections"),
        base_genus=g1,
    )


def _elliptic(s: EllipticFibration) -> ClassificationReport:
    f = s.data
    delta = delta_invariant(f)
    if not kodaira_dim_is_one(f):
        return ClassificationReport(
            Verdict.CONDITIONAL,
            "φ: S → B elliptic, κ(S) ≠ 1",
            (("Lemma 4.7", f"δ(φ) = {delta} ≤ 0, so κ(S) ≠ 1 and this branch does not apply"),),
            ModuliDescription(ModuliKind.UNKNOWN),
            condition="δ(φ) ≤ 0: classify through the κ ≤ 0 branches",
            base_genus=f.g_B if s.pi_equals_phi else s.g_C,
        )
    kappa = ("Lemma 4.7", f"δ(φ) = {delta} > 0, so κ(S) = 1")
    deg = section_normal_degree(f, f.g_B, SectionCase.SECTION_OF_PI)
    if s.pi_equals_phi:
        if not s.smooth:
            moduli = ModuliDescription(ModuliKind.ISOLATED_REDUCED_POINTS, f"section normal degree {deg}")
            why = ("Theorem 4.8", "π is not a smooth elliptic fibration: reduced isolated points")
        elif s.base_action is not None:
            moduli = moduli_of_sections(s)
            why = ("Theorem 6.1", "S = (D×E)/G: E/G or isolated points according to the action on E")
        else:
            moduli = ModuliDescription(ModuliKind.UNKNOWN, "smooth π without a (D×E)/G presentation")
            why = ("Theorem 6.1", "needs a (D×E)/G presentation")
        return ClassificationReport(
            Verdict.CONDITIONAL,
            "π = φ: S → B, σ a section of φ",
            (kappa, ("Remark 2", "π = φ: sections are k(B)-points of the generic cubic fibre"), why),
            moduli,
            condition="π = φ: a section of φ must be asserted",
            base_genus=f.g_B,
        )
    if s.g_C >= 1:
        product_like = s.smooth and s.g_C == 1 and s.base_action is None
        if not product_like:
            return ClassificationReport(
                Verdict.NO, "none",
                (kappa, (M5, "π ≠ φ with g(C) ≥ 1 forces S ≅ B×C with elliptic C; the given fibration is not such a product")),
                EMPTY,
            )
        return ClassificationReport(
            Verdict.YES,
            "S ≅ B×C, φ = pr₁, π = pr₂",
            (kappa, (M5, "π ≠ φ with g(C) ≥ 1: S ≅ B×C")),
            ModuliDescription(ModuliKind.UNKNOWN, "sections of pr₂ are maps C → B"),
            base_genus=s.g_C,
        )
    return ClassificationReport(
        Verdict.CONDITIONAL,
        "π: S → ℙ¹ with π ≠ φ",
        (kappa, ("Theorem 4.8", "π is not a smooth elliptic fibration: reduced isolated points")),
        ModuliDescription(ModuliKind.ISOLATED_REDUCED_POINTS, "g(C) = 0"),
        condition="π ≠ φ with g(C) = 0: a section must be asserted",
        base_genus=0,
    )


def _general_type(is_product: bool) -> ClassificationReport:
    if is_product:
        return ClassificationReport(
            Verdict.YES,
            "S ≅ C×C′, π = pr₁, σ(x) = (x, y₀)",
            (("Theorem 5.2", "products are excluded from finiteness; constant sections exist"),),
            ModuliDescription(ModuliKind.UNKNOWN, "contains the constant sections"),
        )
    return ClassificationReport(
        Verdict.CONDITIONAL,
        "π: S → C any fibration, σ a section",
        (("Theorem 5.2", "S is not a product, so π has only finitely many sections"),),
        ModuliDescription(ModuliKind.FINITE_SET, "finitely many sections of π"),
        condition="a fibration with a section must be asserted",
    )


def blowup_transfer(report: ClassificationReport, points: int = 1) -> ClassificationReport:
    """Lift a classification along a blow-up ``phi: S′ → S`` at ``points`` points.

    The section lifts as the strict transform; the verdict and the moduli
    kind are unchanged.  The converse (descending from ``S′``) is only
    available when the base of ``pi`` has positive genus.
    """
    reasons = list(report.reasons)
    reasons.append((P1, "σ′ = φ|_{C′}⁻¹ ∘ σ gives a unique lifted law with φ a homomorphism"))
    if report.base_genus is not None and report.base_genus >= 1:
        reasons.append((P2, "g(C) ≥ 1: laws on S′ and on its minimal model correspond"))
    else:
        reasons.append((P2, "g(C) = 0 or unknown: the blow-down direction needs further study"))
    structure = report.structure
    if report.verdict is not Verdict.NO:
        structure = f"{structure}; blown up at {points} point(s), σ′ = φ|_{{C′}}⁻¹ ∘ σ"
    return replace(report, structure=structure, reasons=tuple(reasons))


def classify(s: SurfaceDescriptor) -> ClassificationReport:
    if isinstance(s, Abelian):
        return _abelian()
    if isinstance(s, Bielliptic):
        return _bielliptic(s.type)
    if isinstance(s, Enriques):
        return _enriques()
    if isinstance(s, K3):
        return _k3(s.generic)
    if isinstance(s, Ruled):
        return _ruled(s)
    if isinstance(s, ProductCurves):
        return _product(s)
    if isinstance(s, EllipticFibration):
        return _elliptic(s)
    if isinstance(s, GeneralType):
        return _general_type(s.is_product)
    if isinstance(s, Blowup):
        return blowup_transfer(classify(s.inner), s.points)
    raise InvalidDescriptorError(f"unknown descriptor {s!r}")
