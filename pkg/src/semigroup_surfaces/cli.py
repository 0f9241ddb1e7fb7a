"""Command-line front end.

    semigroup-surfaces classify --input surface.json [--format text|machine]
    semigroup-surfaces verify   --input surface.json [--torsion N]
    semigroup-surfaces moduli   --input surface.json
    semigroup-surfaces cone     --input ruled.json

The input is a JSON object ``{"surface": {...}}``; ``cone`` also reads an
optional ``"classes": [[a, b], ...]`` list.  ``--input -`` reads stdin.
Exit status: 0 success, 1 invalid input, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import enum
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import product
from typing import Any

from .classifier import (
    Abelian,
    Bielliptic,
    Blowup,
    ClassificationReport,
    EllipticFibration,
    Enriques,
    GeneralType,
    K3,
    ProductCurves,
    Ruled,
    SurfaceDescriptor,
    Verdict,
    classify,
    explain,
)
from .errors import InternalInvariantError, ParseError, SchemaError, SurfaceError
from .fibration_numerics import FiberShape, FibrationData, KodairaFiberTag
from .group_actions import (
    ActionGenerator,
    GroupAction,
    common_fixed_points_on_F,
    enumerate_elements,
    instantiate_bielliptic,
)
from .lattice_tori import AffineTorusMap, CMScalar, FieldTag, TorusPoint, add_points, torsion_points
from .ruled_numerics import (
    FIBRE,
    NumClass,
    RuledSurfaceData,
    canonical_class,
    is_ample,
    is_nef,
    solve_second_fibration_class,
)
from .semigroup_laws import BaseLaw, InducedLaw, check_associative, cyclic_product_universe, product_law

TORSION_RANGE = range(1, 13)


class Subcommand(enum.Enum):
    CLASSIFY = "classify"
    VERIFY_LAW = "verify"
    MODULI = "moduli"
    CONE = "cone"


class OutputFormat(enum.Enum):
    TEXT = "text"
    MACHINE = "machine"


@dataclass(frozen=True)
class RunConfig:
    subcommand: Subcommand
    input_path: str
    torsion_level: int = 4
    output_format: OutputFormat = OutputFormat.TEXT

    def __post_init__(self) -> None:
        if self.torsion_level not in TORSION_RANGE:
            raise SchemaError(f"torsion level must be in 1..12, got {self.torsion_level}", path="--torsion")


# --- parsing ---------------------------------------------------------------

def _get(obj: dict, key: str, path: str, kind: type | tuple, default: Any = ...) -> Any:
    if key not in obj:
        if default is ...:
            raise SchemaError(f"missing field {key!r}", path=path)
        return default
    value = obj[key]
    # bool is an int subclass; keep the two apart
    if isinstance(value, bool) and kind is not bool:
        raise SchemaError(f"{key!r} must be {_kind_name(kind)}", path=f"{path}.{key}")
    if not isinstance(value, kind):
        raise SchemaError(f"{key!r} must be {_kind_name(kind)}", path=f"{path}.{key}")
    return value


def _kind_name(kind: type | tuple) -> str:
    names = {int: "an integer", bool: "a boolean", dict: "an object", list: "a list", str: "a string"}
    if isinstance(kind, tuple):
        return " or ".join(names.get(k, k.__name__) for k in kind)
    return names.get(kind, kind.__name__)


def _check_keys(obj: dict, allowed: set[str], path: str) -> None:
    extra = sorted(set(obj) - allowed)
    if extra:
        raise SchemaError(f"unknown field(s) {extra}", path=path)


def _nonneg(value: int, path: str) -> int:
    if value < 0:
        raise SchemaError(f"must be nonnegative, got {value}", path=path)
    return value


def _rational(value: Any, path: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise SchemaError("rationals are integers or strings 'p/q'", path=path)
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise SchemaError(f"not a rational: {value!r}", path=path) from None


def _pair(value: Any, path: str) -> tuple[Fraction, Fraction]:
    if not isinstance(value, list) or len(value) != 2:
        raise SchemaError("expected a pair [x, y]", path=path)
    return _rational(value[0], f"{path}[0]"), _rational(value[1], f"{path}[1]")


def _field(value: Any, path: str) -> FieldTag:
    try:
        return FieldTag(value)
    except ValueError:
        raise SchemaError(f"field must be one of {[f.value for f in FieldTag]}", path=path) from None


def _parse_action(obj: Any, path: str) -> GroupAction:
    if not isinstance(obj, dict):
        raise SchemaError("base_action must be an object", path=path)
    if "bielliptic_type" in obj:
        _check_keys(obj, {"bielliptic_type"}, path)
        t = _get(obj, "bielliptic_type", path, int)
        if t not in range(1, 8):
            raise SchemaError("bielliptic_type must be 1..7", path=f"{path}.bielliptic_type")
        return instantiate_bielliptic(t)
    _check_keys(obj, {"E_field", "F_field", "order", "generators"}, path)
    e_field = _field(_get(obj, "E_field", path, str, "generic"), f"{path}.E_field")
    f_field = _field(_get(obj, "F_field", path, str, "generic"), f"{path}.F_field")
    order = _get(obj, "order", path, int)
    gens = []
    for i, g in enumerate(_get(obj, "generators", path, list)):
        gp = f"{path}.generators[{i}]"
        if not isinstance(g, dict):
            raise SchemaError("generator must be an object", path=gp)
        _check_keys(g, {"E_shift", "F_linear", "F_shift"}, gp)
        e_shift = TorusPoint(*_pair(_get(g, "E_shift", gp, list), f"{gp}.E_shift"))
        re, im = _pair(_get(g, "F_linear", gp, list, [1, 0]), f"{gp}.F_linear")
        f_shift = TorusPoint(*_pair(_get(g, "F_shift", gp, list, [0, 0]), f"{gp}.F_shift"))
        try:
            f_map = AffineTorusMap(CMScalar(re, im, f_field), f_shift)
        except ValueError as exc:
            raise SchemaError(str(exc), path=f"{gp}.F_linear") from None
        gens.append(ActionGenerator(AffineTorusMap.translation(e_shift, e_field), f_map))
    return GroupAction(e_field, f_field, tuple(gens), order)


def _parse_fiber(obj: Any, path: str) -> KodairaFiberTag:
    if not isinstance(obj, dict):
        raise SchemaError("fiber must be an object", path=path)
    _check_keys(obj, {"shape", "m", "inner"}, path)
    try:
        shape = FiberShape(_get(obj, "shape", path, str))
        inner = obj.get("inner")
        return KodairaFiberTag(shape, _get(obj, "m", path, int, None),
                               FiberShape(inner) if inner is not None else None)
    except ValueError:
        raise SchemaError(f"unknown fiber shape; expected one of {[s.value for s in FiberShape]}",
                          path=path) from None


def _parse_fibration(obj: dict, path: str) -> EllipticFibration:
    _check_keys(obj, {"kind", "g_B", "chi", "multiplicities", "fibers", "smooth",
                      "base_action", "pi_equals_phi", "g_C"}, path)
    g_B = _nonneg(_get(obj, "g_B", path, int), f"{path}.g_B")
    chi = _get(obj, "chi", path, int)
    if "multiplicities" in obj and "fibers" in obj:
        raise SchemaError("give either multiplicities or fibers", path=path)
    if "fibers" in obj:
        fibers = tuple(_parse_fiber(f, f"{path}.fibers[{i}]") for i, f in enumerate(_get(obj, "fibers", path, list)))
    else:
        ms = _get(obj, "multiplicities", path, list, [])
        for i, m in enumerate(ms):
            if isinstance(m, bool) or not isinstance(m, int) or m < 2:
                raise SchemaError("multiplicities are integers >= 2", path=f"{path}.multiplicities[{i}]")
        fibers = tuple(KodairaFiberTag.multiple(m) for m in ms)
    action = obj.get("base_action")
    g_C = _get(obj, "g_C", path, int, None)
    return EllipticFibration(
        FibrationData(g_B, chi, fibers),
        _get(obj, "smooth", path, bool),
        _parse_action(action, f"{path}.base_action") if action is not None else None,
        _get(obj, "pi_equals_phi", path, bool, True),
        g_C,
    )


def _parse_surface(obj: Any, path: str) -> SurfaceDescriptor:
    if not isinstance(obj, dict):
        raise SchemaError("surface must be an object", path=path)
    kind = _get(obj, "kind", path, str)
    try:
        if kind == "abelian":
            _check_keys(obj, {"kind"}, path)
            return Abelian()
        if kind == "enriques":
            _check_keys(obj, {"kind"}, path)
            return Enriques()
        if kind == "bielliptic":
            _check_keys(obj, {"kind", "type"}, path)
            return Bielliptic(_get(obj, "type", path, int))
        if kind == "k3":
            _check_keys(obj, {"kind", "generic"}, path)
            return K3(_get(obj, "generic", path, bool))
        if kind == "ruled":
            _check_keys(obj, {"kind", "g", "e", "d"}, path)
            g = _nonneg(_get(obj, "g", path, int), f"{path}.g")
            return Ruled(RuledSurfaceData(g, _get(obj, "e", path, int)), _get(obj, "d", path, int, None))
        if kind == "product":
            _check_keys(obj, {"kind", "g1", "g2"}, path)
            return ProductCurves(_get(obj, "g1", path, int), _get(obj, "g2", path, int))
        if kind == "elliptic_fibration":
            return _parse_fibration(obj, path)
        if kind == "general_type":
            _check_keys(obj, {"kind", "is_product"}, path)
            return GeneralType(_get(obj, "is_product", path, bool))
        if kind == "blowup":
            _check_keys(obj, {"kind", "inner", "points"}, path)
            return Blowup(_parse_surface(_get(obj, "inner", path, dict), f"{path}.inner"),
                          _get(obj, "points", path, int, 1))
    except SchemaError:
        raise
    except SurfaceError as exc:
        # constructor-level validation (Nagata, bielliptic type, ...) is a schema failure here
        raise SchemaError(f"{exc.code}: {exc}", path=path) from None
    raise SchemaError(f"unknown kind {kind!r}", path=f"{path}.kind")


def _load(data: bytes) -> dict:
    try:
        doc = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError(str(exc)) from None
    if not isinstance(doc, dict) or "surface" not in doc:
        raise SchemaError("top level must be an object with key 'surface'", path="$")
    return doc


def parse_descriptor(data: bytes) -> SurfaceDescriptor:
    return _parse_surface(_load(data)["surface"], "surface")


def parse_classes(data: bytes) -> list[NumClass]:
    raw = _load(data).get("classes", [])
    if not isinstance(raw, list):
        raise SchemaError("classes must be a list", path="classes")
    out = []
    for i, c in enumerate(raw):
        if (not isinstance(c, list) or len(c) != 2
                or any(isinstance(x, bool) or not isinstance(x, int) for x in c)):
            raise SchemaError("a class is a pair of integers [a, b]", path=f"classes[{i}]")
        out.append(NumClass(*c))
    return out


# --- serialisation ---------------------------------------------------------

def _frac(x: Fraction) -> int | str:
    return int(x) if x.denominator == 1 else str(x)


def _serialize_action(g: GroupAction) -> dict:
    return {
        "E_field": g.E_field.value,
        "F_field": g.F_field.value,
        "order": g.declared_order,
        "generators": [
            {"E_shift": [_frac(gen.on_E.shift.p), _frac(gen.on_E.shift.q)],
             "F_linear": [_frac(gen.on_F.linear.re), _frac(gen.on_F.linear.im_coeff)],
             "F_shift": [_frac(gen.on_F.shift.p), _frac(gen.on_F.shift.q)]}
            for gen in g.generators
        ],
    }


def _serialize_surface(d: SurfaceDescriptor) -> dict:
    out: dict[str, Any] = {"kind": d.kind}
    if isinstance(d, Bielliptic):
        out["type"] = d.type
    elif isinstance(d, K3):
        out["generic"] = d.generic
    elif isinstance(d, Ruled):
        out.update(g=d.data.g, e=d.data.e)
        if d.twist_d is not None:
            out["d"] = d.twist_d
    elif isinstance(d, ProductCurves):
        out.update(g1=d.g1, g2=d.g2)
    elif isinstance(d, EllipticFibration):
        f = d.data
        out.update(g_B=f.g_B, chi=f.chi_OS, smooth=d.smooth, pi_equals_phi=d.pi_equals_phi)
        if all(t.is_multiple_of_smooth for t in f.fibers):
            out["multiplicities"] = list(f.multiplicities)
        else:
            out["fibers"] = [{k: v for k, v in (("shape", t.shape.value), ("m", t.m),
                                                ("inner", t.inner.value if t.inner else None)) if v is not None}
                             for t in f.fibers]
        if d.base_action is not None:
            out["base_action"] = _serialize_action(d.base_action)
        if d.g_C is not None:
            out["g_C"] = d.g_C
    elif isinstance(d, GeneralType):
        out["is_product"] = d.is_product
    elif isinstance(d, Blowup):
        out.update(inner=_serialize_surface(d.inner), points=d.points)
    return out


def serialize_descriptor(d: SurfaceDescriptor) -> bytes:
    return json.dumps({"surface": _serialize_surface(d)}, sort_keys=True, ensure_ascii=False).encode("utf-8")


# --- law models for VERIFY -------------------------------------------------

def _bielliptic_model(t: int, n: int) -> tuple[InducedLaw, list]:
    """``(E x F)/G`` sampled on orbits of torsion points, with ``sigma(x) = [(x, P)]``."""
    g = instantiate_bielliptic(t)
    elements = enumerate_elements(g)
    fixed = common_fixed_points_on_F(g)
    p = min(fixed)
    shifts = [el[0].shift for el in elements]
    # E[n] + (translations of G) is a subgroup; F[2] is stable under the linear parts and P is fixed
    e_pts = sorted({a + s for a in torsion_points(n) for s in shifts})
    f_pts = sorted(set(torsion_points(2)) | {p})

    @cache
    def orbit(e: TorusPoint, f: TorusPoint) -> tuple:
        return min((on_E(e), on_F(f)) for on_E, on_F in elements)

    @cache
    def base_class(e: TorusPoint) -> TorusPoint:
        return min(s + e for s in shifts)

    law = InducedLaw(
        retraction=lambda s: base_class(s[0]),
        section=lambda c: orbit(c, p),
        base_law=BaseLaw.ADD,
        add=lambda a, b: base_class(add_points(a, b)),
    )
    universe = sorted({orbit(e, f) for e in e_pts for f in f_pts})
    return law, universe


def _label_model(n: int) -> tuple[InducedLaw, list]:
    """A curve sampled as ``n`` labels with the left-projection law (case ``mu(s1, s2) = sigma(pi s1)``)."""
    law = InducedLaw(lambda s: s[0], lambda c: (c, 0), BaseLaw.LEFT)
    return law, [(c, f) for c, f in product(range(n), repeat=2)]


def _law_for(d: SurfaceDescriptor, n: int) -> tuple[str, InducedLaw, list]:
    while isinstance(d, Blowup):
        d = d.inner
    if isinstance(d, Abelian) or (isinstance(d, ProductCurves) and (d.g1, d.g2) == (1, 1)):
        return "μ = σ(π s₁ + π s₂) on C×E", product_law(BaseLaw.ADD), cyclic_product_universe(n)
    if isinstance(d, Bielliptic):
        law, universe = _bielliptic_model(d.type, n)
        return "μ = σ(π s₁ + π s₂) on (E×F)/G", law, universe
    law, universe = _label_model(n)
    return "μ = σ(π s₁)", law, universe


# --- running ---------------------------------------------------------------

@dataclass
class Outcome:
    report: ClassificationReport | None = None
    extra: list[tuple[str, str]] | None = None
    errors: list[dict] | None = None
    exit_code: int = 0


def _cone_lines(d: SurfaceDescriptor, classes: list[NumClass]) -> list[tuple[str, str]]:
    if not isinstance(d, Ruled):
        raise SchemaError("cone needs a ruled surface", path="surface.kind")
    s = d.data
    k = canonical_class(s)
    f0 = solve_second_fibration_class(s, FIBRE)
    lines = [("K_S", f"({k.a},{k.b})"), ("f₀", f"({f0.a},{f0.b})")]
    for c in classes:
        lines.append((f"({c.a},{c.b})", f"nef={str(is_nef(c, s)).lower()} ample={str(is_ample(c, s)).lower()}"))
    return lines


def execute(config: RunConfig, data: bytes) -> Outcome:
    try:
        d = parse_descriptor(data)
        if config.subcommand is Subcommand.CONE:
            return Outcome(classify(d), _cone_lines(d, parse_classes(data)))
        report = classify(d)
        if config.subcommand is Subcommand.VERIFY_LAW:
            if report.verdict is not Verdict.YES:
                return Outcome(report, [("verify", f"SKIP: verdict is {report.verdict.value}, no law to check")])
            name, law, universe = _law_for(d, config.torsion_level)
            result = check_associative(law, universe, strict_section=True)
            if result:
                line = f"PASS: {name}, {len(universe)} points, {result.triples_checked} triples"
            else:
                a, b, c = result.counterexample
                line = f"FAIL: {name}, counterexample ({a}, {b}, {c})"
            return Outcome(report, [("verify", line)])
        return Outcome(report)
    except InternalInvariantError as exc:
        return Outcome(errors=[exc.to_record()], exit_code=2)
    except SurfaceError as exc:
        return Outcome(errors=[exc.to_record()], exit_code=1)


def render(config: RunConfig, out: Outcome) -> str:
    r = out.report
    if config.output_format is OutputFormat.MACHINE:
        reasons = [{"tag": t, "text": x} for t, x in (r.reasons if r else ())]
        reasons += [{"tag": t, "text": x} for t, x in (out.extra or [])]
        doc = {
            "verdict": r.verdict_text if r else None,
            "structure": r.structure if r else None,
            "reasons": reasons,
            "moduli": {"kind": r.moduli.kind.value, "detail": r.moduli.detail} if r else None,
            "errors": out.errors or [],
        }
        return json.dumps(doc, sort_keys=True, ensure_ascii=False)
    if out.errors:
        return "\n".join(f"error {e['code']}" + (f" at {e['path']}" if "path" in e else "") + f": {e['message']}"
                         for e in out.errors)
    if config.subcommand is Subcommand.MODULI:
        return f"moduli: {r.moduli}"
    if config.subcommand is Subcommand.CONE:
        return "\n".join(f"{t} = {x}" if t in ("K_S", "f₀") else f"{t}: {x}" for t, x in out.extra)
    text = explain(r)
    if out.extra:
        text += "\n" + "\n".join(x for _, x in out.extra)
    return text


def run(config: RunConfig, data: bytes | None = None) -> tuple[int, str]:
    if data is None:
        try:
            if config.input_path == "-":
                data = sys.stdin.buffer.read()
            else:
                with open(config.input_path, "rb") as fh:
                    data = fh.read()
        except OSError as exc:
            out = Outcome(errors=[ParseError(f"cannot read {config.input_path}: {exc.strerror}").to_record()],
                          exit_code=1)
            return out.exit_code, render(config, out)
    out = execute(config, data)
    return out.exit_code, render(config, out)


class _Parser(argparse.ArgumentParser):
    # usage errors are invalid input (exit 1); exit 2 is reserved for invariant violations
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="semigroup-surfaces",
                 description="Algebraic semigroup structures on smooth projective surfaces.")
    sub = ap.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    for cmd, help_text in [("classify", "decide existence and shape of non-trivial laws"),
                           ("verify", "check associativity of the induced law on torsion points"),
                           ("moduli", "describe the space of sections"),
                           ("cone", "canonical class, f0 and nef/ample tests on a ruled surface")]:
        p = sub.add_parser(cmd, help=help_text)
        p.add_argument("--input", required=True, help="JSON descriptor file, or - for stdin")
        p.add_argument("--format", choices=[f.value for f in OutputFormat], default="text")
        p.add_argument("--torsion", type=int, default=4, help="torsion level for verify (1..12)")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    fmt = OutputFormat(args.format)
    try:
        config = RunConfig(Subcommand(args.subcommand), args.input, args.torsion, fmt)
    except SchemaError as exc:
        config = RunConfig(Subcommand(args.subcommand), args.input, 4, fmt)
        print(render(config, Outcome(errors=[exc.to_record()], exit_code=1)))
        return 1
    code, text = run(config)
    print(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
