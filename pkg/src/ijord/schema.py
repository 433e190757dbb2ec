"""JSON formats for descriptors, registries and reports.

Every document carries ``"version": "1"`` and a ``kind``. Documents are
validated with jsonschema before any domain object is built, and unknown
fields are rejected. Polynomials are lists of coefficient codes in
ascending degree, leading 1 included. Rationals are strings "p/q" (or "p").
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

import jsonschema

from .endo import DualType, EndoClassInvariants
from .errors import ValidationError
from .ffpoly import Involution, SelfDualPoly, sign_of_unipotent_pole
from .jordan import (
    GeneralResult,
    IdentityReport,
    IJordMultiset,
    SimpleCuspidalDescriptor,
    descriptor_context,
    make_descriptor,
)
from .lusztig import GroupKind, GroupType, datum_validate
from .params import (
    IrrepDescriptor,
    LParamShape,
    Parity,
    QuadChar,
    Registry,
    WildOrbit,
    is_cuspidal,
    is_regular,
    make_registry,
    packet_counts,
)

VERSION = "1"


class SchemaError(ValidationError):
    """Malformed or schema-violating input; ``line`` is 1-based when known."""

    def __init__(self, message, line=None, column=None, path=""):
        super().__init__(message)
        self.line = line
        self.column = column
        self.path = path

    def diagnostic(self, source="<input>") -> str:
        where = f"{source}:{self.line}" if self.line else source
        if self.column:
            where += f":{self.column}"
        loc = f" at {self.path}" if self.path else ""
        return f"{where}: {self.args[0]}{loc}"


# ---------------------------------------------------------------------------
# schemas

_nat = {"type": "integer", "minimum": 0}
_pos = {"type": "integer", "minimum": 1}
_rational = {"type": "string", "pattern": r"^-?\d+(/[1-9]\d*)?$"}
_poly = {"type": "array", "items": _nat, "minItems": 2}


def _obj(props, required=None):
    return {
        "type": "object",
        "properties": props,
        "required": list(props) if required is None else required,
        "additionalProperties": False,
    }


_header = {"version": {"const": VERSION}, "kind": {"type": "string"}}

_endo = _obj(
    {
        "label": {"type": "string", "minLength": 1},
        "degree": _pos,
        "e": _pos,
        "f": _pos,
        "dual_type": {"enum": [t.value for t in DualType]},
        "square_label": {"type": "string", "minLength": 1},
    },
    required=["label", "degree", "e", "f", "dual_type"],
)

_datum = _obj(
    {
        "group_type": {"enum": [k.value for k in GroupKind]},
        "dual_dim": _nat,
        "entries": {
            "type": "array",
            "items": _obj({"poly": _poly, "a": _pos, "eigen_type": {"enum": [1, -1]}}, required=["poly", "a"]),
        },
    }
)

_involution = _obj(
    {"factor": {"enum": [0, 1]}, "degree": _pos, "sigma": {"enum": [s.value for s in Involution]}}
)

_simple_body = {
    "q": {"type": "integer", "minimum": 3},
    "endo": _endo,
    "N": _nat,
    "data": {"type": "array", "items": _datum, "minItems": 2, "maxItems": 2},
    "involutions": {"type": "array", "items": _involution},
    "chi_twist": {"type": "boolean"},
}
_simple_required = ["q", "endo", "N", "data"]

SIMPLE = _obj({**_header, "kind": {"const": "simple_cuspidal"}, **_simple_body},
              required=["version", "kind", *_simple_required])

GENERAL = _obj(
    {
        **_header,
        "kind": {"const": "general_cuspidal"},
        "N": _nat,
        "parts": {"type": "array", "items": _obj(_simple_body, required=_simple_required), "minItems": 1},
    },
    required=["version", "kind", "parts"],
)

_registry_body = {
    "endo_classes": {
        "type": "array",
        "items": _obj(
            {
                "label": {"type": "string", "minLength": 1},
                "degree": _pos,
                "e": _pos,
                "f": _pos,
                "dual_type": {"enum": [t.value for t in DualType] + [None]},
                "self_dual": {"type": "boolean"},
            }
        ),
    },
    "square": {"type": "object", "additionalProperties": {"type": "string"}},
    "orbits": {
        "type": "array",
        "items": _obj(
            {"label": {"type": "string"}, "dim": _pos, "self_dual": {"type": "boolean"},
             "paired_endo": {"type": "string"}}
        ),
    },
    "irreps": {
        "type": "array",
        "items": _obj(
            {
                "id": {"type": "string", "minLength": 1},
                "dim": _pos,
                "parity": {"enum": [p.value for p in Parity]},
                "det": {"enum": [c.name_ for c in QuadChar]},
                "orbit": {"type": "string"},
                "orbit_mult": _pos,
            }
        ),
    },
}

REGISTRY = _obj({**_header, "kind": {"const": "lparam_registry"}, **_registry_body})

ENUMERATION = _obj(
    {
        **_header,
        "kind": {"const": "enumeration_request"},
        "N": _nat,
        "registry": _obj(_registry_body),
        "bound": _pos,
    },
    required=["version", "kind", "N", "registry"],
)

_row = _obj(
    {
        "poly": _poly,
        "poly_text": {"type": "string"},
        "m": _pos,
        "deg_rho": _pos,
        "r0": _rational,
        "r1": _rational,
        "real_parts": {"type": "array", "items": _rational, "minItems": 2, "maxItems": 2},
        "blocks": {"type": "array", "items": _pos},
        "contribution": _nat,
    }
)

_part_report = _obj(
    {
        "label": {"type": "string"},
        "N": _nat,
        "depth_zero": {"type": "boolean"},
        "chi_twist": {"type": "boolean"},
        "total": _nat,
        "expected": _nat,
        "ok": {"type": "boolean"},
        "rows": {"type": "array", "items": _row},
    }
)

_entry = _obj(
    {
        "label": {"type": "string"},
        "poly": _poly,
        "twisted": {"type": "boolean"},
        "m": _pos,
        "deg_rho": _pos,
        "multiplicity": _pos,
    }
)

REPORT = _obj(
    {
        **_header,
        "kind": {"const": "ijord_report"},
        "q": {"type": "integer"},
        "N": _nat,
        "total": _nat,
        "expected": _nat,
        "ok": {"type": "boolean"},
        "multiset": {"type": "array", "items": _entry},
        "parts": {"type": "array", "items": _part_report},
    }
)

SCHEMAS = {
    "simple_cuspidal": SIMPLE,
    "general_cuspidal": GENERAL,
    "lparam_registry": REGISTRY,
    "enumeration_request": ENUMERATION,
    "ijord_report": REPORT,
}


# ---------------------------------------------------------------------------
# loading with diagnostics


def _line_of_path(text: str, path) -> int | None:
    """Best-effort line of the deepest object key in ``path``."""
    pos = 0
    found = None
    for step in path:
        if isinstance(step, str):
            m = re.compile(r'"%s"\s*:' % re.escape(step)).search(text, pos)
            if not m:
                break
            pos = m.end()
            found = m.start()
    return None if found is None else text.count("\n", 0, found) + 1


def load_document(text: str, kinds=None) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object", 1)
    kind = doc.get("kind")
    if kind not in SCHEMAS:
        raise SchemaError(f"unknown kind {kind!r}", _line_of_path(text, ["kind"]), path="/kind")
    if kinds is not None and kind not in kinds:
        raise SchemaError(f"expected one of {sorted(kinds)}, got {kind!r}", _line_of_path(text, ["kind"]))
    errors = sorted(jsonschema.Draft202012Validator(SCHEMAS[kind]).iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        path = list(err.absolute_path)
        pointer = "/" + "/".join(str(p) for p in path)
        if err.validator == "additionalProperties":
            extra = re.findall(r"'([^']*)' (?:was|were) unexpected", err.message) or re.findall(r"'([^']*)'", err.message)
            path = path + extra[:1]
        raise SchemaError(err.message, _line_of_path(text, path), path=pointer)
    return doc


def load_file(path, kinds=None) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror}") from None
    return load_document(text, kinds)


# ---------------------------------------------------------------------------
# descriptors


def _endo_from(d) -> EndoClassInvariants:
    return EndoClassInvariants(d["label"], d["degree"], d["e"], d["f"], DualType(d["dual_type"]),
                               square_label=d.get("square_label"))


def _simple_from(d) -> SimpleCuspidalDescriptor:
    endo = _endo_from(d["endo"])
    ctx = descriptor_context(d["q"], endo)
    data = []
    for dd in d["data"]:
        a_map, eigen = {}, {}
        for ent in dd["entries"]:
            P = SelfDualPoly.of(ctx, ent["poly"])
            if P in a_map:
                raise ValidationError(f"polynomial {P} listed twice")
            a_map[P] = ent["a"]
            if "eigen_type" in ent:
                pole = sign_of_unipotent_pole(P)
                if pole is None:
                    raise ValidationError(f"eigen_type given at {P}, which is not X-1 or X+1")
                eigen[pole] = ent["eigen_type"]
        data.append(datum_validate(GroupType(GroupKind(dd["group_type"]), ctx), dd["dual_dim"], a_map, eigen))
    invs = {}
    for inv in d.get("involutions", []):
        key = (inv["factor"], inv["degree"])
        if key in invs:
            raise ValidationError(f"involution for factor {key[0]}, degree {key[1]} given twice")
        invs[key] = Involution(inv["sigma"])
    return make_descriptor(d["q"], endo, d["N"], data, invs, d.get("chi_twist", False))


def parse_descriptor(doc: dict):
    """A SimpleCuspidalDescriptor, or (list of descriptors, N or None) for a general document."""
    if doc["kind"] == "simple_cuspidal":
        return _simple_from(doc)
    if doc["kind"] == "general_cuspidal":
        return [_simple_from(p) for p in doc["parts"]], doc.get("N")
    raise SchemaError(f"{doc['kind']} is not a cuspidal descriptor")


def _endo_json(endo: EndoClassInvariants) -> dict:
    out = {"label": endo.label, "degree": endo.degree, "e": endo.e, "f": endo.f, "dual_type": endo.dual_type.value}
    if endo.square_label:
        out["square_label"] = endo.square_label
    return out


def _simple_body_json(desc: SimpleCuspidalDescriptor) -> dict:
    data = []
    for d in desc.data:
        entries = []
        for P, a in sorted(d.a_map.items()):
            ent = {"poly": list(P.coeffs), "a": a}
            pole = sign_of_unipotent_pole(P)
            if pole in d.eigen_types:
                ent["eigen_type"] = d.eigen_types[pole]
            entries.append(ent)
        data.append({"group_type": d.kind.value, "dual_dim": d.dual_dim, "entries": entries})
    invs = [
        {"factor": t, "degree": m, "sigma": s.value}
        for (t, m), s in sorted(desc.involutions.items(), key=lambda kv: kv[0])
    ]
    return {
        "q": desc.q,
        "endo": _endo_json(desc.endo),
        "N": desc.N,
        "data": data,
        "involutions": invs,
        "chi_twist": desc.chi_twist,
    }


def descriptor_json(desc) -> dict:
    if isinstance(desc, SimpleCuspidalDescriptor):
        return {"version": VERSION, "kind": "simple_cuspidal", **_simple_body_json(desc)}
    parts, N = desc
    out = {"version": VERSION, "kind": "general_cuspidal"}
    if N is not None:
        out["N"] = N
    out["parts"] = [_simple_body_json(p) for p in parts]
    return out


# ---------------------------------------------------------------------------
# registries


def _registry_from(body) -> Registry:
    classes = [
        EndoClassInvariants(c["label"], c["degree"], c["e"], c["f"],
                            None if c["dual_type"] is None else DualType(c["dual_type"]), c["self_dual"])
        for c in body["endo_classes"]
    ]
    orbits = [WildOrbit(o["label"], o["dim"], o["self_dual"], o["paired_endo"]) for o in body["orbits"]]
    irreps = [
        IrrepDescriptor(r["id"], r["dim"], Parity(r["parity"]), QuadChar.parse(r["det"]), r["orbit"], r["orbit_mult"])
        for r in body["irreps"]
    ]
    return make_registry(classes, body["square"], orbits, irreps)


def parse_registry(doc: dict) -> Registry:
    if doc["kind"] == "lparam_registry":
        return _registry_from(doc)
    if doc["kind"] == "enumeration_request":
        return _registry_from(doc["registry"])
    raise SchemaError(f"{doc['kind']} carries no registry")


def registry_json(reg: Registry) -> dict:
    return {
        "version": VERSION,
        "kind": "lparam_registry",
        "endo_classes": [
            {"label": ec.label, "degree": ec.degree, "e": ec.e, "f": ec.f,
             "dual_type": None if ec.dual_type is None else ec.dual_type.value, "self_dual": ec.self_dual}
            for ec in sorted(reg.endo.values(), key=lambda e: e.label)
        ],
        "square": dict(sorted(reg.square.items())),
        "orbits": [
            {"label": o.label, "dim": o.dim, "self_dual": o.self_dual, "paired_endo": o.paired_endo}
            for o in sorted(reg.orbits.values())
        ],
        "irreps": [
            {"id": r.inertial_id, "dim": r.dim, "parity": r.parity.value, "det": r.det.name_,
             "orbit": r.orbit, "orbit_mult": r.orbit_mult}
            for r in reg.irreps
        ],
    }


# ---------------------------------------------------------------------------
# reports


def fmt_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def _rows_json(report: IdentityReport) -> list:
    return [
        {
            "poly": list(row.poly.coeffs),
            "poly_text": str(row.poly),
            "m": row.params.m,
            "deg_rho": row.deg_rho,
            "r0": fmt_rational(row.params.r0),
            "r1": fmt_rational(row.params.r1),
            "real_parts": [fmt_rational(s) for s in row.real_parts],
            "blocks": list(row.blocks),
            "contribution": row.contribution,
        }
        for row in report.rows
    ]


def _multiset_json(ms: IJordMultiset) -> list:
    return [
        {"label": e.label, "poly": list(e.poly.coeffs), "twisted": e.twisted, "m": e.m, "deg_rho": e.deg_rho,
         "multiplicity": k}
        for e, k in ms.aggregated()
    ]


def report_json(result: GeneralResult) -> dict:
    parts = []
    for rep, chi in zip(result.reports, result.chis):
        parts.append({
            "label": rep.label,
            "N": rep.N,
            "depth_zero": rep.depth_zero,
            "chi_twist": bool(chi),
            "total": rep.total,
            "expected": rep.expected,
            "ok": rep.ok,
            "rows": _rows_json(rep),
        })
    return {
        "version": VERSION,
        "kind": "ijord_report",
        "q": result.parts[0].q,
        "N": result.N,
        "total": result.total,
        "expected": result.expected,
        "ok": result.total == result.expected,
        "multiset": _multiset_json(result.multiset),
        "parts": parts,
    }


def simple_report_json(desc: SimpleCuspidalDescriptor, ms: IJordMultiset, rep: IdentityReport) -> dict:
    return {
        "version": VERSION,
        "kind": "ijord_report",
        "q": desc.q,
        "N": desc.N,
        "total": rep.total,
        "expected": rep.expected,
        "ok": rep.ok,
        "multiset": _multiset_json(ms),
        "parts": [{
            "label": rep.label,
            "N": rep.N,
            "depth_zero": rep.depth_zero,
            "chi_twist": desc.chi_twist,
            "total": rep.total,
            "expected": rep.expected,
            "ok": rep.ok,
            "rows": _rows_json(rep),
        }],
    }


def shape_json(shape: LParamShape) -> dict:
    size, cusp = packet_counts(shape)
    return {
        "blocks": [{"irrep": b.irrep.inertial_id, "m": b.m} for b in shape.blocks],
        "text": str(shape),
        "cuspidal": is_cuspidal(shape),
        "regular": is_regular(shape),
        "packet_size": size,
        "cuspidal_count": cusp,
    }


_FLAT_ARRAY = re.compile(r"\[[^\[\]{}]*\]")


def dumps(doc: dict) -> str:
    """Canonical serialization: sorted keys, two-space indent, arrays of scalars on one line."""
    text = json.dumps(doc, indent=2, sort_keys=True)
    text = _FLAT_ARRAY.sub(lambda m: re.sub(r"\n\s*", " ", m.group()).replace("[ ", "[").replace(" ]", "]"), text)
    return text + "\n"


def parse_report(doc: dict) -> dict:
    """A validated report with rationals as Fractions and polynomials as tuples."""
    jsonschema.validate(doc, REPORT)
    out = dict(doc)
    out["multiset"] = [{**e, "poly": tuple(e["poly"])} for e in doc["multiset"]]
    parts = []
    for p in doc["parts"]:
        rows = []
        for r in p["rows"]:
            rows.append({
                **r,
                "poly": tuple(r["poly"]),
                "r0": parse_rational(r["r0"]),
                "r1": parse_rational(r["r1"]),
                "real_parts": tuple(parse_rational(s) for s in r["real_parts"]),
                "blocks": tuple(r["blocks"]),
            })
        parts.append({**p, "rows": rows})
    out["parts"] = parts
    return out


def unparse_report(rep: dict) -> dict:
    out = dict(rep)
    out["multiset"] = [{**e, "poly": list(e["poly"])} for e in rep["multiset"]]
    out["parts"] = [
        {
            **p,
            "rows": [
                {
                    **r,
                    "poly": list(r["poly"]),
                    "r0": fmt_rational(r["r0"]),
                    "r1": fmt_rational(r["r1"]),
                    "real_parts": [fmt_rational(s) for s in r["real_parts"]],
                    "blocks": list(r["blocks"]),
                }
                for r in p["rows"]
            ],
        }
        for p in rep["parts"]
    ]
    return out
