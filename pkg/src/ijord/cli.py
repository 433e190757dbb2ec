"""Command-line front end.

    ijord compute FILE [--json]
    ijord enumerate-polys --q Q --index {1,2} --m M
    ijord enumerate-params [--n N] --registry FILE
    ijord verify [--seed S] [--bound B] [--inject-mutant]

Exit status: 0 ok, 1 validation failure, 2 identity or invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from . import schema
from .errors import IdentityViolation, InvariantViolation, ValidationError
from .ffpoly import context_make, enumerate_self_dual_irreducible
from .jordan import GeneralResult, identity_check, ijord_general, ijord_simple
from .params import enumerate_cuspidal_shapes, is_cuspidal, is_regular, packet_counts
from .verify import VerifyConfig, run_all

EXIT_OK, EXIT_INVALID, EXIT_VIOLATION = 0, 1, 2


def _table(rows, header) -> list[str]:
    cols = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cols) for i in range(len(header))]
    out = []
    for k, r in enumerate(cols):
        out.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        if k == 0:
            out.append("  ".join("-" * w for w in widths))
    return out


def render_report(doc: dict) -> str:
    """Human-readable form of an ijord_report document."""
    lines = [f"q = {doc['q']}, N = {doc['N']}"]
    for part in doc["parts"]:
        tw = ", chi-twisted" if part["chi_twist"] else ""
        dz = ", depth zero" if part["depth_zero"] else ""
        lines.append("")
        lines.append(f"[{part['label']}] N = {part['N']}{dz}{tw}")
        rows = [
            (r["poly_text"], r["m"], r["deg_rho"], r["r0"], r["r1"], ", ".join(r["real_parts"]),
             " ".join(map(str, r["blocks"])) or "-", r["contribution"])
            for r in part["rows"]
        ]
        lines += _table(rows, ["Q", "m", "deg rho", "r0", "r1", "real parts", "blocks", "contribution"])
        verdict = "ok" if part["ok"] else "VIOLATED"
        lines.append(f"sum m*deg(rho) = {part['total']}, expected {part['expected']}: {verdict}")
    lines.append("")
    lines.append("IJord:")
    ms = [
        (e["label"], "[" + " ".join(map(str, e["poly"])) + "]", "yes" if e["twisted"] else "no", e["m"], e["deg_rho"],
         e["multiplicity"])
        for e in doc["multiset"]
    ]
    lines += _table(ms, ["class", "poly", "twisted", "m", "deg rho", "mult"])
    verdict = "ok" if doc["ok"] else "VIOLATED"
    lines.append(f"total {doc['total']}, expected {doc['expected']}: {verdict}")
    return "\n".join(lines) + "\n"


def cmd_compute(path: str, as_json: bool = False, out=None) -> int:
    out = out or sys.stdout
    doc = schema.load_file(path, kinds={"simple_cuspidal", "general_cuspidal"})
    parsed = schema.parse_descriptor(doc)
    status = EXIT_OK
    if doc["kind"] == "simple_cuspidal":
        ms = ijord_simple(parsed)
        try:
            rep = identity_check(parsed, ms)
        except IdentityViolation as exc:
            rep, status = exc.report, EXIT_VIOLATION
        report = schema.simple_report_json(parsed, ms, rep)
    else:
        parts, N = parsed
        result: GeneralResult = ijord_general(parts, N)
        report = schema.report_json(result)
    out.write(schema.dumps(report) if as_json else render_report(report))
    return status


def cmd_enumerate_polys(q: int, index: int, m: int, out=None) -> int:
    out = out or sys.stdout
    ctx = context_make(q, index)
    polys = enumerate_self_dual_irreducible(ctx, m)
    rows = [(" ".join(map(str, P.coeffs)), str(P)) for P in polys]
    for line in _table(rows, ["coefficients", "polynomial"]):
        out.write(line + "\n")
    out.write(f"count: {len(polys)}\n")
    return EXIT_OK


def cmd_enumerate_params(n: int | None, registry_path: str, out=None) -> int:
    out = out or sys.stdout
    doc = schema.load_file(registry_path, kinds={"lparam_registry", "enumeration_request"})
    reg = schema.parse_registry(doc)
    if n is None:
        if "N" not in doc:
            raise ValidationError("give --n or use an enumeration_request file")
        n = doc["N"]
    shapes = enumerate_cuspidal_shapes(n, reg.irreps, bound=doc.get("bound"))
    rows = []
    for s in shapes:
        size, cusp = packet_counts(s)
        rows.append((str(s), "yes" if is_cuspidal(s) else "no", "yes" if is_regular(s) else "no", size,
                     "-" if cusp is None else cusp))
    for line in _table(rows, ["shape", "cuspidal", "regular", "packet size", "cuspidal count"]):
        out.write(line + "\n")
    out.write(f"count: {len(shapes)}\n")
    return EXIT_OK


def cmd_verify(seed: int = 0, bound: int | None = None, inject_mutant: bool = False, out=None) -> int:
    out = out or sys.stdout
    cfg = VerifyConfig(seed=seed, inject_mutant=inject_mutant)
    if bound is not None:
        cfg = replace(cfg, corpus=replace(cfg.corpus, limit=bound))
    results = run_all(cfg)
    for r in results:
        out.write(r.line() + "\n")
    failed = sum(not r.ok for r in results)
    out.write(f"{len(results) - failed}/{len(results)} invariants hold (seed {seed})\n")
    return EXIT_OK if not failed else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ijord", description="Inertial Jordan sets of cuspidal symplectic representations.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("compute", help="IJord report for a simple or general descriptor file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="emit the JSON report instead of tables")

    p = sub.add_parser("enumerate-polys", help="list self-dual monic irreducibles")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--index", type=int, choices=(1, 2), required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("enumerate-params", help="list discrete cuspidal parameter shapes")
    p.add_argument("--n", type=int)
    p.add_argument("--registry", required=True)

    p = sub.add_parser("verify", help="run the invariant suites on the generated corpus")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, help="cap on the number of simple descriptors")
    p.add_argument("--inject-mutant", action="store_true", help="corrupt one datum to exercise failure reporting")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cmd == "compute":
            return cmd_compute(args.file, args.json)
        if args.cmd == "enumerate-polys":
            return cmd_enumerate_polys(args.q, args.index, args.m)
        if args.cmd == "enumerate-params":
            return cmd_enumerate_params(args.n, args.registry)
        return cmd_verify(args.seed, args.bound, args.inject_mutant)
    except schema.SchemaError as exc:
        source = getattr(args, "file", None) or getattr(args, "registry", None) or "<input>"
        print(exc.diagnostic(source), file=sys.stderr)
        return EXIT_INVALID
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
