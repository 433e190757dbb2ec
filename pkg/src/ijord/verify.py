"""Invariant suites over generated corpora, with per-check counts.

Each check returns a ``CheckResult``; failures are recorded, never raised.
``run_all`` is deterministic for a given ``VerifyConfig``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field, replace
from math import floor
from types import MappingProxyType

from .corpus import CorpusSpec, generate_compositions, generate_descriptors, generic_pool
from .endo import TRIVIAL_LABEL
from .errors import IJordError
from .ffpoly import (
    Involution,
    apply_involution,
    context_make,
    enumerate_self_dual_irreducible,
    field_from_cardinality,
    poly_dual,
    sign_of_unipotent_pole,
)
from .jordan import (
    SimpleCuspidalDescriptor,
    breakdown,
    identity_check,
    ijord_batch,
    ijord_general,
    ijord_simple,
    jordan_blocks_from_real_part,
    twist_by_chi,
)
from .lattice import LatticeSeqSpec, hom_lattice_jumps, signature_char
from .lusztig import CuspidalDatum, solve_b
from . import oracles
from .params import (
    QUAD_ORDER,
    QuadChar,
    endoparam_make,
    endoparam_square,
    enumerate_cuspidal_shapes,
    four_squares_shape,
    increment_trivial,
    iota_2N,
    is_regular,
    packet_counts,
    quad_product,
    quadratic_inventory,
    ramification_gl,
    ramification_sp,
    ramification_sp_inverse,
    regular_shape,
    restriction,
    self_dual_endoparams,
    synthetic_registry,
    validate_discrete,
    wild_parameters_up_to,
)


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 0
    corpus: CorpusSpec = CorpusSpec()
    compositions: int = 120
    poly_qs: tuple = (3, 5, 7, 9)
    poly_max_m: int = 3
    sig_qs: tuple = (3, 5, 7, 9)
    sig_max_n: int = 2
    lattice_max_e: int = 12
    lattice_max_dim: int = 3
    registry_classes: int = 50
    shape_registry_classes: int = 12
    wild_max_dim: int = 15
    enumeration_max_dim: int = 11
    inject_mutant: bool = False
    workers: int | None = None


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked > 0 and not self.failures

    def fail(self, what):
        self.failures.append(str(what))

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        out = f"{status}  {self.name}: {self.checked} checked, {len(self.failures)} failed"
        if self.failures:
            out += f" (first: {self.failures[0]})"
        return out


# ---------------------------------------------------------------------------
# the engine on simple descriptors


def mutant(desc: SimpleCuspidalDescriptor) -> SimpleCuspidalDescriptor:
    """Add a generic polynomial with a = 1 to the first datum, skipping validation."""
    d = desc.data[0]
    used = set(d.a_map) | set(desc.data[1].a_map)
    P = next(P for P in generic_pool(d.ctx, 4, CorpusSpec(pool_size=4)) if P not in used)
    a_map = {**d.a_map, P: 1}
    b_map = {**d.b_map, P: solve_b(d.kind, sign_of_unipotent_pole(P), 1)}
    bad = CuspidalDatum(d.gtype, d.dual_dim + P.degree, MappingProxyType(a_map), MappingProxyType(b_map),
                        d.eigen_types)
    return replace(desc, data=(bad, desc.data[1]))


def check_counting_identity(descs, workers=None) -> CheckResult:
    res = CheckResult("counting identity")
    try:
        results = ijord_batch(descs, workers)
    except IJordError:
        results = [None] * len(descs)
    for desc, ij in zip(descs, results):
        res.checked += 1
        try:
            identity_check(desc, ij if ij is not None else ijord_simple(desc))
        except IJordError as exc:
            res.fail(f"{desc.endo.label} q={desc.q} N={desc.N}: {exc}")
    return res


def check_contribution(descs) -> CheckResult:
    res = CheckResult("contribution = block total")
    for desc in descs:
        try:
            rows = breakdown(desc)
        except IJordError as exc:
            res.checked += 1
            res.fail(exc)
            continue
        for row in rows:
            res.checked += 1
            r0, r1, t = row.params.r0, row.params.r1, row.params.t_rho
            formula = floor((r0 * r0 + r1 * r1) / (2 * t * t))
            ladders = sum(sum(jordan_blocks_from_real_part(s)) for s in row.real_parts)
            if not (formula == ladders == row.contribution == sum(row.blocks)):
                res.fail(f"{row.poly}: formula {formula}, ladders {ladders}, row {row.contribution}")
    return res


def check_no_holes_and_twist(descs) -> CheckResult:
    res = CheckResult("no holes, chi-twist bijection")
    for desc in descs:
        res.checked += 1
        try:
            ij = ijord_simple(desc)
        except IJordError as exc:
            res.fail(exc)
            continue
        if not ij.has_no_holes():
            res.fail(f"{desc.endo.label} N={desc.N}: hole in {ij.classes()}")
        tw = twist_by_chi(ij)
        if sorted(twist_by_chi(tw).entries) != sorted(ij.entries) or tw.total != ij.total:
            res.fail(f"{desc.endo.label} N={desc.N}: chi-twist is not a bijection")
    return res


def check_compositions(comps) -> CheckResult:
    res = CheckResult("general total = 2N+1")
    for parts in comps:
        res.checked += 1
        try:
            r = ijord_general(parts)
            if r.total != 2 * r.N + 1 or not all(rep.ok for rep in r.reports):
                res.fail(f"total {r.total}, N {r.N}")
        except IJordError as exc:
            res.fail(exc)
    return res


# ---------------------------------------------------------------------------
# oracles


def _contexts(qs):
    for q in qs:
        yield context_make(q, 1)
        F = field_from_cardinality(q)
        if F.k % 2 == 0:
            yield context_make(q, 2)


def check_polynomials(qs, max_m) -> CheckResult:
    res = CheckResult("self-dual enumeration = brute force")
    for ctx in _contexts(qs):
        for m in range(1, max_m + 1):
            res.checked += 1
            fast = enumerate_self_dual_irreducible(ctx, m)
            slow = oracles.self_dual_irreducible_bruteforce(ctx, m)
            if sorted(P.coeffs for P in fast) != slow:
                res.fail(f"q={ctx.q} index={ctx.index} m={m}: {len(fast)} vs {len(slow)}")
                continue
            fs = set(fast)
            if {apply_involution(Involution.NEGATE, apply_involution(Involution.NEGATE, P)) for P in fs} != fs:
                res.fail(f"q={ctx.q} index={ctx.index} m={m}: negation is not an involution")
            if {apply_involution(Involution.NEGATE, P) for P in fs} != fs:
                res.fail(f"q={ctx.q} index={ctx.index} m={m}: negation leaves the set")
            if any(poly_dual(poly_dual(P.poly, ctx), ctx) != P.poly or poly_dual(P.poly, ctx) != P.poly for P in fs):
                res.fail(f"q={ctx.q} index={ctx.index} m={m}: dual is not the identity on the set")
            F = ctx.field
            for P in fs:
                R = apply_involution(Involution.NEGATE, P)
                if m < F.q and not oracles.negate_variable_agrees(F, P.coeffs, R.coeffs):
                    res.fail(f"{P}: negation disagrees pointwise")
    return res


def check_signatures(qs, max_n) -> CheckResult:
    res = CheckResult("signature character = permutation sign")
    for q in qs:
        F = field_from_cardinality(q)
        for n in range(1, max_n + 1):
            for g in oracles.invertible_matrices(F, n):
                res.checked += 1
                got = signature_char(oracles.det_bruteforce(F, g), F)
                want = oracles.action_sign(F, g)
                if got != want:
                    res.fail(f"q={q} g={g}: {got} vs {want}")
    return res


def check_lattice_jumps(max_e, max_dim) -> CheckResult:
    res = CheckResult("hom-lattice jumps = filtration model")
    for e in range(1, max_e + 1):
        divisors = [s for s in range(1, e + 1) if e % s == 0]
        for sY, sW in itertools.product(divisors, repeat=2):
            for dY, dW in itertools.product(range(1, max_dim + 1), repeat=2):
                if not (oracles.realizable(e, sY, dY) and oracles.realizable(e, sW, dW)):
                    continue
                for aY, aW in itertools.product(range(sY), range(sW)):
                    res.checked += 1
                    ly, lw = LatticeSeqSpec(e, aY, sY, dY), LatticeSeqSpec(e, aW, sW, dW)
                    try:
                        jr = hom_lattice_jumps(ly, lw)
                    except IJordError as exc:
                        res.fail(f"e={e} Y={ly} W={lw}: {exc}")
                        continue
                    model = oracles.hom_lattice_bruteforce(
                        e, oracles.split_offsets(e, aY, sY, dY), oracles.split_offsets(e, aW, sW, dW)
                    )
                    want = {t for t in range(e) if (t - jr.offset) % jr.step == 0}
                    if set(model) != want or any(c != jr.c for c in model.values()):
                        res.fail(f"e={e} Y={ly} W={lw}: model {model}, formula {jr}")
    return res


# ---------------------------------------------------------------------------
# parameters


def check_ramification(reg, max_degree=8) -> CheckResult:
    res = CheckResult("ramification_sp = increment o gl o square; iota_2N")
    seen = {}
    triv = reg.endo[TRIVIAL_LABEL]
    eps = [
        endoparam_make(list(ep.terms) + [(triv, k)])
        for ep in self_dual_endoparams(reg, max_degree)
        for k in range(max_degree - ep.degree + 1)
        if (ep.degree + k) % 2 == 0
    ]
    for ep in eps:
        res.checked += 1
        lhs = ramification_sp(ep, reg)
        rhs = increment_trivial(ramification_gl(endoparam_square(ep, reg), reg), reg)
        if lhs != rhs:
            res.fail(f"{ep.as_dict()}: {lhs.as_dict()} vs {rhs.as_dict()}")
        if ramification_sp_inverse(lhs, reg) != ep:
            res.fail(f"{ep.as_dict()}: inverse does not recover the input")
        if ep.degree % 2 == 0:
            io = iota_2N(ep, reg)
            if io.degree != ep.degree + 1:
                res.fail(f"{ep.as_dict()}: iota_2N has degree {io.degree}")
            if io in seen and seen[io] != ep:
                res.fail(f"iota_2N not injective: {ep.as_dict()} and {seen[io].as_dict()}")
            seen[io] = ep
    return res


def sl2_triples_oracle() -> set:
    """Distinct triples of quadratic characters with product 1."""
    return {frozenset(c) for c in itertools.combinations(QUAD_ORDER, 3) if quad_product(c) is QuadChar.ONE}


def check_sl2_shapes() -> CheckResult:
    res = CheckResult("N=1 shapes over quadratic characters")
    res.checked += 1
    shapes = enumerate_cuspidal_shapes(1, quadratic_inventory())
    got = set()
    for s in shapes:
        if any(b.m != 1 for b in s.blocks):
            res.fail(f"unexpected block in {s}")
        got.add(frozenset(b.irrep.det for b in s.blocks))
    if got != sl2_triples_oracle():
        res.fail(f"got {[sorted(map(str, g)) for g in got]}")
    res.checked += 1
    if len(enumerate_cuspidal_shapes(0, quadratic_inventory())) != 1:
        res.fail("N=0 does not give exactly one shape")
    return res


def check_shapes(reg, max_dim) -> CheckResult:
    res = CheckResult("four-squares/regular shapes and packet counts")
    for wp in wild_parameters_up_to(reg, max_dim):
        N = (wp.dim - 1) // 2
        for build, regular in ((four_squares_shape, False), (regular_shape, True)):
            res.checked += 1
            try:
                shape = build(wp, reg)
            except IJordError as exc:
                res.fail(f"{build.__name__} {wp.as_dict()}: {exc}")
                continue
            rep = validate_discrete(shape, N)
            if not rep.ok or restriction(shape, reg) != wp:
                res.fail(f"{build.__name__} {wp.as_dict()}: {rep.violations}")
            size, cusp = packet_counts(shape)
            if cusp is None or cusp > size or (cusp == size) != is_regular(shape):
                res.fail(f"{shape}: packet counts {size}, {cusp}")
            if regular and not is_regular(shape):
                res.fail(f"{shape} from the regular recipe is not regular")
    return res


def check_enumeration_contains_regular(reg, max_dim) -> CheckResult:
    res = CheckResult("enumeration contains the regular shape")
    for wp in wild_parameters_up_to(reg, max_dim):
        res.checked += 1
        N = (wp.dim - 1) // 2
        shapes = enumerate_cuspidal_shapes(N, reg.irreps, wild=wp, reg=reg)
        if regular_shape(wp, reg) not in shapes:
            res.fail(f"{wp.as_dict()}: regular shape missing")
        for s in shapes:
            size, cusp = packet_counts(s)
            if not validate_discrete(s, N).ok or restriction(s, reg) != wp or cusp is None or cusp > size:
                res.fail(f"{s}: violates the documented constraints")
            if (cusp == size) != is_regular(s):
                res.fail(f"{s}: equality of packet counts does not match regularity")
    return res


# ---------------------------------------------------------------------------


def run_all(cfg: VerifyConfig = VerifyConfig()) -> list[CheckResult]:
    rng = random.Random(cfg.seed)
    descs = generate_descriptors(cfg.corpus)
    comps = generate_compositions(descs, cfg.compositions, seed=cfg.seed)
    if cfg.inject_mutant:
        pos = [i for i, d in enumerate(descs) if not d.depth_zero]
        i = pos[rng.randrange(len(pos))]
        descs[i] = mutant(descs[i])
    reg = synthetic_registry(cfg.registry_classes, seed=cfg.seed)
    small = synthetic_registry(cfg.shape_registry_classes, seed=cfg.seed)
    return [
        check_counting_identity(descs, cfg.workers),
        check_contribution(descs),
        check_no_holes_and_twist(descs),
        check_compositions(comps),
        check_polynomials(cfg.poly_qs, cfg.poly_max_m),
        check_signatures(cfg.sig_qs, cfg.sig_max_n),
        check_lattice_jumps(cfg.lattice_max_e, cfg.lattice_max_dim),
        check_ramification(reg),
        check_sl2_shapes(),
        check_shapes(small, cfg.wild_max_dim),
        check_enumeration_contains_regular(small, cfg.enumeration_max_dim),
    ]
