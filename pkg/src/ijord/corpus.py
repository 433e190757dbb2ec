"""Exhaustive generation of simple cuspidal descriptors for the property suites.

For each base field size, endo-class shape and N, every split of dim_E V
between the two factors is tried, every datum with all b <= max_b built from
the poles X-1, X+1 (index 1) and a small pool of other self-dual
polynomials, and every assignment of involution flags.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, replace
from functools import lru_cache

from .endo import DualType, EndoClassInvariants, trivial_class
from .errors import TooLarge
from .ffpoly import Involution, enumerate_self_dual_irreducible, sign_of_unipotent_pole, x_minus_one, x_plus_one
from .jordan import SimpleCuspidalDescriptor, descriptor_context, make_descriptor
from .lusztig import GroupKind, GroupType, a_from_b, datum_validate, dual_dimension

ENDO_SHAPES = [
    (1, 1, 1, DualType.TRIVIAL),
    (2, 2, 1, DualType.RAMIFIED),
    (2, 1, 2, DualType.UNRAMIFIED),
    (4, 4, 1, DualType.RAMIFIED),
    (4, 2, 2, DualType.RAMIFIED),
    (4, 1, 4, DualType.UNRAMIFIED),
    (4, 2, 2, DualType.UNRAMIFIED),
]


@dataclass(frozen=True)
class CorpusSpec:
    qs: tuple = (3, 5)
    max_degree: int = 4
    max_N: int = 6
    max_b: int = 2
    pool_size: int = 2
    enum_bound: int = 200_000
    max_involution_degrees: int | None = None  # None: flag every degree present
    limit: int | None = None


def endo_for(shape, label=None) -> EndoClassInvariants:
    deg, e, f, dt = shape
    if dt is DualType.TRIVIAL:
        return trivial_class()
    return EndoClassInvariants(label or f"E{deg}e{e}f{f}{dt.value[0]}", deg, e, f, dt)


@lru_cache(maxsize=None)
def _pool(ctx, m, size, enum_bound):
    if ctx.q**m > enum_bound:
        return ()
    polys = enumerate_self_dual_irreducible(ctx, m, bound=enum_bound)
    polys = [P for P in polys if sign_of_unipotent_pole(P) is None]
    return tuple(polys[:size])


def generic_pool(ctx, max_m, spec: CorpusSpec):
    out = []
    for m in range(1, max_m + 1):
        out.extend(_pool(ctx, m, spec.pool_size, spec.enum_bound))
    return out


def data_for(kind: GroupKind, dual_dim: int, ctx, spec: CorpusSpec):
    """All data of the given kind and dual dimension with every b <= max_b."""
    gtype = GroupType(kind, ctx)
    slots = []  # (poly, pole) pairs that may carry a nonzero a
    if ctx.index == 1:
        slots += [(x_minus_one(ctx), +1), (x_plus_one(ctx), -1)]
    slots += [(P, None) for P in generic_pool(ctx, max(dual_dim, 1), spec)]
    options = []
    for P, pole in slots:
        avals = sorted({a_from_b(kind, pole, b) for b in range(spec.max_b + 1)})
        if kind is GroupKind.SYMPLECTIC and pole == +1:
            avals = [a for a in avals if a > 0]
        options.append([(P, a) for a in avals if a * P.degree <= dual_dim])
    out = []

    def rec(i, room, acc):
        if i == len(options):
            if room == 0:
                out.append(datum_validate(gtype, dual_dim, dict(acc)))
            return
        for P, a in options[i]:
            if a * P.degree <= room:
                rec(i + 1, room - a * P.degree, acc + ([(P, a)] if a else []))

    rec(0, dual_dim, [])
    return out


def _factor_kinds(dt: DualType, n: int):
    """Yield ((kind0, natural0), (kind1, natural1)) splits of n."""
    if dt is DualType.UNRAMIFIED:
        for n0 in range(n + 1):
            yield (GroupKind.UNITARY, n0), (GroupKind.UNITARY, n - n0)
    elif dt is DualType.RAMIFIED:
        for k in range(0, n // 2 + 1):
            rest = n - 2 * k
            ok = GroupKind.ODD_SO if rest % 2 else GroupKind.EVEN_SO
            yield (GroupKind.SYMPLECTIC, 2 * k), (ok, rest)
            yield (ok, rest), (GroupKind.SYMPLECTIC, 2 * k)
    else:
        for k in range(0, n // 2 + 1):
            yield (GroupKind.SYMPLECTIC, 2 * k), (GroupKind.SYMPLECTIC, n - 2 * k)


def _involution_maps(desc_degrees, depth_zero, spec):
    if depth_zero or not desc_degrees:
        yield {}
        return
    keys = [(t, m) for t in (0, 1) for m in sorted(desc_degrees)[: spec.max_involution_degrees or None]]
    for flags in itertools.product((Involution.IDENTITY, Involution.NEGATE), repeat=len(keys)):
        yield dict(zip(keys, flags))


def generate_descriptors(spec: CorpusSpec = CorpusSpec()) -> list[SimpleCuspidalDescriptor]:
    out = []
    for q in spec.qs:
        for shape in ENDO_SHAPES:
            deg, _, _, dt = shape
            if deg > spec.max_degree:
                continue
            endo = endo_for(shape)
            ctx = descriptor_context(q, endo)
            for N in range(0 if dt is DualType.TRIVIAL else 1, spec.max_N + 1):
                if (2 * N) % deg:
                    continue
                n = 2 * N // deg
                for (k0, n0), (k1, n1) in _factor_kinds(dt, n):
                    d0s = data_for(k0, dual_dimension(k0, n0), ctx, spec)
                    d1s = data_for(k1, dual_dimension(k1, n1), ctx, spec)
                    for d0, d1 in itertools.product(d0s, d1s):
                        degrees = {P.degree for P in d0.a_map} | {P.degree for P in d1.a_map}
                        for invs in _involution_maps(degrees, endo.is_trivial, spec):
                            out.append(make_descriptor(q, endo, N, (d0, d1), invs))
    if spec.limit and len(out) > spec.limit:
        # an evenly spaced sample keeps every q and endo shape represented
        step = len(out) / spec.limit
        out = [out[int(k * step)] for k in range(spec.limit)]
    return out


def generate_compositions(descs, count: int = 120, seed: int = 0) -> list[list[tuple[SimpleCuspidalDescriptor, bool]]]:
    """Multi-part compositions: one depth-zero part plus one or two relabelled positive-depth parts."""
    rng = random.Random(seed)
    by_q: dict = {}
    for d in descs:
        by_q.setdefault(d.q, ([], []))[0 if d.depth_zero else 1].append(d)
    for zeros, pos in by_q.values():
        rng.shuffle(zeros)
        rng.shuffle(pos)
    qs = sorted(q for q, (zeros, pos) in by_q.items() if zeros and pos)
    if not qs:
        raise TooLarge("the corpus has no q with both depth-zero and positive-depth descriptors")
    out = []
    i = 0
    while len(out) < count:
        zeros, pos = by_q[qs[i % len(qs)]]
        d0 = zeros[(7 * i) % len(zeros)]
        nparts = 1 + i % 2
        parts = [(d0, False)]
        for j in range(nparts):
            d = pos[(13 * i + 31 * j) % len(pos)]
            d = replace(d, endo=replace(d.endo, label=f"P{i}_{j}"))
            parts.append((d, bool((i + j) % 2)))
        out.append(parts)
        i += 1
    return out
