"""Brute-force reference computations.

Each function here recomputes something the main modules compute by a
formula, using only definitions: exhaustive polynomial filtering, an explicit
split lattice model, and permutation signatures by cycle decomposition.
"""

from __future__ import annotations

import itertools
from math import ceil

from .ffpoly import (
    DualityContext,
    FiniteField,
    MonicPoly,
    is_irreducible_trial,
    monic_polys,
    poly_dual,
)


# ---------------------------------------------------------------------------
# polynomials


def self_dual_irreducible_bruteforce(ctx: DualityContext, m: int) -> list[tuple[int, ...]]:
    """Filter every monic degree-m polynomial through the definitions."""
    F = ctx.field
    out = []
    for c in monic_polys(F, m, nonzero_constant=True):
        Q = MonicPoly(F, c)
        if poly_dual(Q, ctx).coeffs == c and is_irreducible_trial(Q):
            out.append(c)
    return sorted(out)


def eval_poly(F: FiniteField, coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def negate_variable_agrees(F: FiniteField, Q, R) -> bool:
    """R(x) = (-1)^deg Q * Q(-x) at every point of F. Decisive for monic R, Q when deg < q."""
    sign = 1 if (len(Q) - 1) % 2 == 0 else F.neg(1)
    return all(eval_poly(F, R, x) == F.mul(sign, eval_poly(F, Q, F.neg(x))) for x in range(F.q))


# ---------------------------------------------------------------------------
# lattice sequences


def realizable(e: int, s: int, dim: int) -> bool:
    """A principal split lattice sequence with jumps a+sZ and period e exists on F^dim iff e/s divides dim."""
    return dim % (e // s) == 0


def split_offsets(e: int, a: int, s: int, dim: int) -> list[int]:
    """Basis offsets v_k so that L(i) = sum of p^ceil((i - v_k)/e) e_k has jumps exactly a + sZ."""
    r = e // s
    per = dim // r
    return [(a + j * s) % e for j in range(r) for _ in range(per)]


def lattice_jumps(e: int, offsets) -> dict[int, int]:
    """Jumps in [0, e) with the k_F-dimension of each quotient L(i)/L(i+1)."""
    out = {}
    for i in range(e):
        d = sum(1 for v in offsets if ceil((i + 1 - v) / e) > ceil((i - v) / e))
        if d:
            out[i] = d
    return out


def hom_lattice_bruteforce(e: int, offsets_Y, offsets_W) -> dict[int, int]:
    """Jumps of C(t) = {g : g L_Y(i) in L_W(i+t) for all i}, t in [0, e), with quotient dimensions.

    In split bases C(t) is spanned by p^n(t) E_kl, with n(t) the least
    valuation allowed for the (k, l) matrix entry.
    """

    def n_kl(t, v, u):
        return max(ceil((i + t - v) / e) - ceil((i - u) / e) for i in range(e))

    out = {}
    for t in range(e):
        d = 0
        for v in offsets_W:
            for u in offsets_Y:
                if n_kl(t + 1, v, u) > n_kl(t, v, u):
                    d += 1
        if d:
            out[t] = d
    return out


# ---------------------------------------------------------------------------
# signatures


def _matvec(F, g, v):
    n = len(v)
    return tuple(
        _dot(F, g[i], v) for i in range(n)
    )


def _dot(F, row, v):
    acc = 0
    for a, b in zip(row, v):
        acc = F.add(acc, F.mul(a, b))
    return acc


def det_bruteforce(F: FiniteField, g) -> int:
    n = len(g)
    if n == 1:
        return g[0][0]
    if n == 2:
        return F.sub(F.mul(g[0][0], g[1][1]), F.mul(g[0][1], g[1][0]))
    raise NotImplementedError("only sizes 1 and 2")


def permutation_sign(perm: list[int]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return 1 if (len(perm) - cycles) % 2 == 0 else -1


def action_sign(F: FiniteField, g) -> int:
    """Signature of v -> g v as a permutation of F^n."""
    n = len(g)
    vecs = list(itertools.product(range(F.q), repeat=n))
    index = {v: i for i, v in enumerate(vecs)}
    return permutation_sign([index[_matvec(F, g, v)] for v in vecs])


def invertible_matrices(F: FiniteField, n: int):
    for entries in itertools.product(range(F.q), repeat=n * n):
        g = tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n))
        if det_bruteforce(F, g) != 0:
            yield g
