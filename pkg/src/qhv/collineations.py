"""The collineation group fixing (0,...,0,1) and its variety stabilizer.

Group elements are stored by their parameter vectors (alpha_1..alpha_n,
beta_1..beta_{n-1}); the corresponding matrix is upper unitriangular with the
alphas across the first row and the betas down the last column.  Composition
and inversion are done symbolically from that block structure; ``to_matrix``
rebuilds the dense form for cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .fields import FieldCtx
from .geometry import BMParams, affine_rhs, bab_affine_eval, normalize_point


@dataclass(frozen=True)
class Collineation:
    alphas: tuple[int, ...]
    betas: tuple[int, ...]

    def __post_init__(self):
        if len(self.betas) != len(self.alphas) - 1:
            raise ValueError("need n alphas and n-1 betas")

    @property
    def n(self) -> int:
        return len(self.alphas)


def identity(n: int) -> Collineation:
    return Collineation((0,) * n, (0,) * (n - 1))


def to_matrix(g: Collineation) -> list[list[int]]:
    """Dense (n+1)x(n+1) matrix representative (row-vector action)."""
    n = g.n
    m = [[1 if i == j else 0 for j in range(n + 1)] for i in range(n + 1)]
    for j, a in enumerate(g.alphas, start=1):
        m[0][j] = a
    for i, b in enumerate(g.betas, start=1):
        m[i][n] = b
    return m


def apply(ctx: FieldCtx, g: Collineation, point) -> tuple[int, ...]:
    """Row-vector-times-matrix action on a projective point, renormalized."""
    if len(point) != g.n + 1:
        raise ValueError("dimension mismatch")
    F = ctx.Fq2
    n = g.n
    x0 = point[0]
    out = [x0]
    for j in range(1, n):
        out.append(F.add(point[j], F.mul(x0, g.alphas[j - 1])))
    yn = F.add(point[n], F.mul(x0, g.alphas[n - 1]))
    for i in range(1, n):
        yn = F.add(yn, F.mul(point[i], g.betas[i - 1]))
    out.append(yn)
    return normalize_point(F, out)


def compose(ctx: FieldCtx, g1: Collineation, g2: Collineation) -> Collineation:
    """The element with matrix M(g1) M(g2); applying it is g1 then g2."""
    if g1.n != g2.n:
        raise ValueError("dimension mismatch")
    F = ctx.Fq2
    n = g1.n
    alphas = [F.add(a, b) for a, b in zip(g1.alphas[:-1], g2.alphas[:-1])]
    an = F.add(g1.alphas[-1], g2.alphas[-1])
    for i in range(n - 1):
        an = F.add(an, F.mul(g1.alphas[i], g2.betas[i]))
    betas = tuple(F.add(a, b) for a, b in zip(g1.betas, g2.betas))
    return Collineation(tuple(alphas) + (an,), betas)


def inverse(ctx: FieldCtx, g: Collineation) -> Collineation:
    F = ctx.Fq2
    n = g.n
    alphas = [F.neg(a) for a in g.alphas[:-1]]
    an = F.neg(g.alphas[-1])
    for i in range(n - 1):
        an = F.add(an, F.mul(g.alphas[i], g.betas[i]))
    betas = tuple(F.neg(b) for b in g.betas)
    return Collineation(tuple(alphas) + (an,), betas)


def all_collineations(ctx: FieldCtx, n: int):
    """The whole group, all q^{2(2n-1)} elements (desk scale only)."""
    for vec in product(range(ctx.q2), repeat=2 * n - 1):
        yield Collineation(vec[:n], vec[n:])


def centre_element(n: int, alpha_n: int) -> Collineation:
    """Translation along the last coordinate only."""
    return Collineation((0,) * (n - 1) + (alpha_n,), (0,) * (n - 1))


def _beta_constraint(params: BMParams, alpha: int) -> int:
    """(b - b^q) alpha^q - 2 a alpha."""
    ctx = params.ctx
    F = ctx.Fq2
    bmbq = F.sub(params.b, ctx.frob[params.b])
    two_a = F.mul(2 % ctx.p, params.a)
    return F.sub(F.mul(bmbq, ctx.frob[alpha]), F.mul(two_a, alpha))


def in_psi(params: BMParams, g: Collineation) -> bool:
    """Membership in the stabilizer of the variety.

    Requires beta_i = (b - b^q) alpha_i^q - 2 a alpha_i for every i (note
    2a = 0 in even characteristic) and that the alpha vector satisfies the
    affine equation itself.
    """
    if g.n != params.n:
        raise ValueError("dimension mismatch")
    for alpha, beta in zip(g.alphas[:-1], g.betas):
        if beta != _beta_constraint(params, alpha):
            return False
    return bab_affine_eval(params, g.alphas) == 0


def psi_group(params: BMParams) -> list[Collineation]:
    """All q^{2n-1} stabilizer elements, lexicographic in the alpha head."""
    ctx, n = params.ctx, params.n
    out = []
    for head in product(range(ctx.q2), repeat=n - 1):
        betas = tuple(_beta_constraint(params, a) for a in head)
        d = affine_rhs(params, head)
        roots = sorted(ctx.artin_schreier_roots(d))
        if len(roots) != ctx.q:
            raise RuntimeError("stabilizer equation unsolvable")  # pragma: no cover
        for an in roots:
            out.append(Collineation(head + (an,), betas))
    return out


@dataclass(frozen=True)
class RSet:
    """Transversal-indexed section of the group: one element per alpha head.

    All betas vanish and alpha_n is the unique transversal solution of the
    stabilizer equation, so distinct members differ by an element outside the
    stabilizer and index distinct varieties.
    """

    params: BMParams
    elements: tuple[Collineation, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def to_json(self) -> dict:
        return {
            "size": len(self.elements),
            "alphas": [list(g.alphas) for g in self.elements],
        }


def build_R(params: BMParams) -> RSet:
    """One collineation per (alpha_1..alpha_{n-1}), in lexicographic order."""
    ctx, n = params.ctx, params.n
    zeros = (0,) * (n - 1)
    members = []
    for head in product(range(ctx.q2), repeat=n - 1):
        d = affine_rhs(params, head)
        if ctx.trace(d) != 0:
            raise RuntimeError(
                "right-hand side has nonzero trace; arithmetic bug"
            )  # pragma: no cover
        an = ctx.unique_root_in_transversal(d)
        members.append(Collineation(head + (an,), zeros))
    return RSet(params, tuple(members))
