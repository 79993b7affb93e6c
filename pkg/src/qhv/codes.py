"""GF(q)-linear [q, 5, q-4] MDS codes from the n = 3 construction.

The q columns are the family forms whose first-row parameters run over the
twisted-cubic index set

    Omega = {(t + eps t^2, t^3 + eps t^4) : t in GF(q)},

evaluated over W = GF(q^2) x GF(q^2) x C.  Values are trace-zero; dividing by
theta = trace(eps) - 2 eps lands them in GF(q).  For q > 4 the resulting code
is a [q, 5, q-4] MDS code equal (after the evaluation-point bookkeeping ψ) to
an extended Reed-Solomon code of dimension 5; appending the degree-4
coefficient of the interpolating polynomial doubly extends it to
[q+1, 5, q-3].
"""

from __future__ import annotations

import hashlib
import json
import warnings
from dataclasses import dataclass

import numpy as np

from . import linalg
from .fields import BudgetExceededError, FieldCtx
from .geometry import BMParams

DEFAULT_CODEWORD_BUDGET = 10**7


@dataclass(frozen=True)
class OmegaSet:
    """Twisted-cubic pairs in psi order: index 0 is t = 0, index i is omega^i."""

    pairs: tuple[tuple[int, int], ...]
    psi: tuple[int, ...]       # evaluation points psi(i) as GF(q) codes

    def __len__(self) -> int:
        return len(self.pairs)


def omega_set(ctx: FieldCtx) -> OmegaSet:
    """The q parameter pairs (t + eps t^2, t^3 + eps t^4)."""
    if ctx.q <= 4:
        warnings.warn(
            f"q = {ctx.q} <= 4: the code is constructible but the MDS and "
            "Reed-Solomon contracts require q > 4",
            stacklevel=2,
        )
    F, Fq = ctx.Fq2, ctx.Fq
    psi = [0] + [Fq.pow(ctx.omega, i) for i in range(1, ctx.q)]
    pairs = []
    for t in psi:
        t2 = Fq.mul(t, t)
        t3 = Fq.mul(t2, t)
        t4 = Fq.mul(t3, t)
        w1 = F.add(t, F.mul(ctx.epsilon, t2))
        w2 = F.add(t3, F.mul(ctx.epsilon, t4))
        pairs.append((w1, w2))
    return OmegaSet(tuple(pairs), tuple(psi))


def check_luc1(ctx: FieldCtx, omega: OmegaSet, indices) -> bool:
    """Nonsingularity of the 5x5 matrix with rows (1, w1, w2, w1^q, w2^q)."""
    rows = []
    for i in indices:
        w1, w2 = omega.pairs[i]
        rows.append([1, w1, w2, ctx.frob[w1], ctx.frob[w2]])
    if len(rows) != 5:
        raise ValueError("exactly five indices required")
    return linalg.det(ctx.Fq2, rows) != 0


def _column_coeffs(params: BMParams, omega: OmegaSet):
    """(u1, u2, v1, v2) per column: coefficients of x^q, y^q, x, y."""
    ctx = params.ctx
    F = ctx.Fq2
    frob = ctx.frob
    two = 2 % ctx.p
    two_a = F.mul(two, params.a)
    two_aq = F.mul(two, frob[params.a])
    bqmb = F.sub(frob[params.b], params.b)
    cols = []
    for w1, w2 in omega.pairs:
        u1 = F.sub(F.mul(two_aq, frob[w1]), F.mul(bqmb, w1))
        u2 = F.sub(F.mul(two_aq, frob[w2]), F.mul(bqmb, w2))
        v1 = F.neg(F.add(F.mul(two_a, w1), F.mul(bqmb, frob[w1])))
        v2 = F.neg(F.add(F.mul(two_a, w2), F.mul(bqmb, frob[w2])))
        cols.append((u1, u2, v1, v2))
    return cols


@dataclass
class EvalCode:
    """Raw evaluation code: q^5 words over the trace-zero set, length q."""

    params: BMParams
    omega: OmegaSet
    domain: np.ndarray      # q^5 x 3 triples (x, y, z), z in the transversal
    codewords: np.ndarray   # q^5 x q over GF(q^2) codes, all trace-zero

    def __len__(self) -> int:
        return len(self.codewords)


def build_code(params: BMParams, omega: OmegaSet | None = None,
               budget: int = DEFAULT_CODEWORD_BUDGET) -> EvalCode:
    """Evaluate the q twisted-cubic forms over W, in W order."""
    ctx = params.ctx
    if params.n != 3:
        raise ValueError("the code construction lives in PG(3, q^2)")
    q, q2 = ctx.q, ctx.q2
    if q**5 * q > budget:
        raise BudgetExceededError("codeword table over budget")
    if omega is None:
        with warnings.catch_warnings():
            if q > 4:
                warnings.simplefilter("error")
            omega = omega_set(ctx)
    F = ctx.Fq2
    frob = ctx.frob
    a, b = params.a, params.b
    aq = frob[a]
    bqmb = F.sub(frob[b], b)
    cols = _column_coeffs(params, omega)

    # the form value splits as Bz(z) + Bx(x) + By(y) + Gx[i](x) + Gy[i](y)
    def quad(u):
        u2 = F.mul(u, u)
        val = F.sub(F.mul(aq, frob[u2]), F.mul(a, u2))
        return F.sub(val, F.mul(bqmb, F.mul(u, frob[u])))

    Bu = [quad(u) for u in range(q2)]
    Bz = {z: F.sub(frob[z], z) for z in ctx.transversal}
    Gx = [[F.add(F.mul(u1, frob[u]), F.mul(v1, u)) for u in range(q2)]
          for (u1, _, v1, _) in cols]
    Gy = [[F.add(F.mul(u2, frob[u]), F.mul(v2, u)) for u in range(q2)]
          for (_, u2, _, v2) in cols]

    add = F.add
    domain = np.empty((q**5, 3), dtype=np.int32)
    words = np.empty((q**5, q), dtype=np.int32)
    r = 0
    for x in range(q2):
        for y in range(q2):
            bxy = add(Bu[x], Bu[y])
            gx = [Gx[i][x] for i in range(q)]
            gy = [Gy[i][y] for i in range(q)]
            for z in ctx.transversal:
                base = add(Bz[z], bxy)
                domain[r] = (x, y, z)
                row = words[r]
                for i in range(q):
                    row[i] = add(base, add(gx[i], gy[i]))
                r += 1
    return EvalCode(params, omega, domain, words)


@dataclass
class FqLinearCode:
    """Codeword list over GF(q) with its dimension and generator matrix."""

    q: int
    length: int
    codewords: np.ndarray          # |C| x length over GF(q) codes
    dimension: int
    generator: np.ndarray          # dimension x length, reduced echelon form
    min_dist: int | None = None
    is_mds: bool | None = None


def _to_fq_matrix(ctx: FieldCtx, words: np.ndarray) -> np.ndarray:
    """Divide by theta and check every entry lands in GF(q)."""
    mul = ctx.Fq2.np_mul_table()
    theta_inv = ctx.Fq2.inv(ctx.theta)
    scaled = mul[theta_inv][words]
    if not np.all(scaled < ctx.q):
        raise RuntimeError(
            "a rescaled coordinate fell outside GF(q); the trace-zero "
            "invariant is violated")
    return scaled.astype(np.int16)


def _span(ctx: FieldCtx, matrix: np.ndarray) -> linalg.SpanBuilder:
    builder = linalg.SpanBuilder(ctx.Fq, matrix.shape[1])
    for row in np.unique(matrix, axis=0):
        builder.add([int(x) for x in row])
    return builder


def scale_to_fq(code: EvalCode) -> FqLinearCode:
    """The GF(q)-code theta^{-1} C, with Gauss-computed dimension."""
    ctx = code.params.ctx
    scaled = _to_fq_matrix(ctx, code.codewords)
    builder = _span(ctx, scaled)
    gen = np.array(builder.basis, dtype=np.int16) if builder.basis else \
        np.zeros((0, scaled.shape[1]), dtype=np.int16)
    return FqLinearCode(ctx.q, scaled.shape[1], scaled, builder.rank, gen)


def min_distance(code: FqLinearCode,
                 budget: int = DEFAULT_CODEWORD_BUDGET) -> int:
    """Minimum Hamming weight over the nonzero codewords (the code is linear)."""
    if code.codewords.shape[0] > budget:
        raise BudgetExceededError("codeword scan over budget")
    weights = np.count_nonzero(code.codewords, axis=1)
    nz = weights[weights > 0]
    d = int(nz.min())
    code.min_dist = d
    code.is_mds = d == code.length - code.dimension + 1
    return d


@dataclass
class RSReport:
    checked: int
    mismatches: int
    distinct_codewords: int
    expected_codewords: int

    @property
    def consistent(self) -> bool:
        """Every codeword interpolates to a polynomial of degree <= 4."""
        return self.mismatches == 0

    @property
    def two_sided(self) -> bool:
        """Code == all degree-<=4 evaluation vectors (counting argument)."""
        return self.consistent and self.distinct_codewords == self.expected_codewords


def rs_equivalence_check(code: FqLinearCode, omega: OmegaSet) -> RSReport:
    """Interpolate through the first five coordinates and check the rest.

    Coordinate i of a codeword sits at evaluation point psi(i); the code is
    the extended Reed-Solomon code of dimension 5 iff every word agrees with
    its degree-<=4 interpolant everywhere and all q^5 words are distinct.
    Two distinct words of minimum distance q-4 cannot agree on five
    coordinates, so consistency plus the count q^5 settles both inclusions.
    """
    from .fields import field_context

    q = code.q
    Fq = field_context(q).Fq
    psi = omega.psi
    vand = [[Fq.pow(psi[i], k) for k in range(5)] for i in range(5)]
    vinv = linalg.inv_matrix(Fq, vand)
    words = np.asarray(code.codewords)
    mul = Fq.np_mul_table()
    add = Fq.np_add_table()
    head = [words[:, i] for i in range(5)]
    coeffs = []
    for k in range(5):
        acc = mul[vinv[k][0]][head[0]]
        for i in range(1, 5):
            if vinv[k][i]:
                acc = add[acc, mul[vinv[k][i]][head[i]]]
        coeffs.append(acc)
    mismatches = 0
    for j in range(5, q):
        acc = coeffs[0].copy()
        tp = 1
        for k in range(1, 5):
            tp = Fq.mul(tp, psi[j])
            acc = add[acc, mul[tp][coeffs[k]]]
        mismatches += int(np.count_nonzero(acc != words[:, j]))
    distinct = len(np.unique(words, axis=0))
    return RSReport(
        checked=len(words),
        mismatches=mismatches,
        distinct_codewords=distinct,
        expected_codewords=q**5,
    )


def doubly_extend(code: EvalCode) -> FqLinearCode:
    """Append the degree-4 coefficient coordinate and rescale.

    On the polynomial side every codeword is a degree-<=4 polynomial in t;
    the appended coordinate is its leading coefficient (the evaluation "at
    infinity"), which as a function on W equals

        [2 a^q eps^q - (b^q - b) eps] y^q - [2 a eps + (b^q - b) eps^q] y

    up to the usual theta rescaling.  The result is a [q+1, 5, q-3] code.
    """
    params = code.params
    ctx = params.ctx
    F = ctx.Fq2
    frob = ctx.frob
    two = 2 % ctx.p
    eps, epsq = ctx.epsilon, ctx.frob[ctx.epsilon]
    bqmb = F.sub(frob[params.b], params.b)
    c1 = F.sub(F.mul(F.mul(two, frob[params.a]), epsq), F.mul(bqmb, eps))
    c2 = F.add(F.mul(F.mul(two, params.a), eps), F.mul(bqmb, epsq))
    ext = [F.sub(F.mul(c1, frob[y]), F.mul(c2, y)) for y in range(ctx.q2)]
    col = np.array([ext[y] for y in code.domain[:, 1]], dtype=np.int32)
    words = np.concatenate([code.codewords, col[:, None]], axis=1)
    scaled = _to_fq_matrix(ctx, words)
    builder = _span(ctx, scaled)
    gen = np.array(builder.basis, dtype=np.int16)
    return FqLinearCode(ctx.q, scaled.shape[1], scaled, builder.rank, gen)


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------

def generator_matrix_text(code: FqLinearCode) -> str:
    lines = [" ".join(str(int(x)) for x in row) for row in code.generator]
    return "\n".join(lines) + "\n"


def code_metadata(code: FqLinearCode, eval_code: EvalCode,
                  rs_report: RSReport | None = None,
                  extra_meta: dict | None = None) -> dict:
    ctx = eval_code.params.ctx
    meta = {
        "q": code.q,
        "length": code.length,
        "dimension": code.dimension,
        "min_distance": code.min_dist,
        "mds": code.is_mds,
        "codewords": int(code.codewords.shape[0]),
        "field": ctx.to_json(),
        "params": {
            "n": eval_code.params.n,
            "a": eval_code.params.a,
            "b": eval_code.params.b,
            "condition": eval_code.params.condition,
        },
        "theta": ctx.theta,
        "omega_pairs": [list(p) for p in eval_code.omega.pairs],
        "evaluation_points": list(eval_code.omega.psi),
        "generator_sha256": hashlib.sha256(
            generator_matrix_text(code).encode()).hexdigest(),
    }
    if rs_report is not None:
        meta["rs_equivalence"] = {
            "consistent": rs_report.consistent,
            "two_sided": rs_report.two_sided,
            "checked": rs_report.checked,
            "mismatches": rs_report.mismatches,
        }
    if extra_meta:
        meta["config"] = extra_meta
    return meta


def write_code(code: FqLinearCode, eval_code: EvalCode, base_path: str,
               rs_report: RSReport | None = None,
               extra_meta: dict | None = None,
               dump_codewords: bool = False) -> list[str]:
    paths = []
    gen_path = base_path + ".genmat.txt"
    with open(gen_path, "w") as fh:
        fh.write(generator_matrix_text(code))
    paths.append(gen_path)
    json_path = base_path + ".json"
    with open(json_path, "w") as fh:
        json.dump(code_metadata(code, eval_code, rs_report, extra_meta),
                  fh, indent=2, sort_keys=True)
        fh.write("\n")
    paths.append(json_path)
    if dump_codewords:
        words_path = base_path + ".codewords.txt"
        with open(words_path, "w") as fh:
            for row in code.codewords:
                fh.write(" ".join(str(int(x)) for x in row) + "\n")
        paths.append(words_path)
    return paths
