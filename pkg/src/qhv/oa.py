"""Orthogonal arrays from the intersecting family, with exhaustive checks.

Rows are the reference grid W (x_0 = 1, x_n in the transversal), columns the
family forms in R order, entries the trace-zero form values relabelled
0..q-1 by canonical element order.  The result is a simple
OA(q^{2n-1}, q^{2n-2}, q, 2) of index q^{2n-3}.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .intersecting_family import family, w_set
from .fields import BudgetExceededError
from .geometry import BMParams

DEFAULT_CELL_BUDGET = 10**7


@dataclass
class OrthogonalArray:
    runs: int                 # N
    factors: int              # k
    levels: int               # v
    strength: int             # t
    index: int                # lambda = N / v^t
    entries: np.ndarray       # N x k over 0..v-1
    level_map: tuple[int, ...]  # level i <-> trace-zero element level_map[i]
    params: BMParams | None = None
    meta: dict = field(default_factory=dict)


@dataclass
class StrengthReport:
    strength: int
    index: int | None
    subsets_checked: int
    violations: list[tuple[tuple[int, ...], tuple[int, ...], int]]

    @property
    def ok(self) -> bool:
        return self.index is not None and not self.violations


def verify_strength(A: OrthogonalArray, t: int,
                    max_violations: int = 1000) -> StrengthReport:
    """Count symbol tuples in every N x t column subset.

    The array has strength t iff every tuple appears exactly N / v^t times.
    Violations are reported, not raised.
    """
    if t > A.factors:
        raise ValueError("strength exceeds the number of columns")
    N, v = A.runs, A.levels
    if N % v**t:
        return StrengthReport(t, None, 0, [((), (), N)])
    lam = N // v**t
    entries = np.asarray(A.entries)
    violations = []
    checked = 0
    weights = v ** np.arange(t - 1, -1, -1)
    for cols in combinations(range(A.factors), t):
        checked += 1
        codes = entries[:, cols] @ weights
        counts = np.bincount(codes, minlength=v**t)
        if not np.all(counts == lam):
            for sym in np.nonzero(counts != lam)[0]:
                tup = tuple((int(sym) // v**i) % v for i in range(t - 1, -1, -1))
                violations.append((cols, tup, int(counts[sym])))
                if len(violations) >= max_violations:
                    return StrengthReport(t, lam, checked, violations)
    return StrengthReport(t, lam, checked, violations)


def verify_simple(A: OrthogonalArray) -> bool:
    """True iff no two rows coincide."""
    entries = np.asarray(A.entries)
    return len(np.unique(entries, axis=0)) == A.runs


def build_oa(params: BMParams, budget: int = DEFAULT_CELL_BUDGET,
             verify: bool = True) -> OrthogonalArray:
    """Construct and (by default) fully verify the array for these parameters."""
    ctx, n, q = params.ctx, params.n, params.ctx.q
    N = q ** (2 * n - 1)
    k = q ** (2 * n - 2)
    if N * k > budget:
        raise BudgetExceededError(
            f"array would have {N * k} cells, budget is {budget}")
    forms = family(params)
    W = w_set(ctx, n)
    level = ctx.t0_index
    entries = np.empty((N, k), dtype=np.int16)
    for i, pt in enumerate(W):
        row = entries[i]
        for j, f in enumerate(forms):
            val = f.evaluate(pt)
            row[j] = level[val]  # KeyError here would mean a non-trace-zero value
    A = OrthogonalArray(
        runs=N,
        factors=k,
        levels=q,
        strength=2,
        index=q ** (2 * n - 3),
        entries=entries,
        level_map=ctx.t0,
        params=params,
        meta={"n": n, "q": q, "a": params.a, "b": params.b,
              "condition": params.condition},
    )
    if verify:
        rep = verify_strength(A, 2)
        if not (rep.ok and rep.index == A.index and verify_simple(A)):
            raise RuntimeError(
                "constructed array failed verification; arithmetic bug"
            )  # pragma: no cover
    return A


# ---------------------------------------------------------------------------
# interchange format: CSV entries + JSON sidecar, byte-identical across runs
# ---------------------------------------------------------------------------

def oa_csv_bytes(A: OrthogonalArray) -> bytes:
    lines = [",".join(str(int(x)) for x in row) for row in np.asarray(A.entries)]
    return ("\n".join(lines) + "\n").encode()


def oa_sidecar(A: OrthogonalArray, extra_meta: dict | None = None) -> dict:
    ctx = A.params.ctx if A.params is not None else None
    digest = hashlib.sha256(oa_csv_bytes(A)).hexdigest()
    strength = verify_strength(A, A.strength)
    sidecar = {
        "N": A.runs,
        "k": A.factors,
        "v": A.levels,
        "t": A.strength,
        "lambda": A.index,
        "simple": verify_simple(A),
        "strength_ok": strength.ok and strength.index == A.index,
        "level_map": [
            {"level": i, "element": ctx.format_element(x) if ctx else x,
             "code": x}
            for i, x in enumerate(A.level_map)
        ],
        "row_order": "W lexicographic (x_n by transversal order)",
        "col_order": "R lexicographic in (alpha_1..alpha_{n-1})",
        "csv_sha256": digest,
    }
    if A.params is not None and ctx is not None:
        sidecar["field"] = ctx.to_json()
        sidecar["params"] = {
            "n": A.params.n,
            "a": A.params.a,
            "b": A.params.b,
            "a_digits": list(ctx.element_digits(A.params.a)),
            "b_digits": list(ctx.element_digits(A.params.b)),
            "condition": A.params.condition,
        }
    if extra_meta:
        sidecar["config"] = extra_meta
    return sidecar


def write_oa(A: OrthogonalArray, base_path: str,
             extra_meta: dict | None = None) -> tuple[str, str]:
    """Write <base>.csv and <base>.json; returns the two paths."""
    csv_path = base_path + ".csv"
    json_path = base_path + ".json"
    with open(csv_path, "wb") as fh:
        fh.write(oa_csv_bytes(A))
    with open(json_path, "w") as fh:
        json.dump(oa_sidecar(A, extra_meta), fh, indent=2, sort_keys=True)
        fh.write("\n")
    return csv_path, json_path
