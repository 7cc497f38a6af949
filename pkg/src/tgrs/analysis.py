"""Classification and verification of TGRS codes.

The MDS/NMDS dichotomy is decided exactly by a subset-sum search over the
evaluation points: the code is MDS iff no k of them sum to -1/eta.  Distance
claims can additionally be checked by a brute-force oracle that finds the
minimum number of linearly dependent columns of the check (or generator)
matrix.  Self-duality is tested two independent ways: structurally via the
weight proportionality v_i^2 = lambda*u_i together with 2 + a*eta = 0, and
directly via G G^T = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from .field import FieldElement, FieldError, field_spec, format_element
from .code import CaseTag, TgrsCode

# Switch subset-sum searches to meet-in-the-middle at this length.
MITM_THRESHOLD = 28

# Default cap on column-subset searches in the distance oracles.
DEFAULT_ORACLE_BUDGET = comb(24, 12)


class BudgetExceeded(RuntimeError):
    """Distance oracle would examine more column subsets than allowed."""

    def __init__(self, estimate: int, budget: int):
        super().__init__(f"oracle needs ~{estimate} column subsets, "
                         f"budget is {budget}")
        self.estimate = estimate
        self.budget = budget


class SelfDualShapeError(ValueError):
    """Self-duality is dimensionally impossible (n != 2k)."""


# ---------------------------------------------------------------------------
# Subset-sum witness search
# ---------------------------------------------------------------------------

def subset_sum_witness(alpha: Sequence[FieldElement], k: int,
                       target: FieldElement, *,
                       strategy: Optional[str] = None) -> Optional[tuple[int, ...]]:
    """First (in colexicographic order) k-subset of positions whose alpha-sum
    equals target, as 1-based positions; None when no subset sums to target.

    Direct colexicographic enumeration with early exit below
    MITM_THRESHOLD points; an exact meet-in-the-middle split above (same
    colex-first witness, no early exit).
    """
    n = len(alpha)
    if not 1 <= k <= n:
        raise ValueError(f"subset size must satisfy 1 <= k <= n, got k={k}, n={n}")
    for e in alpha:
        if e.ctx != target.ctx:
            raise FieldError("alpha and target from different fields")
    if strategy is None:
        strategy = "mitm" if n >= MITM_THRESHOLD else "direct"
    if strategy == "direct":
        hit = _colex_first(list(alpha), k, target)
    elif strategy == "mitm":
        hit = _mitm_first(list(alpha), k, target)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    if hit is None:
        return None
    return tuple(i + 1 for i in hit)


def _colex_first(alpha, k, target):
    def rec(limit, size, need):
        if size == 0:
            return () if need.is_zero() else None
        for m in range(size - 1, limit):
            sub = rec(m, size - 1, need - alpha[m])
            if sub is not None:
                return sub + (m,)
        return None

    return rec(len(alpha), k, target)


def _grow_buckets(alpha, indices, max_size):
    """(size, sum) -> colex-least index subset, over all subsets of `indices`
    with size <= max_size."""
    zero = alpha[0].ctx.zero() if alpha else None
    table = {(0, zero): ()}
    for idx in indices:
        additions = []
        for (size, s), sub in table.items():
            if size < max_size:
                additions.append(((size + 1, s + alpha[idx]), sub + (idx,)))
        for key, cand in additions:
            old = table.get(key)
            if old is None or tuple(reversed(cand)) < tuple(reversed(old)):
                table[key] = cand
    return table

def _mitm_first(alpha, k, target):
    n = len(alpha)
    mid = n // 2
    low = _grow_buckets(alpha, range(mid), min(k, mid))
    high = _grow_buckets(alpha, range(mid, n), min(k, n - mid))
    best = None
    best_key = None
    for (size_hi, s_hi), sub_hi in high.items():
        need = target - s_hi
        sub_lo = low.get((k - size_hi, need))
        if sub_lo is None:
            continue
        cand = sub_lo + sub_hi
        key = tuple(reversed(cand))
        if best is None or key < best_key:
            best, best_key = cand, key
    return best


# ---------------------------------------------------------------------------
# MDS / NMDS classification
# ---------------------------------------------------------------------------

MDS = "MDS"
NMDS = "NMDS"


@dataclass(frozen=True)
class Classification:
    verdict: str                            # MDS or NMDS
    witness: Optional[tuple[int, ...]]      # 1-based positions, NMDS only


def classify(code: TgrsCode) -> Classification:
    """MDS iff no k evaluation points sum to -1/eta; otherwise NMDS with the
    witness subset attached."""
    target = -code.eta.inverse()
    witness = subset_sum_witness(code.alpha, code.k, target)
    if witness is None:
        return Classification(MDS, None)
    return Classification(NMDS, witness)


def k_minor_det(alpha_subset: Sequence[FieldElement], eta: FieldElement) -> FieldElement:
    """Closed form for the k x k minor of the (v = 1) generator matrix on the
    given evaluation points: Vandermonde(subset) * (1 + eta * sum(subset))."""
    pts = list(alpha_subset)
    if len({a.coeffs for a in pts}) != len(pts):
        raise ValueError("subset entries must be distinct")
    ctx = eta.ctx
    acc = ctx.one()
    for t in range(len(pts)):
        for s in range(t):
            acc = acc * (pts[t] - pts[s])
    total = ctx.zero()
    for a in pts:
        total = total + a
    return acc * (ctx.one() + eta * total)


# ---------------------------------------------------------------------------
# Self-duality
# ---------------------------------------------------------------------------

def recover_lambda(code: TgrsCode) -> Optional[FieldElement]:
    """The lambda with v_i^2 = lambda * u_i for all i, if one exists."""
    lam = code.v[0] * code.v[0] / code.u[0]
    for vi, ui in zip(code.v, code.u):
        if vi * vi != lam * ui:
            return None
    return lam


def self_dual_matrix(code: TgrsCode) -> bool:
    """True iff n = 2k and G G^T = 0 (with rank(G) = k this is C = C-dual)."""
    if code.n != 2 * code.k:
        return False
    g = code.generator_matrix()
    return (g * g.transpose()).is_zero()


@dataclass(frozen=True)
class StructuralDuality:
    self_dual: bool
    lam: Optional[FieldElement]
    structural: bool    # False when k < 3 forced the matrix-test fallback


def self_dual_structural(code: TgrsCode) -> StructuralDuality:
    """Structural self-duality test: GENERIC case, v_i^2 = lambda*u_i, and
    2 + a*eta = 0.  ZERO_SUM and SINGULAR codes are never self-dual.

    Requires n = 2k (raises SelfDualShapeError otherwise).  The structural
    criterion needs k >= 3; for k < 3 the matrix identity decides and the
    result carries structural=False.
    """
    if code.n != 2 * code.k:
        raise SelfDualShapeError(
            f"n = {code.n} != 2k = {2 * code.k}: self-duality impossible")
    if code.k < 3:
        return StructuralDuality(self_dual_matrix(code), recover_lambda(code),
                                 structural=False)
    if code.case_tag is not CaseTag.GENERIC:
        return StructuralDuality(False, None, structural=True)
    lam = recover_lambda(code)
    if lam is None:
        return StructuralDuality(False, None, structural=True)
    two = code.ctx.element(2)
    if not (two + code.a * code.eta).is_zero():
        return StructuralDuality(False, None, structural=True)
    return StructuralDuality(True, lam, structural=True)


# ---------------------------------------------------------------------------
# Brute-force distance oracles
# ---------------------------------------------------------------------------

def _check_budget(n: int, w_max: int, budget: int) -> None:
    est = comb(n, min(w_max, n // 2))
    if est > budget:
        raise BudgetExceeded(est, budget)


def _min_dependent_int(cols: list[list[int]], p: int, w_max: int) -> int:
    """Smallest w such that some w columns are linearly dependent mod p.
    Iterative deepening: at pass w every (w-1)-subset is already known
    independent, so only the last column of each candidate needs reducing."""
    n = len(cols)
    m = len(cols[0]) if cols else 0
    for w in range(1, w_max + 1):
        basis: list[tuple[int, list[int]]] = []

        def dfs(start: int, depth: int) -> bool:
            for i in range(start, n - (w - depth) + 1):
                vec = list(cols[i])
                for piv, bv in basis:
                    f = vec[piv]
                    if f:
                        for idx in range(m):
                            vec[idx] = (vec[idx] - f * bv[idx]) % p
                nz = next((idx for idx, e in enumerate(vec) if e), None)
                if nz is None:
                    if depth + 1 == w:
                        return True
                    continue  # unreachable: smaller pass would have caught it
                if depth + 1 == w:
                    continue
                inv = pow(vec[nz], p - 2, p)
                basis.append((nz, [(e * inv) % p for e in vec]))
                if dfs(i + 1, depth + 1):
                    return True
                basis.pop()
            return False

        if dfs(0, 0):
            return w
    raise RuntimeError("no dependent column subset found within the "
                       "Singleton bound; matrix invariant violated")


def _min_dependent_elem(cols: list[list[FieldElement]], w_max: int) -> int:
    """Extension-field twin of _min_dependent_int."""
    n = len(cols)
    for w in range(1, w_max + 1):
        basis: list[tuple[int, list[FieldElement]]] = []

        def dfs(start: int, depth: int) -> bool:
            for i in range(start, n - (w - depth) + 1):
                vec = list(cols[i])
                for piv, bv in basis:
                    f = vec[piv]
                    if not f.is_zero():
                        vec = [e - f * b for e, b in zip(vec, bv)]
                nz = next((idx for idx, e in enumerate(vec) if not e.is_zero()), None)
                if nz is None:
                    if depth + 1 == w:
                        return True
                    continue
                if depth + 1 == w:
                    continue
                inv = vec[nz].inverse()
                basis.append((nz, [e * inv for e in vec]))
                if dfs(i + 1, depth + 1):
                    return True
                basis.pop()
            return False

        if dfs(0, 0):
            return w
    raise RuntimeError("no dependent column subset found within the "
                       "Singleton bound; matrix invariant violated")


def _min_dependent_columns(matrix, w_max: int) -> int:
    cols = matrix.columns()
    ctx = matrix.ctx
    if ctx.is_prime_field:
        int_cols = [[e.coeffs[0] for e in col] for col in cols]
        return _min_dependent_int(int_cols, ctx.p, w_max)
    return _min_dependent_elem(cols, w_max)


def min_distance_oracle(code: TgrsCode, budget: Optional[int] = None) -> int:
    """Exact minimum distance: least number of dependent check-matrix columns."""
    budget = DEFAULT_ORACLE_BUDGET if budget is None else budget
    w_max = code.n - code.k + 1
    _check_budget(code.n, w_max, budget)
    return _min_dependent_columns(code.check_matrix(), w_max)


def dual_min_distance_oracle(code: TgrsCode, budget: Optional[int] = None) -> int:
    """Exact minimum distance of the dual code (generator-matrix columns)."""
    budget = DEFAULT_ORACLE_BUDGET if budget is None else budget
    w_max = code.k + 1
    _check_budget(code.n, w_max, budget)
    return _min_dependent_columns(code.generator_matrix(), w_max)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

@dataclass
class CodeReport:
    """Serializable verdict bundle for one code."""
    field: str
    n: int
    k: int
    eta: str
    case_tag: str
    classification: str
    witness: Optional[tuple[int, ...]]
    self_dual: bool
    lam: Optional[str]
    min_distance: Optional[int]
    dual_min_distance: Optional[int]
    g_ht_zero: bool
    g_gt_zero: bool

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "params": {"field": self.field, "n": self.n, "k": self.k,
                       "eta": self.eta},
            "case_tag": self.case_tag,
            "classification": self.classification,
            "witness": list(self.witness) if self.witness is not None else None,
            "self_dual": self.self_dual,
            "lambda": self.lam,
            "min_distance": self.min_distance,
            "dual_min_distance": self.dual_min_distance,
            "checks": {"G_Ht_zero": self.g_ht_zero, "G_Gt_zero": self.g_gt_zero},
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "CodeReport":
        params = doc["params"]
        witness = doc.get("witness")
        return cls(
            field=params["field"], n=params["n"], k=params["k"],
            eta=params["eta"], case_tag=doc["case_tag"],
            classification=doc["classification"],
            witness=tuple(witness) if witness is not None else None,
            self_dual=doc["self_dual"], lam=doc.get("lambda"),
            min_distance=doc.get("min_distance"),
            dual_min_distance=doc.get("dual_min_distance"),
            g_ht_zero=doc["checks"]["G_Ht_zero"],
            g_gt_zero=doc["checks"]["G_Gt_zero"],
        )

    def to_text(self) -> str:
        def fmt(v):
            if v is None:
                return "-"
            if isinstance(v, bool):
                return "true" if v else "false"
            if isinstance(v, tuple):
                return ",".join(str(x) for x in v)
            return str(v)
        lines = [
            f"schema: 1",
            f"field: {self.field}",
            f"n: {self.n}",
            f"k: {self.k}",
            f"eta: {self.eta}",
            f"case_tag: {self.case_tag}",
            f"classification: {self.classification}",
            f"witness: {fmt(self.witness)}",
            f"self_dual: {fmt(self.self_dual)}",
            f"lambda: {fmt(self.lam)}",
            f"min_distance: {fmt(self.min_distance)}",
            f"dual_min_distance: {fmt(self.dual_min_distance)}",
            f"G_Ht_zero: {fmt(self.g_ht_zero)}",
            f"G_Gt_zero: {fmt(self.g_gt_zero)}",
        ]
        return "\n".join(lines)


def build_report(code: TgrsCode, budget: Optional[int] = None,
                 with_distances: bool = True) -> CodeReport:
    """Classify, test self-duality both ways, and (within budget) run the
    distance oracles.  Distances are left absent when skipped."""
    cls = classify(code)
    g = code.generator_matrix()
    h = code.check_matrix()
    g_ht_zero = (g * h.transpose()).is_zero()
    g_gt_zero = (g * g.transpose()).is_zero()
    sd = code.n == 2 * code.k and g_gt_zero
    lam = recover_lambda(code)
    dmin = dual_dmin = None
    if with_distances:
        try:
            dmin = min_distance_oracle(code, budget)
            dual_dmin = dual_min_distance_oracle(code, budget)
        except BudgetExceeded:
            dmin = dual_dmin = None
    return CodeReport(
        field=field_spec(code.ctx), n=code.n, k=code.k,
        eta=format_element(code.eta), case_tag=code.case_tag.value,
        classification=cls.verdict, witness=cls.witness,
        self_dual=sd, lam=format_element(lam) if lam is not None else None,
        min_distance=dmin, dual_min_distance=dual_dmin,
        g_ht_zero=g_ht_zero, g_gt_zero=g_gt_zero,
    )
