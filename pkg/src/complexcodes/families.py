"""Named code families and the anticode relative-distance sweep.

Families carry their predicted parameter triple; two of them ship with a
pre-flagged dimension (the printed value undercounts the generator rank by
one), and evaluation grades computed-vs-predicted as PASS, FAIL, or
DISCREPANCY-NOTED accordingly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from . import bounds
from .codes import (
    Budgets,
    DEFAULT_BUDGETS,
    CodeSummary,
    PredictedParams,
    summarize_anticode,
    summarize_face_code,
)
from .complexes import SimplicialComplex, cone, from_facets
from .errors import BudgetExceededError, InvalidComplexError

FULL_SIMPLEX = "full-simplex"
SKELETON = "skeleton"
CONE_SKELETON = "cone-skeleton"
ANTICODE_ASYMPTOTIC = "anticode-asymptotic"

PASS = "PASS"
FAIL = "FAIL"
DISCREPANCY = "DISCREPANCY-NOTED"


@dataclass(frozen=True)
class SweepRule:
    """Deterministic complex-per-k constructor with bounded dimension."""

    name: str
    max_dimension: int
    min_vertices: int
    make: Callable[[int], SimplicialComplex]


def padded_rule(base: SimplicialComplex, name: str) -> SweepRule:
    """Fixed base complex padded with singleton facets up to k vertices."""
    k0 = base.ambient_vertex_count

    def make(k: int) -> SimplicialComplex:
        if k < k0:
            raise InvalidComplexError(f"rule {name!r} needs k >= {k0}")
        if k == k0:
            return base
        facets = [list(f.members) for f in base.facets]
        facets.extend([j] for j in range(k0, k))
        return from_facets(k, facets)

    return SweepRule(name, base.dimension, k0, make)


def fixed_triangle_rule() -> SweepRule:
    """One triangle {0,1,2} plus isolated vertices up to k."""
    return padded_rule(from_facets(3, [[0, 1, 2]]), "fixed-triangle")


def disjoint_triangles_rule() -> SweepRule:
    """floor(k/3) disjoint triangles, leftover vertices as singletons."""

    def make(k: int) -> SimplicialComplex:
        if k < 3:
            raise InvalidComplexError("disjoint-triangles rule needs k >= 3")
        facets = [[3 * i, 3 * i + 1, 3 * i + 2] for i in range(k // 3)]
        facets.extend([j] for j in range(3 * (k // 3), k))
        return from_facets(k, facets)

    return SweepRule("disjoint-triangles", 2, 3, make)


def facet_file_rule(pattern: str) -> SweepRule:
    """Complex per k loaded from `pattern` with '{k}' substituted.

    The bounded-dimension hypothesis is the caller's responsibility; the
    dimension actually loaded is reported per row by the sweep consumer.
    """
    from .io import load_complex_file

    def make(k: int) -> SimplicialComplex:
        delta, _ = load_complex_file(pattern.format(k=k))
        if delta.ambient_vertex_count != k:
            raise InvalidComplexError(
                f"{pattern.format(k=k)} has {delta.ambient_vertex_count} vertices, expected {k}"
            )
        return delta

    return SweepRule(f"files:{pattern}", -1, 1, make)


BUILTIN_RULES = {
    "fixed-triangle": fixed_triangle_rule,
    "disjoint-triangles": disjoint_triangles_rule,
}


@dataclass(frozen=True)
class FamilySpec:
    """A family member request: which family, its index (N, or k for the
    asymptotic family), the field, and the sweep rule when asymptotic."""

    family: str
    index: int
    p: int = 2
    rule: SweepRule | None = None


@dataclass(frozen=True)
class FamilyPrediction:
    """Predicted triple as printed, plus the corrected dimension when the
    printed one is known to undercount the generator rank."""

    n: int
    k: int
    d: int
    corrected_k: int | None = None

    def as_predicted_params(self) -> PredictedParams:
        notes = ()
        if self.corrected_k is not None:
            notes = (
                f"printed dimension {self.k} pre-flagged; unit columns force rank {self.corrected_k}",
            )
        return PredictedParams(n=self.n, k=self.k, d=self.d, notes=notes)


@dataclass(frozen=True)
class FamilyInstance:
    spec: FamilySpec
    complex: SimplicialComplex
    prediction: FamilyPrediction | None


def _skeleton_complex(n_index: int) -> SimplicialComplex:
    if n_index < 1:
        raise InvalidComplexError("skeleton family needs N >= 1")
    verts = range(n_index + 1)
    return from_facets(n_index + 1, [list(c) for c in combinations(verts, n_index)])


def make_family_instance(spec: FamilySpec) -> FamilyInstance:
    """Build the complex for a family member with its predicted parameters."""
    n_idx = spec.index
    if spec.family == FULL_SIMPLEX:
        if n_idx < 1:
            raise InvalidComplexError("full-simplex family needs N >= 1")
        delta = from_facets(n_idx + 1, [list(range(n_idx + 1))])
        pred = FamilyPrediction(
            n=2 ** (n_idx + 1) - 1, k=n_idx, d=2**n_idx, corrected_k=n_idx + 1
        )
        return FamilyInstance(spec, delta, pred)
    if spec.family == SKELETON:
        delta = _skeleton_complex(n_idx)
        pred = FamilyPrediction(n=2 ** (n_idx + 1) - 2, k=n_idx + 1, d=2**n_idx - 1)
        return FamilyInstance(spec, delta, pred)
    if spec.family == CONE_SKELETON:
        delta = cone(_skeleton_complex(n_idx))
        pred = FamilyPrediction(
            n=2 * (2 ** (n_idx + 1) - 2) + 1, k=n_idx + 2, d=2 * (2**n_idx - 1)
        )
        return FamilyInstance(spec, delta, pred)
    if spec.family == ANTICODE_ASYMPTOTIC:
        if spec.rule is None:
            raise InvalidComplexError("anticode-asymptotic family needs a sweep rule")
        return FamilyInstance(spec, spec.rule.make(n_idx), None)
    raise InvalidComplexError(f"unknown family {spec.family!r}")


def grade_family(prediction: FamilyPrediction, computed: CodeSummary) -> str:
    """PASS when all three parameters match as printed; DISCREPANCY-NOTED when
    the only mismatch is the pre-flagged dimension and the computed rank
    equals the corrected value; FAIL otherwise."""
    if (prediction.n, prediction.k, prediction.d) == computed.params:
        return PASS
    if (
        prediction.corrected_k is not None
        and computed.params == (prediction.n, prediction.corrected_k, prediction.d)
    ):
        return DISCREPANCY
    return FAIL


@dataclass(frozen=True)
class FamilyReport:
    instance: FamilyInstance
    summary: CodeSummary
    status: str
    verdict: bounds.OptimalityVerdict | None

    def as_dict(self) -> dict:
        pred = self.instance.prediction
        return {
            "family": self.instance.spec.family,
            "index": self.instance.spec.index,
            "p": self.instance.spec.p,
            "summary": self.summary.as_dict(),
            "predicted": None if pred is None else pred.as_predicted_params().as_dict(),
            "status": self.status,
            "griesmer": None if self.verdict is None else self.verdict.as_dict(),
        }


def evaluate_family(
    spec: FamilySpec,
    *,
    budgets: Budgets = DEFAULT_BUDGETS,
    threads: int = 1,
) -> FamilyReport:
    """Compute a family member's parameters and grade them against the
    prediction, attaching the Griesmer verdict of the computed triple."""
    inst = make_family_instance(spec)
    if spec.family == ANTICODE_ASYMPTOTIC:
        summary = summarize_anticode(inst.complex, spec.p, budgets=budgets, threads=threads)
        verdict = None
        if not summary.degenerate:
            verdict = bounds.classify(summary.n, summary.k, summary.d, spec.p)
        return FamilyReport(inst, summary, PASS, verdict)
    summary = summarize_face_code(inst.complex, spec.p, budgets=budgets, threads=threads)
    status = grade_family(inst.prediction, summary)
    verdict = bounds.classify(summary.n, summary.k, summary.d, spec.p)
    return FamilyReport(inst, summary, status, verdict)


# ---------------------------------------------------------------------------
# asymptotic sweep


@dataclass(frozen=True)
class SweepRow:
    k: int
    n: int
    d: int
    ratio: float | None
    method: str

    def as_dict(self) -> dict:
        return {"k": self.k, "n": self.n, "d": self.d, "ratio": self.ratio, "method": self.method}


@dataclass(frozen=True)
class SweepResult:
    rule: str
    p: int
    rows: tuple[SweepRow, ...]
    truncated_at: int | None

    @property
    def target_ratio(self) -> float:
        return (self.p - 1) / self.p

    @property
    def final_deviation(self) -> float | None:
        for row in reversed(self.rows):
            if row.ratio is not None:
                return abs(row.ratio - self.target_ratio)
        return None

    def to_csv(self) -> str:
        lines = ["k,n,d,ratio,method"]
        for r in self.rows:
            ratio = "" if r.ratio is None else f"{r.ratio:.6f}"
            lines.append(f"{r.k},{r.n},{r.d},{ratio},{r.method}")
        if self.truncated_at is not None:
            lines.append(f"# truncated at k={self.truncated_at}: budget exceeded")
        return "\n".join(lines) + "\n"

    def as_dict(self) -> dict:
        return {
            "rule": self.rule,
            "p": self.p,
            "target_ratio": self.target_ratio,
            "final_deviation": self.final_deviation,
            "truncated_at": self.truncated_at,
            "rows": [r.as_dict() for r in self.rows],
        }


def asymptotic_sweep(
    rule: SweepRule,
    k_range,
    p,
    *,
    budgets: Budgets = DEFAULT_BUDGETS,
    threads: int = 1,
) -> SweepResult:
    """Anticode parameters per k for a bounded-dimension complex family.

    Rows use materialized-column enumeration while p^k fits the column
    budget and switch to the weight-identity path beyond it; a row whose
    message count exceeds the message budget truncates the table.
    """
    rows: list[SweepRow] = []
    truncated = None
    for k in k_range:
        delta = rule.make(k)
        try:
            summary = summarize_anticode(delta, p, method="auto", budgets=budgets, threads=threads)
        except BudgetExceededError:
            truncated = k
            break
        if summary.degenerate:
            rows.append(SweepRow(k, 0, 0, None, "degenerate"))
            continue
        rows.append(
            SweepRow(k, summary.n, summary.d, summary.d / summary.n, summary.method)
        )
    return SweepResult(rule.name, int(p), tuple(rows), truncated)
