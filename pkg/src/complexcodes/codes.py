"""Linear codes from simplicial complexes: construction, weights, exact
minimum distances, and the parameter transforms of the topological operations.

Three routes to a minimum distance, kept deliberately independent so they can
audit each other:

* geometric  -- min over vertices of the number of faces containing them
                (valid for face codes; O(k * n), field independent);
* exhaustive -- enumerate all p^k messages against materialized columns;
* identity   -- anticode weights derived from face-code weights via
                w_anti(u) = (p-1) p^(k-1) - w_faces(u), never materializing
                the p^k - |faces| anticode columns.

Message vectors are ordered by radix value sum(u_j * p^j); witnesses are the
least message in that order attaining the minimum distance.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import gf
from .complexes import (
    DEFAULT_FACE_BUDGET,
    GluedComplex,
    SimplicialComplex,
    face_masks,
    faces_containing,
    glue_faces,
)
from .errors import BudgetExceededError, DegenerateComplexError

DEFAULT_COLUMN_BUDGET = 1 << 24
DEFAULT_MESSAGE_BUDGET = 1 << 24
_BLOCK = 1 << 15

FACE_CODE = "faces"
ANTICODE = "ambient-complement"


@dataclass(frozen=True)
class Budgets:
    """Enumeration guards: distinct faces, materialized columns, messages."""

    faces: int = DEFAULT_FACE_BUDGET
    columns: int = DEFAULT_COLUMN_BUDGET
    messages: int = DEFAULT_MESSAGE_BUDGET


DEFAULT_BUDGETS = Budgets()


def message_vector(index: int, k: int, p: int) -> tuple[int, ...]:
    """Decode a radix-p message index into its coordinate vector."""
    out = []
    for _ in range(k):
        out.append(index % p)
        index //= p
    return tuple(out)


def message_index(u, p: int) -> int:
    idx = 0
    for j, x in enumerate(u):
        idx += (int(x) % p) * p**j
    return idx


@dataclass(frozen=True)
class ComplexCode:
    """A linear code given by its definition columns and field modulus.

    Columns are stored as ints: face bit masks for a face code, radix-p
    vector encodings for an ambient anticode (the two coincide at p = 2).
    The generator matrix is k x n with one row per ambient vertex.
    """

    kind: str
    p: int
    k: int
    columns: np.ndarray
    source: SimplicialComplex

    def __post_init__(self):
        object.__setattr__(self, "p", gf.check_prime(self.p))
        cols = np.asarray(self.columns, dtype=np.int64)
        cols.flags.writeable = False
        object.__setattr__(self, "columns", cols)

    @property
    def n(self) -> int:
        return int(self.columns.size)

    @property
    def degenerate(self) -> bool:
        return self.n == 0

    def columns_matrix(self) -> np.ndarray:
        """Decode columns into an (n, k) coordinate matrix."""
        return _decode_columns(self.columns, self.k, self.p, self.kind)

    def generator_matrix(self) -> gf.MatrixFp:
        m = self.columns_matrix()
        return gf.MatrixFp(self.p, tuple(tuple(int(x) for x in m[:, v]) for v in range(self.k)))


def _decode_columns(columns: np.ndarray, k: int, p: int, kind: str) -> np.ndarray:
    if kind == FACE_CODE or p == 2:
        return (columns[:, None] >> np.arange(k, dtype=np.int64)) & 1
    powers = p ** np.arange(k, dtype=np.int64)
    return (columns[:, None] // powers) % p


def _face_radix_codes(masks: np.ndarray, k: int, p: int) -> np.ndarray:
    """Radix-p encodings of 0/1 characteristic vectors given as bit masks."""
    if p == 2:
        return masks
    bits = (masks[:, None] >> np.arange(k, dtype=np.int64)) & 1
    return bits @ (p ** np.arange(k, dtype=np.int64))


def build_code(
    delta: SimplicialComplex,
    p,
    *,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> ComplexCode:
    """Code whose columns are the nonempty faces in canonical order."""
    p = gf.check_prime(p)
    masks = face_masks(delta, budget=budgets.faces)
    return ComplexCode(FACE_CODE, p, delta.ambient_vertex_count, masks, delta)


def build_anticode(
    delta: SimplicialComplex,
    p,
    *,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> ComplexCode:
    """Code on all vectors of F_p^k except the face characteristic vectors.

    A full simplex over F_2 leaves no columns; the resulting code is returned
    empty and flagged degenerate rather than rejected.
    """
    p = gf.check_prime(p)
    k = delta.ambient_vertex_count
    total = p**k
    if total > budgets.columns:
        raise BudgetExceededError("column", total, budgets.columns)
    masks = face_masks(delta, include_empty=True, budget=budgets.faces)
    removed = np.sort(_face_radix_codes(masks, k, p))
    universe = np.arange(total, dtype=np.int64)
    cols = np.setdiff1d(universe, removed, assume_unique=True)
    return ComplexCode(ANTICODE, p, k, cols, delta)


def weight(code: ComplexCode, u) -> int:
    """Number of columns with nonzero inner product against the message u."""
    u = [int(x) % code.p for x in u]
    if len(u) != code.k:
        raise ValueError(f"message length {len(u)} != {code.k}")
    if code.degenerate:
        return 0
    prods = code.columns_matrix() @ np.asarray(u, dtype=np.int64)
    return int(np.count_nonzero(prods % code.p))


def weight_odd_intersection(code: ComplexCode, u) -> int:
    """F_2 fast path: columns whose intersection with supp(u) is odd."""
    if code.p != 2:
        raise ValueError("odd-intersection weights require p = 2")
    u = list(u)
    if len(u) != code.k:
        raise ValueError(f"message length {len(u)} != {code.k}")
    umask = 0
    for j, x in enumerate(u):
        if int(x) % 2:
            umask |= 1 << j
    return sum((int(c) & umask).bit_count() & 1 for c in code.columns)


def _weight_over_masks(masks, u, p) -> int:
    total = 0
    for m in masks:
        m = int(m)
        s = 0
        while m:
            low = m & -m
            s += u[low.bit_length() - 1]
            m ^= low
        if s % p:
            total += 1
    return total


def anticode_weight_identity(delta: SimplicialComplex, p, u, *, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """Anticode weight of a nonzero message from face-code weights alone:
    (p-1) p^(k-1) minus the face-code weight."""
    p = gf.check_prime(p)
    k = delta.ambient_vertex_count
    u = [int(x) % p for x in u]
    if len(u) != k:
        raise ValueError(f"message length {len(u)} != {k}")
    if not any(u):
        raise ValueError("identity only holds for nonzero messages")
    masks = face_masks(delta, budget=budgets.faces)
    return (p - 1) * p ** (k - 1) - _weight_over_masks(masks, u, p)


# ---------------------------------------------------------------------------
# exhaustive message sweeps


@dataclass
class _SweepStats:
    hist: np.ndarray
    min_pos: int | None = None
    min_pos_index: int | None = None
    max_below: int | None = None
    max_below_index: int | None = None


def _block_stats(colsT: np.ndarray, p: int, k: int, start: int, stop: int, cap: int):
    idx = np.arange(start, stop, dtype=np.int64)
    powers = p ** np.arange(k, dtype=np.int64)
    digits = (idx[:, None] // powers) % p
    prods = digits.astype(np.float64) @ colsT
    prods %= p
    weights = np.count_nonzero(prods, axis=1)
    hist = np.bincount(weights, minlength=colsT.shape[1] + 1)
    pos = weights > 0 if start > 0 else (weights > 0) & (idx > 0)
    min_pos = min_idx = None
    if pos.any():
        w = weights.copy()
        w[~pos] = np.iinfo(np.int64).max
        j = int(np.argmin(w))
        min_pos, min_idx = int(weights[j]), start + j
    below = weights < cap if start > 0 else (weights < cap) & (idx > 0)
    max_below = max_idx = None
    if below.any():
        w = weights.copy()
        w[~below] = -1
        j = int(np.argmax(w))
        max_below, max_idx = int(weights[j]), start + j
    return hist, min_pos, min_idx, max_below, max_idx


def _sweep_messages(
    cols_matrix: np.ndarray,
    p: int,
    k: int,
    total: int,
    *,
    cap: int | None = None,
    threads: int = 1,
    block: int = _BLOCK,
) -> _SweepStats:
    """Partition message space into contiguous radix ranges, reduce each to a
    local (histogram, min-positive, max-below-cap), merge in range order."""
    colsT = np.ascontiguousarray(cols_matrix.T, dtype=np.float64)
    if cap is None:
        cap = colsT.shape[1] + 1
    ranges = [(s, min(s + block, total)) for s in range(0, total, block)]
    if threads > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(
                pool.map(lambda r: _block_stats(colsT, p, k, r[0], r[1], cap), ranges)
            )
    else:
        results = [_block_stats(colsT, p, k, s, e, cap) for s, e in ranges]
    stats = _SweepStats(hist=np.zeros(colsT.shape[1] + 1, dtype=np.int64))
    for hist, mn, mni, mx, mxi in results:
        stats.hist += hist
        if mn is not None and (stats.min_pos is None or mn < stats.min_pos):
            stats.min_pos, stats.min_pos_index = mn, mni
        if mx is not None and (stats.max_below is None or mx > stats.max_below):
            stats.max_below, stats.max_below_index = mx, mxi
    return stats


def _hist_to_dict(hist: np.ndarray) -> dict[int, int]:
    return {int(w): int(c) for w, c in enumerate(hist) if c}


def min_distance_exhaustive(
    code: ComplexCode,
    *,
    budgets: Budgets = DEFAULT_BUDGETS,
    threads: int = 1,
) -> tuple[int, tuple[int, ...], dict[int, int]]:
    """Exact minimum over all nonzero messages, with the full weight
    distribution and the least witness in radix order."""
    total = code.p**code.k
    if total > budgets.messages:
        raise BudgetExceededError("message", total, budgets.messages)
    if code.degenerate:
        raise DegenerateComplexError("empty code has no nonzero weights")
    stats = _sweep_messages(code.columns_matrix(), code.p, code.k, total, threads=threads)
    if stats.min_pos is None:
        raise DegenerateComplexError("all messages encode to zero")
    witness = message_vector(stats.min_pos_index, code.k, code.p)
    return stats.min_pos, witness, _hist_to_dict(stats.hist)


def min_distance_geometric(
    delta: SimplicialComplex,
    *,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> tuple[int, int]:
    """Minimum distance of the face code as the least number of nonempty
    faces containing a vertex; independent of the field modulus.

    Returns (d, witness vertex), the witness being the least such vertex.
    """
    support = delta.vertex_support_mask
    if not support:
        raise DegenerateComplexError("complex has no nonempty faces")
    masks = face_masks(delta, budget=budgets.faces)
    best = None
    best_v = None
    for v in range(delta.ambient_vertex_count):
        if not support >> v & 1:
            continue
        c = int(np.count_nonzero(masks & np.int64(1 << v)))
        if best is None or c < best:
            best, best_v = c, v
    return best, best_v


# ---------------------------------------------------------------------------
# summaries


@dataclass(frozen=True)
class CodeSummary:
    """Parameters [n, k, d] plus distribution, witness and producing method.

    k is always the computed rank of the generator, never assumed.  The
    weight distribution counts all p^k messages (so weight 0 has count
    p^(k - rank)); it is None when the method computes d alone.
    """

    n: int
    k: int
    d: int
    method: str
    weight_distribution: dict[int, int] | None = None
    witness: tuple[int, ...] | None = None
    degenerate: bool = False

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.n, self.k, self.d)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "method": self.method,
            "weight_distribution": (
                None
                if self.weight_distribution is None
                else {str(w): c for w, c in sorted(self.weight_distribution.items())}
            ),
            "witness": None if self.witness is None else list(self.witness),
            "degenerate": self.degenerate,
        }


def _rank_from_columns(code: ComplexCode) -> int:
    rows = ([int(x) for x in row] for row in code.columns_matrix())
    return gf.rank_of_rows(rows, code.k, code.p)


def _exact_log(count: int, p: int) -> int:
    e = 0
    while count > 1:
        if count % p:
            raise AssertionError(f"kernel count {count} is not a power of {p}")
        count //= p
        e += 1
    return e


def summarize_face_code(
    delta: SimplicialComplex,
    p,
    *,
    method: str = "geometric",
    budgets: Budgets = DEFAULT_BUDGETS,
    threads: int = 1,
) -> CodeSummary:
    """Summary of the face code; method 'geometric' (default) or 'exhaustive'."""
    code = build_code(delta, p, budgets=budgets)
    rank = _rank_from_columns(code)
    if method == "geometric":
        d, v = min_distance_geometric(delta, budgets=budgets)
        witness = tuple(1 if j == v else 0 for j in range(code.k))
        return CodeSummary(code.n, rank, d, "geometric", None, witness)
    if method == "exhaustive":
        d, witness, dist = min_distance_exhaustive(code, budgets=budgets, threads=threads)
        return CodeSummary(code.n, rank, d, "exhaustive", dist, witness)
    raise ValueError(f"unknown face-code method {method!r}")


def _anticode_identity_summary(
    delta: SimplicialComplex,
    p: int,
    budgets: Budgets,
    threads: int,
) -> CodeSummary:
    k = delta.ambient_vertex_count
    total = p**k
    if total > budgets.messages:
        raise BudgetExceededError("message", total, budgets.messages)
    masks = face_masks(delta, budget=budgets.faces)
    n = total - masks.size - 1
    full = (p - 1) * p ** (k - 1)
    if n == 0:
        return CodeSummary(0, 0, 0, "identity", {0: total}, None, degenerate=True)
    bits = (masks[:, None] >> np.arange(k, dtype=np.int64)) & 1
    stats = _sweep_messages(bits, p, k, total, cap=full, threads=threads)
    face_hist = stats.hist
    dist: dict[int, int] = {}
    kernel = 1  # u = 0
    for w, c in enumerate(face_hist):
        if not c:
            continue
        c = int(c)
        if w == 0:
            c -= 1  # reassign u = 0 from face weight 0 to anticode weight 0
            if c:
                dist[full] = dist.get(full, 0) + c
        elif w == full:
            kernel += c
        else:
            dist[full - w] = dist.get(full - w, 0) + c
    dist[0] = kernel
    rank = k - _exact_log(kernel, p)
    d = full - stats.max_below
    witness = message_vector(stats.max_below_index, k, p)
    return CodeSummary(n, rank, d, "identity", dist, witness)


def summarize_anticode(
    delta: SimplicialComplex,
    p,
    *,
    method: str = "auto",
    budgets: Budgets = DEFAULT_BUDGETS,
    threads: int = 1,
) -> CodeSummary:
    """Summary of the ambient anticode.

    'exhaustive' materializes the columns; 'identity' derives every anticode
    weight from the face code without materializing them; 'auto' picks
    exhaustive while p^k fits the column budget, else identity.
    """
    p = gf.check_prime(p)
    if method == "auto":
        method = "exhaustive" if p**delta.ambient_vertex_count <= budgets.columns else "identity"
    if method == "identity":
        return _anticode_identity_summary(delta, p, budgets, threads)
    if method != "exhaustive":
        raise ValueError(f"unknown anticode method {method!r}")
    code = build_anticode(delta, p, budgets=budgets)
    if code.degenerate:
        return CodeSummary(0, 0, 0, "degenerate", {0: p**code.k}, None, degenerate=True)
    rank = _rank_from_columns(code)
    d, witness, dist = min_distance_exhaustive(code, budgets=budgets, threads=threads)
    return CodeSummary(code.n, rank, d, "exhaustive", dist, witness)


# ---------------------------------------------------------------------------
# parameter transforms


@dataclass(frozen=True)
class PredictedParams:
    """Partial [n, k, d] prediction; None components are unconstrained and a
    d_range replaces an exact d when only an interval is guaranteed."""

    n: int | None = None
    k: int | None = None
    d: int | None = None
    d_range: tuple[int, int] | None = None
    notes: tuple[str, ...] = ()

    def matches(self, summary: CodeSummary) -> bool:
        if self.n is not None and self.n != summary.n:
            return False
        if self.k is not None and self.k != summary.k:
            return False
        if self.d is not None and self.d != summary.d:
            return False
        if self.d_range is not None and not self.d_range[0] <= summary.d <= self.d_range[1]:
            return False
        return True

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "d_range": None if self.d_range is None else list(self.d_range),
            "notes": list(self.notes),
        }


def predict_cone(params) -> tuple[int, int, int]:
    """Cone transform on [n, k, d]: length 2n+1, dimension k+1, distance 2d."""
    n, k, d = params
    return (2 * n + 1, k + 1, 2 * d)


def predict_boundary(params, s: int, *, has_isolated_vertices: bool = False) -> PredictedParams:
    """Boundary transform: length drops by the facet count s, dimension is
    preserved and the distance loses at most s (never below 1).

    With isolated vertices the dimension and distance guarantees lapse; only
    the length constraint is predicted and a warning note is carried.
    """
    n, k, d = params
    if has_isolated_vertices:
        return PredictedParams(
            n=n - s,
            notes=("isolated vertices present: dimension/distance transform not guaranteed",),
        )
    return PredictedParams(n=n - s, k=k, d_range=(max(1, d - s), d))


@dataclass(frozen=True)
class OperationReport:
    """Before/after parameters for a topological operation plus the predicted
    transform, graded PASS/FAIL (or DISCREPANCY-NOTED for pre-flagged rows)."""

    operation: str
    before: CodeSummary
    after: CodeSummary
    predicted_after: PredictedParams
    status: str

    def as_dict(self) -> dict:
        return {
            "operation": self.operation,
            "before": self.before.as_dict(),
            "after": self.after.as_dict(),
            "predicted_after": self.predicted_after.as_dict(),
            "status": self.status,
        }


def grade(predicted: PredictedParams, after: CodeSummary) -> str:
    return "PASS" if predicted.matches(after) else "FAIL"


# ---------------------------------------------------------------------------
# gluing decomposition


@dataclass(frozen=True)
class GlueWeightDecomposition:
    """Weight of a quotient message split over the two glued parts minus the
    shared face's own contribution."""

    glued: GluedComplex
    first_part_weight: int
    second_part_weight: int
    shared_face_weight: int
    total_weight: int

    @property
    def holds(self) -> bool:
        return (
            self.total_weight
            == self.first_part_weight + self.second_part_weight - self.shared_face_weight
        )


def glue_weight_decomposition(
    d1: SimplicialComplex,
    d2: SimplicialComplex,
    face1,
    face2,
    u,
    p,
    *,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> GlueWeightDecomposition:
    """Glue d1 and d2 along a face pair and decompose the weight of u."""
    p = gf.check_prime(p)
    glued = glue_faces(d1, d2, face1, face2)
    k = glued.quotient.ambient_vertex_count
    u = [int(x) % p for x in u]
    if len(u) != k:
        raise ValueError(f"message length {len(u)} != {k}")
    w1 = _weight_over_masks(face_masks(glued.first_part, budget=budgets.faces), u, p)
    w2 = _weight_over_masks(face_masks(glued.second_part, budget=budgets.faces), u, p)
    shared = [
        m
        for m in face_masks(glued.first_part, budget=budgets.faces)
        if int(m) & glued.shared_face_mask == int(m)
    ]
    wf = _weight_over_masks(shared, u, p)
    total = _weight_over_masks(face_masks(glued.quotient, budget=budgets.faces), u, p)
    return GlueWeightDecomposition(glued, w1, w2, wf, total)
