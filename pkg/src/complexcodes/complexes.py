"""Simplicial complexes stored as bit-mask face sets, plus the topological
operations (cone, boundary, skeleton, link, gluing, subdivision, complement)
that drive the code constructions in this package.

Vertices are always contiguous 0-based indices; a face is an int whose set
bits mark its vertices, so subset tests and face dimensions are single bit
operations.  Complexes are immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .errors import BudgetExceededError, DegenerateComplexError, InvalidComplexError

MAX_VERTICES = 63
DEFAULT_FACE_BUDGET = 1 << 22


def mask_of(vertices) -> int:
    """Pack an iterable of vertex indices into a bit mask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Unpack a bit mask into sorted vertex indices."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Face:
    """A face: subset of the ambient vertex set, as a fixed-width bit mask."""

    mask: int
    width: int

    def __post_init__(self):
        if not 1 <= self.width <= MAX_VERTICES:
            raise InvalidComplexError(f"face width {self.width} outside [1, {MAX_VERTICES}]")
        if self.mask < 0 or self.mask >> self.width:
            raise InvalidComplexError(f"face mask {self.mask:#x} does not fit width {self.width}")

    @property
    def members(self) -> tuple[int, ...]:
        return vertices_of(self.mask)

    @property
    def dimension(self) -> int:
        return self.mask.bit_count() - 1

    def __contains__(self, vertex: int) -> bool:
        return 0 <= vertex < self.width and bool(self.mask >> vertex & 1)


@dataclass(frozen=True)
class SimplicialComplex:
    """Ambient vertex count plus the canonical (ascending-mask) facet list.

    The full face set is derived lazily; the empty face is always implied.
    A facet list of () represents the complex whose only face is empty.
    """

    ambient_vertex_count: int
    facet_masks: tuple[int, ...]

    def __post_init__(self):
        k = self.ambient_vertex_count
        if not 1 <= k <= MAX_VERTICES:
            raise InvalidComplexError(f"ambient vertex count {k} outside [1, {MAX_VERTICES}]")
        prev = -1
        for m in self.facet_masks:
            if m <= prev:
                raise InvalidComplexError("facet masks not in strictly ascending order")
            if m >> k:
                raise InvalidComplexError(f"facet {m:#x} uses vertices >= {k}")
            prev = m
        for a in self.facet_masks:
            for b in self.facet_masks:
                if a != b and a & b == a:
                    raise InvalidComplexError("facet list violates maximality")

    @property
    def facets(self) -> tuple[Face, ...]:
        return tuple(Face(m, self.ambient_vertex_count) for m in self.facet_masks)

    @property
    def dimension(self) -> int:
        if not self.facet_masks:
            return -1
        return max(m.bit_count() for m in self.facet_masks) - 1

    @property
    def vertex_support_mask(self) -> int:
        """Mask of vertices that actually appear in some facet."""
        m = 0
        for f in self.facet_masks:
            m |= f
        return m

    def contains_face(self, mask: int) -> bool:
        return any(mask & f == mask for f in self.facet_masks)


@dataclass(frozen=True)
class VertexMap:
    """Total map from source vertices to target vertices, image normalized
    to the contiguous range [0, target_size)."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        image = set(self.mapping)
        if not self.mapping:
            raise InvalidComplexError("vertex map with empty domain")
        if image != set(range(len(image))):
            raise InvalidComplexError(
                "vertex map image not contiguous; build maps with VertexMap.normalized"
            )

    @staticmethod
    def normalized(targets) -> "VertexMap":
        """Build a map from raw targets, relabeling the image to 0..m-1
        preserving the numeric order of the targets."""
        targets = list(targets)
        order = {t: i for i, t in enumerate(sorted(set(targets)))}
        return VertexMap(tuple(order[t] for t in targets))

    @staticmethod
    def identity(k: int) -> "VertexMap":
        return VertexMap(tuple(range(k)))

    @staticmethod
    def merging(k: int, pairs) -> "VertexMap":
        """Identity on [0,k) except that each (src, dst) pair sends src to dst.

        Chains (a->b, b->c) are followed to their final target.
        """
        target = list(range(k))
        for src, dst in pairs:
            if not (0 <= src < k and 0 <= dst < k):
                raise InvalidComplexError(f"vertex pair ({src}, {dst}) out of range for k={k}")
            target[src] = dst
        out = []
        for v in range(k):
            t = v
            seen = set()
            while target[t] != t:
                if t in seen:
                    raise InvalidComplexError("vertex map contains an identification cycle")
                seen.add(t)
                t = target[t]
            out.append(t)
        return VertexMap.normalized(out)

    @property
    def source_size(self) -> int:
        return len(self.mapping)

    @property
    def target_size(self) -> int:
        return max(self.mapping) + 1

    def apply_mask(self, mask: int) -> int:
        out = 0
        for v in vertices_of(mask):
            out |= 1 << self.mapping[v]
        return out


def _canonical_facets(masks) -> tuple[int, ...]:
    """Drop contained candidates and duplicates, sort ascending."""
    unique = sorted(set(masks), key=lambda m: (m.bit_count(), m), reverse=True)
    kept: list[int] = []
    for m in unique:
        if not any(m & big == m for big in kept):
            kept.append(m)
    return tuple(sorted(kept))


def from_facets(k: int, candidate_facets) -> SimplicialComplex:
    """Build a complex on k ambient vertices from candidate facet vertex-sets.

    Candidates contained in another candidate are absorbed.  Vertices of
    [0,k) not listed in any facet stay ambient-only (they are not faces).
    """
    if k <= 0:
        raise InvalidComplexError("ambient vertex count must be positive")
    if k > MAX_VERTICES:
        raise InvalidComplexError(f"ambient vertex count {k} exceeds {MAX_VERTICES}")
    candidates = list(candidate_facets)
    if not candidates:
        raise InvalidComplexError("facet list must be non-empty")
    masks = []
    for c in candidates:
        vs = list(c)
        for v in vs:
            if not 0 <= v < k:
                raise InvalidComplexError(f"vertex {v} out of range [0, {k})")
        masks.append(mask_of(vs))
    masks = [m for m in masks if m] or []
    return SimplicialComplex(k, _canonical_facets(masks))


def _subsets_of_mask(mask: int) -> np.ndarray:
    """All submasks of `mask` (including 0), ascending, as int64."""
    verts = vertices_of(mask)
    b = len(verts)
    idx = np.arange(1 << b, dtype=np.int64)
    out = np.zeros(1 << b, dtype=np.int64)
    for j, v in enumerate(verts):
        out |= ((idx >> j) & 1) << np.int64(v)
    out.sort()
    return out


# Small keyed cache: face enumeration is the hot shared step for every code
# build, and complexes are immutable.
_FACE_CACHE: dict[SimplicialComplex, np.ndarray] = {}
_FACE_CACHE_LIMIT = 128


def face_masks(
    delta: SimplicialComplex,
    include_empty: bool = False,
    *,
    budget: int = DEFAULT_FACE_BUDGET,
) -> np.ndarray:
    """All face masks of the complex in ascending order (read-only array).

    Raises BudgetExceededError once the running count of distinct faces,
    empty face included, would pass `budget`.
    """
    cached = _FACE_CACHE.get(delta)
    if cached is None:
        acc = np.zeros(1, dtype=np.int64)  # the empty face
        for m in delta.facet_masks:
            if 1 << m.bit_count() > budget:
                raise BudgetExceededError("face-count", 1 << m.bit_count(), budget)
            acc = np.union1d(acc, _subsets_of_mask(m))
            if acc.size > budget:
                raise BudgetExceededError("face-count", int(acc.size), budget)
        acc.flags.writeable = False
        if len(_FACE_CACHE) >= _FACE_CACHE_LIMIT:
            _FACE_CACHE.clear()
        _FACE_CACHE[delta] = acc
        cached = acc
    if cached.size > budget:
        raise BudgetExceededError("face-count", int(cached.size), budget)
    return cached if include_empty else cached[1:]


def enumerate_faces(
    delta: SimplicialComplex,
    include_empty: bool = False,
    *,
    budget: int = DEFAULT_FACE_BUDGET,
) -> list[Face]:
    """Face objects in ascending mask order; deterministic and downward closed."""
    k = delta.ambient_vertex_count
    return [Face(int(m), k) for m in face_masks(delta, include_empty, budget=budget)]


def face_count(
    delta: SimplicialComplex,
    include_empty: bool = False,
    *,
    budget: int = DEFAULT_FACE_BUDGET,
) -> int:
    return int(face_masks(delta, include_empty, budget=budget).size)


def faces_containing(
    delta: SimplicialComplex,
    v: int,
    *,
    budget: int = DEFAULT_FACE_BUDGET,
) -> int:
    """Number of nonempty faces containing vertex v (= |link(v)| with empty)."""
    if not 0 <= v < delta.ambient_vertex_count:
        raise InvalidComplexError(f"vertex {v} out of range")
    masks = face_masks(delta, budget=budget)
    return int(np.count_nonzero(masks & np.int64(1 << v)))


def link(delta: SimplicialComplex, v: int) -> SimplicialComplex:
    """Link of a vertex, on the ambient vertex set with v removed.

    Vertices above v shift down by one to keep indices contiguous.
    """
    k = delta.ambient_vertex_count
    if not 0 <= v < k:
        raise InvalidComplexError(f"vertex {v} out of range")
    bit = 1 << v
    if not delta.vertex_support_mask & bit:
        raise DegenerateComplexError(f"vertex {v} is not a face; its link is void")
    if k == 1:
        raise DegenerateComplexError("link would have an empty ambient vertex set")
    low = bit - 1
    candidates = []
    for f in delta.facet_masks:
        if f & bit:
            rest = f ^ bit
            candidates.append((rest & low) | ((rest >> 1) & ~low))
    # v only as the singleton facet {v}: the link is {empty}.
    return SimplicialComplex(k - 1, _canonical_facets([c for c in candidates if c]))


def skeleton(delta: SimplicialComplex, r: int, *, budget: int = DEFAULT_FACE_BUDGET) -> SimplicialComplex:
    """Subcomplex of all faces of dimension <= r."""
    if r < 0:
        raise InvalidComplexError("skeleton dimension must be >= 0")
    if r >= delta.dimension:
        return delta
    candidates: list[int] = []
    total = 0
    for f in delta.facet_masks:
        verts = vertices_of(f)
        if len(verts) <= r + 1:
            candidates.append(f)
            continue
        total += comb(len(verts), r + 1)
        if total > budget:
            raise BudgetExceededError("face-count", total, budget)
        candidates.extend(mask_of(c) for c in combinations(verts, r + 1))
    return SimplicialComplex(delta.ambient_vertex_count, _canonical_facets(candidates))


def boundary(delta: SimplicialComplex) -> SimplicialComplex:
    """Subcomplex of all non-maximal faces: every facet is removed and the
    nonempty face count drops by exactly the number of facets."""
    candidates: list[int] = []
    for f in delta.facet_masks:
        if f.bit_count() >= 2:
            bits = f
            while bits:
                low = bits & -bits
                candidates.append(f ^ low)
                bits ^= low
    if not candidates:
        raise DegenerateComplexError("boundary is empty: every facet is a single vertex")
    return SimplicialComplex(delta.ambient_vertex_count, _canonical_facets(candidates))


def cone(delta: SimplicialComplex, apex: int | None = None) -> SimplicialComplex:
    """Cone: adjoin a fresh apex vertex to every facet (ambient count + 1).

    The apex, when given, must equal the next free index.
    """
    k = delta.ambient_vertex_count
    if apex is None:
        apex = k
    if apex < k:
        raise InvalidComplexError(f"apex {apex} collides with an existing vertex")
    if apex > k:
        raise InvalidComplexError(f"apex must be the next free index {k}, got {apex}")
    if k + 1 > MAX_VERTICES:
        raise InvalidComplexError(f"cone would exceed {MAX_VERTICES} vertices")
    bit = 1 << apex
    new_facets = [f | bit for f in delta.facet_masks] or [bit]
    return SimplicialComplex(k + 1, tuple(sorted(new_facets)))


def disjoint_union(d1: SimplicialComplex, d2: SimplicialComplex) -> SimplicialComplex:
    """Disjoint union; d2's vertices are relabeled to follow d1's."""
    k = d1.ambient_vertex_count + d2.ambient_vertex_count
    if k > MAX_VERTICES:
        raise InvalidComplexError(f"union would have {k} > {MAX_VERTICES} vertices")
    shift = d1.ambient_vertex_count
    facets = list(d1.facet_masks) + [f << shift for f in d2.facet_masks]
    return SimplicialComplex(k, tuple(sorted(facets)))


def identify_vertices(delta: SimplicialComplex, vmap: VertexMap) -> SimplicialComplex:
    """Quotient of the complex under a total vertex map.

    Facets are mapped through the normalized map, downward closure re-derives
    itself from the images, and containment-maximality is restored.  Mapping
    several vertices of one facet together simply keeps the image face.
    """
    if vmap.source_size != delta.ambient_vertex_count:
        raise InvalidComplexError(
            f"map covers {vmap.source_size} vertices, complex has {delta.ambient_vertex_count}"
        )
    mapped = [vmap.apply_mask(f) for f in delta.facet_masks]
    return SimplicialComplex(vmap.target_size, _canonical_facets(mapped))


def is_connected(delta: SimplicialComplex) -> bool:
    """Connectivity of the facet support (ambient-only vertices ignored)."""
    if not delta.facet_masks:
        return True
    reached = delta.facet_masks[0]
    pending = list(delta.facet_masks[1:])
    grown = True
    while grown:
        grown = False
        rest = []
        for f in pending:
            if f & reached:
                reached |= f
                grown = True
            else:
                rest.append(f)
        pending = rest
    return not pending


@dataclass(frozen=True)
class GluedComplex:
    """Result of gluing two disjoint complexes along a common-dimension face.

    All masks are in the quotient's vertex indexing; `first_part` keeps its
    original labels, `second_part` holds the second complex's image.
    """

    quotient: SimplicialComplex
    union: SimplicialComplex
    vmap: VertexMap
    first_part: SimplicialComplex
    second_part: SimplicialComplex
    shared_face_mask: int


def glue_faces(
    d1: SimplicialComplex,
    d2: SimplicialComplex,
    face1,
    face2,
) -> GluedComplex:
    """Identify a face of d1 with an equal-dimension face of d2.

    Validates the hypotheses behind the distance-monotonicity guarantee:
    both pieces connected, both vertex sets actually faces, equal dimension.
    Vertices are matched in ascending order (face1[i] <- face2[i]).
    """
    f1 = sorted(face1)
    f2 = sorted(face2)
    if len(f1) != len(f2):
        raise InvalidComplexError("glued faces must have the same dimension")
    if not f1:
        raise InvalidComplexError("glued faces must be nonempty")
    m1, m2 = mask_of(f1), mask_of(f2)
    if not d1.contains_face(m1):
        raise InvalidComplexError(f"{tuple(f1)} is not a face of the first complex")
    if not d2.contains_face(m2):
        raise InvalidComplexError(f"{tuple(f2)} is not a face of the second complex")
    if not is_connected(d1) or not is_connected(d2):
        raise InvalidComplexError("gluing requires both complexes to be connected")
    union = disjoint_union(d1, d2)
    shift = d1.ambient_vertex_count
    vmap = VertexMap.merging(
        union.ambient_vertex_count, [(shift + b, a) for a, b in zip(f1, f2)]
    )
    quotient = identify_vertices(union, vmap)
    part1 = SimplicialComplex(
        quotient.ambient_vertex_count,
        _canonical_facets([vmap.apply_mask(f) for f in d1.facet_masks]),
    )
    part2 = SimplicialComplex(
        quotient.ambient_vertex_count,
        _canonical_facets([vmap.apply_mask(f << shift) for f in d2.facet_masks]),
    )
    return GluedComplex(
        quotient=quotient,
        union=union,
        vmap=vmap,
        first_part=part1,
        second_part=part2,
        shared_face_mask=vmap.apply_mask(m1),
    )


def stellar_subdivide(
    delta: SimplicialComplex,
    facet,
    new_vertex: int | None = None,
) -> SimplicialComplex:
    """Replace a facet F by the join of a fresh vertex with F's boundary."""
    fmask = mask_of(facet)
    if fmask not in delta.facet_masks:
        raise InvalidComplexError(f"{tuple(sorted(facet))} is not a facet")
    if fmask.bit_count() < 2:
        raise InvalidComplexError("cannot subdivide a single-vertex facet")
    k = delta.ambient_vertex_count
    if new_vertex is None:
        new_vertex = k
    if new_vertex < k:
        raise InvalidComplexError(f"new vertex {new_vertex} collides with an existing vertex")
    if new_vertex > k:
        raise InvalidComplexError(f"new vertex must be the next free index {k}, got {new_vertex}")
    if k + 1 > MAX_VERTICES:
        raise InvalidComplexError(f"subdivision would exceed {MAX_VERTICES} vertices")
    bit = 1 << new_vertex
    candidates = [f for f in delta.facet_masks if f != fmask]
    bits = fmask
    while bits:
        low = bits & -bits
        candidates.append((fmask ^ low) | bit)
        bits ^= low
    return SimplicialComplex(k + 1, _canonical_facets(candidates))


def complement_sets(
    delta: SimplicialComplex,
    *,
    budget: int = DEFAULT_FACE_BUDGET,
) -> np.ndarray:
    """All subsets of the ambient vertex set that are not faces, ascending.

    Count equals 2^k minus the face count (empty face included).
    """
    k = delta.ambient_vertex_count
    if 1 << k > budget:
        raise BudgetExceededError("face-count", 1 << k, budget)
    faces = face_masks(delta, include_empty=True, budget=budget)
    universe = np.arange(1 << k, dtype=np.int64)
    out = np.setdiff1d(universe, faces, assume_unique=True)
    out.flags.writeable = False
    return out
