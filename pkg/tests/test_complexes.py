"""Complex construction and the topological operations."""

import random

import numpy as np
import pytest

from complexcodes import (
    BudgetExceededError,
    DegenerateComplexError,
    Face,
    InvalidComplexError,
    SimplicialComplex,
    VertexMap,
    boundary,
    complement_sets,
    cone,
    disjoint_union,
    enumerate_faces,
    face_count,
    face_masks,
    faces_containing,
    from_facets,
    glue_faces,
    identify_vertices,
    is_connected,
    link,
    skeleton,
    stellar_subdivide,
)

MIXED = from_facets(8, [[0, 1], [0, 2, 3], [4, 5, 6, 7]])
TETRA_SKEL = from_facets(4, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
THREE_TRIANGLES = from_facets(5, [[0, 1, 2], [2, 3, 4], [0, 2, 4]])
SUBDIVIDED = from_facets(
    8,
    [[0, 1, 7], [0, 2, 7], [1, 2, 7], [2, 3, 5], [2, 4, 5], [3, 4, 5], [0, 4, 6], [0, 2, 6], [2, 4, 6]],
)


def masks(*vertex_sets):
    return tuple(sorted(sum(1 << v for v in vs) for vs in vertex_sets))


class TestFromFacets:
    def test_containment_absorption(self):
        d = from_facets(4, [[0, 1, 2], [0, 1], [3]])
        assert d.facet_masks == masks([0, 1, 2], [3])

    def test_mixed_complex(self):
        assert len(MIXED.facet_masks) == 3
        assert face_count(MIXED) == 24

    def test_three_triangles_face_count(self):
        assert face_count(THREE_TRIANGLES, include_empty=True) == 16

    def test_vertex_out_of_range(self):
        with pytest.raises(InvalidComplexError):
            from_facets(3, [[0, 3]])

    def test_zero_vertices(self):
        with pytest.raises(InvalidComplexError):
            from_facets(0, [[0]])

    def test_too_many_vertices(self):
        with pytest.raises(InvalidComplexError):
            from_facets(64, [[0]])

    def test_empty_candidate_list(self):
        with pytest.raises(InvalidComplexError):
            from_facets(3, [])

    def test_empty_only_complex(self):
        d = from_facets(3, [[]])
        assert d.facet_masks == ()
        assert face_count(d) == 0
        assert face_count(d, include_empty=True) == 1


class TestEnumeration:
    def test_full_simplex(self):
        d = from_facets(4, [[0, 1, 2, 3]])
        assert face_count(d) == 15

    def test_subdivided_with_empty(self):
        assert face_count(SUBDIVIDED, include_empty=True) == 34

    def test_order_and_determinism(self):
        a = face_masks(MIXED)
        b = face_masks(MIXED)
        assert np.array_equal(a, b)
        assert (np.diff(a) > 0).all()
        assert enumerate_faces(MIXED) == enumerate_faces(MIXED)

    def test_returns_face_objects(self):
        faces = enumerate_faces(from_facets(2, [[0, 1]]), include_empty=True)
        assert faces[0] == Face(0, 2)
        assert [f.mask for f in faces] == [0, 1, 2, 3]

    def test_budget_guard(self):
        d = from_facets(30, [list(range(30))])
        with pytest.raises(BudgetExceededError):
            face_count(d, budget=1 << 10)

    def test_downward_closure_and_maximality(self, suite_complexes):
        for d in suite_complexes[:40]:
            fset = set(int(m) for m in face_masks(d))
            for m in fset:
                bits = m
                while bits:
                    low = bits & -bits
                    sub = m ^ low
                    assert sub == 0 or sub in fset
                    bits ^= low
            for a in d.facet_masks:
                assert not any(a != b and a & b == a for b in d.facet_masks)


class TestFacesContaining:
    def test_tetra_skeleton(self):
        assert all(faces_containing(TETRA_SKEL, v) == 7 for v in range(4))

    def test_mixed_vertex_one(self):
        assert faces_containing(MIXED, 1) == 2

    def test_isolated_singleton(self):
        d = from_facets(2, [[0, 1], [1]])  # {1} absorbed; use separate vertex
        d = from_facets(3, [[0, 1], [2]])
        assert faces_containing(d, 2) == 1

    def test_out_of_range(self):
        with pytest.raises(InvalidComplexError):
            faces_containing(MIXED, 8)


class TestLink:
    def test_full_simplex(self):
        d = from_facets(3, [[0, 1, 2]])
        assert link(d, 0) == from_facets(2, [[0, 1]])

    def test_tetra_skeleton_vertex(self):
        lk = link(TETRA_SKEL, 0)
        assert face_count(lk, include_empty=True) == 7
        assert lk == from_facets(3, [[0, 1], [0, 2], [1, 2]])

    def test_mixed_vertex_seven(self):
        assert link(MIXED, 7) == from_facets(7, [[4, 5, 6]])

    def test_duality(self, suite_complexes):
        rng = random.Random(7)
        for d in suite_complexes[:40]:
            support = [v for v in range(d.ambient_vertex_count) if d.vertex_support_mask >> v & 1]
            v = rng.choice(support)
            if d.ambient_vertex_count == 1:
                continue
            assert faces_containing(d, v) == face_count(link(d, v), include_empty=True)

    def test_absent_vertex(self):
        d = from_facets(3, [[0, 1]])
        with pytest.raises(DegenerateComplexError):
            link(d, 2)


class TestSkeleton:
    def test_three_simplex(self):
        d = from_facets(4, [[0, 1, 2, 3]])
        assert skeleton(d, 2) == TETRA_SKEL
        assert face_count(skeleton(d, 2)) == 14

    def test_identity_above_dimension(self):
        assert skeleton(MIXED, 5) is MIXED

    def test_triangle_one_skeleton(self):
        d = skeleton(from_facets(3, [[0, 1, 2]]), 1)
        assert face_count(d) == 6

    def test_negative(self):
        with pytest.raises(InvalidComplexError):
            skeleton(MIXED, -1)


class TestBoundary:
    def test_three_simplex(self):
        d = from_facets(4, [[0, 1, 2, 3]])
        assert boundary(d) == TETRA_SKEL

    def test_mixed_count(self):
        assert face_count(boundary(MIXED)) == 21

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_simplex_gives_skeleton(self, n):
        d = from_facets(n + 1, [list(range(n + 1))])
        assert boundary(d) == skeleton(d, n - 1)

    def test_all_vertices_degenerate(self):
        with pytest.raises(DegenerateComplexError):
            boundary(from_facets(3, [[0], [1], [2]]))

    def test_face_count_law(self, suite_complexes):
        for d in suite_complexes[:40]:
            if all(f.bit_count() == 1 for f in d.facet_masks):
                continue
            assert face_count(boundary(d)) == face_count(d) - len(d.facet_masks)


class TestCone:
    def test_tetra_skeleton(self):
        assert face_count(cone(TETRA_SKEL)) == 29

    def test_single_vertex(self):
        assert face_count(cone(from_facets(1, [[0]]))) == 3

    def test_face_count_law(self, suite_complexes):
        for d in suite_complexes[:40]:
            assert face_count(cone(d)) == 2 * face_count(d) + 1

    def test_apex_collision(self):
        with pytest.raises(InvalidComplexError):
            cone(MIXED, apex=3)
        with pytest.raises(InvalidComplexError):
            cone(MIXED, apex=9)


class TestDisjointUnion:
    def test_two_points(self):
        d = disjoint_union(from_facets(1, [[0]]), from_facets(1, [[0]]))
        assert face_count(d) == 2

    def test_triangle_and_edge(self):
        d = disjoint_union(from_facets(3, [[0, 1, 2]]), from_facets(2, [[0, 1]]))
        assert face_count(d) == 10

    def test_counts_add(self, suite_complexes):
        for d1, d2 in zip(suite_complexes[:10], suite_complexes[10:20]):
            if d1.ambient_vertex_count + d2.ambient_vertex_count > 63:
                continue
            u = disjoint_union(d1, d2)
            assert face_count(u) == face_count(d1) + face_count(d2)


class TestIdentifyVertices:
    def test_mixed_gluing(self):
        vmap = VertexMap.merging(8, [(1, 4), (2, 5), (3, 6)])
        g = identify_vertices(MIXED, vmap)
        assert g.ambient_vertex_count == 5
        assert face_count(g) == 20

    def test_identity(self):
        assert identify_vertices(MIXED, VertexMap.identity(8)) == MIXED

    def test_merge_edge_endpoints(self):
        d = from_facets(4, [[0, 1], [2, 3]])
        g = identify_vertices(d, VertexMap.merging(4, [(3, 1)]))
        assert face_count(g) == 5

    def test_facet_collapse_is_kept(self):
        d = from_facets(2, [[0, 1]])
        g = identify_vertices(d, VertexMap.merging(2, [(1, 0)]))
        assert g == from_facets(1, [[0]])

    def test_map_must_be_total(self):
        with pytest.raises(InvalidComplexError):
            identify_vertices(MIXED, VertexMap.identity(5))


class TestVertexMap:
    def test_normalized_contiguous(self):
        m = VertexMap.normalized([0, 4, 5, 6, 4, 5, 6, 7])
        assert m.mapping == (0, 1, 2, 3, 1, 2, 3, 4)

    def test_raw_non_contiguous_rejected(self):
        with pytest.raises(InvalidComplexError):
            VertexMap((0, 2))

    def test_chain_following(self):
        m = VertexMap.merging(3, [(0, 1), (1, 2)])
        assert m.mapping == (0, 0, 0)

    def test_cycle_detection(self):
        with pytest.raises(InvalidComplexError):
            VertexMap.merging(2, [(0, 1), (1, 0)])


class TestGlueFaces:
    def test_two_triangles_along_edge(self):
        t = from_facets(3, [[0, 1, 2]])
        glued = glue_faces(t, t, [0, 1], [0, 1])
        assert glued.quotient == from_facets(4, [[0, 1, 2], [0, 1, 3]])
        assert glued.shared_face_mask == 0b11

    def test_requires_faces(self):
        t = from_facets(3, [[0, 1], [1, 2]])
        with pytest.raises(InvalidComplexError):
            glue_faces(t, t, [0, 2], [0, 1])

    def test_requires_equal_dimension(self):
        t = from_facets(3, [[0, 1, 2]])
        with pytest.raises(InvalidComplexError):
            glue_faces(t, t, [0, 1], [0])

    def test_requires_connected(self):
        d = from_facets(4, [[0, 1], [2, 3]])
        t = from_facets(3, [[0, 1, 2]])
        with pytest.raises(InvalidComplexError):
            glue_faces(d, t, [0], [0])
        assert not is_connected(d)
        assert is_connected(t)


class TestStellarSubdivide:
    def test_edge(self):
        d = stellar_subdivide(from_facets(2, [[0, 1]]), [0, 1])
        assert d == from_facets(3, [[0, 2], [1, 2]])

    def test_triangle(self):
        d = stellar_subdivide(from_facets(3, [[0, 1, 2]]), [0, 1, 2])
        assert d == from_facets(4, [[0, 1, 3], [0, 2, 3], [1, 2, 3]])

    def test_three_triangles_to_subdivided(self):
        d = stellar_subdivide(THREE_TRIANGLES, [2, 3, 4])
        d = stellar_subdivide(d, [0, 2, 4])
        d = stellar_subdivide(d, [0, 1, 2])
        assert d == SUBDIVIDED

    def test_not_a_facet(self):
        with pytest.raises(InvalidComplexError):
            stellar_subdivide(MIXED, [0, 2])

    def test_removes_facet_keeps_boundary_support(self, suite_complexes):
        rng = random.Random(11)
        for d in suite_complexes[:30]:
            big = [f for f in d.facet_masks if f.bit_count() >= 2]
            if not big or d.ambient_vertex_count >= 63:
                continue
            fmask = rng.choice(big)
            members = [v for v in range(d.ambient_vertex_count) if fmask >> v & 1]
            out = stellar_subdivide(d, members)
            out_faces = set(int(m) for m in face_masks(out))
            assert fmask not in out_faces
            assert out.vertex_support_mask & fmask == fmask

    def test_face_count_change(self):
        f = face_count(THREE_TRIANGLES)
        out = stellar_subdivide(THREE_TRIANGLES, [0, 1, 2])
        assert face_count(out) == f + 2**3 - 2


class TestComplementSets:
    def test_three_triangles(self):
        assert complement_sets(THREE_TRIANGLES).size == 16

    def test_full_simplex(self):
        assert complement_sets(from_facets(3, [[0, 1, 2]])).size == 0

    def test_subdivided(self):
        assert complement_sets(SUBDIVIDED).size == 222

    def test_partition(self, suite_complexes):
        for d in suite_complexes[:40]:
            k = d.ambient_vertex_count
            assert face_count(d, include_empty=True) + complement_sets(d).size == 2**k


class TestImmutability:
    def test_face_masks_read_only(self):
        m = face_masks(MIXED)
        with pytest.raises(ValueError):
            m[0] = 99

    def test_complex_hashable(self):
        assert len({MIXED, TETRA_SKEL, MIXED}) == 2
