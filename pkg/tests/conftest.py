"""Shared fixtures: the seeded random-complex suite and brute-force helpers.

The suite is the randomized corpus for the oracle-equivalence and
operation-law acceptance criteria: at least 200 complexes with k <= 10,
at most 5 facets, facet size <= 6.  Larger k are kept to a controlled
share so the p = 5 exhaustive sweeps stay inside the stated time budgets.
"""

import random
from itertools import combinations, product

import pytest

from complexcodes import SimplicialComplex, from_facets

SUITE_SEED = 20260809


def random_complex(rng: random.Random, k: int, max_facets: int = 5, max_facet_size: int = 6) -> SimplicialComplex:
    nf = rng.randint(1, max_facets)
    facets = []
    for _ in range(nf):
        size = rng.randint(1, min(max_facet_size, k))
        facets.append(rng.sample(range(k), size))
    return from_facets(k, facets)


def build_suite(count_small: int = 170, count_large: int = 30) -> list[SimplicialComplex]:
    rng = random.Random(SUITE_SEED)
    suite = []
    for _ in range(count_small):
        suite.append(random_complex(rng, rng.randint(2, 8)))
    for _ in range(count_large):
        suite.append(random_complex(rng, rng.randint(9, 10)))
    return suite


@pytest.fixture(scope="session")
def suite_complexes() -> list[SimplicialComplex]:
    return build_suite()


# --- independent brute-force helpers (sets and loops, no package internals)


def brute_faces(delta: SimplicialComplex, include_empty: bool = False) -> list[frozenset]:
    faces = {frozenset()}
    for facet in delta.facet_masks:
        members = [v for v in range(delta.ambient_vertex_count) if facet >> v & 1]
        for r in range(1, len(members) + 1):
            faces.update(frozenset(c) for c in combinations(members, r))
    if not include_empty:
        faces.discard(frozenset())
    return sorted(faces, key=sorted)


def brute_weight(delta: SimplicialComplex, u, p: int) -> int:
    return sum(1 for f in brute_faces(delta) if sum(u[v] for v in f) % p != 0)


def brute_min_distance(delta: SimplicialComplex, p: int) -> int:
    best = None
    for u in product(range(p), repeat=delta.ambient_vertex_count):
        w = brute_weight(delta, u, p)
        if w and (best is None or w < best):
            best = w
    return best
