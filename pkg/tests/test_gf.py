"""Prime-field rank and the hyperplane count."""

import random
from itertools import product

import pytest

from complexcodes import (
    MatrixFp,
    NonPrimeFieldError,
    PrimeModulus,
    build_anticode,
    count_nonorthogonal,
    from_facets,
    rank,
)

THREE_TRIANGLES = from_facets(5, [[0, 1, 2], [2, 3, 4], [0, 2, 4]])
SUBDIVIDED = from_facets(
    8,
    [[0, 1, 7], [0, 2, 7], [1, 2, 7], [2, 3, 5], [2, 4, 5], [3, 4, 5], [0, 4, 6], [0, 2, 6], [2, 4, 6]],
)


class TestPrimeModulus:
    @pytest.mark.parametrize("p", [2, 3, 5, 7, 31, 2147483647])
    def test_accepts_primes(self, p):
        assert PrimeModulus(p).p == p

    @pytest.mark.parametrize("p", [0, 1, 4, 6, 9, 15, 2**31 + 1])
    def test_rejects_non_primes(self, p):
        with pytest.raises(NonPrimeFieldError):
            PrimeModulus(p)

    def test_error_names_restriction(self):
        with pytest.raises(NonPrimeFieldError, match="prime"):
            PrimeModulus(4)


class TestRank:
    def test_identity_f2(self):
        m = MatrixFp(2, tuple(tuple(1 if i == j else 0 for j in range(4)) for i in range(4)))
        assert rank(m) == 4

    def test_three_triangles_anticode_generator(self):
        assert rank(build_anticode(THREE_TRIANGLES, 2).generator_matrix()) == 5

    def test_subdivided_anticode_generator_f3(self):
        assert rank(build_anticode(SUBDIVIDED, 3).generator_matrix()) == 8

    def test_entries_reduced(self):
        m = MatrixFp(3, ((4, 7), (1, 1)))
        assert m.entries == ((1, 1), (1, 1))
        assert rank(m) == 1

    def test_invariances(self):
        rng = random.Random(5)
        for p in (2, 3, 5):
            for _ in range(20):
                rows = [[rng.randrange(p) for _ in range(5)] for _ in range(4)]
                m = MatrixFp(p, tuple(tuple(r) for r in rows))
                r = rank(m)
                shuffled = rows[:]
                rng.shuffle(shuffled)
                assert rank(MatrixFp(p, tuple(tuple(r_) for r_ in shuffled))) == r
                scale = rng.randrange(1, p)
                scaled = [tuple((x * scale) % p for x in rows[0])] + [tuple(r_) for r_ in rows[1:]]
                assert rank(MatrixFp(p, tuple(scaled))) == r
                assert rank(m.transpose()) == r


class TestCountNonorthogonal:
    def test_f2_k5(self):
        assert count_nonorthogonal([1, 0, 0, 0, 0], 2) == 16
        assert count_nonorthogonal([1, 1, 0, 1, 0], 2) == 16

    def test_f3_k8(self):
        assert count_nonorthogonal([1] + [0] * 7, 3) == 4374

    def test_f2_k1(self):
        assert count_nonorthogonal([1], 2) == 1

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            count_nonorthogonal([0, 0, 0], 2)
        with pytest.raises(ValueError):
            count_nonorthogonal([3, 3], 3)  # zero mod 3

    def test_matches_brute_force(self):
        rng = random.Random(9)
        for p in (2, 3, 5):
            k = 1
            while p**k <= 3**9:
                for _ in range(20):
                    u = [rng.randrange(p) for _ in range(k)]
                    if not any(u):
                        u[rng.randrange(k)] = rng.randrange(1, p)
                    brute = sum(
                        1
                        for x in product(range(p), repeat=k)
                        if sum(a * b for a, b in zip(u, x)) % p
                    )
                    assert count_nonorthogonal(u, p) == brute
                k += 1
