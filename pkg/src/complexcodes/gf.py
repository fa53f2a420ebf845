"""Prime-field arithmetic: rank over F_p and the hyperplane count.

Entries live in 64-bit ints with explicit reduction; pivot inversion uses
Fermat's little theorem, so no inverse tables are required.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonPrimeFieldError

MAX_MODULUS = 1 << 31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_prime(p) -> int:
    """Validate a field modulus, returning it as a plain int."""
    if isinstance(p, PrimeModulus):
        return p.p
    p = int(p)
    if p > MAX_MODULUS:
        raise NonPrimeFieldError(f"modulus {p} exceeds the 2^31 limit")
    if not _is_prime(p):
        raise NonPrimeFieldError(
            f"{p} is not prime; only prime fields are supported "
            "(prime-power moduli are out of scope)"
        )
    return p


@dataclass(frozen=True)
class PrimeModulus:
    """A validated prime field modulus."""

    p: int

    def __post_init__(self):
        object.__setattr__(self, "p", check_prime(self.p))

    def __int__(self) -> int:
        return self.p


@dataclass(frozen=True)
class MatrixFp:
    """Dense matrix over F_p; every entry stored reduced mod p."""

    p: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "p", check_prime(self.p))
        rows = tuple(tuple(int(x) % self.p for x in row) for row in self.entries)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "entries", rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def transpose(self) -> "MatrixFp":
        return MatrixFp(self.p, tuple(zip(*self.entries)) if self.entries else ())


def _rank_rows(rows, ncols: int, p: int) -> int:
    """Incremental Gaussian elimination; early exit at full column rank."""
    basis: list[tuple[int, list[int]]] = []  # (pivot column, normalized row)
    rank = 0
    for raw in rows:
        row = [x % p for x in raw]
        for pc, brow in basis:
            c = row[pc]
            if c:
                row = [(a - c * b) % p for a, b in zip(row, brow)]
        pivot = next((j for j, x in enumerate(row) if x), None)
        if pivot is None:
            continue
        inv = pow(row[pivot], p - 2, p)
        basis.append((pivot, [(x * inv) % p for x in row]))
        rank += 1
        if rank == ncols:
            break
    return rank


def rank(m: MatrixFp) -> int:
    """Row rank over F_p.  Works on the transpose when that is the skinnier
    orientation, since row and column rank agree."""
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.rows > m.cols:
        return _rank_rows(zip(*m.entries), m.rows, m.p)
    return _rank_rows(m.entries, m.cols, m.p)


def rank_of_rows(rows, ncols: int, p) -> int:
    """Rank of an iterable of length-ncols rows over F_p (no MatrixFp wrap).

    Consumes the iterable lazily and stops as soon as the rank hits ncols.
    """
    return _rank_rows(rows, ncols, check_prime(p))


def count_nonorthogonal(u, p) -> int:
    """Number of vectors x in F_p^k with <u, x> != 0, for nonzero u.

    A nonzero functional's kernel is a hyperplane, so the count is the
    closed form (p-1) * p^(k-1) independent of u.
    """
    p = check_prime(p)
    u = [int(x) % p for x in u]
    if not u:
        raise ValueError("u must have positive length")
    if not any(u):
        raise ValueError("u must be nonzero")
    return (p - 1) * p ** (len(u) - 1)
