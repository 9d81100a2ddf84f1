"""Exact linear algebra over small prime fields F_p.

Vectors are tuples of ints reduced mod p, matrices are tuples of such
tuples.  Everything is computed with exact integer arithmetic; no floats
anywhere.  An :class:`FpCode` stores the unique reduced row echelon basis
of its row space, so two codes are equal iff they are the same subspace.

Supported moduli are the primes up to 13.  Binary codeword enumeration
packs rows into ints and walks the span with XOR; other characteristics
use plain tuple arithmetic, which is fast enough at the lengths this
package classifies (n <= 13).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]

SUPPORTED_PRIMES = (2, 3, 5, 7, 11, 13)


def validate_modulus(p: int) -> None:
    """Reject moduli outside the supported prime range."""
    if p not in SUPPORTED_PRIMES:
        raise ValueError(f"modulus must be one of {SUPPORTED_PRIMES}, got {p!r}")


@lru_cache(maxsize=None)
def inverse_table(p: int) -> Vec:
    """Multiplicative inverses mod p; index 0 is unused (set to 0)."""
    validate_modulus(p)
    return (0,) + tuple(pow(v, p - 2, p) for v in range(1, p))


def vec_add(x: Vec, y: Vec, p: int) -> Vec:
    return tuple((a + b) % p for a, b in zip(x, y))


def vec_scale(c: int, x: Vec, p: int) -> Vec:
    c %= p
    return tuple((c * a) % p for a in x)


def vec_dot(x: Vec, y: Vec, p: int) -> int:
    return sum(a * b for a, b in zip(x, y)) % p


def vec_weight(x: Vec) -> int:
    return sum(1 for a in x if a)


def rref(p: int, rows: Sequence[Sequence[int]], n: int | None = None) -> tuple[Mat, Vec]:
    """Reduced row echelon form over F_p.

    Args:
        p: prime modulus.
        rows: matrix rows, arbitrary ints (reduced mod p here).
        n: row length; inferred from the first row when omitted.

    Returns:
        (basis, pivots): the nonzero RREF rows and their pivot columns,
        both as tuples.  The zero matrix yields ((), ()).
    """
    validate_modulus(p)
    work = [[int(v) % p for v in row] for row in rows]
    if n is None:
        n = len(work[0]) if work else 0
    for row in work:
        if len(row) != n:
            raise ValueError(f"ragged matrix: expected {n} columns, got {len(row)}")
    inv = inverse_table(p)
    pivots: list[int] = []
    rank = 0
    for col in range(n):
        pivot_row = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        head = inv[work[rank][col]]
        if head != 1:
            work[rank] = [(head * v) % p for v in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                c = work[i][col]
                work[i] = [(a - c * b) % p for a, b in zip(work[i], work[rank])]
        pivots.append(col)
        rank += 1
    basis = tuple(tuple(row) for row in work[:rank])
    return basis, tuple(pivots)


class MdsStatus(enum.Enum):
    """Singleton-bound classification of a code's parameters."""

    MDS = "MDS"
    AMDS = "AMDS"
    NEITHER = "NEITHER"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class FpCode:
    """A linear code over F_p, stored by its RREF generator basis.

    The basis is canonical for the row space, so ``==`` and ``hash``
    compare subspaces.  ``basis`` may be empty (the zero code).
    """

    p: int
    n: int
    basis: Mat
    pivots: Vec = field(default=())

    def __post_init__(self) -> None:
        validate_modulus(self.p)
        if self.n < 1:
            raise ValueError("length must be positive")
        if len(self.pivots) != len(self.basis):
            raise ValueError("pivot list does not match basis")
        if any(a >= b for a, b in zip(self.pivots, self.pivots[1:])):
            raise ValueError("pivot columns must be strictly increasing")
        for i, row in enumerate(self.basis):
            if len(row) != self.n:
                raise ValueError("basis row of wrong length")
            piv = self.pivots[i]
            if row[piv] != 1 or any(row[j] for j in range(piv)):
                raise ValueError("basis is not in reduced row echelon form")
            if any(self.basis[k][piv] for k in range(len(self.basis)) if k != i):
                raise ValueError("basis is not in reduced row echelon form")

    @classmethod
    def from_rows(cls, p: int, rows: Sequence[Sequence[int]], n: int | None = None) -> "FpCode":
        """Build the code spanned by ``rows`` (need not be independent)."""
        if n is None and not list(rows):
            raise ValueError("cannot infer length from an empty generating set")
        basis, pivots = rref(p, rows, n)
        length = n if n is not None else len(rows[0])
        return cls(p, length, basis, pivots)

    @classmethod
    def zero(cls, p: int, n: int) -> "FpCode":
        return cls(p, n, (), ())

    @classmethod
    def full(cls, p: int, n: int) -> "FpCode":
        eye = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        return cls(p, n, eye, tuple(range(n)))

    @property
    def k(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def reduce(self, vec: Sequence[int]) -> Vec:
        """Residue of ``vec`` modulo the row space (zero iff member)."""
        p = self.p
        v = [int(a) % p for a in vec]
        if len(v) != self.n:
            raise ValueError("vector of wrong length")
        for row, piv in zip(self.basis, self.pivots):
            c = v[piv]
            if c:
                v = [(a - c * b) % p for a, b in zip(v, row)]
        return tuple(v)

    def contains(self, vec: Sequence[int]) -> bool:
        return not any(self.reduce(vec))

    def contains_code(self, other: "FpCode") -> bool:
        if (self.p, self.n) != (other.p, other.n):
            raise ValueError("codes live in different spaces")
        return all(self.contains(row) for row in other.basis)

    def codewords(self) -> Iterator[Vec]:
        """Yield all p^k codewords (the zero word first)."""
        p, n = self.p, self.n
        words: list[Vec] = [(0,) * n]
        for row in self.basis:
            scaled = [vec_scale(c, row, p) for c in range(1, p)]
            words = [vec_add(w, s, p) for s in [(0,) * n] + scaled for w in words]
        return iter(words)

    @cached_property
    def weight_enumerator(self) -> Vec:
        """Coefficient tuple (A_0, ..., A_n) of the weight enumerator."""
        counts = [0] * (self.n + 1)
        if self.p == 2:
            packed = [_pack2(row) for row in self.basis]
            for mask in range(1 << self.k):
                word = 0
                m = mask
                i = 0
                while m:
                    if m & 1:
                        word ^= packed[i]
                    m >>= 1
                    i += 1
                counts[word.bit_count()] += 1
        else:
            for word in self.codewords():
                counts[vec_weight(word)] += 1
        return tuple(counts)

    @cached_property
    def min_distance(self) -> int | None:
        """Minimum nonzero weight, or None for the zero code."""
        if self.is_zero():
            return None
        we = self.weight_enumerator
        return next(w for w in range(1, self.n + 1) if we[w])

    @cached_property
    def dual(self) -> "FpCode":
        """The Euclidean dual code."""
        p, n = self.p, self.n
        pivot_set = set(self.pivots)
        rows = []
        for free in range(n):
            if free in pivot_set:
                continue
            v = [0] * n
            v[free] = 1
            for row, piv in zip(self.basis, self.pivots):
                v[piv] = (-row[free]) % p
            rows.append(v)
        if not rows:
            return FpCode.zero(p, n)
        return FpCode.from_rows(p, rows, n)

    def intersect(self, other: "FpCode") -> "FpCode":
        """Intersection of row spaces, via duality: (A^d + B^d)^d."""
        if (self.p, self.n) != (other.p, other.n):
            raise ValueError("codes live in different spaces")
        summed = FpCode.from_rows(self.p, self.dual.basis + other.dual.basis, self.n)
        return summed.dual

    @cached_property
    def hull_dim(self) -> int:
        """Dimension of the hull C intersect C^dual."""
        return self.intersect(self.dual).k

    def gram_det(self) -> int:
        """det(G G^T) mod p for the RREF basis G (1 for the zero code)."""
        p, k = self.p, self.k
        gram = [[vec_dot(a, b, p) for b in self.basis] for a in self.basis]
        inv = inverse_table(p)
        det = 1
        for col in range(k):
            pivot_row = next((i for i in range(col, k) if gram[i][col]), None)
            if pivot_row is None:
                return 0
            if pivot_row != col:
                gram[col], gram[pivot_row] = gram[pivot_row], gram[col]
                det = (-det) % p
            det = (det * gram[col][col]) % p
            head = inv[gram[col][col]]
            for i in range(col + 1, k):
                if gram[i][col]:
                    c = (gram[i][col] * head) % p
                    gram[i] = [(a - c * b) % p for a, b in zip(gram[i], gram[col])]
        return det % p

    @property
    def is_lcd(self) -> bool:
        """True iff the hull is trivial (det(G G^T) != 0)."""
        return self.gram_det() != 0

    @property
    def is_self_orthogonal(self) -> bool:
        return self.dual.contains_code(self)

    @property
    def is_self_dual(self) -> bool:
        return self == self.dual

    @property
    def mds_status(self) -> MdsStatus:
        """Singleton-bound status; the zero code is NEITHER."""
        d = self.min_distance
        if d is None:
            return MdsStatus.NEITHER
        if self.k == self.n - d + 1:
            return MdsStatus.MDS
        if self.k == self.n - d:
            return MdsStatus.AMDS
        return MdsStatus.NEITHER


def _pack2(row: Vec) -> int:
    bits = 0
    for j, v in enumerate(row):
        if v:
            bits |= 1 << j
    return bits


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of F_p^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (k - i) - 1
    assert num % den == 0
    return num // den


def iter_pivot_patterns(n: int, k: int) -> Iterator[Vec]:
    """All strictly increasing pivot column patterns, in lex order."""
    return iter(itertools.combinations(range(n), k))


def iter_subspaces_with_pivots(p: int, n: int, pivots: Vec) -> Iterator[FpCode]:
    """Yield every subspace of F_p^n whose RREF has the given pivots.

    RREF matrices are parameterized exactly by their free entries: entry
    (i, j) is free iff j > pivots[i] and j is not itself a pivot column.
    The matrices are emitted directly in reduced form, no elimination.
    """
    k = len(pivots)
    pivot_set = set(pivots)
    free = [(i, j) for i in range(k) for j in range(pivots[i] + 1, n) if j not in pivot_set]
    template = [[0] * n for i in range(k)]
    for i, piv in enumerate(pivots):
        template[i][piv] = 1
    for values in itertools.product(range(p), repeat=len(free)):
        for (i, j), v in zip(free, values):
            template[i][j] = v
        yield FpCode(p, n, tuple(tuple(row) for row in template), tuple(pivots))


def iter_subspaces(p: int, n: int, dims: Sequence[int] | None = None) -> Iterator[FpCode]:
    """Yield all subspaces of F_p^n (of the given dimensions, if any)."""
    validate_modulus(p)
    for k in dims if dims is not None else range(n + 1):
        for pivots in iter_pivot_patterns(n, k):
            yield from iter_subspaces_with_pivots(p, n, pivots)
