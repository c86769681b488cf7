"""Reflections of a simple-root system, expressed in the original basis.

Reflecting at the k-th simple root sends alpha_k to -alpha_k and every other
alpha_j to alpha_j + B_kj * alpha_k, the deepest root on the string through
alpha_j in the alpha_k direction.  The result is recorded as integer
coordinate vectors in the old basis together with the change-of-basis
matrix, which is the identity except for row k and hence has determinant -1.

Only the new simple roots are produced.  No Cartan matrix is derived for the
reflected system, and reflections do not compose here: bounds relative to
the new system would need that matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .cartan import BValue, CartanDatum, b_closed


class ReflectionUndefinedError(ValueError):
    """Reflection impossible: some bound B_kj is infinite (characteristic 0)."""

    def __init__(self, k: int, j: int):
        super().__init__(f"B is infinite at j = {j} when reflecting at k = {k}")
        self.k = k
        self.j = j


@dataclass(frozen=True)
class RootVector:
    """Integer coordinates in the simple-root basis alpha_1, ..., alpha_n."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def simple(cls, n: int, i: int) -> "RootVector":
        """alpha_i inside a rank-n system (1-based i)."""
        if not 1 <= i <= n:
            raise IndexError(f"index must lie in [1, {n}]")
        return cls(tuple(1 if pos == i - 1 else 0 for pos in range(n)))

    def __neg__(self) -> "RootVector":
        return RootVector(tuple(-c for c in self.coords))

    def __add__(self, other):
        if not isinstance(other, RootVector):
            return NotImplemented
        if len(other.coords) != len(self.coords):
            raise ValueError("rank mismatch")
        return RootVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, RootVector):
            return NotImplemented
        return self + (-other)

    def scaled(self, m: int) -> "RootVector":
        return RootVector(tuple(m * c for c in self.coords))


@dataclass(frozen=True)
class ReflectionResult:
    """New simple roots sigma_1, ..., sigma_n after reflecting at index k.

    ``basis_matrix`` holds sigma_j in its j-th column, so it maps new-basis
    coordinates to old-basis coordinates.
    """

    k: int
    b_row: tuple[Optional[BValue], ...]
    sigma: tuple[RootVector, ...]
    basis_matrix: tuple[tuple[int, ...], ...]


def basis_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant, by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    rows = [list(map(int, row)) for row in matrix]
    if any(len(row) != n for row in rows):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(n - 1):
        if rows[i][i] == 0:
            for r in range(i + 1, n):
                if rows[r][i] != 0:
                    rows[i], rows[r] = rows[r], rows[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                rows[r][c] = (rows[r][c] * rows[i][i] - rows[r][i] * rows[i][c]) // prev
            rows[r][i] = 0
        prev = rows[i][i]
    return sign * rows[n - 1][n - 1]


def reflect(datum: CartanDatum, k: int) -> ReflectionResult:
    """Apply the reflection rule at the k-th simple root (1-based).

    Every B_kj must be finite, which always holds in positive
    characteristic; at characteristic 0 an infinite bound raises
    ReflectionUndefinedError naming the offending j.
    """
    n = datum.n
    if not 1 <= k <= n:
        raise IndexError(f"k must lie in [1, {n}]")
    b_row: list[Optional[BValue]] = []
    sigma: list[RootVector] = []
    for j in range(1, n + 1):
        if j == k:
            b_row.append(None)
            sigma.append(-RootVector.simple(n, k))
            continue
        b = b_closed(datum, k, j)
        if not b.is_finite:
            raise ReflectionUndefinedError(k, j)
        b_row.append(b)
        sigma.append(RootVector.simple(n, j) + RootVector.simple(n, k).scaled(b.value))
    matrix = tuple(tuple(sigma[col].coords[row] for col in range(n)) for row in range(n))
    return ReflectionResult(k=k, b_row=tuple(b_row), sigma=tuple(sigma), basis_matrix=matrix)


def unimodularity_check(result: ReflectionResult) -> bool:
    """True iff the change of basis has determinant exactly -1."""
    return basis_determinant(result.basis_matrix) == -1
