"""Root-string bounds from Cartan data.

For a Lie superalgebra with Cartan matrix A and parities I of the Chevalley
generators, the bound B_kj (k != j) is the largest m >= 0 such that
alpha_j + m*alpha_k is a root.  Under the standard regularity assumptions it
equals the first index m >= 0 at which the scalar sequence

    d_{-1} = 0,    d_m = (-1)^{i_k} (d_{m-1} - A_kj - m*A_kk)

vanishes.  Two independent routes compute it here:

* ``b_recursive`` walks the sequence and returns the first zero, and
* ``b_closed`` evaluates a closed-form case ladder on (i_k, A_kk, A_kj).

In positive characteristic the sequence is guaranteed to vanish by
m = 2p - 1, so every bound is finite; in characteristic 0 the bound can be
infinite, and only the closed form can certify that.

Integer scalars (the index m, binomial coefficients, the literal 2) always
act through their canonical image m * 1 in the field, which makes the p = 2
degeneracies such as 2 = 0 automatic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .field import FieldElement, FieldSpec, lift


class ConsistencyError(RuntimeError):
    """The two routes to a bound disagreed, or a guaranteed zero never came.

    Either indicates an arithmetic bug, not a valid input state.
    """


class Parity(Enum):
    """Parity of a Chevalley generator."""

    EVEN = "ev"
    ODD = "od"

    @property
    def sign(self) -> int:
        """(-1) ** parity: +1 for even, -1 for odd."""
        return 1 if self is Parity.EVEN else -1


@dataclass(frozen=True, eq=False)
class BValue:
    """A root-string bound: a non-negative integer, or +infinity.

    Infinity is encoded as ``value = None`` and arises only in
    characteristic 0.  Compares transparently against plain integers.
    """

    value: Optional[int]

    def __post_init__(self) -> None:
        if self.value is not None:
            if not isinstance(self.value, int) or isinstance(self.value, bool):
                raise ValueError("finite bounds are integers")
            if self.value < 0:
                raise ValueError("bounds are non-negative")

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def _as_number(self) -> Union[int, float]:
        return math.inf if self.value is None else self.value

    @staticmethod
    def _other_number(other) -> Union[int, float, None]:
        if isinstance(other, BValue):
            return other._as_number()
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        return None

    def __eq__(self, other):
        num = self._other_number(other)
        if num is None:
            return NotImplemented
        return self._as_number() == num

    def __hash__(self):
        return hash(self.value)

    def __le__(self, other):
        num = self._other_number(other)
        if num is None:
            return NotImplemented
        return self._as_number() <= num

    def __lt__(self, other):
        num = self._other_number(other)
        if num is None:
            return NotImplemented
        return self._as_number() < num

    def __ge__(self, other):
        num = self._other_number(other)
        if num is None:
            return NotImplemented
        return self._as_number() >= num

    def __gt__(self, other):
        num = self._other_number(other)
        if num is None:
            return NotImplemented
        return self._as_number() > num

    def __int__(self) -> int:
        if self.value is None:
            raise ValueError("bound is infinite")
        return self.value

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)

    def __repr__(self) -> str:
        return f"BValue({self.value})"


#: The infinite bound.
INFINITY = BValue(None)


@dataclass(frozen=True)
class CartanDatum:
    """A Cartan matrix together with the parities of its Chevalley generators.

    ``entries[i][j]`` is A_{i+1, j+1}; all indices in the public operations
    are 1-based, matching the usual numbering alpha_1, ..., alpha_n of the
    simple roots.
    """

    spec: FieldSpec
    entries: tuple[tuple[FieldElement, ...], ...]
    parities: tuple[Parity, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(tuple(row) for row in self.entries))
        object.__setattr__(self, "parities", tuple(self.parities))
        n = len(self.parities)
        if n == 0:
            raise ValueError("rank must be positive")
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ValueError(f"matrix must be square of size {n}")
        for row in self.entries:
            for entry in row:
                if not isinstance(entry, FieldElement):
                    raise TypeError("matrix entries must be field elements")
                if entry.spec != self.spec:
                    raise ValueError("all entries must share the datum's field")
        if any(not isinstance(q, Parity) for q in self.parities):
            raise TypeError("parities must be Parity values")

    @classmethod
    def build(cls, spec: FieldSpec, rows, parities) -> "CartanDatum":
        """Coerce raw entries (ints, rationals, coefficient lists) and parity
        labels ("ev"/"od" or Parity) into a datum."""
        entries = tuple(tuple(spec.element(v) for v in row) for row in rows)
        pars = tuple(q if isinstance(q, Parity) else Parity(q) for q in parities)
        return cls(spec, entries, pars)

    @property
    def n(self) -> int:
        return len(self.parities)

    def entry(self, k: int, j: int) -> FieldElement:
        """A_kj with 1-based indices."""
        return self.entries[k - 1][j - 1]

    def parity(self, k: int) -> Parity:
        """i_k with a 1-based index."""
        return self.parities[k - 1]


@dataclass(frozen=True)
class DSequence:
    """The prefix d_{-1}, d_0, ..., d_M of the recursion for one pair (k, j).

    Index with the sequence position: ``seq[m]`` is d_m for -1 <= m <= M.
    """

    k: int
    j: int
    values: tuple[FieldElement, ...]

    def __getitem__(self, m: int) -> FieldElement:
        if not -1 <= m <= self.last_index:
            raise IndexError(f"index {m} outside [-1, {self.last_index}]")
        return self.values[m + 1]

    @property
    def last_index(self) -> int:
        return len(self.values) - 2


def pair_datum(spec: FieldSpec, a_kk, a_kj, parity: Parity) -> CartanDatum:
    """Minimal rank-2 datum exposing one (A_kk, A_kj) pair at (k, j) = (1, 2).

    Handy for exhaustive sweeps over a whole field: only row 1 matters for
    B_12, so row 2 is zero-filled.
    """
    zero = spec.zero()
    return CartanDatum(
        spec,
        ((spec.element(a_kk), spec.element(a_kj)), (zero, zero)),
        (parity, Parity.EVEN),
    )


def _check_pair(datum: CartanDatum, k: int, j: int) -> None:
    n = datum.n
    if not 1 <= k <= n or not 1 <= j <= n:
        raise IndexError(f"indices must lie in [1, {n}], got k={k}, j={j}")
    if k == j:
        raise ValueError("k and j must differ")


def d_next(d_prev: FieldElement, a_kj: FieldElement, a_kk: FieldElement,
           m: int, parity: Parity) -> FieldElement:
    """One recursion step: (-1)^parity * (d_prev - A_kj - m*A_kk)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    step = d_prev - a_kj - m * a_kk
    return step if parity is Parity.EVEN else -step


def d_sequence(datum: CartanDatum, k: int, j: int, last: int) -> DSequence:
    """Iterate the recursion from d_{-1} = 0 up to index ``last``."""
    _check_pair(datum, k, j)
    if last < -1:
        raise ValueError("last index must be >= -1")
    a_kk = datum.entry(k, k)
    a_kj = datum.entry(k, j)
    parity = datum.parity(k)
    values = [datum.spec.zero()]
    for m in range(last + 1):
        values.append(d_next(values[-1], a_kj, a_kk, m, parity))
    return DSequence(k, j, tuple(values))


def d_closed_even(a_kj: FieldElement, a_kk: FieldElement, m: int) -> FieldElement:
    """Closed form of d_m for an even generator:
    -(m+1)*A_kj - C(m+1, 2)*A_kk."""
    if m < -1:
        raise ValueError("m must be >= -1")
    return -((m + 1) * a_kj) - math.comb(m + 1, 2) * a_kk


def d_closed_odd(a_kj: FieldElement, a_kk: FieldElement, m: int) -> FieldElement:
    """Closed form of d_m for an odd generator:
    A_kj + l*A_kk at m = 2l, and l*A_kk at m = 2l - 1."""
    if m < -1:
        raise ValueError("m must be >= -1")
    if m % 2 == 0:
        return a_kj + (m // 2) * a_kk
    return ((m + 1) // 2) * a_kk


def b_recursive(datum: CartanDatum, k: int, j: int, *, scan_cap: int = 1000) -> BValue:
    """First index m >= 0 with d_m = 0, walking the recursion directly.

    In characteristic p > 0 a zero is guaranteed by m = 2p - 1, so the scan
    is bounded there and a miss raises ConsistencyError.  In characteristic 0
    the scan runs to ``scan_cap``; a scan that comes up empty cannot certify
    infinity on its own, so the closed form then decides between an infinite
    bound and a too-small cap.
    """
    _check_pair(datum, k, j)
    spec = datum.spec
    p = spec.characteristic
    a_kk = datum.entry(k, k)
    a_kj = datum.entry(k, j)
    parity = datum.parity(k)
    bound = 2 * p - 1 if p > 0 else scan_cap
    d = spec.zero()
    for m in range(bound + 1):
        d = d_next(d, a_kj, a_kk, m, parity)
        if not d:
            return BValue(m)
    if p > 0:
        raise ConsistencyError(
            f"no zero of the d-sequence up to m = {bound} at (k, j) = ({k}, {j})")
    closed = b_closed(datum, k, j)
    if closed.is_finite:
        raise ValueError(
            f"scan cap {scan_cap} is below the closed-form bound {closed}; raise scan_cap")
    return INFINITY


def b_closed(datum: CartanDatum, k: int, j: int) -> BValue:
    """Closed-form case ladder for the bound B_kj.

    Branches, in order, for characteristic p > 0:

    1. A_kj = 0                                   -> 0
    2. even, A_kk = 0                             -> p - 1
    3. even, p != 2, A_kk != 0: A_kj/A_kk in GF(p) -> lift(-2*A_kj/A_kk),
       otherwise                                   -> p - 1
    4. even, p = 2, A_kk != 0: A_kj = A_kk         -> 2, otherwise -> 3
    5. odd, A_kk = 0                               -> 1
    6. odd, A_kk != 0: A_kj/A_kk in GF(p)          -> 2*lift(-A_kj/A_kk),
       otherwise                                   -> 2p - 1

    At characteristic 0 the analogous ladder yields an integer or infinity;
    the even branch asks whether -2*A_kj/A_kk is a non-negative integer, the
    odd branch whether -A_kj/A_kk is.
    """
    _check_pair(datum, k, j)
    p = datum.spec.characteristic
    a_kk = datum.entry(k, k)
    a_kj = datum.entry(k, j)
    parity = datum.parity(k)
    if p == 0:
        return _b_closed_rational(a_kj, a_kk, parity)
    if not a_kj:
        return BValue(0)
    if parity is Parity.EVEN:
        if not a_kk:
            return BValue(p - 1)
        if p != 2:
            residue = (a_kj / a_kk).in_prime_subfield()
            if residue is None:
                return BValue(p - 1)
            return BValue(lift(-2 * residue, p))
        return BValue(2) if a_kj == a_kk else BValue(3)
    if not a_kk:
        return BValue(1)
    residue = (a_kj / a_kk).in_prime_subfield()
    if residue is None:
        return BValue(2 * p - 1)
    return BValue(2 * lift(-residue, p))


def _b_closed_rational(a_kj: FieldElement, a_kk: FieldElement, parity: Parity) -> BValue:
    if not a_kj:
        return BValue(0)
    if parity is Parity.EVEN:
        if not a_kk:
            return INFINITY
        ratio = -2 * a_kj.rational / a_kk.rational
    else:
        if not a_kk:
            return BValue(1)
        ratio = -a_kj.rational / a_kk.rational
    if ratio.denominator != 1 or ratio < 0:
        return INFINITY
    m = int(ratio)
    return BValue(m if parity is Parity.EVEN else 2 * m)


def b_table(datum: CartanDatum) -> tuple[tuple[Optional[BValue], ...], ...]:
    """All bounds at once: entry [k-1][j-1] is B_kj, None on the diagonal."""
    n = datum.n
    return tuple(
        tuple(None if k == j else b_closed(datum, k, j) for j in range(1, n + 1))
        for k in range(1, n + 1))
