"""Exact arithmetic for the ground fields GF(p), GF(p^k), and Q.

Prime fields hold residues in {0, ..., p-1}.  Extensions GF(p^k) are
presented in the power basis of GF(p)[t]/(f) for a user-supplied monic
irreducible f, so membership in the prime subfield is a coordinate check.
Characteristic 0 means exact rationals; floats never appear.

Everything here is immutable and every operation is a pure function, so
values are safe to share across threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Union

#: Largest supported extension degree.  Keeps the trial-division
#: irreducibility test instantaneous; the bound computations only ever
#: inspect a single ratio, so large fields add nothing.
MAX_EXTENSION_DEGREE = 8

EntryLike = Union[int, Fraction, Sequence[int], "FieldElement"]


class FieldMismatchError(ValueError):
    """Operands belong to two different fields."""


def is_prime(n: int) -> bool:
    """Deterministic trial division; fine for the field sizes supported here."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def lift(x: int, p: int) -> int:
    """Minimal non-negative integer congruent to x modulo p."""
    if p <= 0:
        raise ValueError("lift needs a positive characteristic")
    return x % p


def _trimmed(coeffs: Sequence[int]) -> list[int]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trimmed(out)


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out[i] = (ai - bi) % p
    return _trimmed(out)


def _poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    rem = _trimmed(a)
    div = _trimmed(b)
    if not div:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(div[-1], p - 2, p)
    quo = [0] * max(len(rem) - len(div) + 1, 0)
    while len(rem) >= len(div):
        shift = len(rem) - len(div)
        c = (rem[-1] * inv_lead) % p
        quo[shift] = c
        for i, bi in enumerate(div):
            rem[shift + i] = (rem[shift + i] - c * bi) % p
        rem = _trimmed(rem)
    return quo, rem


def _poly_inv(a: Sequence[int], modulus: Sequence[int], p: int) -> list[int]:
    # extended Euclid in GF(p)[t]; the modulus is irreducible and a != 0,
    # so the gcd is a nonzero constant
    r0, r1 = list(modulus), _trimmed(a)
    s0, s1 = [], [1]
    while r1:
        q, r = _poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, p), p)
    c = pow(r0[0], p - 2, p)
    inv = [(c * s) % p for s in s0]
    return _poly_divmod(inv, modulus, p)[1]


def check_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Whether a monic polynomial over GF(p) is irreducible.

    Coefficients are listed low degree first.  Decided by trial division
    against every monic polynomial of degree up to half the input's own;
    acceptable because supported degrees are small.
    """
    if not is_prime(p):
        raise ValueError("p must be prime")
    coeffs = [c % p for c in modulus]
    if not coeffs or coeffs[-1] != 1:
        raise ValueError("modulus must be monic")
    deg = len(coeffs) - 1
    if deg < 2:
        raise ValueError("modulus must have degree at least 2")
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not _poly_divmod(coeffs, divisor, p)[1]:
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: GF(p) (degree 1), GF(p^degree) = GF(p)[t]/(modulus),
    or the rationals (characteristic 0).

    ``modulus`` lists the coefficients of a monic irreducible, low degree
    first; it is present exactly when degree > 1.
    """

    characteristic: int
    degree: int = 1
    modulus: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if self.modulus is not None:
            object.__setattr__(self, "modulus", tuple(int(c) for c in self.modulus))
        p, k = self.characteristic, self.degree
        if p == 0:
            if k != 1:
                raise ValueError("characteristic 0 only supports degree 1")
            if self.modulus is not None:
                raise ValueError("characteristic 0 takes no modulus")
            return
        if not is_prime(p):
            raise ValueError("characteristic must be 0 or a prime")
        if not 1 <= k <= MAX_EXTENSION_DEGREE:
            raise ValueError(f"extension degree must lie in [1, {MAX_EXTENSION_DEGREE}]")
        if k == 1:
            if self.modulus is not None:
                raise ValueError("degree-1 fields take no modulus")
            return
        if self.modulus is None:
            raise ValueError("extension fields need a modulus polynomial")
        if len(self.modulus) != k + 1:
            raise ValueError("modulus must have exactly degree + 1 coefficients")
        if any(not 0 <= c < p for c in self.modulus):
            raise ValueError("modulus coefficients must be reduced mod p")
        if not check_irreducible(self.modulus, p):
            raise ValueError("modulus must be irreducible over GF(p)")

    @property
    def order(self) -> int:
        """Number of elements (positive characteristic only)."""
        if self.characteristic == 0:
            raise ValueError("the rationals are infinite")
        return self.characteristic**self.degree

    def element(self, value: EntryLike) -> "FieldElement":
        """Coerce a raw value into the field.

        Integers map through the canonical image n -> n * 1 (reduction mod p;
        exact at characteristic 0), rationals require characteristic 0, and
        coefficient sequences of length at most ``degree`` (low degree first)
        build extension-field elements.
        """
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise FieldMismatchError(
                    f"element of {value.spec} cannot enter {self}")
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not field entries")
        p, k = self.characteristic, self.degree
        if p == 0:
            if isinstance(value, (int, Fraction)):
                return FieldElement(self, (Fraction(value),))
            raise TypeError(f"cannot coerce {value!r} into the rationals")
        if isinstance(value, int):
            return FieldElement(self, (value % p,) + (0,) * (k - 1))
        if isinstance(value, (list, tuple)):
            if len(value) > k:
                raise ValueError(f"coefficient list longer than degree {k}")
            if not all(isinstance(c, int) and not isinstance(c, bool) for c in value):
                raise TypeError("coefficient lists must contain integers")
            coeffs = tuple(c % p for c in value) + (0,) * (k - len(value))
            return FieldElement(self, coeffs)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def zero(self) -> "FieldElement":
        return self.element(0)

    def one(self) -> "FieldElement":
        return self.element(1)

    def elements(self) -> Iterator["FieldElement"]:
        """All field elements, in a fixed order (positive characteristic only)."""
        p, k = self.characteristic, self.degree
        if p == 0:
            raise ValueError("cannot enumerate the rationals")
        for coeffs in itertools.product(range(p), repeat=k):
            yield FieldElement(self, coeffs)

    def __str__(self) -> str:
        if self.characteristic == 0:
            return "Q"
        if self.degree == 1:
            return f"GF({self.characteristic})"
        return f"GF({self.characteristic}^{self.degree})"


@dataclass(frozen=True)
class FieldElement:
    """One field element: a power-basis residue vector for p > 0, or a single
    exact rational for characteristic 0.  Build these via FieldSpec.element().
    """

    spec: FieldSpec
    coeffs: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        p, k = self.spec.characteristic, self.spec.degree
        if p == 0:
            if len(self.coeffs) != 1 or not isinstance(self.coeffs[0], Fraction):
                raise ValueError("characteristic-0 elements hold a single Fraction")
            return
        if len(self.coeffs) != k:
            raise ValueError(f"expected {k} residue coordinates, got {len(self.coeffs)}")
        for c in self.coeffs:
            if not isinstance(c, int) or isinstance(c, bool) or not 0 <= c < p:
                raise ValueError("residues must be integers in [0, p)")

    @property
    def rational(self) -> Fraction:
        """The exact rational value (characteristic 0 only)."""
        if self.spec.characteristic != 0:
            raise ValueError("rational values need characteristic 0")
        return self.coeffs[0]

    def _coerce(self, other) -> Optional["FieldElement"]:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatchError(
                    f"cannot combine elements of {self.spec} and {other.spec}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self.spec.element(other)
        return None

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        p = self.spec.characteristic
        if p == 0:
            return FieldElement(self.spec, (self.coeffs[0] + rhs.coeffs[0],))
        return FieldElement(
            self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, rhs.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        p = self.spec.characteristic
        if p == 0:
            return FieldElement(self.spec, (-self.coeffs[0],))
        return FieldElement(self.spec, tuple((-c) % p for c in self.coeffs))

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs - self

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        spec = self.spec
        p, k = spec.characteristic, spec.degree
        if p == 0:
            return FieldElement(spec, (self.coeffs[0] * rhs.coeffs[0],))
        if k == 1:
            return FieldElement(spec, ((self.coeffs[0] * rhs.coeffs[0]) % p,))
        prod = _poly_mul(self.coeffs, rhs.coeffs, p)
        reduced = _poly_divmod(prod, spec.modulus, p)[1]
        return FieldElement(spec, tuple(reduced) + (0,) * (k - len(reduced)))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse; zero raises ZeroDivisionError."""
        if not self:
            raise ZeroDivisionError(f"division by zero in {self.spec}")
        spec = self.spec
        p, k = spec.characteristic, spec.degree
        if p == 0:
            return FieldElement(spec, (Fraction(1) / self.coeffs[0],))
        if k == 1:
            return FieldElement(spec, (pow(self.coeffs[0], p - 2, p),))
        inv = _poly_inv(self.coeffs, spec.modulus, p)
        return FieldElement(spec, tuple(inv) + (0,) * (k - len(inv)))

    def __truediv__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs * self.inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or isinstance(exponent, bool):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.spec.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def in_prime_subfield(self) -> Optional[int]:
        """The residue when this element lies in GF(p) inside GF(p^k), else None.

        In the power basis that holds exactly when every coordinate of degree
        >= 1 vanishes.  Only defined in positive characteristic; rational
        membership in Z is a separate question answered where it arises.
        """
        if self.spec.characteristic == 0:
            raise ValueError("the prime-subfield test needs positive characteristic")
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def __str__(self) -> str:
        p, k = self.spec.characteristic, self.spec.degree
        if p == 0 or k == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                power = "t" if i == 1 else f"t^{i}"
                terms.append(power if c == 1 else f"{c}*{power}")
        return " + ".join(terms) if terms else "0"
