"""Exhaustive cross-validation of the closed-form bounds against the recursion.

For a chosen set of finite fields this sweeps every rank-2 configuration
(parity of the reflecting root, diagonal entry, off-diagonal entry) and
checks that the closed-form bound matches the value found by scanning the
d-sequence.  Any disagreement would falsify one of the two routes, so a
clean sweep is strong evidence both are implemented correctly.
"""

from __future__ import annotations

import itertools

from .cartan import Parity, b_closed, b_recursive, pair_datum
from .field import MAX_EXTENSION_DEGREE, FieldSpec, check_irreducible, is_prime


def find_irreducible(p: int, degree: int) -> tuple[int, ...]:
    """Lexicographically first monic irreducible of the given degree over GF(p)."""
    for tail in itertools.product(range(p), repeat=degree):
        candidate = tail + (1,)
        if check_irreducible(candidate, p):
            return candidate
    raise RuntimeError(f"no irreducible of degree {degree} over GF({p})")


def field_for(p: int, degree: int) -> FieldSpec:
    if degree == 1:
        return FieldSpec(p)
    return FieldSpec(p, degree, find_irreducible(p, degree))


def check_field(spec: FieldSpec) -> dict:
    """Sweep all (parity, A_kk, A_kj) cases over one field.

    Returns a report dict with the case count, any mismatches, and the
    distribution of bounds seen.  A mismatch records both routes' answers.
    """
    p = spec.characteristic
    cases = 0
    mismatches = []
    b_counts: dict[int, int] = {}
    for parity in (Parity.EVEN, Parity.ODD):
        for a_kk in spec.elements():
            for a_kj in spec.elements():
                datum = pair_datum(spec, a_kk, a_kj, parity)
                closed = b_closed(datum, 1, 2)
                recursive = b_recursive(datum, 1, 2)
                cases += 1
                if closed != recursive:
                    mismatches.append({
                        "parity": parity.value,
                        "a_kk": list(a_kk.coeffs),
                        "a_kj": list(a_kj.coeffs),
                        "closed": closed.value,
                        "recursive": recursive.value,
                    })
                else:
                    b_counts[int(closed)] = b_counts.get(int(closed), 0) + 1
                # Scan-derived ceilings, valid in any characteristic-p field.
                assert recursive <= 2 * p - 1
                if parity is Parity.EVEN and bool(a_kk):
                    assert recursive <= (3 if p == 2 else p - 1)
    report = {
        "characteristic": p,
        "degree": spec.degree,
        "cases": cases,
        "mismatches": mismatches,
        "failures": len(mismatches),
        "b_counts": [[b, n] for b, n in sorted(b_counts.items())],
    }
    if spec.modulus is not None:
        report["modulus"] = list(spec.modulus)
    return report


def run_selfcheck(primes: list[int], degrees: list[int]) -> dict:
    """Run check_field over the cartesian product of primes and degrees."""
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    for d in degrees:
        if not 1 <= d <= MAX_EXTENSION_DEGREE:
            raise ValueError(f"degree {d} out of range [1, {MAX_EXTENSION_DEGREE}]")
    fields = [check_field(field_for(p, d)) for p in primes for d in degrees]
    total_cases = sum(f["cases"] for f in fields)
    total_mismatches = sum(f["failures"] for f in fields)
    return {
        "fields": fields,
        "total_cases": total_cases,
        "total_mismatches": total_mismatches,
        "ok": total_mismatches == 0,
    }
