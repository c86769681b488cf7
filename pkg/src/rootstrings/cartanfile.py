"""Cartan-data files (JSON in) and report documents (canonical JSON out).

Input schema::

    {
      "characteristic": 3,                    // 0 or a prime
      "extension": {"degree": 2,              // optional; degree >= 2
                    "modulus": [1, 0, 1]},    // monic irreducible, low degree first
      "matrix": [[0, 1], [1, 0]],             // n x n
      "parities": ["ev", "ev"]                // one label per row
    }

Matrix entries are plain integers (reduced mod p on input unless strict mode
is on), coefficient lists for extension-field elements (low degree first,
padded with zeros), or integers / "numerator/denominator" strings at
characteristic 0.

Reports are rendered as canonical JSON -- sorted keys, two-space indent,
trailing newline -- so identical inputs always produce byte-identical
output.  Infinite bounds serialize as the string "inf", absent (diagonal)
bounds as null.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional, Union

from .cartan import BValue, CartanDatum, Parity
from .field import (
    MAX_EXTENSION_DEGREE,
    FieldElement,
    FieldSpec,
    check_irreducible,
    is_prime,
)

_TOP_KEYS = {"characteristic", "extension", "matrix", "parities"}


class CartanFileError(ValueError):
    """Input document rejected; ``code`` is a stable diagnostic identifier."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def parse_cartan(text: str, *, strict: bool = False) -> CartanDatum:
    """Parse and fully validate a Cartan-data document.

    Raises CartanFileError with a distinct ``code`` per failure mode; JSON
    syntax errors carry the line and column.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CartanFileError(
            "bad-json", f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(raw, dict):
        raise CartanFileError("bad-document", "top level must be an object")
    unknown = sorted(set(raw) - _TOP_KEYS)
    if unknown:
        raise CartanFileError("unknown-key", f"unknown keys: {', '.join(unknown)}")
    for key in ("characteristic", "matrix", "parities"):
        if key not in raw:
            raise CartanFileError("missing-key", f"missing key: {key}")

    characteristic = raw["characteristic"]
    if not _is_int(characteristic) or characteristic < 0:
        raise CartanFileError(
            "bad-characteristic", "characteristic must be a non-negative integer")
    if characteristic > 0 and not is_prime(characteristic):
        raise CartanFileError("bad-characteristic", "characteristic must be 0 or prime")
    spec = _parse_field(characteristic, raw.get("extension"))

    matrix = raw["matrix"]
    if not isinstance(matrix, list) or not matrix or not all(isinstance(r, list) for r in matrix):
        raise CartanFileError("bad-matrix", "matrix must be a non-empty array of rows")
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise CartanFileError("ragged-matrix", f"matrix must be square of size {n}")

    parities = raw["parities"]
    if not isinstance(parities, list) or len(parities) != n:
        raise CartanFileError(
            "parity-length-mismatch", f"parities must list exactly {n} labels")
    parsed_parities = []
    for i, label in enumerate(parities):
        if label not in ("ev", "od"):
            raise CartanFileError(
                "bad-parity", f'parity {i + 1} must be "ev" or "od", got {label!r}')
        parsed_parities.append(Parity(label))

    entries = tuple(
        tuple(_parse_entry(spec, value, strict, r + 1, c + 1)
              for c, value in enumerate(row))
        for r, row in enumerate(matrix))
    return CartanDatum(spec, entries, tuple(parsed_parities))


def _parse_field(characteristic: int, extension) -> FieldSpec:
    if extension is None:
        return FieldSpec(characteristic)
    if characteristic == 0:
        raise CartanFileError("bad-extension", "characteristic 0 takes no extension")
    if not isinstance(extension, dict) or set(extension) != {"degree", "modulus"}:
        raise CartanFileError(
            "bad-extension", 'extension needs exactly the keys "degree" and "modulus"')
    degree = extension["degree"]
    modulus = extension["modulus"]
    if not _is_int(degree) or not 2 <= degree <= MAX_EXTENSION_DEGREE:
        raise CartanFileError(
            "bad-extension",
            f"degree must be an integer in [2, {MAX_EXTENSION_DEGREE}]")
    if (not isinstance(modulus, list) or len(modulus) != degree + 1
            or not all(_is_int(c) for c in modulus)):
        raise CartanFileError(
            "bad-extension",
            "modulus must list degree + 1 integer coefficients, low degree first")
    if any(not 0 <= c < characteristic for c in modulus) or modulus[-1] != 1:
        raise CartanFileError(
            "bad-extension", "modulus must be monic with coefficients reduced mod p")
    if not check_irreducible(modulus, characteristic):
        raise CartanFileError(
            "reducible-modulus", "modulus must be irreducible over GF(p)")
    return FieldSpec(characteristic, degree, tuple(modulus))


def _parse_entry(spec: FieldSpec, value, strict: bool, row: int, col: int) -> FieldElement:
    where = f"entry ({row}, {col})"
    p, k = spec.characteristic, spec.degree
    if p == 0:
        if _is_int(value):
            return spec.element(value)
        if isinstance(value, str):
            try:
                return spec.element(Fraction(value))
            except (ValueError, ZeroDivisionError) as exc:
                raise CartanFileError(
                    "bad-entry", f"{where}: cannot parse rational {value!r}") from exc
        raise CartanFileError(
            "bad-entry",
            f'{where}: expected an integer or "numerator/denominator" string')
    if _is_int(value):
        if strict and not 0 <= value < p:
            raise CartanFileError(
                "unreduced-entry", f"{where}: {value} is not reduced mod {p}")
        return spec.element(value)
    if k > 1 and isinstance(value, list):
        if not all(_is_int(c) for c in value) or not 1 <= len(value) <= k:
            raise CartanFileError(
                "bad-entry", f"{where}: coefficient lists hold 1 to {k} integers")
        if strict and any(not 0 <= c < p for c in value):
            raise CartanFileError(
                "unreduced-entry", f"{where}: coefficients must be reduced mod {p}")
        return spec.element(value)
    raise CartanFileError(
        "bad-entry", f"{where}: cannot parse {value!r} as an element of {spec}")


def serialize_cartan(datum: CartanDatum) -> str:
    """Canonical document for a datum; parsing it back gives an equal datum."""
    spec = datum.spec
    doc: dict = {"characteristic": spec.characteristic}
    if spec.degree > 1:
        doc["extension"] = {"degree": spec.degree, "modulus": list(spec.modulus)}
    doc["matrix"] = [[encode_entry(e) for e in row] for row in datum.entries]
    doc["parities"] = [q.value for q in datum.parities]
    return render_document(doc)


def render_document(doc: dict) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def encode_entry(element: FieldElement) -> Union[int, str, list[int]]:
    """JSON encoding of one field element, matching the input conventions."""
    spec = element.spec
    if spec.characteristic == 0:
        q = element.rational
        return int(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    if spec.degree == 1:
        return element.coeffs[0]
    return list(element.coeffs)


def encode_bvalue(b: Optional[BValue]) -> Union[int, str, None]:
    """JSON encoding of a bound: an integer, "inf", or null when absent."""
    if b is None:
        return None
    return b.value if b.is_finite else "inf"


def field_doc(spec: FieldSpec) -> dict:
    """Small JSON description of a field, embedded in reports."""
    doc: dict = {"characteristic": spec.characteristic, "degree": spec.degree}
    if spec.modulus is not None:
        doc["modulus"] = list(spec.modulus)
    return doc
