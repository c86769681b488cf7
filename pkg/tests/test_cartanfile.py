import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rootstrings.cartan import INFINITY, BValue, CartanDatum, Parity
from rootstrings.cartanfile import (
    CartanFileError,
    encode_bvalue,
    encode_entry,
    field_doc,
    parse_cartan,
    render_document,
    serialize_cartan,
)
from rootstrings.field import FieldSpec

GF3 = FieldSpec(3)
GF9 = FieldSpec(3, 2, (1, 0, 1))
Q = FieldSpec(0)


def doc(**overrides):
    base = {
        "characteristic": 3,
        "matrix": [[0, 1], [1, 0]],
        "parities": ["ev", "ev"],
    }
    base.update(overrides)
    return json.dumps(base)


def error_code(text, **kwargs):
    with pytest.raises(CartanFileError) as info:
        parse_cartan(text, **kwargs)
    return info.value.code


# --- happy paths ------------------------------------------------------------

def test_parse_prime_field_document(fixtures_dir):
    datum = parse_cartan((fixtures_dir / "prime.json").read_text())
    assert datum.spec == GF3
    assert datum.entry(1, 2) == GF3.element(1)
    assert datum.parities == (Parity.EVEN, Parity.EVEN)


def test_parse_extension_document(fixtures_dir):
    datum = parse_cartan((fixtures_dir / "extension.json").read_text())
    assert datum.spec == GF9
    assert datum.entry(1, 2) == GF9.element([0, 1])
    assert datum.entry(2, 2) == GF9.element(2)
    assert datum.parity(2) is Parity.ODD


def test_parse_characteristic_zero_document(fixtures_dir):
    datum = parse_cartan((fixtures_dir / "char0.json").read_text())
    assert datum.spec == Q
    assert datum.entry(1, 2).rational == Fraction(-1)


def test_rational_string_entries():
    text = json.dumps({
        "characteristic": 0,
        "matrix": [["1/2", "2/4"], ["-3/2", 2]],
        "parities": ["ev", "od"],
    })
    datum = parse_cartan(text)
    assert datum.entry(1, 1).rational == Fraction(1, 2)
    assert datum.entry(1, 2).rational == Fraction(1, 2)
    assert datum.entry(2, 1).rational == Fraction(-3, 2)


def test_integers_reduce_mod_p_by_default():
    datum = parse_cartan(doc(matrix=[[0, 7], [-1, 0]]))
    assert datum.entry(1, 2) == GF3.element(1)
    assert datum.entry(2, 1) == GF3.element(2)


# --- every rejection code -----------------------------------------------------

def test_bad_json_reports_position():
    with pytest.raises(CartanFileError) as info:
        parse_cartan("{\n  broken\n}")
    assert info.value.code == "bad-json"
    assert "line 2" in str(info.value)


@pytest.mark.parametrize("text,code", [
    ("[1, 2]", "bad-document"),
    ('"matrix"', "bad-document"),
    (doc(extra=1), "unknown-key"),
    ('{"matrix": [[0]], "parities": ["ev"]}', "missing-key"),
    (doc(characteristic=4), "bad-characteristic"),
    (doc(characteristic=-1), "bad-characteristic"),
    (doc(characteristic="3"), "bad-characteristic"),
    (doc(characteristic=True), "bad-characteristic"),
    (doc(characteristic=0, extension={"degree": 2, "modulus": [1, 0, 1]}),
     "bad-extension"),
    (doc(extension={"degree": 2}), "bad-extension"),
    (doc(extension={"degree": 1, "modulus": [1, 1]}), "bad-extension"),
    (doc(extension={"degree": 9, "modulus": [1] * 10}), "bad-extension"),
    (doc(extension={"degree": 2, "modulus": [1, 0, 0, 1]}), "bad-extension"),
    (doc(extension={"degree": 2, "modulus": [1, 0, 2]}), "bad-extension"),
    (doc(extension={"degree": 2, "modulus": [1, 3, 1]}), "bad-extension"),
    (doc(extension={"degree": 2, "modulus": [1.0, 0, 1]}), "bad-extension"),
    (doc(characteristic=2, extension={"degree": 2, "modulus": [1, 0, 1]}),
     "reducible-modulus"),
    (doc(matrix=3), "bad-matrix"),
    (doc(matrix=[]), "bad-matrix"),
    (doc(matrix=[3, 4]), "bad-matrix"),
    (doc(matrix=[[0, 1], [1]]), "ragged-matrix"),
    (doc(matrix=[[0]]), "parity-length-mismatch"),
    (doc(parities="evev"), "parity-length-mismatch"),
    (doc(parities=["ev", "even"]), "bad-parity"),
    (doc(matrix=[[0, 1.5], [1, 0]]), "bad-entry"),
    (doc(matrix=[[0, True], [1, 0]]), "bad-entry"),
    (doc(matrix=[[0, "1"], [1, 0]]), "bad-entry"),
    (doc(matrix=[[0, [1]], [1, 0]]), "bad-entry"),       # list needs degree > 1
    (doc(characteristic=0, matrix=[[0, "1/0"], [1, 0]]), "bad-entry"),
    (doc(characteristic=0, matrix=[[0, "x"], [1, 0]]), "bad-entry"),
    (doc(characteristic=0, matrix=[[0, [1]], [1, 0]]), "bad-entry"),
])
def test_rejection_codes(text, code):
    assert error_code(text) == code


def test_extension_entry_lists():
    text = doc(extension={"degree": 2, "modulus": [1, 0, 1]},
               matrix=[[[1, 2], [0, 1]], [[4], 2]])
    datum = parse_cartan(text)
    assert datum.entry(1, 1) == GF9.element([1, 2])
    assert datum.entry(2, 1) == GF9.element(1)          # [4] reduces to 1
    bad = doc(extension={"degree": 2, "modulus": [1, 0, 1]},
              matrix=[[[1, 2, 0], [0, 1]], [[0, 1], 2]])
    assert error_code(bad) == "bad-entry"               # three coefficients
    mixed = doc(extension={"degree": 2, "modulus": [1, 0, 1]},
                matrix=[[[1, True], [0, 1]], [[0, 1], 2]])
    assert error_code(mixed) == "bad-entry"


def test_strict_mode_rejects_unreduced_values():
    assert error_code(doc(matrix=[[0, 7], [1, 0]]), strict=True) == "unreduced-entry"
    assert error_code(doc(matrix=[[0, -1], [1, 0]]), strict=True) == "unreduced-entry"
    unreduced_list = doc(extension={"degree": 2, "modulus": [1, 0, 1]},
                         matrix=[[[4, 0], [0, 1]], [[0, 1], 2]])
    assert error_code(unreduced_list, strict=True) == "unreduced-entry"
    # reduced documents pass strict mode untouched
    datum = parse_cartan(doc(), strict=True)
    assert datum.entry(1, 2) == GF3.element(1)


# --- serialization ---------------------------------------------------------------

def test_serialize_round_trips_fixtures(fixtures_dir):
    for name in ("prime.json", "extension.json", "char0.json"):
        datum = parse_cartan((fixtures_dir / name).read_text())
        text = serialize_cartan(datum)
        assert parse_cartan(text) == datum
        assert parse_cartan(text, strict=True) == datum  # canonical form is reduced
        assert serialize_cartan(parse_cartan(text)) == text


def test_serialized_form_is_canonical():
    datum = CartanDatum.build(GF9, [[1, [0, 1]], [[0, 1], 2]], ["ev", "od"])
    text = serialize_cartan(datum)
    assert text.endswith("\n")
    assert json.loads(text)["matrix"] == [[[1, 0], [0, 1]], [[0, 1], [2, 0]]]
    assert json.loads(text)["extension"] == {"degree": 2, "modulus": [1, 0, 1]}


def test_encode_entry_formats():
    assert encode_entry(GF3.element(2)) == 2
    assert encode_entry(GF9.element([0, 1])) == [0, 1]
    assert encode_entry(Q.element(3)) == 3
    assert encode_entry(Q.element(Fraction(-1, 2))) == "-1/2"


def test_encode_bvalue():
    assert encode_bvalue(BValue(4)) == 4
    assert encode_bvalue(INFINITY) == "inf"
    assert encode_bvalue(None) is None


def test_field_doc():
    assert field_doc(GF3) == {"characteristic": 3, "degree": 1}
    assert field_doc(GF9) == {"characteristic": 3, "degree": 2, "modulus": [1, 0, 1]}
    assert field_doc(Q) == {"characteristic": 0, "degree": 1}


def test_render_document_is_stable():
    assert render_document({"b": 1, "a": 2}) == '{\n  "a": 2,\n  "b": 1\n}\n'


# --- randomized round trips --------------------------------------------------------

parity_labels = st.lists(st.sampled_from(["ev", "od"]), min_size=1, max_size=3)


@given(st.integers(1, 3).flatmap(
    lambda n: st.tuples(
        st.lists(st.lists(st.integers(0, 2), min_size=n, max_size=n),
                 min_size=n, max_size=n),
        st.lists(st.sampled_from(["ev", "od"]), min_size=n, max_size=n))))
def test_round_trip_prime_field(data):
    rows, parities = data
    datum = CartanDatum.build(GF3, rows, parities)
    assert parse_cartan(serialize_cartan(datum)) == datum


@given(st.integers(1, 2).flatmap(
    lambda n: st.tuples(
        st.lists(st.lists(st.lists(st.integers(0, 2), min_size=2, max_size=2),
                          min_size=n, max_size=n),
                 min_size=n, max_size=n),
        st.lists(st.sampled_from(["ev", "od"]), min_size=n, max_size=n))))
def test_round_trip_extension_field(data):
    rows, parities = data
    datum = CartanDatum.build(GF9, rows, parities)
    assert parse_cartan(serialize_cartan(datum)) == datum


@given(st.lists(st.fractions(max_denominator=50), min_size=4, max_size=4),
       st.sampled_from([("ev", "ev"), ("ev", "od"), ("od", "od")]))
def test_round_trip_rationals(values, parities):
    rows = [values[:2], values[2:]]
    datum = CartanDatum.build(Q, rows, parities)
    assert parse_cartan(serialize_cartan(datum)) == datum
