import json

import pytest

from cotwist import catalog as cat
from cotwist import serialize as ser
from cotwist.cli import builtin_bundle
from cotwist.errors import FormatError
from cotwist.field import GF, QQ

from .conftest import FIELDS, FIELD_IDS

BUILTINS = (list(cat.HOPF_NAMES) + list(cat.MODULE_COALGEBRA_NAMES)
            + ["harrison:C2-sign", "tau:harrison:C2-sign", "tau:harrison:H4-twist",
               "gauge:harrison:C2-sign", "gauge:harrison:H4-twist"])


def _same(a: ser.Bundle, b: ser.Bundle):
    assert a.field == b.field
    assert a.name == b.name
    assert list(a.spaces) == list(b.spaces)
    for n in a.spaces:
        assert a.spaces[n].basis == b.spaces[n].basis
    assert list(a.maps) == list(b.maps)
    for n, e in a.maps.items():
        f = b.maps[n]
        assert (e.role, e.domain, e.codomain, e.inverse) == (f.role, f.domain, f.codomain, f.inverse)
        assert e.map.mat == f.map.mat


@pytest.mark.parametrize("f", FIELDS, ids=FIELD_IDS)
@pytest.mark.parametrize("name", BUILTINS)
def test_roundtrip_exact(name, f):
    b = builtin_bundle(name, f)
    text = ser.dumps(b)
    back = ser.loads(text)
    _same(b, back)
    assert ser.dumps(back) == text


def test_dump_is_deterministic(tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    ser.dump(builtin_bundle("tau:harrison:H4-twist", QQ), p1)
    ser.dump(builtin_bundle("tau:harrison:H4-twist", QQ), p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_rational_entries_are_strings():
    doc = ser.to_doc(builtin_bundle("tau:harrison:H4-twist", QQ))
    tau = next(m for m in doc["maps"] if m["name"] == "tau")
    flat = [x for row in tau["matrix"] for x in row]
    assert "1/2" in flat
    assert all(isinstance(x, str) for x in flat)


def test_prime_field_entries():
    doc = ser.to_doc(builtin_bundle("sweedler:H4", GF(5)))
    s = next(m for m in doc["maps"] if m["name"] == "H.S")
    assert "4 mod 5" in [x for row in s["matrix"] for x in row]


def test_loaded_structures_are_usable():
    b = ser.loads(ser.dumps(builtin_bundle("regular:sweedler:H4", QQ)))
    mc = b.module_coalgebra()
    assert mc.delta == cat.module_coalgebra("regular:sweedler:H4", QQ).delta
    assert b.hopf().antipode == cat.hopf("sweedler:H4", QQ).antipode


def test_tensor_base_legs_survive():
    b = builtin_bundle("tau:harrison:H4-twist", QQ)
    assert b.maps["C.delta"].domain == ("C0", "H")
    mc = ser.loads(ser.dumps(b)).module_coalgebra()
    assert mc.tensor_base is not None
    assert mc.space.basis == b.module_coalgebra().space.basis
    assert mc.delta == b.module_coalgebra().delta


# ---------------------------------------------------------------- rejection


def _doc():
    return ser.to_doc(builtin_bundle("group:C2", QQ))


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("maps"),
    lambda d: d.update(format="something-else"),
    lambda d: d.update(version=99),
    lambda d: d["field"].update(kind="reals"),
    lambda d: d["maps"][0].update(matrix="1"),
    lambda d: d["spaces"][0].update(basis=[1, 2]),
])
def test_schema_rejects(mutate):
    d = _doc()
    mutate(d)
    with pytest.raises(FormatError):
        ser.from_doc(d)


def test_bad_matrix_shape():
    d = _doc()
    d["maps"][0]["matrix"].append(["0"] * 4)
    with pytest.raises(FormatError, match="matrix must be"):
        ser.from_doc(d)


def test_bad_scalar():
    d = _doc()
    d["maps"][0]["matrix"][0][0] = "one"
    with pytest.raises(FormatError):
        ser.from_doc(d)


def test_unknown_leg():
    d = _doc()
    d["maps"][0]["domain"] = ["Q"]
    with pytest.raises(FormatError, match="Q"):
        ser.from_doc(d)


def test_duplicate_map():
    d = _doc()
    d["maps"].append(d["maps"][0])
    with pytest.raises(FormatError, match="twice"):
        ser.from_doc(d)


def test_not_json():
    with pytest.raises(FormatError, match="not valid JSON"):
        ser.loads("{")


def test_schema_file_is_valid_json_schema():
    import jsonschema
    jsonschema.Draft202012Validator.check_schema(ser.schema())
    assert json.loads(json.dumps(ser.schema())) == ser.schema()
