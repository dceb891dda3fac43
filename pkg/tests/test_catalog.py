import json

import pytest

from regbound.catalog import CATALOG, catalog_instances, from_catalog, load_spec
from regbound.errors import (
    NonIntegralCoefficients,
    ParseError,
    UnknownFamily,
    ValidationError,
)
from regbound.projection import Curve


def test_load_family_document():
    spec = load_spec('{"family":"curve","d":4,"g":1,"r":3}')
    assert (spec.n, spec.r, spec.hilbert.coeffs) == (1, 3, (0, 4))
    assert spec.family == Curve(4, 1)


def test_load_coeffs_and_values():
    ver = load_spec('{"dim":2,"ambient":5,"coeffs":[1,1,4]}')
    assert ver.hilbert.coeffs == (1, 1, 4) and ver.family is None
    spec = load_spec('{"dim":1,"ambient":3,"values":[[0,0],[1,4]]}')
    assert spec.hilbert.coeffs == (0, 4)


def test_load_file(tmp_path):
    path = tmp_path / "x.json"
    path.write_text(json.dumps({"family": "scroll", "n": 2, "d": 4, "g": 0, "r": 5,
                                "name": "quartic scroll"}))
    spec = load_spec(str(path))
    assert spec.name == "quartic scroll" and spec.hilbert.coeffs == (1, 1, 4)


def test_catalog_names():
    assert from_catalog("rational-normal-curve:r=7").hilbert.coeffs == (1, 7)
    assert from_catalog("rational-normal-scroll:n=3,r=8").hilbert.coeffs == (1, 1, 1, 6)
    assert from_catalog("surface:d=5,pi=1,chi=1,r=5").hilbert.coeffs == (1, 0, 5)
    assert load_spec("elliptic-quartic").hilbert.coeffs == (0, 4)


@pytest.mark.parametrize("text, exc, field", [
    ("{not json", ParseError, "spec"),
    ('{"family":"threefold","d":3}', UnknownFamily, "family"),
    ('{"family":"curve","d":4,"r":3}', ValidationError, "g"),
    ('{"family":"curve","d":"4","g":1,"r":3}', ValidationError, "d"),
    ('{"dim":1,"ambient":3,"coeffs":[0,4],"values":[[0,0],[1,4]]}', ValidationError, None),
    ('{"dim":1,"ambient":3,"coeffs":[0,1.5]}', ValidationError, "coeffs[1]"),
    ('{"dim":1,"ambient":3,"values":[[0,0],[2,1]]}', NonIntegralCoefficients, "values"),
    ('{"dim":1,"ambient":3,"values":[[0,0],[1]]}', ValidationError, "values[1]"),
    ('{"dim":1,"ambient":1,"coeffs":[0,4]}', ValidationError, "ambient"),
    ('{"dim":1,"ambient":3,"coeffs":[0,4],"colour":1}', ValidationError, None),
    ("no-such-variety", ValidationError, "spec"),
    ("curve:d=4,g=x,r=3", ParseError, "spec"),
    ("curve:d=4", ValidationError, None),
])
def test_load_errors(text, exc, field):
    with pytest.raises(exc) as info:
        load_spec(text)
    assert info.value.exit_code == 2
    if field:
        assert info.value.field == field


def test_catalog_entries_regenerate_and_expected():
    for entry, spec in catalog_instances():
        assert spec.family is not None
        assert spec.family.coeffs() == spec.hilbert.coeffs
        exp = entry.expected_value(spec)
        if exp is not None:
            assert entry.note
    assert set(CATALOG) >= {"rational-normal-curve", "twisted-cubic", "elliptic-quartic",
                            "veronese-surface", "rational-normal-scroll", "curve", "surface",
                            "scroll"}
