import json

import pytest
from hypothesis import given

from conftest import RINGS, elements, ring_st
from spsymbols.random_instances import RandomSpec, random_instances
from spsymbols.reduction import reduce
from spsymbols.serialize import (
    MalformedInput,
    dumps,
    elem_from_json,
    elem_to_json,
    matrix_from_json,
    relation_from_json,
    symbol_from_json,
    to_json,
)
from spsymbols.symbols import SignedRelation


@given(ring_st.flatmap(lambda r: elements(r, 10**6).map(lambda x: (r, x))))
def test_element_roundtrip(pair):
    ring, x = pair
    assert elem_from_json(ring, json.loads(json.dumps(elem_to_json(x)))) == x


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.tag)
def test_symbol_matrix_relation_roundtrip(ring):
    for s in random_instances(RandomSpec(ring.tag, 2, 20, 8, "deep-symbol", max_depth=10), 5):
        j = json.loads(dumps(s))
        assert symbol_from_json(j) == s
        assert matrix_from_json(json.loads(dumps(s.matrix))) == s.matrix
        rel = reduce(s).relation
        assert relation_from_json(json.loads(dumps(rel))) == rel


def test_empty_relation_roundtrip():
    from spsymbols.rings import ZZ

    rel = SignedRelation(ZZ, 2, ())
    assert relation_from_json(to_json(rel)) == rel


@pytest.mark.parametrize(
    "bad",
    [
        {"columns": [[1, 0], [0, 1]], "sign": 2},
        {"columns": [[1, 0], [0, 1]], "ring": "Q"},
        {"columns": [[[1, 2], 0], [0, 1]], "ring": "Z"},
        {"columns": [[1, 0, 0], [0, 1, 0]]},
    ],
)
def test_rejects_malformed(bad):
    with pytest.raises(MalformedInput):
        symbol_from_json(bad)


def test_no_floats_in_output():
    s = random_instances(RandomSpec("Z[w]", 2, 20, 1, "deep-symbol", max_depth=5), 1)[0]
    assert "." not in dumps(reduce(s).trace.steps)
