import random
from itertools import permutations

import pytest

from conftest import RINGS
from spsymbols.building import verify_relation
from spsymbols.errors import DependenceError, PreconditionError
from spsymbols.linalg import det_columns
from spsymbols.random_instances import RandomSpec, random_instances
from spsymbols.rings import ZZ
from spsymbols.subdivision import (
    check_collinearity,
    find_candidate,
    find_candidate_columns,
    find_candidate_sublattice,
    make_m_i,
    subdivision,
    subdivision_relation,
)
from spsymbols.symbols import SymplecticSymbol
from spsymbols.symplectic import is_isotropic_set, isotropy_condition

IDENT2 = SymplecticSymbol.identity(ZZ, 2)
DEEP = SymplecticSymbol(ZZ, 2, ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 0, 0, 3)))


def test_candidate_example():
    cand = find_candidate(DEEP)
    assert cand.index == 3
    assert cand.x == (0, 0, 0, 1)
    assert all(w <= 1 for w in cand.witness_indices)
    assert any(cand.coefficients)
    assert all(0 <= abs(q) < 1 for q in cand.coefficients)


def test_candidate_rank_two_against_exhaustive_search():
    cols = [(1, 0), (2, 5)]
    cand = find_candidate_columns(ZZ, cols)
    x = cand.x
    assert abs(det_columns(ZZ, [x, cols[1]])) < 5 and abs(det_columns(ZZ, [cols[0], x])) < 5
    # an exhaustive search confirms candidates exist among small vectors
    found = [
        (a, b)
        for a in range(-5, 6)
        for b in range(-5, 6)
        if (a, b) != (0, 0) and 0 < abs(a * 5 - b * 2) < 5 and 0 < abs(b) < 5
    ]
    assert found


def test_candidate_needs_index_above_one():
    with pytest.raises(PreconditionError):
        find_candidate(IDENT2)
    with pytest.raises(DependenceError):
        find_candidate_columns(ZZ, [(1, 0), (1, 0)])


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.tag)
def test_candidate_properties(ring):
    for s in random_instances(RandomSpec(ring.tag, 2, 30, 17, "deep-symbol", max_depth=30), 40):
        cand = find_candidate(s)
        assert all(w < cand.index for w in cand.witness_indices)
        assert any(q != 0 for q in cand.coefficients)


def test_candidate_sublattice():
    x, cand = find_candidate_sublattice(ZZ, [(1, 0, 0), (1, 3, 0)])
    assert cand.index == 3
    assert x[2] == 0 and x != (0, 0, 0)


def test_subdivision_examples():
    data = subdivision(IDENT2, (1, 1, 1, 1))
    assert data.d_x == frozenset()
    assert data.points[(0, 1)] == (1, -1, 0, 0)
    data = subdivision(IDENT2, (1, 0, 0, 0))
    assert data.d_x == frozenset({0, 1, 2})
    with pytest.raises(PreconditionError):
        subdivision(IDENT2, (0, 0, 0, 0))


def test_points_antisymmetric_and_isotropic():
    rng = random.Random(3)
    for s in random_instances(RandomSpec("Z", 3, 10, 2, "deep-symbol", max_depth=8), 20):
        x = tuple(rng.randint(-9, 9) for _ in range(6))
        if not any(x):
            continue
        data = subdivision(s, x)
        for (p, q), v in data.points.items():
            assert data.points[(q, p)] == tuple(-a for a in v)
            assert s.space.pair(v, x) == 0


def test_make_m_i_example():
    data = subdivision(IDENT2, (1, 1, 1, 1))
    m = make_m_i(data, 0)
    assert m.columns == ((1, 0, 0, 0), (1, -1, 0, 0), (1, 0, 1, 0), (1, 1, 1, 1))
    with pytest.raises(PreconditionError):
        make_m_i(subdivision(IDENT2, (1, 0, 0, 0)), 0)


def test_make_m_i_rank_two():
    s = SymplecticSymbol(ZZ, 1, ((1, 0), (2, 5)))
    m = make_m_i(subdivision(s, (1, 1)), 0)
    assert m.columns == ((1, 0), (1, 1))


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.tag)
def test_make_m_i_isotropy(ring):
    rng = random.Random(9)
    for s in random_instances(RandomSpec(ring.tag, 3, 10, 4, "deep-symbol", max_depth=8), 25):
        x = tuple(ring.from_pair((rng.randint(-4, 4), 0 if ring is ZZ else rng.randint(-4, 4))) for _ in range(6))
        if not any(x):
            continue
        data = subdivision(s, x)
        for i in range(6):
            if i not in data.d_x:
                m = make_m_i(data, i)
                assert isotropy_condition(m.space, m.columns)
                assert m.sign == s.sign


def test_relation_term_counts():
    rel = subdivision_relation(IDENT2, (1, 2, 3, 5))
    assert len(rel) == 4
    ident3 = SymplecticSymbol.identity(ZZ, 3)
    x = (1, 2, 3, 5, 7, 11)
    rel = subdivision_relation(ident3, x)
    assert len(rel) == 6
    data = subdivision(ident3, x)
    distinct = {frozenset({p, q}) for p, q in data.points}
    assert len(distinct) == 12
    assert verify_relation(ident3, rel.terms)


def test_relation_x_equal_to_first_column():
    rel = subdivision_relation(DEEP, DEEP.columns[0])
    assert len(rel) == 1
    assert verify_relation(DEEP, rel.terms)


def test_relation_trace():
    trace = []
    subdivision_relation(IDENT2, (1, 1, 1, 1), trace=trace)
    assert trace[0]["step"] == "relation" and trace[0]["d_x"] == []


def _admissible(n, d_x):
    return [t for t in permutations(range(2 * n), 3) if is_isotropic_set(t, n) and len(set(t) & d_x) <= 1]


def test_collinearity_examples():
    data = subdivision(SymplecticSymbol.identity(ZZ, 3), (0, 0, 0, 0, 0, 1))
    triples = _admissible(3, data.d_x)
    assert all(check_collinearity(data, *t) for t in triples)
    rng = random.Random(1)
    s = random_instances(RandomSpec("Z", 3, 10, 7, "deep-symbol", max_depth=8), 1)[0]
    data = subdivision(s, tuple(rng.randint(-5, 5) for _ in range(6)))
    for t in _admissible(3, data.d_x):
        assert check_collinearity(data, *t)
    with pytest.raises(PreconditionError):
        check_collinearity(data, 0, 5, 1)


def test_collinearity_with_one_index_in_d_x():
    s = SymplecticSymbol.identity(ZZ, 3)
    data = subdivision(s, (1, 1, 0, 0, 1, 1))  # pairs to zero with e3bar only among... checked below
    inside = [p for p in range(6) if p in data.d_x]
    assert inside
    for t in _admissible(3, data.d_x):
        if t[0] in data.d_x:
            assert check_collinearity(data, *t)
