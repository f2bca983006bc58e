import random

import pytest
from hypothesis import given, strategies as st

from conftest import RINGS
from oracles import nicf_path
from spsymbols.building import chains_equal, expand, verify_relation
from spsymbols.errors import DependenceError, IsotropyError, ZeroVectorError
from spsymbols.random_instances import RandomSpec, random_instances
from spsymbols.rings import ZZ
from spsymbols.symbols import (
    SignedRelation,
    Sl2Symbol,
    SymplecticSymbol,
    apply,
    is_unimodular,
    normalize,
    permutation_sign,
    permute,
    reduce_sl2,
    sp_representative,
    swap_bar,
)
from spsymbols.symplectic import is_sp_member

DEEP = SymplecticSymbol(ZZ, 2, ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 0, 0, 3)))


def test_permutation_sign():
    assert permutation_sign((0, 1, 2)) == 1
    assert permutation_sign((1, 0, 2)) == -1
    assert permutation_sign((1, 2, 0)) == 1


def test_normalize_examples():
    s = SymplecticSymbol(ZZ, 1, ((-2, -4), (0, -3)))
    assert normalize(s).columns == ((1, 2), (0, 1))
    assert normalize(normalize(s)) == normalize(s)
    with pytest.raises(ZeroVectorError):
        normalize(SymplecticSymbol(ZZ, 1, ((0, 0), (1, 0))))


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.tag)
def test_normalize_preserves_chain(ring):
    for s in random_instances(RandomSpec(ring.tag, 2, 20, 3, "deep-symbol", max_depth=10), 10):
        scaled = SymplecticSymbol(ring, 2, tuple(tuple(ring.units[-1] * 2 * a for a in c) for c in s.columns))
        assert normalize(scaled) == normalize(s)
        assert chains_equal(expand(scaled), expand(s))


def test_validate():
    DEEP.validate()
    with pytest.raises(IsotropyError):
        SymplecticSymbol(ZZ, 2, ((1, 0, 0, 0), (0, 0, 0, 1), (0, 1, 0, 0), (0, 0, 1, 0))).validate()
    with pytest.raises(ZeroVectorError):
        SymplecticSymbol(ZZ, 1, ((0, 0), (1, 0))).validate()


def test_is_zero():
    assert SymplecticSymbol(ZZ, 1, ((1, 0), (2, 0))).is_zero
    assert not DEEP.is_zero


def test_permute_and_swap_examples():
    s = DEEP
    p = permute(s, (1, 0))
    assert p.columns == (s.columns[1], s.columns[0], s.columns[3], s.columns[2])
    assert p.sign == -1
    q = swap_bar(s, 0)
    assert q.columns == (s.columns[3], s.columns[1], s.columns[2], s.columns[0])
    assert q.sign == -1
    assert swap_bar(swap_bar(s, 1), 1) == s


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.tag)
def test_reorderings_preserve_chain(ring):
    rng = random.Random(11)
    for s in random_instances(RandomSpec(ring.tag, 3, 20, 8, "deep-symbol", max_depth=6), 5):
        c = expand(s)
        tau = list(range(3))
        rng.shuffle(tau)
        assert chains_equal(expand(permute(s, tau)), c)
        assert chains_equal(expand(swap_bar(s, rng.randrange(3))), c)
        raw = SymplecticSymbol(ring, 3, swap_bar(s, 0).columns, s.sign)
        assert chains_equal(expand(raw), expand(s.negated()))


def test_unimodular_and_representative():
    assert is_unimodular(SymplecticSymbol.identity(ZZ, 2))
    assert not is_unimodular(DEEP)
    s = SymplecticSymbol(ZZ, 1, ((1, 0), (0, -1)))
    assert is_unimodular(s)
    g = sp_representative(s)
    assert is_sp_member(s.space, g)


def test_apply_is_equivariant():
    for s, g in zip(
        random_instances(RandomSpec("Z", 2, 20, 1, "deep-symbol", max_depth=10), 10),
        random_instances(RandomSpec("Z", 2, 10, 2, "sp-member"), 10),
    ):
        assert chains_equal(expand(apply(g, s)), expand(s).act(g))


def test_reduce_sl2_example():
    pieces = reduce_sl2(Sl2Symbol(ZZ, (1, 0), (2, 5)))
    assert [(p.v, p.w) for p in pieces] == [((1, 0), (0, 1)), ((0, 1), (1, 2)), ((1, 2), (2, 5))]
    with pytest.raises(DependenceError):
        reduce_sl2(Sl2Symbol(ZZ, (1, 2), (2, 4)))


@given(
    a=st.integers(-500, 500), b=st.integers(-500, 500), c=st.integers(-500, 500), d=st.integers(-500, 500)
)
def test_reduce_sl2_unimodular_and_matches_continued_fraction(a, b, c, d):
    from math import gcd

    if a * d - b * c == 0 or gcd(a, b) == 0 or gcd(c, d) == 0:
        return
    pieces = reduce_sl2(Sl2Symbol(ZZ, (a, b), (c, d)))
    assert all(abs(p.det()) == 1 for p in pieces)
    g, h = gcd(a, b), gcd(c, d)
    assert len(pieces) == len(nicf_path((a // g, b // g), (c // h, d // h)))


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.tag)
def test_reduce_sl2_chain_all_rings(ring):
    for s in random_instances(RandomSpec(ring.tag, 1, 200, 4, "deep-symbol", max_depth=500), 30):
        pieces = reduce_sl2(Sl2Symbol.from_symplectic(s))
        assert all(ring.is_unit(p.det()) for p in pieces)
        assert verify_relation(s, [p.to_symplectic() for p in pieces])


def test_signed_relation():
    rel = SignedRelation(ZZ, 2, [DEEP, SymplecticSymbol.identity(ZZ, 2)])
    assert len(rel) == 2 and rel.max_depth() == 3
    assert rel.canonical().terms[0] == min(rel.terms, key=SymplecticSymbol.sort_key)
    with pytest.raises(ValueError):
        SignedRelation(ZZ, 1, [DEEP])
