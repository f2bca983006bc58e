import random

import pytest

from conftest import RINGS
from spsymbols.errors import DegenerateError, DimensionError, IsotropyError, PreconditionError, ZeroVectorError
from spsymbols.linalg import Matrix
from spsymbols.random_instances import RandomSpec, random_instance, random_instances
from spsymbols.rings import ZZ
from spsymbols.symplectic import (
    SymplecticSpace,
    bar,
    depth,
    index_name,
    is_isotropic_set,
    is_sp_member,
    isotropy_condition,
    op_p1,
    op_p2,
    op_scale,
    op_t1,
    op_t2,
    op_t3,
    position,
    sp_inverse,
    symplectic_hnf,
)

SP2 = SymplecticSpace(2)
E = [SP2.basis_vector(p) for p in range(4)]  # e1, e2, e2bar, e1bar


def test_index_names():
    n = 3
    assert [index_name(p, n) for p in range(6)] == [1, 2, 3, -3, -2, -1]
    for p in range(6):
        assert position(index_name(p, n), n) == p
        assert bar(bar(p, n), n) == p
    assert is_isotropic_set((0, 1, 2), 3) and not is_isotropic_set((0, 5), 3)
    with pytest.raises(ValueError):
        position(4, 3)


def test_pair_examples():
    assert SP2.pair(E[0], E[3]) == 1
    assert SP2.pair(E[3], E[0]) == -1
    assert SP2.pair((1, 1, 1, 1), E[0]) == -1
    with pytest.raises(DimensionError):
        SP2.pair((1, 2), E[0])


def test_gram():
    for n in (1, 2, 3):
        J = SymplecticSpace(n).gram()
        assert J.T == Matrix(ZZ, tuple(tuple(-x for x in r) for r in J.rows))
        assert J @ J == Matrix(ZZ, tuple(tuple(-x for x in r) for r in Matrix.identity(ZZ, 2 * n).rows))


def test_sp_member_examples():
    assert is_sp_member(SP2, SP2.identity())
    assert is_sp_member(SymplecticSpace(1), Matrix(ZZ, ((1, 1), (0, 1))))
    assert not is_sp_member(SP2, Matrix(ZZ, ((2, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))))
    with pytest.raises(DimensionError):
        is_sp_member(SP2, Matrix.identity(ZZ, 3))


def test_isotropy_examples():
    good = [E[0], E[1], E[2], (1, 0, 0, 3)]
    assert isotropy_condition(SP2, good)
    assert not isotropy_condition(SP2, [E[0], E[3], E[1], E[2]])
    with pytest.raises(ZeroVectorError):
        isotropy_condition(SP2, [E[0], (0, 0, 0, 0), E[2], E[3]])


def test_depth_examples():
    assert depth(SP2, SP2.identity()) == 1
    assert depth(SP2, [E[0], E[1], E[2], (1, 0, 0, 3)]) == 3
    with pytest.raises(PreconditionError):
        depth(SP2, [E[0], E[1], E[2], (2, 0, 0, 6)])
    with pytest.raises(IsotropyError):
        depth(SP2, [E[0], E[3], E[1], E[2]])


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.tag)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_elementary_operations_are_symplectic(ring, n):
    sp = SymplecticSpace(n, ring)
    c = ring(2, 1) if ring is not ZZ else 3
    ops = [op_t1(sp, p, c) for p in range(2 * n)] + [op_p1(sp, i) for i in range(n)]
    ops += [op_scale(sp, i, u) for i in range(n) for u in ring.units]
    for i in range(n):
        for k in range(n):
            if i != k:
                ops += [op_t2(sp, i, k, c), op_t3(sp, i, k, c), op_t3(sp, i, k, c).T]
    ops.append(op_p2(sp, list(reversed(range(n)))))
    for g in ops:
        assert is_sp_member(sp, g)


def test_group_closure_and_inverse():
    rng = random.Random(4)
    for n in (1, 2, 3):
        sp = SymplecticSpace(n)
        for _ in range(50):
            g = random_instance(RandomSpec("Z", n, 50, rng.getrandbits(32), "sp-member"))
            h = random_instance(RandomSpec("Z", n, 50, rng.getrandbits(32), "sp-member"))
            assert is_sp_member(sp, g @ h)
            gi = sp_inverse(sp, g)
            assert is_sp_member(sp, gi) and gi @ g == sp.identity()


def test_action_preserves_isotropy():
    for n in (2, 3):
        sp = SymplecticSpace(n)
        ms = random_instances(RandomSpec("Z", n, 20, 1, "isotropy-matrix"), 50)
        gs = random_instances(RandomSpec("Z", n, 20, 2, "sp-member"), 50)
        for g, m in zip(gs, ms):
            assert isotropy_condition(sp, (g @ m).columns())


def test_hnf_examples():
    t = Matrix.from_columns(ZZ, [E[0], E[1], E[2], (1, 0, 0, 3)])
    res = symplectic_hnf(SP2, t)
    assert res.t.is_upper_triangular()
    swapped = op_p1(SP2, 0) @ SP2.identity()
    res = symplectic_hnf(SP2, swapped)
    assert is_sp_member(SP2, res.gamma) and res.t.is_upper_triangular()
    assert res.gamma @ swapped == res.t


def _check_hnf(sp, m):
    res = symplectic_hnf(sp, m)
    assert is_sp_member(sp, res.gamma)
    assert res.gamma @ m == res.t
    assert res.t.is_upper_triangular()
    assert isotropy_condition(sp, res.t.columns())
    first = res.t.column(0)
    assert all(not x for x in first[1:]) and first[0]


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.tag)
def test_hnf_random(ring):
    for n in (1, 2, 3):
        sp = SymplecticSpace(n, ring)
        for m in random_instances(RandomSpec(ring.tag, n, 40, 5, "isotropy-matrix"), 40):
            _check_hnf(sp, m)


def test_hnf_g_times_upper_triangular():
    sp = SP2
    for g in random_instances(RandomSpec("Z", 2, 30, 9, "sp-member"), 30):
        m = g @ Matrix.from_columns(ZZ, [E[0], E[1], (0, 2, 1, 0), (1, 0, 0, 5)])
        _check_hnf(sp, m)


def test_hnf_rejects_bad_input():
    with pytest.raises(IsotropyError):
        symplectic_hnf(SP2, Matrix.from_columns(ZZ, [E[0], E[3], E[1], E[2]]))
    with pytest.raises(PreconditionError):
        symplectic_hnf(SP2, Matrix.from_columns(ZZ, [E[0], E[1], E[2], (2, 0, 0, 2)]))


def test_hnf_dependent_columns_still_triangularize():
    m = Matrix.from_columns(ZZ, [E[0], E[1], E[1], E[3]])
    res = symplectic_hnf(SP2, m)
    assert res.gamma @ m == res.t and res.t.is_upper_triangular()


def test_hnf_signals_zero_central_column():
    # dependent columns can leave a zero column in the central block
    cols = [(-2, 1, 1, -2), (2, -1, -1, 2), (0, 0, 2, 1), (2, -1, -1, 2)]
    with pytest.raises(DegenerateError):
        symplectic_hnf(SP2, Matrix.from_columns(ZZ, cols))
