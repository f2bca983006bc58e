"""Seeded random instances: Sp members, isotropy-condition matrices, deep symbols."""
from __future__ import annotations

import random
from math import isqrt
from dataclasses import dataclass

from .errors import BoundTooSmall
from .linalg import Matrix, make_primitive, rank_of_vectors
from .rings import ZZ, EuclideanRing, ring_from_tag
from .symbols import SymplecticSymbol, normalize
from .symplectic import SymplecticSpace, depth_of_columns, isotropy_condition

MODES = ("sp-member", "isotropy-matrix", "deep-symbol")
MAX_REJECTIONS = 10_000


@dataclass(frozen=True)
class RandomSpec:
    ring: str = "Z"
    n: int = 2
    entry_bound: int = 20
    seed: int = 0
    mode: str = "sp-member"
    max_depth: int | None = None  # deep-symbol only
    steps: int | None = None  # elementary operations per Sp member

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.n < 1 or self.entry_bound < 1:
            raise ValueError("n and entry_bound must be positive")


def random_element(ring: EuclideanRing, rng: random.Random, size: int):
    if ring is ZZ:
        return rng.randint(-size, size)
    return ring(rng.randint(-size, size), rng.randint(-size, size))


def random_nonzero(ring, rng, size):
    while True:
        x = random_element(ring, rng, size)
        if x:
            return x


def _max_norm(ring, rows):
    return max(ring.norm(x) for r in rows for x in r)


class _Rejections:
    def __init__(self, spec):
        self.count = 0
        self.spec = spec

    def tick(self):
        self.count += 1
        if self.count >= MAX_REJECTIONS:
            raise BoundTooSmall(
                "rejection sampling failed",
                bound=self.spec.entry_bound,
                mode=self.spec.mode,
                n=self.spec.n,
            )


def _random_sp(ring, n, rng, bound, steps, rej):
    """Random walk through elementary row operations, skipping steps that exceed the bound."""
    space = SymplecticSpace(n, ring)
    n2 = 2 * n
    rows = [list(r) for r in space.identity().rows]
    applied = 0
    while applied < steps:
        kind = rng.randrange(5)
        c = random_nonzero(ring, rng, 2)
        i, k = rng.randrange(n), rng.randrange(n)
        new = [r[:] for r in rows]
        if kind == 0:
            p = rng.randrange(n2)
            q = n2 - 1 - p
            new[p] = [a + c * b for a, b in zip(new[p], new[q])]
        elif kind in (1, 2) and i != k:
            bi, bk = n2 - 1 - i, n2 - 1 - k
            if kind == 1:
                new[i] = [a + c * b for a, b in zip(new[i], new[k])]
                new[bk] = [a - c * b for a, b in zip(new[bk], new[bi])]
            else:
                ri, rk = new[i][:], new[k][:]
                new[i] = [a + c * b for a, b in zip(ri, new[bk])]
                new[k] = [a + c * b for a, b in zip(rk, new[bi])]
        elif kind == 3:
            b = n2 - 1 - i
            new[i], new[b] = new[b], [-a for a in new[i]]
        elif kind == 4 and i != k:
            bi, bk = n2 - 1 - i, n2 - 1 - k
            new[i], new[k] = new[k], new[i]
            new[bi], new[bk] = new[bk], new[bi]
        else:
            continue
        if _max_norm(ring, new) > bound:
            rej.tick()
            continue
        rows = new
        applied += 1
    return Matrix(ring, tuple(map(tuple, rows)))


def _integral_primitive(ring, col):
    """Scale a fraction-field column to a primitive ring vector."""
    dens = []
    for q in col:
        d = q.denominator if hasattr(q, "denominator") else q.den
        dens.append(d)
    L = ring.one
    for d in dens:
        g = ring.gcd(L, d)
        L = ring.exact_div(L * d, g)
    ints = []
    for q in col:
        y = q * L
        if hasattr(y, "denominator"):
            ints.append(int(y))
        else:
            ints.append(ring.exact_div(y.num, y.den))
    return make_primitive(ring, ints)[0]


def _random_multiplier(ring, rng, top):
    """Nonzero element with norm in [1, top], roughly uniform in norm."""
    if ring is ZZ:
        return rng.choice((-1, 1)) * rng.randint(1, top)
    r = isqrt(top)
    while True:
        x = ring(rng.randint(-r, r), rng.randint(-r, r))
        if x and ring.norm(x) <= top:
            return x


def _random_isotropy_columns(ring, n, rng, mix, deepen, top=9):
    """Columns of U * B scaled to primitive integral vectors.

    U is a product of rational upper-unipotent symplectic transvections and B
    mixes each column pair (p, bar p) by a 2x2 block; both keep the isotropy
    condition.
    """
    n2 = 2 * n
    F = ring.fraction
    zero = F(ring.zero)
    one = F(ring.one)
    rows = [[one if i == j else zero for j in range(n2)] for i in range(n2)]
    for _ in range(mix):
        num = random_nonzero(ring, rng, 2)
        den = random_nonzero(ring, rng, 2)
        c = F(num, den)
        kind = rng.randrange(3)
        i, k = sorted(rng.sample(range(n), 2)) if n > 1 else (0, 0)
        if kind == 0 or n == 1:
            p = rng.randrange(n)
            q = n2 - 1 - p
            rows[p] = [a + c * b for a, b in zip(rows[p], rows[q])]
        elif kind == 1:
            bi, bk = n2 - 1 - i, n2 - 1 - k
            rows[i] = [a + c * b for a, b in zip(rows[i], rows[k])]
            rows[bk] = [a - c * b for a, b in zip(rows[bk], rows[bi])]
        else:
            bi, bk = n2 - 1 - i, n2 - 1 - k
            ri, rk = rows[i][:], rows[k][:]
            rows[i] = [a + c * b for a, b in zip(ri, rows[bk])]
            rows[k] = [a + c * b for a, b in zip(rk, rows[bi])]
    cols = [list(c) for c in zip(*rows)]
    for p in range(n):
        if not rng.random() < deepen:
            continue
        q = n2 - 1 - p
        # v_q <- c v_p + d v_q, the pairing picks up the factor d
        d = _random_multiplier(ring, rng, top)
        c = random_element(ring, rng, max(1, isqrt(ring.norm(d))))
        if not ring.is_unit(ring.gcd(c, d)):
            c = ring.one
        cols[q] = [c * a + d * b for a, b in zip(cols[p], cols[q])]
    return [_integral_primitive(ring, c) for c in cols]


def _apply(g, cols):
    return [g @ c for c in cols]


def random_instance(spec: RandomSpec):
    """Matrix for sp-member and isotropy-matrix modes, symbol for deep-symbol."""
    ring = ring_from_tag(spec.ring)
    rng = random.Random(spec.seed)
    n = spec.n
    space = SymplecticSpace(n, ring)
    rej = _Rejections(spec)
    steps = spec.steps if spec.steps is not None else 3 * n
    if spec.mode == "sp-member":
        return _random_sp(ring, n, rng, spec.entry_bound, steps, rej)
    while True:
        g = _random_sp(ring, n, rng, spec.entry_bound, rng.randint(1, steps), rej)
        deepen = 0.5 if spec.mode == "isotropy-matrix" else 1.0
        top = spec.max_depth if spec.max_depth else 9
        cols = _random_isotropy_columns(ring, n, rng, rng.randint(0, n), deepen, top)
        cols = _apply(g, cols)
        if _max_norm(ring, cols) > spec.entry_bound or rank_of_vectors(ring, cols) < 2 * n:
            rej.tick()
            continue
        assert isotropy_condition(space, cols)
        if spec.mode == "isotropy-matrix":
            return Matrix.from_columns(ring, cols)
        d = depth_of_columns(space, cols)
        if d <= 1 or (spec.max_depth is not None and d > spec.max_depth):
            rej.tick()
            continue
        return normalize(SymplecticSymbol(ring, n, tuple(map(tuple, cols))))


def random_instances(spec: RandomSpec, count: int):
    """``count`` instances from consecutive seeds derived from spec.seed."""
    base = random.Random(spec.seed)
    out = []
    for _ in range(count):
        sub = RandomSpec(spec.ring, spec.n, spec.entry_bound, base.getrandbits(63), spec.mode, spec.max_depth, spec.steps)
        out.append(random_instance(sub))
    return out
