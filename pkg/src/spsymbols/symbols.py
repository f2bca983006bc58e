"""Symplectic modular symbols, rank-2 symbols and signed relations."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations

from .errors import DependenceError, DimensionError, IsotropyError, PreconditionError, ZeroVectorError
from .linalg import Matrix, normalize_vector, rank_of_vectors
from .rings import ZZ, EuclideanRing
from .symplectic import SymplecticSpace, depth_of_columns, isotropy_condition


def permutation_sign(perm):
    perm = list(perm)
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class SymplecticSymbol:
    """A signed ordered tuple of 2n column vectors satisfying the isotropy condition.

    Columns are stored as given.  A symbol with dependent columns is
    representable and its class is zero (``is_zero``).
    """

    ring: EuclideanRing
    n: int
    columns: tuple
    sign: int = 1

    def __post_init__(self):
        n2 = 2 * self.n
        cols = tuple(tuple(self.ring.coerce(x) for x in c) for c in self.columns)
        if len(cols) != n2 or any(len(c) != n2 for c in cols):
            raise DimensionError(f"a symbol for n={self.n} needs {n2} columns of length {n2}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        object.__setattr__(self, "columns", cols)

    @classmethod
    def from_matrix(cls, m: Matrix, sign=1, check=True):
        if m.nrows != m.ncols or m.nrows % 2:
            raise DimensionError("a symbol matrix is square of even size")
        s = cls(m.ring, m.nrows // 2, m.columns(), sign)
        if check:
            s.validate()
        return s

    @classmethod
    def identity(cls, ring=ZZ, n=1):
        return cls.from_matrix(Matrix.identity(ring, 2 * n))

    @cached_property
    def space(self):
        return SymplecticSpace(self.n, self.ring)

    @cached_property
    def matrix(self):
        return Matrix.from_columns(self.ring, self.columns)

    def validate(self):
        if any(not any(c) for c in self.columns):
            raise ZeroVectorError("symbol columns must be nonzero")
        if not isotropy_condition(self.space, self.columns):
            raise IsotropyError("columns violate the isotropy condition")
        return self

    @cached_property
    def is_zero(self):
        return rank_of_vectors(self.ring, self.columns) < 2 * self.n

    def pairings(self):
        """<v_p, v_bar(p)> for p < n."""
        n2 = 2 * self.n
        return tuple(self.space.pair(self.columns[p], self.columns[n2 - 1 - p]) for p in range(self.n))

    def depth(self):
        return depth_of_columns(self.space, self.columns)

    def with_sign(self, sign):
        return SymplecticSymbol(self.ring, self.n, self.columns, sign)

    def negated(self):
        return self.with_sign(-self.sign)

    def sort_key(self):
        return (tuple(tuple(self.ring.to_pair(x) for x in c) for c in self.columns), self.sign)


def normalize(s: SymplecticSymbol) -> SymplecticSymbol:
    """Strip column contents and fix each column's unit ambiguity.

    Both rescalings leave the class unchanged.
    """
    ring = s.ring
    cols = []
    for c in s.columns:
        if not any(c):
            raise ZeroVectorError("cannot normalize a zero column")
        cols.append(normalize_vector(ring, c))
    return SymplecticSymbol(ring, s.n, tuple(cols), s.sign)


def permute(s: SymplecticSymbol, tau) -> SymplecticSymbol:
    """Reorder columns: new column k is old column tau[k], bars follow.

    ``tau`` is a permutation of range(n).  The sign picks up sgn(tau) so that
    the class is preserved.
    """
    n = s.n
    tau = tuple(tau)
    if sorted(tau) != list(range(n)):
        raise ValueError(f"not a permutation of range({n}): {tau}")
    n2 = 2 * n
    cols = list(s.columns)
    for k, t in enumerate(tau):
        cols[k] = s.columns[t]
        cols[n2 - 1 - k] = s.columns[n2 - 1 - t]
    return SymplecticSymbol(s.ring, n, tuple(cols), s.sign * permutation_sign(tau))


def swap_bar(s: SymplecticSymbol, k) -> SymplecticSymbol:
    """Exchange columns k and bar(k) (k a position below n) and flip the sign.

    The raw exchange negates the class; the sign flip compensates.
    """
    n2 = 2 * s.n
    if not 0 <= k < s.n:
        raise ValueError("swap_bar takes an unbarred position")
    cols = list(s.columns)
    b = n2 - 1 - k
    cols[k], cols[b] = cols[b], cols[k]
    return SymplecticSymbol(s.ring, s.n, tuple(cols), -s.sign)


def apply(g: Matrix, s: SymplecticSymbol) -> SymplecticSymbol:
    return SymplecticSymbol(s.ring, s.n, tuple(g @ c for c in s.columns), s.sign)


def is_unimodular(s: SymplecticSymbol) -> bool:
    if s.is_zero:
        return False
    return all(s.ring.is_unit(c) for c in s.pairings())


def sp_representative(s: SymplecticSymbol) -> Matrix:
    """Rescale barred columns by unit inverses so the matrix lies in Sp_{2n}(O)."""
    if not is_unimodular(s):
        raise PreconditionError("symbol is not unimodular")
    n2 = 2 * s.n
    ring = s.ring
    cols = list(s.columns)
    for p, c in enumerate(s.pairings()):
        u = ring.unit_inverse(c)
        cols[n2 - 1 - p] = tuple(u * x for x in cols[n2 - 1 - p])
    return Matrix.from_columns(ring, cols)


def all_isotropic_orders(n):
    """Signed permutations as (positions, sgn(sigma) * (-1)^#barred)."""
    n2 = 2 * n
    out = []
    for sigma in permutations(range(n)):
        ps = permutation_sign(sigma)
        for mask in range(1 << n):
            pos = tuple(n2 - 1 - t if (mask >> k) & 1 else t for k, t in enumerate(sigma))
            out.append((pos, ps * (-1) ** bin(mask).count("1")))
    return out


# -- rank 2 -----------------------------------------------------------------------


@dataclass(frozen=True)
class Sl2Symbol:
    """A signed pair (v, w) in O^2; its class is the chain F(v) - F(w)."""

    ring: EuclideanRing
    v: tuple
    w: tuple
    sign: int = 1

    def __post_init__(self):
        v = tuple(self.ring.coerce(x) for x in self.v)
        w = tuple(self.ring.coerce(x) for x in self.w)
        if len(v) != 2 or len(w) != 2:
            raise DimensionError("rank-2 symbols have columns of length 2")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)

    def det(self):
        return self.v[0] * self.w[1] - self.v[1] * self.w[0]

    def to_symplectic(self):
        return SymplecticSymbol(self.ring, 1, (self.v, self.w), self.sign)

    @classmethod
    def from_symplectic(cls, s):
        if s.n != 1:
            raise DimensionError("expected an n=1 symbol")
        return cls(s.ring, s.columns[0], s.columns[1], s.sign)


def reduce_sl2(s: Sl2Symbol) -> list:
    """Rewrite a rank-2 symbol as a list of unimodular ones.

    With D = det(v, w) rescaled to its canonical associate, pick w0 with
    det(v, w0) = 1, divide det(w0, w) by D, and set x = w0 - q v.  Then
    det(v, x) = 1, det(x, w) is the remainder, and [v; w] = [v; x] + [x; w].
    Over Z this walks the nearest-integer continued fraction.
    """
    ring = s.ring
    if not any(s.v) or not any(s.w):
        raise ZeroVectorError("rank-2 symbol with a zero column")
    v = normalize_vector(ring, s.v)
    w = normalize_vector(ring, s.w)
    D = v[0] * w[1] - v[1] * w[0]
    if not D:
        raise DependenceError("columns are dependent")
    out = []
    while not ring.is_unit(D):
        D, u = ring.canonical(D)
        w = (w[0] * u, w[1] * u)
        _, a, b = ring.xgcd(v[0], v[1])
        w0 = (-b, a)
        q, r = ring.divmod(w0[0] * w[1] - w0[1] * w[0], D)
        x = (w0[0] - q * v[0], w0[1] - q * v[1])
        out.append(Sl2Symbol(ring, v, normalize_vector(ring, x), s.sign))
        v, D = x, r
    out.append(Sl2Symbol(ring, normalize_vector(ring, v), normalize_vector(ring, w), s.sign))
    return out


# -- relations ----------------------------------------------------------------------


@dataclass(frozen=True)
class SignedRelation:
    """A formal sum of signed symbols, all for the same (ring, n)."""

    ring: EuclideanRing
    n: int
    terms: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        for t in self.terms:
            if t.n != self.n or t.ring is not self.ring:
                raise DimensionError("relation terms must share ring and n")

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def canonical(self):
        return SignedRelation(self.ring, self.n, sorted(self.terms, key=SymplecticSymbol.sort_key))

    def max_depth(self):
        return max((t.depth() for t in self.terms), default=0)
