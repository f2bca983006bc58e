"""Exact dense linear algebra over a euclidean ring and its fraction field.

Matrices are immutable :class:`Matrix` values; the algorithms copy the rows
into plain lists and work in place.  Vectors are tuples of ring elements.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .errors import DependenceError, DimensionError, PreconditionError, ZeroVectorError
from .rings import ZZ, EuclideanRing


@dataclass(frozen=True)
class Matrix:
    ring: EuclideanRing
    rows: tuple

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise DimensionError("matrices must have positive dimensions")
        width = len(self.rows[0])
        if any(len(r) != width for r in self.rows):
            raise DimensionError("ragged matrix rows")

    @classmethod
    def from_rows(cls, ring, rows):
        c = ring.coerce
        return cls(ring, tuple(tuple(c(x) for x in row) for row in rows))

    @classmethod
    def from_columns(cls, ring, columns):
        c = ring.coerce
        return cls(ring, tuple(tuple(c(x) for x in row) for row in zip(*columns)))

    @classmethod
    def identity(cls, ring, n):
        one, zero = ring.one, ring.zero
        return cls(ring, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0])

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def columns(self):
        return tuple(zip(*self.rows))

    @property
    def T(self):
        return Matrix(self.ring, tuple(zip(*self.rows)))

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            zero = self.ring.zero
            return Matrix(
                self.ring,
                tuple(tuple(_dot(row, col, zero) for col in cols) for row in self.rows),
            )
        vec = tuple(other)
        if len(vec) != self.ncols:
            raise DimensionError("vector length does not match matrix width")
        zero = self.ring.zero
        return tuple(_dot(row, vec, zero) for row in self.rows)

    def is_upper_triangular(self):
        return all(not self.rows[i][j] for i in range(self.nrows) for j in range(min(i, self.ncols)))

    def to_lists(self):
        return [list(r) for r in self.rows]


def _dot(u, v, zero=0):
    s = zero
    for a, b in zip(u, v):
        if a and b:
            s = s + a * b
    return s


def mat_vec(ring, cols, coeffs):
    """Linear combination sum_j coeffs[j] * cols[j] of column vectors."""
    out = [ring.zero] * len(cols[0])
    for c, col in zip(coeffs, cols):
        if c:
            for k, x in enumerate(col):
                if x:
                    out[k] = out[k] + c * x
    return tuple(out)


# -- determinants and rank ----------------------------------------------------


def _bareiss(ring, a, ncols=None):
    """Fraction-free forward elimination in place; returns (rank, sign, last pivot)."""
    nrows = len(a)
    ncols = len(a[0]) if ncols is None else ncols
    exact = ring.exact_div
    sign = 1
    prev = ring.one
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        if p != r:
            a[p], a[r] = a[r], a[p]
            sign = -sign
        piv = a[r][c]
        for i in range(r + 1, nrows):
            ai = a[i]
            f = ai[c]
            for j in range(c + 1, len(ai)):
                ai[j] = exact(ai[j] * piv - f * a[r][j], prev)
            ai[c] = ring.zero
        prev = piv
        r += 1
    return r, sign, prev


def det(m: Matrix):
    if m.nrows != m.ncols:
        raise DimensionError("determinant of a non-square matrix")
    ring = m.ring
    a = m.to_lists()
    rank, sign, last = _bareiss(ring, a)
    if rank < m.nrows:
        return ring.zero
    return last if sign == 1 else -last


def det_columns(ring, cols):
    """Determinant of the square matrix with the given columns."""
    a = [list(r) for r in zip(*cols)]
    rank, sign, last = _bareiss(ring, a)
    if rank < len(a):
        return ring.zero
    return last if sign == 1 else -last


def rank(m: Matrix):
    return _bareiss(m.ring, m.to_lists())[0]


def rank_of_vectors(ring, vectors):
    if not vectors:
        return 0
    return _bareiss(ring, [list(v) for v in vectors])[0]


# -- content and primitivity --------------------------------------------------


def content(ring, v):
    g = ring.zero
    for x in v:
        if x:
            g = ring.gcd(g, x)
            if ring.is_unit(g):
                return ring.one
    return g


def is_primitive(ring, v):
    if not any(v):
        raise ZeroVectorError("the zero vector has no content")
    return ring.is_unit(content(ring, v))


def make_primitive(ring, v):
    """Return (v / c, c) with c the canonical content of v."""
    v = tuple(v)
    if not any(v):
        raise ZeroVectorError("cannot make the zero vector primitive")
    c = content(ring, v)
    if c == ring.one:
        return v, c
    exact = ring.exact_div
    return tuple(exact(x, c) for x in v), c


def normalize_vector(ring, v):
    """Primitive representative whose first nonzero entry is canonical."""
    v, _ = make_primitive(ring, v)
    lead = next(x for x in v if x)
    _, u = ring.canonical(lead)
    if u == ring.one:
        return v
    return tuple(x * u for x in v)


# -- Smith normal form --------------------------------------------------------


class SmithForm(NamedTuple):
    divisors: tuple
    U: Matrix
    V: Matrix
    U_inv: Matrix


def smith_normal_form(m: Matrix) -> SmithForm:
    """Return divisors d and unimodular U, V with U m V = diag(d).

    ``U_inv`` is the inverse of ``U``; its first ``len(divisors)`` columns
    are an O-basis of the saturation of the column lattice of ``m``.
    """
    ring = m.ring
    R, C = m.shape
    a = m.to_lists()
    one, zero = ring.one, ring.zero
    U = [[one if i == j else zero for j in range(R)] for i in range(R)]
    Ui = [[one if i == j else zero for j in range(R)] for i in range(R)]
    V = [[one if i == j else zero for j in range(C)] for i in range(C)]
    norm = ring.norm

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]
        for row in Ui:
            row[i], row[j] = row[j], row[i]

    def col_swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def row_addmul(i, t, q):
        # row_i <- row_i + q * row_t
        if not q:
            return
        ai, at = a[i], a[t]
        for k in range(C):
            if at[k]:
                ai[k] = ai[k] + q * at[k]
        ui, ut = U[i], U[t]
        for k in range(R):
            if ut[k]:
                ui[k] = ui[k] + q * ut[k]
        for row in Ui:
            if row[i]:
                row[t] = row[t] - q * row[i]

    def col_addmul(j, t, q):
        # col_j <- col_j + q * col_t
        if not q:
            return
        for row in a:
            if row[t]:
                row[j] = row[j] + q * row[t]
        for row in V:
            if row[t]:
                row[j] = row[j] + q * row[t]

    divisors = []
    t = 0
    while t < min(R, C):
        while True:
            best = None
            for i in range(t, R):
                for j in range(t, C):
                    x = a[i][j]
                    if x:
                        nx = norm(x)
                        if best is None or nx < best[0]:
                            best = (nx, i, j)
            if best is None:
                break
            _, i, j = best
            if i != t:
                row_swap(i, t)
            if j != t:
                col_swap(j, t)
            piv = a[t][t]
            dirty = False
            for i in range(t + 1, R):
                if a[i][t]:
                    q, r = ring.divmod(a[i][t], piv)
                    row_addmul(i, t, -q)
                    dirty = dirty or bool(r)
            for j in range(t + 1, C):
                if a[t][j]:
                    q, r = ring.divmod(a[t][j], piv)
                    col_addmul(j, t, -q)
                    dirty = dirty or bool(r)
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, R) for j in range(t + 1, C) if a[i][j] and not ring.divides(piv, a[i][j])),
                None,
            )
            if bad is None:
                break
            row_addmul(t, bad, one)
        if best is None:
            break
        d, u = ring.canonical(a[t][t])
        if u != one:
            ui = ring.unit_inverse(u)
            a[t] = [x * u for x in a[t]]
            U[t] = [x * u for x in U[t]]
            for row in Ui:
                row[t] = row[t] * ui
        divisors.append(d)
        t += 1
    return SmithForm(
        tuple(divisors),
        Matrix(ring, tuple(map(tuple, U))),
        Matrix(ring, tuple(map(tuple, V))),
        Matrix(ring, tuple(map(tuple, Ui))),
    )


# -- lattices -----------------------------------------------------------------


@dataclass(frozen=True)
class Lattice:
    ambient_rank: int
    generators: Matrix

    @classmethod
    def from_vectors(cls, ring, vectors):
        vectors = [tuple(v) for v in vectors]
        return cls(len(vectors[0]), Matrix.from_columns(ring, vectors))


def index(L) -> int:
    """Index of the lattice in its saturation; 0 if the generators are dependent."""
    gens = L.generators if isinstance(L, Lattice) else L
    ring = gens.ring
    snf = smith_normal_form(gens)
    if len(snf.divisors) < gens.ncols:
        return 0
    out = 1
    for d in snf.divisors:
        out *= ring.norm(d)
    return out


def index_of_vectors(ring, vectors) -> int:
    return index(Matrix.from_columns(ring, vectors))


def saturate(ring, vectors):
    """An O-basis of span_K(vectors) intersected with O^N."""
    snf = smith_normal_form(Matrix.from_columns(ring, vectors))
    return snf.U_inv.columns()[: len(snf.divisors)]


class SaturatedPair(NamedTuple):
    basis: tuple
    coords: tuple


def saturate_pair(ring, w, w2) -> SaturatedPair:
    """Basis (f1, f2) of the saturation of span(w, w2), plus coordinates.

    ``coords`` holds the coordinate vectors of w and w2 in that basis, so
    w = coords[0][0] f1 + coords[0][1] f2 and likewise for w2.
    """
    snf = smith_normal_form(Matrix.from_columns(ring, [w, w2]))
    if len(snf.divisors) < 2:
        raise DependenceError("cannot saturate a dependent pair")
    basis = snf.U_inv.columns()[:2]
    cw = snf.U @ w
    cw2 = snf.U @ w2
    return SaturatedPair(basis, ((cw[0], cw[1]), (cw2[0], cw2[1])))


def maximal_minors_gcd(ring, vectors):
    """gcd of the k x k minors of the N x k matrix with the given columns."""
    k = len(vectors)
    N = len(vectors[0])
    g = ring.zero
    for rows in combinations(range(N), k):
        sub = [tuple(v[r] for r in rows) for v in vectors]
        g = ring.gcd(g, det_columns(ring, sub))
    return g


def require_square(m: Matrix, size=None):
    if m.nrows != m.ncols or (size is not None and m.nrows != size):
        raise DimensionError(f"expected a square matrix of size {size}, got {m.shape}")


def check_vector(v, length):
    if len(v) != length:
        raise DimensionError(f"expected a vector of length {length}, got {len(v)}")
    return tuple(v)


def unimodular_inverse(m: Matrix) -> Matrix:
    """Inverse of an invertible matrix over O via Smith form."""
    snf = smith_normal_form(m)
    ring = m.ring
    if len(snf.divisors) < m.nrows or any(not ring.is_unit(d) for d in snf.divisors):
        raise PreconditionError("matrix is not invertible over the ring")
    # U m V = I  =>  m^-1 = V U
    return snf.V @ snf.U


__all__ = [
    "Matrix",
    "Lattice",
    "SmithForm",
    "SaturatedPair",
    "det",
    "det_columns",
    "rank",
    "rank_of_vectors",
    "content",
    "is_primitive",
    "make_primitive",
    "normalize_vector",
    "smith_normal_form",
    "index",
    "index_of_vectors",
    "saturate",
    "saturate_pair",
    "maximal_minors_gcd",
    "unimodular_inverse",
    "ZZ",
]
