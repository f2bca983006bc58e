"""The standard symplectic structure on K^{2n}.

Positions ``0 .. 2n-1`` index coordinates and symbol columns in the order
1 < 2 < ... < n < n-bar < ... < 1-bar.  Index *names* are the signed
integers used at the JSON boundary: ``+k`` is k and ``-k`` is k-bar.  The
bar involution on positions is ``p -> 2n - 1 - p``.

The pairing is <e_p, e_bar(p)> = +1 for p < n and -1 for p >= n, zero
otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import DegenerateError, DimensionError, IsotropyError, PreconditionError, ZeroVectorError
from .linalg import Matrix, is_primitive, rank_of_vectors
from .rings import ZZ, EuclideanRing


def bar(p, n):
    return 2 * n - 1 - p


def position(name, n):
    """Signed index name -> 0-based position."""
    if not 1 <= abs(name) <= n:
        raise ValueError(f"index name {name} out of range for n={n}")
    return name - 1 if name > 0 else 2 * n + name


def index_name(p, n):
    return p + 1 if p < n else -(2 * n - p)


def is_isotropic_set(positions, n):
    s = set(positions)
    return bool(s) and all(bar(p, n) not in s for p in s)


@dataclass(frozen=True)
class SymplecticSpace:
    n: int
    ring: EuclideanRing = ZZ

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")

    @property
    def dim(self):
        return 2 * self.n

    def bar(self, p):
        return 2 * self.n - 1 - p

    def pair(self, v, w):
        n2 = 2 * self.n
        if len(v) != n2 or len(w) != n2:
            raise DimensionError(f"vectors must have length {n2}")
        s = self.ring.zero
        for p in range(self.n):
            q = n2 - 1 - p
            a = v[p] * w[q] if v[p] and w[q] else 0
            b = v[q] * w[p] if v[q] and w[p] else 0
            if a or b:
                s = s + a - b
        return s

    def basis_vector(self, p):
        zero, one = self.ring.zero, self.ring.one
        return tuple(one if k == p else zero for k in range(2 * self.n))

    def gram(self):
        n2 = 2 * self.n
        zero, one = self.ring.zero, self.ring.one
        rows = []
        for p in range(n2):
            q = n2 - 1 - p
            rows.append(tuple((one if p < self.n else -one) if k == q else zero for k in range(n2)))
        return Matrix(self.ring, tuple(rows))

    def identity(self):
        return Matrix.identity(self.ring, 2 * self.n)

    def pair_with_basis(self, p, x):
        """<e_p, x>."""
        q = self.bar(p)
        return x[q] if p < self.n else -x[q]


# -- membership and conditions ------------------------------------------------


def is_sp_member(space: SymplecticSpace, g: Matrix) -> bool:
    n2 = space.dim
    if g.shape != (n2, n2):
        raise DimensionError(f"expected a {n2}x{n2} matrix, got {g.shape}")
    cols = g.columns()
    for i in range(n2):
        for j in range(i + 1, n2):
            want = 1 if (j == n2 - 1 - i) else 0
            if space.pair(cols[i], cols[j]) != want:
                return False
    return True


def _check_columns(space, cols):
    n2 = space.dim
    if len(cols) != n2 or any(len(c) != n2 for c in cols):
        raise DimensionError(f"expected {n2} columns of length {n2}")
    for c in cols:
        if not any(c):
            raise ZeroVectorError("symbol columns must be nonzero")


def isotropy_condition(space: SymplecticSpace, m) -> bool:
    """Pairwise check: <v_p, v_q> = 0 unless q is p or bar(p)."""
    cols = m.columns() if isinstance(m, Matrix) else tuple(m)
    _check_columns(space, cols)
    n2 = space.dim
    for p in range(n2):
        for q in range(p + 1, n2):
            if q != n2 - 1 - p and space.pair(cols[p], cols[q]):
                return False
    return True


def depth_of_columns(space: SymplecticSpace, cols) -> int:
    """max over p < n of the norm of <v_p, v_bar(p)>, without checks."""
    n2 = space.dim
    norm = space.ring.norm
    return max(norm(space.pair(cols[p], cols[n2 - 1 - p])) for p in range(space.n))


def depth(space: SymplecticSpace, m) -> int:
    cols = m.columns() if isinstance(m, Matrix) else tuple(m)
    _check_columns(space, cols)
    ring = space.ring
    if not all(is_primitive(ring, c) for c in cols):
        raise PreconditionError("depth needs primitive columns")
    if not isotropy_condition(space, cols):
        raise IsotropyError("columns violate the isotropy condition")
    if rank_of_vectors(ring, cols) < space.dim:
        raise DegenerateError("depth needs independent columns")
    return depth_of_columns(space, cols)


def sp_inverse(space: SymplecticSpace, g: Matrix) -> Matrix:
    """g^{-1} = -J g^T J for g in Sp."""
    J = space.gram()
    neg = Matrix(space.ring, tuple(tuple(-x for x in row) for row in J.rows))
    return neg @ g.T @ J


# -- elementary symplectic row operations -------------------------------------


def _elementary(space, entries):
    """Identity plus the given {(row, col): value} offsets."""
    n2 = space.dim
    zero, one = space.ring.zero, space.ring.one
    rows = [[one if i == j else zero for j in range(n2)] for i in range(n2)]
    for (i, j), c in entries.items():
        rows[i][j] = rows[i][j] + c
    return Matrix(space.ring, tuple(map(tuple, rows)))


def op_t1(space, p, c):
    """r_p <- r_p + c r_bar(p)."""
    return _elementary(space, {(p, space.bar(p)): c})


def op_t2(space, i, k, c):
    """r_i <- r_i + c r_k ; r_bar(k) <- r_bar(k) - c r_bar(i), for distinct i, k < n."""
    return _elementary(space, {(i, k): c, (space.bar(k), space.bar(i)): -c})


def op_t3(space, i, k, c):
    """r_i <- r_i + c r_bar(k) ; r_k <- r_k + c r_bar(i), for distinct i, k < n."""
    return _elementary(space, {(i, space.bar(k)): c, (k, space.bar(i)): c})


def op_p1(space, i):
    """r_i <- r_bar(i) ; r_bar(i) <- -r_i."""
    b = space.bar(i)
    return _elementary(space, {(i, i): -1, (i, b): 1, (b, b): -1, (b, i): -1})


def op_p2(space, tau):
    """Row permutation r_i <- r_tau(i) on the first n rows, mirrored on the bars.

    ``tau`` is a sequence of n positions in range(n).
    """
    n2 = space.dim
    zero, one = space.ring.zero, space.ring.one
    src = list(range(n2))
    for i, t in enumerate(tau):
        src[i] = t
        src[n2 - 1 - i] = n2 - 1 - t
    return Matrix(space.ring, tuple(tuple(one if j == src[i] else zero for j in range(n2)) for i in range(n2)))


def op_scale(space, i, u):
    """r_i <- u r_i ; r_bar(i) <- u^{-1} r_bar(i) for a unit u."""
    ring = space.ring
    ui = ring.unit_inverse(u)
    b = space.bar(i)
    return _elementary(space, {(i, i): u - 1, (b, b): ui - 1})


# -- symplectic Hermite normal form -------------------------------------------


class HNFResult(NamedTuple):
    gamma: Matrix
    t: Matrix
    ops: tuple


class _RowWorker:
    """Applies symplectic row operations to a matrix and to gamma together."""

    def __init__(self, space, rows):
        self.space = space
        self.ring = space.ring
        n2 = space.dim
        zero, one = self.ring.zero, self.ring.one
        self.a = [list(r) for r in rows]
        self.g = [[one if i == j else zero for j in range(n2)] for i in range(n2)]
        self.ops = []

    def _addmul(self, i, k, c):
        for mat in (self.a, self.g):
            ri, rk = mat[i], mat[k]
            for j, x in enumerate(rk):
                if x:
                    ri[j] = ri[j] + c * x

    def t1(self, p, c):
        if c:
            self._addmul(p, self.space.bar(p), c)
            self.ops.append(("T1", p, c))

    def t2(self, i, k, c):
        if c:
            bar = self.space.bar
            self._addmul(i, k, c)
            self._addmul(bar(k), bar(i), -c)
            self.ops.append(("T2", i, k, c))

    def p1(self, i):
        b = self.space.bar(i)
        for mat in (self.a, self.g):
            ri, rb = mat[i], mat[b]
            mat[i], mat[b] = rb, [-x for x in ri]
        self.ops.append(("P1", i))

    def p2_swap(self, i, k):
        bar = self.space.bar
        for mat in (self.a, self.g):
            mat[i], mat[k] = mat[k], mat[i]
            mat[bar(i)], mat[bar(k)] = mat[bar(k)], mat[bar(i)]
        self.ops.append(("P2", i, k))


def symplectic_hnf(space: SymplecticSpace, m: Matrix) -> HNFResult:
    """Find gamma in Sp_{2n}(O) with gamma*m upper triangular.

    Column by column: T1/P1 run the euclidean algorithm between rows i and
    bar(i), then T2/P2 collect the column gcd into the top row of the
    current block; the isotropy condition then clears the bottom row of the
    block and the procedure recurses on the central block.
    """
    n, n2 = space.n, space.dim
    if m.shape != (n2, n2):
        raise DimensionError(f"expected a {n2}x{n2} matrix, got {m.shape}")
    cols = m.columns()
    _check_columns(space, cols)
    if not all(is_primitive(space.ring, c) for c in cols):
        raise PreconditionError("symplectic_hnf needs primitive columns")
    if not isotropy_condition(space, cols):
        raise IsotropyError("symplectic_hnf needs the isotropy condition")
    ring = space.ring
    w = _RowWorker(space, m.rows)
    a = w.a
    for level in range(n):
        col = level
        hi = n2 - 1 - level
        if not any(a[r][col] for r in range(level, hi + 1)):
            raise DegenerateError(
                "central block has a zero column", level=level, column=col
            )
        for i in range(level, n):
            b = space.bar(i)
            while a[b][col]:
                if a[i][col]:
                    q, _ = ring.divmod(a[b][col], a[i][col])
                    w.t1(b, -q)
                if a[b][col]:
                    w.p1(i)
        for k in range(level + 1, n):
            while a[k][col]:
                if a[level][col]:
                    q, _ = ring.divmod(a[k][col], a[level][col])
                    w.t2(k, level, -q)
                if a[k][col]:
                    w.p2_swap(level, k)
    t = Matrix(ring, tuple(map(tuple, a)))
    if not t.is_upper_triangular():
        raise IsotropyError("elimination did not reach upper triangular form")
    return HNFResult(Matrix(ring, tuple(map(tuple, w.g))), t, tuple(w.ops))
