"""Candidates and the subdivision relation [m] = sum over i outside D_x of [m_i]."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DependenceError, DimensionError, PreconditionError
from .linalg import Matrix, det_columns, is_primitive, make_primitive, normalize_vector, saturate, smith_normal_form
from .symbols import SignedRelation, SymplecticSymbol
from .symplectic import index_name, is_isotropic_set


@dataclass(frozen=True)
class Candidate:
    x: tuple
    coefficients: tuple  # q_p, fraction-field elements, one per column position
    witness_indices: tuple  # index after substituting x for column p
    index: int  # index of the original column lattice
    w: tuple  # the lattice-external vector the construction started from


def _replace(cols, p, x):
    cols = list(cols)
    cols[p] = x
    return cols


def in_lattice(ring, cols, D, w):
    """w lies in the lattice spanned by cols (full rank, det D) iff Cramer numerators divide."""
    return all(ring.divides(D, det_columns(ring, _replace(cols, p, w))) for p in range(len(cols)))


def candidate_from(ring, cols, w, D=None) -> Candidate:
    """Run the construction x = w - sum alpha_p v_p for a given w outside the lattice."""
    cols = [tuple(c) for c in cols]
    N = len(cols)
    if D is None:
        D = det_columns(ring, cols)
    if not D:
        raise DependenceError("columns are dependent")
    alphas, betas = [], []
    for p in range(N):
        a, b = ring.divmod(det_columns(ring, _replace(cols, p, w)), D)
        alphas.append(a)
        betas.append(b)
    if not any(betas):
        raise PreconditionError("w lies in the lattice", w=w)
    x = list(w)
    for a, v in zip(alphas, cols):
        if a:
            for k, y in enumerate(v):
                if y:
                    x[k] = x[k] - a * y
    x, c = make_primitive(ring, x)
    betas = [ring.exact_div(b, c) for b in betas]
    coeffs = tuple(ring.fraction(b, D) for b in betas)
    witnesses = tuple(ring.norm(b) for b in betas)
    return Candidate(tuple(x), coeffs, witnesses, ring.norm(D), tuple(w))


def find_candidate_columns(ring, cols, skip=0) -> Candidate:
    """Candidate for the full-rank lattice spanned by cols.

    The starting vector is the first standard basis vector outside the
    lattice; ``skip`` moves on to later ones (used by the reducer's retry).
    """
    cols = [tuple(c) for c in cols]
    N = len(cols)
    if any(len(c) != N for c in cols):
        raise DimensionError("find_candidate needs a square set of columns")
    if not all(any(c) for c in cols):
        raise PreconditionError("zero column")
    if not all(is_primitive(ring, c) for c in cols):
        raise PreconditionError("find_candidate needs primitive columns")
    D = det_columns(ring, cols)
    if not D:
        raise DependenceError("columns are dependent")
    if ring.is_unit(D):
        raise PreconditionError("index is 1; there is no candidate", index=1)
    zero, one = ring.zero, ring.one
    seen = 0
    for j in range(N):
        e = tuple(one if k == j else zero for k in range(N))
        if in_lattice(ring, cols, D, e):
            continue
        if seen == skip:
            return candidate_from(ring, cols, e, D)
        seen += 1
    raise PreconditionError("no further standard basis vector outside the lattice", skip=skip)


def find_candidate(s: SymplecticSymbol, skip=0) -> Candidate:
    return find_candidate_columns(s.ring, s.columns, skip)


def find_candidate_sublattice(ring, vectors) -> tuple:
    """Candidate for a lattice of rank k below the ambient rank (experimental).

    Saturates, solves the full-rank problem in saturated coordinates and maps
    x back.  Returns (x, Candidate in coordinates).
    """
    vectors = [tuple(v) for v in vectors]
    k = len(vectors)
    snf = smith_normal_form(Matrix.from_columns(ring, vectors))
    if len(snf.divisors) < k:
        raise DependenceError("vectors are dependent")
    basis = saturate(ring, vectors)
    coords = [tuple((snf.U @ v)[:k]) for v in vectors]
    cand = find_candidate_columns(ring, coords)
    x = Matrix.from_columns(ring, basis) @ cand.x
    return tuple(x), cand


# -- subdivision data ------------------------------------------------------------------


@dataclass(frozen=True)
class SubdivisionData:
    base: SymplecticSymbol
    x: tuple
    pairings: tuple  # <x, v_p> for every position p
    d_x: frozenset  # positions with vanishing pairing
    points: dict = field(hash=False, compare=False)  # (p, q) -> raw x_pq


def subdivision(s: SymplecticSymbol, x) -> SubdivisionData:
    space = s.space
    x = tuple(s.ring.coerce(y) for y in x)
    if len(x) != space.dim:
        raise DimensionError(f"x must have length {space.dim}")
    if not any(x):
        raise PreconditionError("x must be nonzero")
    cols = s.columns
    n2 = space.dim
    pr = tuple(space.pair(x, v) for v in cols)
    d_x = frozenset(p for p in range(n2) if not pr[p])
    if len(d_x) == n2:
        raise DependenceError("x pairs to zero with every column; columns are dependent")
    points = {}
    for p in range(n2):
        for q in range(n2):
            if p == q or q == n2 - 1 - p or (p in d_x and q in d_x):
                continue
            a, b = pr[p], pr[q]
            points[(p, q)] = tuple(a * vq - b * vp for vp, vq in zip(cols[p], cols[q]))
    return SubdivisionData(s, x, pr, d_x, points)


def make_m_i(data: SubdivisionData, i: int) -> SymplecticSymbol:
    """m_i: column bar(i) is x, column i is v_i, column j is x_ij otherwise.

    Columns come back normalized; a symbol with a zero or dependent column
    is returned with ``is_zero`` set (zero columns are replaced by the
    original column so that the object stays representable).
    """
    s = data.base
    ring = s.ring
    n2 = 2 * s.n
    if i in data.d_x:
        raise PreconditionError("make_m_i needs i outside D_x", i=i)
    bi = n2 - 1 - i
    cols = []
    zero_col = False
    for j in range(n2):
        if j == i:
            c = s.columns[i]
        elif j == bi:
            c = data.x
        else:
            c = data.points[(i, j)]
        if any(c):
            cols.append(normalize_vector(ring, c))
        else:
            zero_col = True
            cols.append(normalize_vector(ring, s.columns[j]))
    m = SymplecticSymbol(ring, s.n, tuple(cols), s.sign)
    if zero_col:
        object.__setattr__(m, "is_zero", True)
    return m


def subdivision_relation(s: SymplecticSymbol, x, trace=None) -> SignedRelation:
    """Terms m_i for i outside D_x in position order, degenerate ones dropped."""
    data = subdivision(s, x)
    terms, dropped = [], []
    for i in range(2 * s.n):
        if i in data.d_x:
            continue
        m = make_m_i(data, i)
        if m.is_zero:
            dropped.append(i)
        else:
            terms.append(m)
    if trace is not None:
        n = s.n
        trace.append(
            {
                "step": "relation",
                "x": [s.ring.to_pair(a) for a in data.x],
                "d_x": [index_name(p, n) for p in sorted(data.d_x)],
                "points": {f"{index_name(p, n)},{index_name(q, n)}": [s.ring.to_pair(a) for a in v] for (p, q), v in sorted(data.points.items())},
                "dropped": [index_name(p, n) for p in dropped],
                "terms": list(terms),
            }
        )
    return SignedRelation(s.ring, s.n, terms)


def check_collinearity(data: SubdivisionData, i, j, k) -> bool:
    """<x,v_k> x_ij == <x,v_j> x_ik - <x,v_i> x_jk on raw points."""
    n = data.base.n
    if len({i, j, k}) != 3 or not is_isotropic_set((i, j, k), n):
        raise PreconditionError("indices must form an isotropic triple")
    if len({i, j, k} & data.d_x) > 1:
        raise PreconditionError("at most one of the indices may lie in D_x")
    pr = data.pairings
    P = data.points
    lhs = tuple(pr[k] * y for y in P[(i, j)])
    rhs = tuple(pr[j] * a - pr[i] * b for a, b in zip(P[(i, k)], P[(j, k)]))
    return lhs == rhs
