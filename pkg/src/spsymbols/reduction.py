"""Rewrite any symbol as a signed sum of unimodular symbols.

Outer loop: a symbol of depth d > 1 gets a candidate x and splits into the
m_i of the subdivision relation.  Each m_i is brought to the shape
[e1 | X | x'] by a symplectic HNF of its base, its middle block factors as
X = W m' through a symbol m' of rank 2n - 2, m' is reduced recursively, the
lifted terms [e1 | W m'_a | x'] have their middle column pairs saturated by
the rank-2 algorithm, and everything is mapped back.  Every emitted term has
depth at most |<x, v_i>| < d.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import FactorizationError, NonTerminationError, PreconditionError
from .linalg import Matrix, saturate_pair
from .symbols import (
    SignedRelation,
    Sl2Symbol,
    SymplecticSymbol,
    apply,
    normalize,
    permute,
    reduce_sl2,
    swap_bar,
)
from .serialize import elem_to_json, vector_to_json
from .subdivision import find_candidate, make_m_i, subdivision
from .symplectic import depth_of_columns, index_name, isotropy_condition, sp_inverse, symplectic_hnf

TRACE_LEVELS = ("off", "steps", "full")


@dataclass(frozen=True)
class ReductionConfig:
    trace: str = "steps"
    # push m_i with depth already below d straight back onto the worklist
    shortcut: bool = False
    # run the chamber oracle after every link step (slow)
    check_chains: bool = False

    def __post_init__(self):
        if self.trace not in TRACE_LEVELS:
            raise ValueError(f"trace must be one of {TRACE_LEVELS}")


@dataclass
class ReductionTrace:
    steps: list = field(default_factory=list)
    depth_log: list = field(default_factory=list)  # (input depth, max output depth) per outer pass

    def record(self, config, **step):
        if config.trace != "off":
            self.steps.append(step)


@dataclass(frozen=True)
class LinkData:
    base: SymplecticSymbol  # upper triangular, first column e1
    x: tuple
    X: Matrix
    W: Matrix
    m_prime: Matrix


@dataclass(frozen=True)
class ReductionResult:
    relation: SignedRelation
    trace: ReductionTrace


def _central(m: Matrix) -> Matrix:
    k = m.nrows
    return Matrix(m.ring, tuple(tuple(r[1 : k - 1]) for r in m.rows[1 : k - 1]))


def build_link(s: SymplecticSymbol, x) -> LinkData:
    """Factor the middle columns of m_1 as W m' and check it exactly."""
    space = s.space
    ring = s.ring
    n2 = space.dim
    e1 = space.basis_vector(0)
    if s.columns[0] != e1:
        raise PreconditionError("build_link needs first column e1")
    if not s.matrix.is_upper_triangular():
        raise PreconditionError("build_link needs an upper triangular base")
    x = tuple(ring.coerce(y) for y in x)
    v1 = s.columns[0]
    p1 = space.pair(x, v1)
    if not p1:
        raise PreconditionError("x pairs to zero with the first column")
    c = space.pair(e1, x)
    middle = range(1, n2 - 1)
    W_cols = []
    for j in middle:
        ej = space.pair_with_basis(j, x)
        W_cols.append(tuple((ej if k == 0 else ring.zero) - (c if k == j else ring.zero) for k in range(n2)))
    X_cols = []
    for j in middle:
        vj = s.columns[j]
        pj = space.pair(x, vj)
        X_cols.append(tuple(p1 * a - pj * b for a, b in zip(vj, v1)))
    W = Matrix.from_columns(ring, W_cols)
    X = Matrix.from_columns(ring, X_cols)
    m_prime = _central(s.matrix)
    if W @ m_prime != X:
        raise FactorizationError("X != W m'", x=x)
    return LinkData(s, x, X, W, m_prime)


def lift_link_term(link: LinkData, term: SymplecticSymbol, sign=1) -> SymplecticSymbol:
    """[e1 | W u | x] for a rank-(2n-2) symbol u, depth checked against |c|^2."""
    s = link.base
    space = s.space
    ring = s.ring
    e1 = space.basis_vector(0)
    middle = tuple(link.W @ u for u in term.columns)
    cols = (e1,) + middle + (link.x,)
    out = normalize(SymplecticSymbol(ring, s.n, cols, sign * term.sign))
    if not isotropy_condition(space, out.columns):
        raise PreconditionError("lifted symbol violates the isotropy condition")
    c = space.pair(e1, link.x)
    d = depth_of_columns(space, out.columns)
    if d > ring.norm(c) ** 2:
        raise NonTerminationError("lifted depth exceeds |<e1, x>|^2", depth=d, bound=ring.norm(c) ** 2)
    return out


def saturate_link_pairs(s: SymplecticSymbol) -> list:
    """Run the rank-2 algorithm inside each middle column pair (j, bar j)."""
    ring = s.ring
    n2 = 2 * s.n
    current = [s]
    for j in range(1, s.n):
        bj = n2 - 1 - j
        nxt = []
        for t in current:
            a, b = t.columns[j], t.columns[bj]
            basis, (A, B) = saturate_pair(ring, a, b)
            pair = Sl2Symbol(ring, A, B)
            if ring.is_unit(pair.det()):
                nxt.append(t)
                continue
            pieces = reduce_sl2(pair)
            f1, f2 = basis
            for piece in pieces:
                cols = list(t.columns)
                cols[j] = tuple(piece.v[0] * p + piece.v[1] * q for p, q in zip(f1, f2))
                cols[bj] = tuple(piece.w[0] * p + piece.w[1] * q for p, q in zip(f1, f2))
                nxt.append(normalize(SymplecticSymbol(ring, s.n, tuple(cols), t.sign * piece.sign)))
        current = nxt
    return current


def _bring_to_front(s: SymplecticSymbol, i: int) -> SymplecticSymbol:
    n = s.n
    if i >= n:
        k = 2 * n - 1 - i
        s = swap_bar(s, k)
    else:
        k = i
    if k:
        tau = list(range(n))
        tau[0], tau[k] = k, 0
        s = permute(s, tau)
    return s


def _scale_column(s, p, u):
    cols = list(s.columns)
    cols[p] = tuple(u * a for a in cols[p])
    return SymplecticSymbol(s.ring, s.n, tuple(cols), s.sign)


def _verify(lhs, rhs, what):
    from .building import verify_relation

    if not verify_relation(lhs, rhs):
        raise NonTerminationError(f"chain mismatch after {what}")


def _reduce_term(base: SymplecticSymbol, x, i, config, trace) -> list:
    """Terms summing to [m_i], each of depth <= |<x, v_i>|."""
    ring = base.ring
    space = base.space
    b = _bring_to_front(base, i)
    hnf = symplectic_hnf(space, b.matrix)
    t = SymplecticSymbol(ring, base.n, hnf.t.columns(), b.sign)
    u = t.columns[0][0]
    t = _scale_column(t, 0, ring.unit_inverse(u))
    xp = hnf.gamma @ x
    link = build_link(t, xp)
    c = space.pair(space.basis_vector(0), xp)
    bound = ring.norm(c)
    sub_trace = ReductionTrace()
    if base.n == 1:
        raise PreconditionError("links need n >= 2")
    sub = SymplecticSymbol(ring, base.n - 1, link.m_prime.columns(), 1)
    sub_result = reduce(sub, config, _trace=sub_trace)
    out = []
    for term in sub_result.relation:
        lifted = lift_link_term(link, term, t.sign)
        pieces = saturate_link_pairs(lifted)
        if config.check_chains:
            _verify(lifted, pieces, "pair saturation")
        out.extend(pieces)
    for p in out:
        d = depth_of_columns(space, p.columns)
        if d > bound:
            raise NonTerminationError("saturated term exceeds |<x, v_i>|", depth=d, bound=bound, trace=trace)
    ginv = sp_inverse(space, hnf.gamma)
    mapped = [normalize(apply(ginv, p)) for p in out]
    trace.record(
        config,
        step="link",
        i=index_name(i, base.n),
        gamma=hnf.gamma,
        x=vector_to_json(xp),
        c=elem_to_json(c),
        m_prime=link.m_prime,
        sub_trace=sub_trace.steps,
        terms=len(mapped),
    )
    return mapped


def reduce(s: SymplecticSymbol, config: ReductionConfig | None = None, _trace=None) -> ReductionResult:
    """Signed unimodular terms whose chains sum to chain(s)."""
    config = config or ReductionConfig()
    trace = _trace if _trace is not None else ReductionTrace()
    ring, n = s.ring, s.n
    s = normalize(s)
    if s.is_zero:
        return ReductionResult(SignedRelation(ring, n, ()), trace)
    s.validate()
    if n == 1:
        pieces = reduce_sl2(Sl2Symbol.from_symplectic(s))
        terms = [p.to_symplectic() for p in pieces]
        trace.record(config, step="base-case", terms=terms)
        d = s.depth()
        if d > 1:
            trace.depth_log.append((d, max(t.depth() for t in terms)))
        return ReductionResult(SignedRelation(ring, n, terms).canonical(), trace)
    space = s.space
    done = []
    work = [s]
    while work:
        m = work.pop()
        d = depth_of_columns(space, m.columns)
        if d == 1:
            done.append(m)
            continue
        cand = find_candidate(m)
        trace.record(config, step="candidate", symbol=m, depth=d, x=vector_to_json(cand.x), index=cand.index)
        data = subdivision(m, cand.x)
        indexed = [(i, make_m_i(data, i)) for i in range(2 * n) if i not in data.d_x]
        indexed = [(i, t) for i, t in indexed if not t.is_zero]
        step = dict(
            step="relation",
            x=vector_to_json(cand.x),
            d_x=[index_name(p, n) for p in sorted(data.d_x)],
            points={f"{index_name(p, n)},{index_name(q, n)}": vector_to_json(v) for (p, q), v in sorted(data.points.items())},
            terms=[t for _, t in indexed],
        )
        if config.trace == "full":
            from .building import expand

            step["chain"] = expand(m)
        trace.record(config, **step)
        if config.check_chains:
            _verify(m, [t for _, t in indexed], "subdivision")
        children = []
        for i, term in indexed:
            if config.shortcut and depth_of_columns(space, term.columns) < d:
                children.append(term)
                continue
            pieces = _reduce_term(m, cand.x, i, config, trace)
            if config.check_chains:
                _verify(term, pieces, "link reduction")
            children.extend(pieces)
        top = max((depth_of_columns(space, c.columns) for c in children), default=0)
        trace.depth_log.append((d, top))
        if top >= d:
            raise NonTerminationError("depth did not decrease", depth=d, child_depth=top, trace=trace)
        work.extend(children)
    return ReductionResult(SignedRelation(ring, n, done).canonical(), trace)
