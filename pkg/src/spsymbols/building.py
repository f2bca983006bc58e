"""Chamber chains in the Tits building of Sp_{2n}(K).

A symbol expands to a signed sum of chambers, one per ordered isotropic
n-tuple of its columns.  Two chains are compared term by term, which is the
ground truth for every relation the reducer emits.

Subspaces are keyed by their primitive Pluecker vector, normalized by a unit
so that equal subspaces get equal keys.  Chambers are tuples of keys.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import gcd

from .linalg import Matrix, det_columns, normalize_vector, rank_of_vectors
from .symbols import SymplecticSymbol, all_isotropic_orders


def _minors(ring, vecs, n2):
    k = len(vecs)
    if k == 1:
        return tuple(vecs[0])
    if k == 2:
        a, b = vecs
        return tuple(a[i] * b[j] - a[j] * b[i] for i, j in combinations(range(n2), 2))
    if k == 3:
        a, b, c = vecs
        out = []
        for i, j, l in combinations(range(n2), 3):
            out.append(
                a[i] * (b[j] * c[l] - b[l] * c[j])
                - a[j] * (b[i] * c[l] - b[l] * c[i])
                + a[l] * (b[i] * c[j] - b[j] * c[i])
            )
        return tuple(out)
    return tuple(det_columns(ring, [tuple(v[r] for r in rows) for v in vecs]) for rows in combinations(range(n2), k))


def subspace_key(ring, vecs):
    """Normalized Pluecker vector of span(vecs), or None when dependent."""
    vecs = [tuple(v) for v in vecs]
    pl = _minors(ring, vecs, len(vecs[0]))
    if not any(pl):
        return None
    if ring.tag == "Z":
        g = 0
        for x in pl:
            g = gcd(g, x)
        lead = next(x for x in pl if x)
        if lead < 0:
            g = -g
        return tuple(x // g for x in pl) if g != 1 else pl
    return normalize_vector(ring, pl)


@dataclass(frozen=True)
class Subspace:
    """An isotropic subspace with its key and one spanning set."""

    ring: object
    key: tuple
    spanning: tuple

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @property
    def dim(self):
        return len(self.spanning)

    def rref(self):
        """Reduced row echelon basis over the fraction field (rows)."""
        ring = self.ring
        rows = [[ring.fraction(x) for x in v] for v in self.spanning]
        ncols = len(rows[0])
        r = 0
        for c in range(ncols):
            p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if p is None:
                continue
            rows[r], rows[p] = rows[p], rows[r]
            piv = rows[r][c]
            rows[r] = [x / piv for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            r += 1
        return tuple(tuple(row) for row in rows[:r])


@dataclass
class ChamberChain:
    """Formal Z-combination of chambers (flags of keys)."""

    ring: object
    n: int
    terms: Counter = field(default_factory=Counter)
    reps: dict = field(default_factory=dict)

    def add(self, other, scale=1):
        for k, c in other.terms.items():
            self.terms[k] += scale * c
        for k, v in other.reps.items():
            self.reps.setdefault(k, v)
        return self

    def cleaned(self):
        return {k: c for k, c in self.terms.items() if c}

    def __eq__(self, other):
        if not isinstance(other, ChamberChain):
            return NotImplemented
        return self.ring is other.ring and self.n == other.n and self.cleaned() == other.cleaned()

    def __len__(self):
        return len(self.cleaned())

    def subspace(self, key):
        return Subspace(self.ring, key, self.reps[key])

    def boundary(self):
        """Augmented boundary: alternating sum of faces, the empty flag included."""
        out = Counter()
        for chamber, c in self.terms.items():
            if not c:
                continue
            for j in range(len(chamber)):
                face = chamber[:j] + chamber[j + 1 :]
                out[face] += (-1) ** j * c
        return {k: v for k, v in out.items() if v}

    def act(self, g: Matrix):
        """Image of the chain under g in Sp_{2n}(K)."""
        ring = self.ring
        image = {}
        reps = {}
        for key, vecs in self.reps.items():
            moved = tuple(g @ v for v in vecs)
            nk = subspace_key(ring, moved)
            image[key] = nk
            reps[nk] = moved
        out = ChamberChain(ring, self.n, Counter(), reps)
        for chamber, c in self.terms.items():
            if c:
                out.terms[tuple(image[k] for k in chamber)] += c
        return out


@lru_cache(maxsize=None)
def _orders(n):
    return tuple(all_isotropic_orders(n))


def expand(s: SymplecticSymbol) -> ChamberChain:
    """Chamber chain of a symbol: one signed chamber per ordered isotropic n-tuple."""
    ring, n = s.ring, s.n
    chain = ChamberChain(ring, n)
    if s.is_zero:
        return chain
    cols = s.columns
    keys = {}
    reps = chain.reps
    for order, eps in _orders(n):
        flag = []
        mask = 0
        ok = True
        for k, p in enumerate(order):
            mask |= 1 << p
            key = keys.get(mask, 0)
            if key == 0:
                vecs = tuple(cols[q] for q in order[: k + 1])
                key = subspace_key(ring, vecs)
                keys[mask] = key
                if key is not None and key not in reps:
                    reps[key] = vecs
            if key is None:
                ok = False
                break
            flag.append(key)
        if ok:
            chain.terms[tuple(flag)] += eps * s.sign
    return chain


def expand_relation(terms, ring=None, n=None) -> ChamberChain:
    terms = list(terms)
    if ring is None:
        ring, n = terms[0].ring, terms[0].n
    total = ChamberChain(ring, n)
    for t in terms:
        total.add(expand(t))
    return total


def chains_equal(a: ChamberChain, b: ChamberChain) -> bool:
    return a == b


def verify_relation(lhs: SymplecticSymbol, rhs_terms) -> bool:
    """True iff chain(lhs) equals the sum of chains of rhs_terms."""
    total = ChamberChain(lhs.ring, lhs.n)
    for t in rhs_terms:
        total.add(expand(t))
    return expand(lhs) == total


def flag_is_degenerate(ring, vectors) -> bool:
    """A flag from ordered vectors is degenerate iff some prefix loses dimension.

    A prefix drops dimension exactly when the whole list is dependent.
    """
    vectors = [tuple(v) for v in vectors]
    return bool(vectors) and rank_of_vectors(ring, vectors) < len(vectors)
