"""Canonical JSON for the core types.  No floats ever appear."""
from __future__ import annotations

import json
from fractions import Fraction

from .building import ChamberChain
from .linalg import Matrix
from .rings import FieldElement, QuadraticInteger, ring_from_tag
from .subdivision import Candidate, SubdivisionData
from .symbols import SignedRelation, Sl2Symbol, SymplecticSymbol
from .symplectic import HNFResult, index_name


class MalformedInput(ValueError):
    """Input JSON does not match the expected schema."""


def dumps(obj) -> str:
    return json.dumps(to_json(obj), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


# -- encoding -------------------------------------------------------------------


def elem_to_json(x):
    if isinstance(x, bool):
        raise TypeError("booleans are not ring elements")
    if isinstance(x, int):
        return [x, 0]
    if isinstance(x, QuadraticInteger):
        return [x.a, x.b]
    raise TypeError(f"not a ring element: {x!r}")


def fraction_to_json(q):
    if isinstance(q, Fraction):
        return {"num": [q.numerator, 0], "den": [q.denominator, 0]}
    return {"num": elem_to_json(q.num), "den": elem_to_json(q.den)}


def vector_to_json(v):
    return [elem_to_json(x) for x in v]


def matrix_to_json(m: Matrix):
    return {"ring": m.ring.tag, "rows": m.nrows, "cols": m.ncols, "entries": [vector_to_json(r) for r in m.rows]}


def symbol_to_json(s: SymplecticSymbol):
    return {"ring": s.ring.tag, "n": s.n, "sign": s.sign, "columns": [vector_to_json(c) for c in s.columns]}


def relation_to_json(r: SignedRelation):
    return {"ring": r.ring.tag, "n": r.n, "terms": [symbol_to_json(t) for t in r.terms]}


def chain_to_json(chain: ChamberChain):
    entries = []
    for chamber, coeff in chain.cleaned().items():
        mats = []
        for key in chamber:
            rows = chain.subspace(key).rref()
            mats.append([[fraction_to_json(q) for q in row] for row in rows])
        entries.append({"chamber": mats, "coeff": coeff})
    entries.sort(key=lambda e: json.dumps(e["chamber"], sort_keys=True))
    return entries


def to_json(obj):
    """Recursive encoder covering everything the CLI and traces emit."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, QuadraticInteger):
        return elem_to_json(obj)
    if isinstance(obj, (Fraction, FieldElement)):
        return fraction_to_json(obj)
    if isinstance(obj, SymplecticSymbol):
        return symbol_to_json(obj)
    if isinstance(obj, SignedRelation):
        return relation_to_json(obj)
    if isinstance(obj, Matrix):
        return matrix_to_json(obj)
    if isinstance(obj, Sl2Symbol):
        return {"ring": obj.ring.tag, "sign": obj.sign, "v": vector_to_json(obj.v), "w": vector_to_json(obj.w)}
    if isinstance(obj, ChamberChain):
        return chain_to_json(obj)
    if isinstance(obj, HNFResult):
        return {"gamma": matrix_to_json(obj.gamma), "t": matrix_to_json(obj.t)}
    if isinstance(obj, Candidate):
        return {
            "x": vector_to_json(obj.x),
            "coefficients": [fraction_to_json(q) for q in obj.coefficients],
            "witness_indices": list(obj.witness_indices),
            "index": obj.index,
            "w": vector_to_json(obj.w),
        }
    if isinstance(obj, SubdivisionData):
        n = obj.base.n
        return {
            "base": symbol_to_json(obj.base),
            "x": vector_to_json(obj.x),
            "d_x": sorted((index_name(p, n) for p in obj.d_x), key=lambda k: _name_order(k, n)),
            "points": [
                {"i": index_name(p, n), "j": index_name(q, n), "x_ij": vector_to_json(v)}
                for (p, q), v in sorted(obj.points.items())
            ],
        }
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted(to_json(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        if obj and all(isinstance(x, QuadraticInteger) for x in obj):
            return vector_to_json(obj)
        return [to_json(v) for v in obj]
    raise TypeError(f"cannot encode {type(obj).__name__}")


def _name_order(k, n):
    return k - 1 if k > 0 else 2 * n + k


# -- decoding -------------------------------------------------------------------


def _ring(obj, default=None):
    tag = obj.get("ring", default) if isinstance(obj, dict) else default
    if tag is None:
        raise MalformedInput("missing ring tag")
    try:
        return ring_from_tag(tag)
    except ValueError as e:
        raise MalformedInput(str(e)) from None


def elem_from_json(ring, j):
    if isinstance(j, bool):
        raise MalformedInput("booleans are not ring elements")
    if isinstance(j, int):
        return ring.from_pair(j)
    if isinstance(j, list) and 1 <= len(j) <= 2 and all(isinstance(a, int) and not isinstance(a, bool) for a in j):
        if ring.tag == "Z" and len(j) == 2 and j[1]:
            raise MalformedInput("Z elements have zero second coefficient")
        return ring.from_pair(j)
    raise MalformedInput(f"bad ring element {j!r}")


def vector_from_json(ring, j):
    if not isinstance(j, list):
        raise MalformedInput("vectors are JSON arrays")
    return tuple(elem_from_json(ring, x) for x in j)


def matrix_from_json(j, ring_tag=None) -> Matrix:
    if isinstance(j, list):
        ring = _ring({}, ring_tag)
        rows = j
    elif isinstance(j, dict) and "entries" in j:
        ring = _ring(j, ring_tag)
        rows = j["entries"]
    else:
        raise MalformedInput("matrix JSON needs an entries array")
    rows = tuple(vector_from_json(ring, r) for r in rows)
    if not rows or len({len(r) for r in rows}) != 1:
        raise MalformedInput("matrix rows must be nonempty and of equal length")
    m = Matrix(ring, rows)
    if isinstance(j, dict) and (j.get("rows", m.nrows) != m.nrows or j.get("cols", m.ncols) != m.ncols):
        raise MalformedInput("rows/cols fields disagree with entries")
    return m


def symbol_from_json(j, ring_tag=None) -> SymplecticSymbol:
    if not isinstance(j, dict) or "columns" not in j:
        raise MalformedInput("symbol JSON needs a columns array")
    ring = _ring(j, ring_tag)
    cols = tuple(vector_from_json(ring, c) for c in j["columns"])
    if len(cols) % 2 or not cols:
        raise MalformedInput("a symbol has an even, positive number of columns")
    n = j.get("n", len(cols) // 2)
    sign = j.get("sign", 1)
    if not isinstance(n, int) or 2 * n != len(cols) or sign not in (1, -1):
        raise MalformedInput("inconsistent n or sign")
    if any(len(c) != 2 * n for c in cols):
        raise MalformedInput(f"columns must have length {2 * n}")
    return SymplecticSymbol(ring, n, cols, sign)


def relation_from_json(j, ring_tag=None, n=None) -> SignedRelation:
    if not isinstance(j, dict) or "terms" not in j:
        raise MalformedInput("relation JSON needs a terms array")
    tag = j.get("ring", ring_tag)
    terms = [symbol_from_json(t, tag) for t in j["terms"]]
    if terms:
        ring, n = terms[0].ring, terms[0].n
    else:
        ring = _ring(j, ring_tag)
        n = j.get("n", n)
        if n is None:
            raise MalformedInput("empty relation needs n")
    try:
        return SignedRelation(ring, n, terms)
    except ValueError as e:
        raise MalformedInput(str(e)) from None


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"invalid JSON: {e}") from None
