"""Command-line entry point: ``python3 -m spsymbols <verb> [flags]``.

Exit status 0 on success, 2 on domain errors (structured error JSON on
stdout), 1 on malformed input.
"""
from __future__ import annotations

import argparse
import sys

from .building import verify_relation
from .errors import SymbolError
from .random_instances import MODES, RandomSpec, random_instance
from .reduction import ReductionConfig, reduce
from .serialize import (
    MalformedInput,
    dumps,
    loads,
    matrix_from_json,
    relation_from_json,
    symbol_from_json,
    to_json,
    vector_from_json,
)
from .subdivision import check_collinearity, find_candidate, subdivision, subdivision_relation
from .symbols import SymplecticSymbol
from .symplectic import SymplecticSpace, depth, index_name, is_isotropic_set, position, symplectic_hnf

VERBS = ("reduce", "relation", "hnf", "candidate", "depth", "verify", "random", "check-id")


def build_parser():
    p = argparse.ArgumentParser(prog="spsymbols", description="Exact symplectic modular symbol computations.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("json", nargs="?", help="inline JSON input (otherwise --in or stdin)")
    p.add_argument("--in", dest="infile", help="read the JSON input from this file")
    p.add_argument("--ring", default="Z", choices=("Z", "Z[i]", "Z[w]"), help="ring for inputs without a ring tag")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=20, help="max entry norm for random instances")
    p.add_argument("--mode", default="sp-member", choices=MODES)
    p.add_argument("--max-depth", type=int, default=None)
    p.add_argument("--trace", default="steps", choices=("off", "steps", "full"))
    p.add_argument("--trace-file", help="also write reduce trace steps as JSON lines")
    p.add_argument("--verify", action="store_true", help="check the output chain against the input")
    return p


def _read_input(args):
    if args.json is not None:
        return loads(args.json)
    if args.infile:
        try:
            with open(args.infile, encoding="utf-8") as fh:
                return loads(fh.read())
        except OSError as e:
            raise MalformedInput(f"cannot read {args.infile}: {e}") from None
    return loads(sys.stdin.read())


def _symbol(j, args):
    if isinstance(j, dict) and "symbol" in j:
        j = j["symbol"]
    if isinstance(j, dict) and "entries" in j:
        return SymplecticSymbol.from_matrix(matrix_from_json(j, args.ring), check=False)
    return symbol_from_json(j, args.ring)


def _field(j, key):
    if not isinstance(j, dict) or key not in j:
        raise MalformedInput(f"input needs a {key!r} field")
    return j[key]


def cmd_reduce(args):
    s = _symbol(_read_input(args), args)
    s.validate()
    res = reduce(s, ReductionConfig(trace=args.trace))
    out = {"terms": to_json(res.relation)["terms"], "trace": to_json(res.trace.steps)}
    if args.trace == "off":
        out["trace"] = []
    out["depth_log"] = [list(p) for p in res.trace.depth_log]
    if args.trace_file:
        with open(args.trace_file, "w", encoding="utf-8") as fh:
            for step in res.trace.steps:
                fh.write(dumps(step) + "\n")
    if args.verify:
        ok = verify_relation(s, res.relation.terms)
        out["verified"] = ok
        if not ok:
            return 2, {"error": "verification-failed", "detail": out}
    return 0, out


def cmd_relation(args):
    j = _read_input(args)
    s = _symbol(j, args)
    s.validate()
    if isinstance(j, dict) and "x" in j:
        x = vector_from_json(s.ring, j["x"])
    else:
        x = find_candidate(s).x
    data = subdivision(s, x)
    rel = subdivision_relation(s, x)
    out = {"terms": to_json(rel)["terms"], "x": to_json(list(x)), "d_x": to_json(data)["d_x"]}
    if args.verify:
        out["verified"] = verify_relation(s, rel.terms)
        if not out["verified"]:
            return 2, {"error": "verification-failed", "detail": out}
    return 0, out


def cmd_hnf(args):
    j = _read_input(args)
    if isinstance(j, dict) and "columns" in j:
        m = symbol_from_json(j, args.ring).matrix
    else:
        m = matrix_from_json(j, args.ring)
    if m.nrows != m.ncols or m.nrows % 2:
        raise MalformedInput("hnf needs a square matrix of even size")
    res = symplectic_hnf(SymplecticSpace(m.nrows // 2, m.ring), m)
    return 0, to_json(res)


def cmd_candidate(args):
    return 0, to_json(find_candidate(_symbol(_read_input(args), args)))


def cmd_depth(args):
    s = _symbol(_read_input(args), args)
    return 0, {"depth": depth(s.space, s.columns)}


def cmd_verify(args):
    j = _read_input(args)
    s = _symbol(_field(j, "symbol"), args)
    rel = relation_from_json(_field(j, "relation"), s.ring.tag, s.n)
    return 0, {"equal": verify_relation(s, rel.terms)}


def cmd_random(args):
    spec = RandomSpec(args.ring, args.n, args.bound, args.seed, args.mode, args.max_depth)
    return 0, to_json(random_instance(spec))


def cmd_check_id(args):
    j = _read_input(args)
    s = _symbol(j, args)
    x = vector_from_json(s.ring, _field(j, "x"))
    data = subdivision(s, x)
    n = s.n
    if "triple" in j:
        names = j["triple"]
        if not (isinstance(names, list) and len(names) == 3 and all(isinstance(k, int) for k in names)):
            raise MalformedInput("triple must be three signed index names")
        triples = [tuple(position(k, n) for k in names)]
    else:
        from itertools import permutations

        triples = [
            t
            for t in permutations(range(2 * n), 3)
            if is_isotropic_set(t, n) and len(set(t) & data.d_x) <= 1
        ]
    failures = [[index_name(p, n) for p in t] for t in triples if not check_collinearity(data, *t)]
    return 0, {"holds": not failures, "checked": len(triples), "failures": failures}


COMMANDS = {
    "reduce": cmd_reduce,
    "relation": cmd_relation,
    "hnf": cmd_hnf,
    "candidate": cmd_candidate,
    "depth": cmd_depth,
    "verify": cmd_verify,
    "random": cmd_random,
    "check-id": cmd_check_id,
}


def run(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    args = build_parser().parse_intermixed_args(argv)
    try:
        status, payload = COMMANDS[args.verb](args)
    except SymbolError as e:
        status, payload = 2, {"error": e.code, "detail": {"message": str(e), **to_json(_safe_detail(e.detail))}}
    except (MalformedInput, KeyError, TypeError, ValueError) as e:
        status, payload = 1, {"error": "malformed-input", "detail": {"message": str(e)}}
    stdout.write(dumps(payload) + "\n")
    return status


def _safe_detail(detail):
    out = {}
    for k, v in detail.items():
        try:
            to_json(v)
            out[k] = v
        except TypeError:
            out[k] = repr(v)
    return out


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
