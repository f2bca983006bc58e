"""Reduce one symbol step by step and check the result against the chamber oracle.

    python3 scripts/reduce_demo.py            # built-in depth-3 example
    python3 scripts/reduce_demo.py --seed 4 --n 3 --max-depth 8
"""
import argparse

from spsymbols.building import verify_relation
from spsymbols.random_instances import RandomSpec, random_instance
from spsymbols.reduction import ReductionConfig, reduce
from spsymbols.rings import ZZ
from spsymbols.symbols import SymplecticSymbol, is_unimodular


def show(s):
    rows = zip(*s.columns)
    return "\n".join("  [" + " ".join(f"{str(a):>8}" for a in r) + " ]" for r in rows)


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--seed", type=int)
    p.add_argument("--ring", default="Z")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--max-depth", type=int, default=20)
    args = p.parse_args()
    if args.seed is None:
        s = SymplecticSymbol(ZZ, 2, ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 0, 0, 3)))
    else:
        s = random_instance(RandomSpec(args.ring, args.n, 60, args.seed, "deep-symbol", args.max_depth))
    print(f"input (depth {s.depth()}):\n{show(s)}")
    res = reduce(s, ReductionConfig(trace="steps"))
    for step in res.trace.steps:
        if step["step"] == "candidate":
            print(f"pass: depth {step['depth']}, index {step['index']}, x = {[a[0] if a[1] == 0 else tuple(a) for a in step['x']]}")
    print("depth per outer pass (input -> max output):", res.trace.depth_log)
    terms = res.relation.terms
    print(f"{len(terms)} terms, all unimodular: {all(is_unimodular(t) for t in terms)}")
    print("chain equality:", verify_relation(s, terms))
    for t in terms[:3]:
        print(f"sign {t.sign:+d}\n{show(t)}")
    if len(terms) > 3:
        print(f"... {len(terms) - 3} more")


if __name__ == "__main__":
    main()
