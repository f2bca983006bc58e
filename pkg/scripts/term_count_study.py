"""Output size and runtime of the reducer as a function of input depth.

    python3 scripts/term_count_study.py --ring Z --n 2 --count 50 --max-depth 50
"""
import argparse
import statistics
import time
from collections import defaultdict
from dataclasses import dataclass

from spsymbols.building import verify_relation
from spsymbols.random_instances import RandomSpec, random_instances
from spsymbols.reduction import ReductionConfig, reduce


@dataclass(frozen=True)
class StudyConfig:
    ring: str = "Z"
    n: int = 2
    count: int = 50
    max_depth: int = 50
    bound: int = 60
    seed: int = 0
    shortcut: bool = False
    verify: bool = False


def run_study(cfg: StudyConfig):
    spec = RandomSpec(cfg.ring, cfg.n, cfg.bound, cfg.seed, "deep-symbol", cfg.max_depth)
    rows = defaultdict(list)
    for s in random_instances(spec, cfg.count):
        t0 = time.perf_counter()
        res = reduce(s, ReductionConfig(trace="off", shortcut=cfg.shortcut))
        dt = time.perf_counter() - t0
        if cfg.verify and not verify_relation(s, res.relation.terms):
            raise SystemExit(f"chain mismatch for {s}")
        rows[s.depth()].append((len(res.relation), dt, len(res.trace.depth_log)))
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(StudyConfig()).items():
        flag = "--" + name.replace("_", "-")
        if isinstance(default, bool):
            p.add_argument(flag, action="store_true")
        else:
            p.add_argument(flag, type=type(default), default=default)
    cfg = StudyConfig(**vars(p.parse_args()))
    rows = run_study(cfg)
    print(f"{'depth':>5} {'symbols':>7} {'mean terms':>10} {'max terms':>9} {'mean passes':>11} {'mean ms':>8}")
    for d in sorted(rows):
        terms = [r[0] for r in rows[d]]
        print(
            f"{d:>5} {len(terms):>7} {statistics.mean(terms):>10.1f} {max(terms):>9}"
            f" {statistics.mean(r[2] for r in rows[d]):>11.1f} {1000 * statistics.mean(r[1] for r in rows[d]):>8.1f}"
        )


if __name__ == "__main__":
    main()
