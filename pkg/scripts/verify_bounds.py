"""Check the rich-point, half-period and r_max bounds on seeded random sequences.

    python3 scripts/verify_bounds.py --count 3000 --sizes 10,20,50
"""

import argparse
import time
from collections import Counter
from dataclasses import dataclass, field

from pseudoline_lab.arrangement import (
    K5_CONSTANTS,
    K8_CONSTANTS,
    dirac_floor,
    rich_bound,
    r_max_dominates,
    rich_count_from_histogram,
    stats,
)
from pseudoline_lab.seqcore import PROFILES, is_nontrivial, random_sequence


@dataclass
class Config:
    count: int = 3000
    sizes: tuple = (10, 20, 50)
    profiles: tuple = ("mixed", "sparse", "dense")
    seed: int = 0


@dataclass
class Tally:
    sequences: int = 0
    violations: Counter = field(default_factory=Counter)
    worst_ratio: dict = field(default_factory=dict)  # k -> max rich/bound seen


def check(seq, tally: Tally):
    n = seq.n
    st = stats(seq)
    tally.sequences += 1
    for k in range(5, n):
        rich = rich_count_from_histogram(st.multiplicity_histogram, k)
        b5 = rich_bound(n, k, K5_CONSTANTS)
        tally.worst_ratio[k] = max(tally.worst_ratio.get(k, 0), float(rich / b5))
        if rich > b5:
            tally.violations["k5"] += 1
        if k >= 8 and rich > rich_bound(n, k, K8_CONSTANTS):
            tally.violations["k8"] += 1
    if is_nontrivial(seq) and seq.half_period < 2 * (n // 2):
        tally.violations["ungar"] += 1
    if st.r_max < dirac_floor(n) or not r_max_dominates(seq, st.r_max):
        tally.violations["floor"] += 1


def run(cfg: Config) -> Tally:
    tally = Tally()
    for i in range(cfg.count):
        n = cfg.sizes[i % len(cfg.sizes)]
        profile = cfg.profiles[(i // len(cfg.sizes)) % len(cfg.profiles)]
        check(random_sequence(n, cfg.seed + i, profile), tally)
    return tally


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=Config.count)
    ap.add_argument("--sizes", default="10,20,50")
    ap.add_argument("--profiles", default="mixed,sparse,dense",
                    help=f"comma list from {sorted(PROFILES)}")
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    cfg = Config(a.count, tuple(int(s) for s in a.sizes.split(",")),
                 tuple(a.profiles.split(",")), a.seed)
    t0 = time.perf_counter()
    tally = run(cfg)
    print(f"{tally.sequences} sequences in {time.perf_counter() - t0:.1f} s")
    print(f"violations: {dict(tally.violations) or 'none'}")
    print("largest rich_count / bound_k5 seen:")
    for k in sorted(tally.worst_ratio)[:12]:
        print(f"  k={k:>2}  {tally.worst_ratio[k]:.4f}")


if __name__ == "__main__":
    main()
