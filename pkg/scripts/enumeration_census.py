"""Exhaustive census of allowable sequences for small n.

Prints totals, half-period histograms and check results; n = 7 simple is
counted by memoized path counting only.

    python3 scripts/enumeration_census.py --threads 4
"""

import argparse
import json
from dataclasses import dataclass

from pseudoline_lab.enumeration import ALL_CHECKS, count_sequences, verify_over_enumeration


@dataclass
class Config:
    max_general: int = 5
    max_simple: int = 6
    threads: int = 1


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--threads", type=int, default=1)
    cfg = Config(threads=ap.parse_args().threads)
    for simple, top in ((False, cfg.max_general), (True, cfg.max_simple)):
        for n in range(2, top + 1):
            rep = verify_over_enumeration(n, ALL_CHECKS, simple=simple, threads=cfg.threads)
            d = rep.to_dict()
            d["counterexamples"] = len(d["counterexamples"])
            print(json.dumps(d))
    print(json.dumps({"n": 7, "mode": "simple", "total": count_sequences(7, True)}))


if __name__ == "__main__":
    main()
