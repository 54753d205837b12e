"""Deltoid vertex counts against the closed forms, for a range of even n.

Columns: n, triples (counted), 1 + ceil(n(n-3)/6), (C(n,2) - D)/3, doubles,
max vertices on one line, n/2 + 3.

    python3 scripts/deltoid_table.py --max-n 60
"""

import argparse
from dataclasses import dataclass

from pseudoline_lab.constructions import deltoid, double_count, closed_form_triple_count, triple_count


@dataclass
class Config:
    min_n: int = 6
    max_n: int = 60


def rows(cfg: Config):
    for n in range(cfg.min_n, cfg.max_n + 1, 2):
        d = deltoid(n)
        yield (n, len(d.triples), closed_form_triple_count(n), triple_count(n), len(d.doubles),
               double_count(n), max(d.per_line_vertex_counts), n / 2 + 3)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=Config.min_n)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    a = ap.parse_args()
    cfg = Config(a.min_n + a.min_n % 2, a.max_n)
    print(f"{'n':>4} {'T':>5} {'1+ceil':>6} {'cons':>5} {'D':>4} {'D_f':>4} {'rmax':>5} {'n/2+3':>6}")
    off = []
    for n, t, tp, tc, dd, df, r, b in rows(cfg):
        flag = "" if t == tp else "  *"
        if flag:
            off.append(n)
        print(f"{n:>4} {t:>5} {tp:>6} {tc:>5} {dd:>4} {df:>4} {r:>5} {b:>6g}{flag}")
    if off:
        print(f"\n* counted triples differ from 1 + ceil(n(n-3)/6) at n = {off}")


if __name__ == "__main__":
    main()
