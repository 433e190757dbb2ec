"""Run the counting identity over a generated corpus and summarize by endo shape.

    python scripts/corpus_sweep.py [--max-n 6] [--qs 3 5] [--workers 4]
"""

import argparse
import time
from collections import Counter

from ijord.corpus import CorpusSpec, generate_descriptors
from ijord.errors import IJordError
from ijord.jordan import identity_check, ijord_batch


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--qs", type=int, nargs="+", default=[3, 5])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--max-b", type=int, default=2)
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()

    spec = CorpusSpec(qs=tuple(args.qs), max_N=args.max_n, max_b=args.max_b)
    t = time.perf_counter()
    descs = generate_descriptors(spec)
    t_gen = time.perf_counter() - t
    t = time.perf_counter()
    results = ijord_batch(descs, args.workers)
    seen, bad = Counter(), Counter()
    for desc, ij in zip(descs, results):
        key = (desc.q, desc.endo.label)
        seen[key] += 1
        try:
            identity_check(desc, ij)
        except IJordError:
            bad[key] += 1
    t_run = time.perf_counter() - t

    print(f"{'q':>2}  {'endo shape':<12} {'descriptors':>11} {'failures':>8}")
    for key in sorted(seen):
        print(f"{key[0]:>2}  {key[1]:<12} {seen[key]:>11} {bad[key]:>8}")
    print(f"total {len(descs)} descriptors, {sum(bad.values())} failures; "
          f"generation {t_gen:.1f}s, evaluation {t_run:.1f}s")


if __name__ == "__main__":
    main()
