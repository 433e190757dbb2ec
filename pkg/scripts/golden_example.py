"""Tabulate r_a, r_b and the real parts for the maximal example.

    python scripts/golden_example.py [--q 3 5] [--f0 1 2 3]
"""

import argparse

from ijord.endo import DualType
from ijord.golden import maximal_descriptor, maximal_table, residue_degree_of_fixed_field
from ijord.schema import fmt_rational


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=int, nargs="+", default=[3, 5])
    ap.add_argument("--f0", type=int, nargs="+", default=[1, 2])
    args = ap.parse_args()
    print(f"{'type':<11} {'q':>2} {'f':>2}  {'Q':<14} {'r_a':>4} {'r_b':>4}  real parts")
    for dt in (DualType.UNRAMIFIED, DualType.RAMIFIED):
        for q in args.q:
            for f0 in args.f0:
                desc = maximal_descriptor(dt, q, f0)
                f = residue_degree_of_fixed_field(desc)
                for row in maximal_table(desc):
                    parts = ", ".join(fmt_rational(s) for s in row.real_parts)
                    print(f"{dt.value:<11} {q:>2} {f:>2}  {str(row.poly):<14} {fmt_rational(row.r_a):>4} "
                          f"{fmt_rational(row.r_b):>4}  {{{parts}}}")


if __name__ == "__main__":
    main()
