#!/usr/bin/env python3
"""Desk-scale benchmark sweep: exact families and Cartesian products.

Runs 30 randomized repetitions per instance, compares the median against the
closed-form optimum (exact families) or published upper bound (products),
and writes one CSV per sweep.

    python scripts/family_tables.py --out-dir results [--sizes 8,64,128]
"""

import argparse
import os
import sys

from cbsum.bench import run_instance
from cbsum.generate import parse_spec
from cbsum.graphio import write_csv_stats

EXACT_SPECS = [
    "family=path n={n}",
    "family=cycle n={n}",
    "family=wheel n={n}",
    "family=pgc n={n} k=2",
    "family=cbg n1={half} n2={half}",
    "family=cbg n1={quarter} n2={threequarter}",
]

PRODUCT_SPECS = [
    "family=pk m={m} n={k}",
    "family=ck m={m} n={k}",
    "family=pc m={m} n={k}",
    "family=pp m={m} n={k}",
    "family=cc m={m} n={k}",
    "family=kk m={m} n={k}",
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="results")
    parser.add_argument("--sizes", default="8,16,32,64",
                        help="comma-separated total sizes for the exact families")
    parser.add_argument("--product-sizes", default="5,10",
                        help="factor sizes for the product families")
    parser.add_argument("--reps", type=int, default=30)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    args = parser.parse_args()

    os.makedirs(args.out_dir, exist_ok=True)
    sizes = [int(s) for s in args.sizes.split(",")]
    rows = []
    for n in sizes:
        for template in EXACT_SPECS:
            spec_text = template.format(
                n=n, half=n // 2, quarter=n // 4, threequarter=3 * (n // 4)
            )
            try:
                spec = parse_spec(spec_text, default_seed=args.seed)
                graph = spec.build()
            except Exception as exc:  # family minimums
                print(f"skip {spec_text}: {exc}", file=sys.stderr)
                continue
            kind, ref = spec.reference_value()
            stats = run_instance(
                graph, args.reps, args.seed,
                instance=spec.name(), ref=ref, ref_kind=kind, jobs=args.jobs,
            )
            rows.append(stats)
            print(f"{spec.name()}: median={stats.median_cbs} ref={ref} rd={stats.rd:+.2f}")
    write_csv_stats(os.path.join(args.out_dir, "exact_families.csv"), rows)

    sizes = [int(s) for s in args.product_sizes.split(",")]
    rows = []
    for m in sizes:
        for k in sizes:
            for template in PRODUCT_SPECS:
                spec_text = template.format(m=m, k=k)
                spec = parse_spec(spec_text, default_seed=args.seed)
                try:
                    graph = spec.build()
                    kind, ref = spec.reference_value()
                except Exception as exc:  # m >= n constraints
                    print(f"skip {spec_text}: {exc}", file=sys.stderr)
                    continue
                stats = run_instance(
                    graph, args.reps, args.seed,
                    instance=spec.name(), ref=ref, ref_kind=kind, jobs=args.jobs,
                )
                rows.append(stats)
                print(f"{spec.name()}: median={stats.median_cbs} ub={ref} rd={stats.rd:+.2f}")
    write_csv_stats(os.path.join(args.out_dir, "cartesian_products.csv"), rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
