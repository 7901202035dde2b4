"""Run every correspondence sweep and print one summary line per check.

    python scripts/run_sweeps.py --max-ab 5 --dmax 4 --jobs 4
"""

import argparse
import time

from looijenga import checks


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-ab", type=int, default=5)
    p.add_argument("--dmax", type=int, default=4)
    p.add_argument("--open-dmax", type=int, default=3)
    p.add_argument("--all-orders", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    args = p.parse_args()
    cfg = checks.SweepConfig(ab_max=args.max_ab, dmax=args.dmax, all_orders=args.all_orders, jobs=args.jobs)
    runs = {name: (lambda name=name: checks.run_sweep(name, cfg)) for name in checks.CHECKS}
    runs["oracle-equivalence"] = lambda: checks.run_oracle_equivalence(cfg, args.open_dmax)
    runs["table1"] = checks.run_table1
    runs["kp-sequence"] = checks.run_kp_sequence
    runs["quiver-dt"] = lambda: checks.run_loop_quiver() + sum((checks.run_conifold_dt(b) for b in range(1, 5)), [])
    failed = 0
    for name, run in runs.items():
        t = time.perf_counter()
        results = run()
        bad = [r for r in results if not r.ok]
        failed += len(bad)
        print(f"{name:20s} {checks.summarize(results):30s} {time.perf_counter() - t:6.1f} s")
        for r in bad[:10]:
            print("   ", r.line())
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
