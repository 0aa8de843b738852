"""Sweep every registered check over a prime range and write JSON and CSV reports.

    python3 scripts/run_sweep.py --lo 7 --hi 300 --jobs 4 --outdir results
"""

import argparse
from pathlib import Path

from supercong.sweep import SweepConfig, all_check_ids, sweep


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--lo", type=int, default=7)
    ap.add_argument("--hi", type=int, default=200)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--outdir", default="results")
    args = ap.parse_args()

    report = sweep(SweepConfig(all_check_ids(), args.lo, args.hi, args.jobs))
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    stem = f"sweep_{args.lo}_{args.hi}"
    (out / f"{stem}.json").write_text(report.to_json())
    (out / f"{stem}.csv").write_text(report.to_csv())
    print(report.to_table(), end="")
    return 0 if report.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
