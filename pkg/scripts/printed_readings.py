"""List every place where the as-printed statement differs from the checked reading.

For each check carrying an alternative reading, count the primes at which the
printed form fails; identities with a printed variant are counted over their grid.
"""

import argparse
from collections import Counter

from supercong.checks import NotApplicable, list_checks, run_check
from supercong.identities import sweep_identities
from supercong.primes import primes_between


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--hi", type=int, default=200)
    args = ap.parse_args()

    primes = primes_between(7, args.hi)
    for d in list_checks():
        counts: Counter = Counter()
        applicable = 0
        for p in primes:
            try:
                r = run_check(d.check_id, p)
            except NotApplicable:
                continue
            applicable += 1
            for part in (r.note or "").split("; "):
                if part.startswith("reading"):
                    name, _, outcome = part.partition(": ")
                    counts[(name, outcome.startswith("FAIL"))] += 1
        for (name, failed), n in sorted(counts.items()):
            if failed:
                print(f"{d.check_id:<18} {name:<42} fails at {n}/{applicable} primes")

    rep = sweep_identities().as_dict()["identities"]
    for ident, s in rep.items():
        if "verbatim_fail" in s:
            print(f"{ident:<18} printed form{'':<31} fails at {s['verbatim_fail']} grid points "
                  f"(first {s['first_verbatim_failure']})")


if __name__ == "__main__":
    main()
