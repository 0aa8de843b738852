"""Run checks over a prime range, optionally across worker processes."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from .checks import CheckResult, NotApplicable, get_check, list_checks, run_check
from .primes import primes_between

CSV_FIELDS = ("check", "p", "x", "y", "lhs", "rhs", "modulus", "pass", "note")


@dataclass(frozen=True)
class SweepConfig:
    checks: tuple[str, ...]
    lo: int
    hi: int
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty prime range {self.lo}..{self.hi}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        for c in self.checks:
            get_check(c)


@dataclass
class SweepReport:
    lo: int
    hi: int
    results: list[CheckResult] = field(default_factory=list)
    skipped: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def summary(self) -> dict[str, dict[str, int]]:
        out = {c: {"pass": 0, "fail": 0, "skipped": n} for c, n in self.skipped.items()}
        for r in self.results:
            out.setdefault(r.check, {"pass": 0, "fail": 0, "skipped": 0})
            out[r.check]["pass" if r.passed else "fail"] += 1
        return dict(sorted(out.items()))

    def as_dict(self) -> dict:
        return {
            "version": __version__,
            "range": {"lo": str(self.lo), "hi": str(self.hi)},
            "results": [r.as_dict() for r in self.results],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in self.results:
            w.writerow({k: ("" if v is None else v) for k, v in r.as_dict().items()})
        return buf.getvalue()

    def to_table(self) -> str:
        lines = [f"{'check':<20} {'pass':>6} {'fail':>6} {'skipped':>8}"]
        for c, s in self.summary().items():
            lines.append(f"{c:<20} {s['pass']:>6} {s['fail']:>6} {s['skipped']:>8}")
        for r in self.results:
            if not r.passed:
                lines.append(f"FAIL {r.check} p={r.p} lhs={r.lhs} rhs={r.rhs} mod {r.modulus}: {r.note}")
        return "\n".join(lines) + "\n"


def _run_prime(checks: tuple[str, ...], p: int) -> tuple[list[CheckResult], list[str]]:
    results, skipped = [], []
    for c in checks:
        try:
            results.append(run_check(c, p))
        except NotApplicable:
            skipped.append(c)
    return results, skipped


def sweep(config: SweepConfig) -> SweepReport:
    """Evaluate every (check, prime) pair; the report does not depend on ``jobs``."""
    primes = primes_between(config.lo, config.hi)
    checks = tuple(sorted(set(config.checks)))
    if config.jobs == 1:
        outputs = [_run_prime(checks, p) for p in primes]
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            outputs = list(pool.map(_run_prime, [checks] * len(primes), primes))
    report = SweepReport(config.lo, config.hi, skipped={c: 0 for c in checks})
    for results, skipped in outputs:
        report.results.extend(results)
        for c in skipped:
            report.skipped[c] += 1
    report.results.sort(key=lambda r: (r.check, r.p))
    return report


def all_check_ids() -> tuple[str, ...]:
    return tuple(d.check_id for d in list_checks())
