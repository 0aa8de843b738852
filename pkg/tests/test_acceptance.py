"""Acceptance criteria, one printed PASS/FAIL line each."""

import random
import time
from fractions import Fraction

import pytest

from supercong.checks import REGISTRY, NotApplicable, run_check
from supercong.gamma_p import (
    GammaArgument,
    check_derivative_formula,
    check_functional_equation,
    check_reflection,
    check_taylor_shift,
)
from supercong.identities import sweep_identities
from supercong.primes import primes_between
from supercong.quadform import represent, represent_bruteforce
from supercong.sequences import check_barrucand, franel, franel_values
from supercong.sweep import SweepConfig, all_check_ids, sweep

THEOREM = {"CHK-THM11A", "CHK-THM11B", "CHK-THM12", "CHK-FP2"}
LEMMA = {"CHK-LEM22", "CHK-P2J-LOW", "CHK-P2J-HIGH", "CHK-MPT"}
GAMMA = {c for c in REGISTRY if c.startswith("CHK-GAMMA")}
SUNH = {c for c in REGISTRY if c.startswith("CHK-SUNH") or c == "CHK-WOLST"}
INTERMEDIATE = set(REGISTRY) - THEOREM - LEMMA - GAMMA - SUNH


@pytest.fixture
def report(capsys):
    def emit(criterion: str, ok: bool, detail: str = "") -> None:
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {criterion}" + (f" -- {detail}" if detail else ""))

    return emit


def _sweep(ids, lo, hi):
    t = time.perf_counter()
    rep = sweep(SweepConfig(tuple(sorted(ids)), lo, hi))
    return rep, time.perf_counter() - t


def _failures(rep):
    return [f"{r.check}@{r.p}: {r.note}" for r in rep.results if not r.passed]


def test_theorem_11(report):
    rep, dt = _sweep({"CHK-THM11A", "CHK-THM11B"}, 7, 1000)
    fails = _failures(rep)
    ok = not fails and dt < 180 and len(rep.results) == 2 * 80
    report("CHK-THM11A/B for p = 1 mod 3, 7 <= p <= 1000 (mod p^2, < 3 min)", ok,
           f"{len(rep.results)} results, {len(fails)} failures, {dt:.1f}s")
    assert ok, fails[:3]


def test_theorem_12(report):
    rep, dt = _sweep({"CHK-THM12"}, 7, 1000)
    fails = _failures(rep)
    ok = not fails and dt < 180 and len(rep.results) == 80
    report("CHK-THM12 for p = 1 mod 3, 7 <= p <= 1000 (mod p^3, < 3 min)", ok, f"{len(fails)} failures, {dt:.1f}s")
    assert ok, fails[:3]


def test_fp2(report):
    rep, dt = _sweep({"CHK-FP2"}, 7, 1000)
    fails = _failures(rep)
    report("CHK-FP2 both sums vs 2x - p/(2x) mod p^2, 7 <= p <= 1000", not fails, f"{len(rep.results)} primes")
    assert not fails, fails[:3]


def test_sunh_battery(report):
    rep, dt = _sweep(SUNH, 7, 500)
    fails = _failures(rep)
    n_primes = len(primes_between(7, 500))
    ok = not fails and len(rep.results) == len(SUNH) * n_primes
    report("CHK-SUNH-* and CHK-WOLST for every prime 7 <= p <= 500", ok,
           f"{len(SUNH)} checks x {n_primes} primes, {len(fails)} failures")
    assert ok, fails[:3]


def test_lemmas(report):
    rep, dt = _sweep(LEMMA, 5, 200)
    fails = _failures(rep)
    report("CHK-LEM22, CHK-P2J-LOW/HIGH, CHK-MPT over full j/t ranges, p <= 200", not fails,
           f"{len(rep.results)} (check, p) pairs")
    assert not fails, fails[:3]


def test_intermediate_chain(report):
    rep, dt = _sweep(INTERMEDIATE, 7, 200)
    fails = _failures(rep)
    p13 = [r for r in rep.results if r.check == "CHK-P13"]
    readings = sorted({part.split(":")[0] for r in rep.results if r.note for part in r.note.split("; ") if "FAIL" in part})
    ok = not fails and p13 and all(r.passed for r in p13)
    report(f"{len(INTERMEDIATE)} intermediate checks, 7 <= p <= 200 (CHK-P13 with C(2k,k) restored)", ok,
           f"{len(rep.results)} pairs, {len(fails)} failures; failing printed readings: {', '.join(readings)}")
    assert ok, fails[:3]


def test_identity_sweep(report):
    t = time.perf_counter()
    rep = sweep_identities()
    dt = time.perf_counter() - t
    d = rep.as_dict()["identities"]
    total = sum(v["pass"] for v in d.values())
    verbatim = {k: v["verbatim_fail"] for k, v in d.items() if "verbatim_fail" in v}
    ok = rep.ok and dt < 60
    report("identity sweep over full grids, zero failures, < 1 min", ok,
           f"{len(d)} identities, {total} cases, {dt:.1f}s; printed-form failures {verbatim}")
    assert ok


def _rational_samples(p: int, count: int, rng: random.Random) -> list[Fraction]:
    out = []
    while len(out) < count:
        q = Fraction(rng.randint(-10**4, 10**4), rng.randint(1, 60))
        if q.denominator % p:
            out.append(q)
    return out


def test_gamma_suite(report):
    rng = random.Random(2024)
    bad = []
    for p in (5, 7, 13, 19):
        for k in (1, 2):
            args = [Fraction(n) for n in range(1, p * p + 1)] + _rational_samples(p, 50, rng)
            for x in args:
                g = GammaArgument(x, p)
                if not check_functional_equation(g, k):
                    bad.append(("func", p, k, x))
                if not check_reflection(g, k):
                    bad.append(("refl", p, k, x))
        for alpha in (Fraction(n) for n in range(1, p + 1)):
            if not check_taylor_shift(GammaArgument(alpha, p), 1):
                bad.append(("taylor-s1", p, alpha))
        for _ in range(100):
            alpha, s = _rational_samples(p, 2, rng)
            if not check_taylor_shift(GammaArgument(alpha, p), s):
                bad.append(("taylor", p, alpha, s))
    report("Gamma_p functional equation, reflection (p in 5,7,13,19; k=1,2) and Taylor shift", not bad,
           f"{len(bad)} failures")
    assert not bad, bad[:3]


def test_gamma_derivative_recorded(report):
    lines = []
    for p in (7, 13, 19, 31):
        held = sum(check_derivative_formula(GammaArgument(a, p)) for a in range(p))
        lines.append(f"p={p}: {held}/{p}")
        r = run_check("CHK-GAMMA-DERIV", p)
        assert r.passed == (held == p)
        assert "reading 'constant Gamma_p'(0)': pass" in r.note
    all_hold = all(line.split(": ")[1].split("/")[0] == line.split("/")[1] for line in lines)
    report("Gamma_p' ratio vs printed closed form 1 + H_{p-<-a>_p-1} on all residues (outcome recorded)", all_hold,
           "holds for " + ", ".join(lines) + "; with constant Gamma_p'(0) it holds everywhere")


def test_oracle_equivalences(report):
    reps = all(represent(p) == represent_bruteforce(p) for p in primes_between(7, 10**5) if p % 3 == 1)
    fr = franel_values(300) == [franel(n) for n in range(301)]
    bar = check_barrucand(100)
    ok = reps and fr and bar
    report("oracles: Cornacchia = brute force (p <= 1e5), recurrence f_n = direct f_n (n <= 300), Barrucand (n <= 100)",
           ok, f"represent {reps}, franel {fr}, barrucand {bar}")
    assert ok


def test_parallel_determinism(report):
    ids = all_check_ids()
    a = sweep(SweepConfig(ids, 7, 300, jobs=1)).to_json()
    b = sweep(SweepConfig(ids, 7, 300, jobs=8)).to_json()
    report("byte-identical JSON for --jobs 1 and --jobs 8 over [7, 300], all checks", a == b, f"{len(a)} bytes")
    assert a == b


def test_not_applicable_never_counted():
    rep = sweep(SweepConfig(("CHK-FP2",), 5, 30))
    s = rep.summary()["CHK-FP2"]
    assert s["pass"] + s["fail"] == len([p for p in primes_between(5, 30) if p % 3 == 1])
    with pytest.raises(NotApplicable):
        run_check("CHK-FP2", 11)
