from fractions import Fraction

import pytest

from supercong import checks
from supercong.checks import (
    REGISTRY,
    CheckDefinition,
    Comparison,
    NotApplicable,
    UnknownCheck,
    list_checks,
    run_check,
)
from supercong.identities import REGISTRY as IDENTITIES
from supercong.primes import primes_between
from supercong.quadform import represent
from supercong.sequences import franel

# Every in-scope source item, keyed by anchor; each must map to exactly one ID.
SOURCE_ITEMS = (
    "Franel recurrence", "Barrucand", "2x - p/(2x) mod p^2", "weighted sum (2^k)", "weighted sum ((-4)^k)", "2^k vs (-4)^k mod p^3",
    "(Gammap)", "(Gammap1xx)", "(Gammap2)", "(Gammap')", "cubic binomial sum in z", "f_n via (-4)^(n-k)", "C(3j,j)C(p+j,3j+1)",
    "sunh: H2(p-1)", "sunh: H2((p-1)/2)", "sunh: H(p-1)", "sunh: H2(p/6), H2(p/3)", "sunh: H(p/6)",
    "sunh: H(p/3)", "sunh: H((p-1)/2)", "sunh: H(2p/3)", "sunh: H2(p/4)",
    "(kx)", "Sigma (3k+4)", "Sigma (3k+2)", "C((p-1)/2+pt,(p-1)/3)", "(p2j) j <= (p-1)/2", "(p2j) j >= (p+1)/2",
    "(main1)", "(equ)", "(s1)", "(s1p2)", "(s2)", "(4p)", "(2p)", "(3k2fk)", "(3k4f)", "(main2)", "(3j13j2)",
    "S3 evaluation", "S3: C(-1/2,(2p-2)/3)",
    "Sigma C(k+j,3j)", "(zmain1)", "(main)", "(2p3p-11p-12)", "(zhuyao)", "(zhuid)", "(-1/31)", "(-1/3-1/2)",
    "(2k-1k)", "(2k-1k) combined with (p-13)", "(cyid)", "(p-132k-1)", "inverse-binomial", "(p-32)",
    "sum 1/(k(6k-1))", "sum 1/(k(2k-1))", "harmonic shift", "1/(k(6k-1)) shift", "1/(k(2k-1)) shift",
    "(p-121312)", "(diyige)", "(3j-1)", "(3j-1) mod p", "(easy)", "(important)", "(important) at n=(p+5)/6",
    "(p-133j-1)", "(p+2/3)", "(p-13)", "(heng)", "(heng) at n=(p-1)/3", "(zhup3)", "S5",
    "(p-7)/6 partial sum", "C(-5/6,k) sum",
    "C(p+(2p-2)/3) expansion", "C(p+(p-1)/3) expansion", "binomial difference", "2p(H difference)",
    "C(2k,k) = 0 mod p", "jC(2j,j)C(2p-2j,p-j)", "H2 reflection", "C(2k,k)/(-4)^k",
)


def _anchors():
    return [d.anchor for d in REGISTRY.values()] + [d.anchor for d in IDENTITIES.values()]


def test_registry_completeness():
    anchors = _anchors()
    for item in SOURCE_ITEMS:
        assert anchors.count(item) == 1, item
    assert sorted(anchors) == sorted(SOURCE_ITEMS)


def test_list_checks():
    ids = [d.check_id for d in list_checks()]
    assert "CHK-THM11A" in ids and "CHK-FP2" in ids
    assert len(ids) >= 30 and ids == sorted(ids)


def test_fp2_at_7_against_modular_oracle():
    mod = 49
    inv2 = pow(2, -1, mod)
    lhs = sum(franel(k) * pow(inv2, k, mod) for k in range(7)) % mod
    x = -2
    rhs = (2 * x - 7 * pow(2 * x, -1, mod)) % mod
    r = run_check("CHK-FP2", 7)
    assert lhs == rhs == r.lhs == r.rhs == 10
    assert r.passed and (r.x, r.y, r.modulus) == (-2, 1, 49)


def test_thm11a_at_7():
    r = run_check("CHK-THM11A", 7)
    assert r.rhs == 41 and r.passed


def test_not_applicable_and_unknown():
    with pytest.raises(NotApplicable):
        run_check("CHK-FP2", 5)
    with pytest.raises(NotApplicable):
        run_check("CHK-SUNH-H6", 5)
    with pytest.raises(UnknownCheck):
        run_check("CHK-NOPE", 7)


def test_x_independent_checks_omit_x():
    r = run_check("CHK-THM12", 13)
    assert r.x is None and r.y is None


X_CHECKS = sorted(c for c, d in REGISTRY.items() if d.uses_x)


@pytest.mark.parametrize("check_id", X_CHECKS)
def test_sign_flip_breaks_x_checks(check_id):
    primes = [p for p in primes_between(7, 100) if p % 3 == 1]
    outcomes = [run_check(check_id, p, represent(p).flipped()).passed for p in primes]
    assert not all(outcomes)


def test_non_integral_is_a_failure(monkeypatch):
    probe = CheckDefinition(
        "CHK-PROBE", "probe", "", 1, lambda p: True, "any", lambda d: [Comparison("1/p", Fraction(1, d.p), Fraction(0))]
    )
    monkeypatch.setitem(checks.REGISTRY, "CHK-PROBE", probe)
    r = run_check("CHK-PROBE", 7)
    assert not r.passed and r.lhs is None and "not p-integral" in r.note


def test_first_failing_index_is_reported(monkeypatch):
    def evaluate(d):
        return [Comparison(f"j={j}", Fraction(j), Fraction(0 if j == 3 else j)) for j in range(6)]

    monkeypatch.setitem(checks.REGISTRY, "CHK-PROBE", CheckDefinition("CHK-PROBE", "probe", "", 1, lambda p: True, "any", evaluate))
    r = run_check("CHK-PROBE", 7)
    assert not r.passed and r.note == "first failure at j=3" and (r.lhs, r.rhs) == (3, 0)


def test_readings_are_reported_not_scored():
    r = run_check("CHK-P13", 13)
    assert r.passed
    assert "reading 'verbatim 4^k/(2k-1)': FAIL" in r.note
    r = run_check("CHK-H2SYM", 13)
    assert r.passed and "reading 'verbatim +H2_k': FAIL" in r.note


def test_gamma_derivative_is_checked_verbatim():
    r = run_check("CHK-GAMMA-DERIV", 7)
    assert not r.passed
    assert "reading 'constant Gamma_p'(0)': pass" in r.note


def test_residues_are_canonical():
    for cid in ("CHK-FP2", "CHK-THM12", "CHK-LEM22", "CHK-S5"):
        for p in (7, 13, 19, 31):
            r = run_check(cid, p)
            assert 0 <= r.lhs < r.modulus and 0 <= r.rhs < r.modulus
            assert r.passed == (r.lhs == r.rhs)
