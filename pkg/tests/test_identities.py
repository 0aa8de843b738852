from fractions import Fraction

import pytest

from supercong.identities import (
    REGISTRY,
    ParamOutOfRange,
    PoleSample,
    UnknownIdentity,
    sample_points,
    sweep_identities,
    verify_identity,
    verify_rational_function_identity,
)


@pytest.mark.parametrize(
    "identity_id, params, value",
    [
        ("ID-SIGMA-A", (5, 1), 222),
        ("ID-HENG", (1,), 2),
        ("ID-21", (2, 1), 10),
        ("ID-INVBINOM", (1,), Fraction(1, 2)),
        ("ID-KX", (0, 5), Fraction(1, 5)),
        ("ID-CYID", (2, 3), Fraction(1, 20)),
    ],
)
def test_examples(identity_id, params, value):
    case = verify_identity(identity_id, params)
    assert case.passed and case.lhs == case.rhs == value


def test_rational_function_certificates():
    assert verify_rational_function_identity("ID-KX", 3, samples=[Fraction(1, 2), 2, Fraction(5, 3), 7, Fraction(-1, 5)])
    assert verify_rational_function_identity("ID-CYID", 6)
    with pytest.raises(PoleSample):
        verify_rational_function_identity("ID-KX", 3, samples=[-2, 1, 2, 3, 4])
    with pytest.raises(ValueError):
        verify_rational_function_identity("ID-KX", 5, sample_count=3)


def test_sample_points_are_seeded(monkeypatch):
    monkeypatch.setenv("VERIFIER_SEED", "17")
    a = sample_points(10, set())
    b = sample_points(10, set())
    assert a == b and len(set(a)) == 10
    assert sample_points(10, set(), seed=18) != a


def test_bad_parameters():
    with pytest.raises(UnknownIdentity):
        verify_identity("ID-NOPE", (1,))
    with pytest.raises(ParamOutOfRange):
        verify_identity("ID-HENG", (-1,))
    with pytest.raises(ParamOutOfRange):
        verify_identity("ID-FRANEL-REC", (0,))


def test_small_sweep_and_vacuous_sweep():
    assert sweep_identities(10).ok
    empty = sweep_identities(0)
    assert empty.ok and all(s.passed == 0 for s in empty.summaries.values())


def test_printed_r6k_reading_is_recorded():
    case = verify_identity("ID-R6K", (3,))
    assert case.passed and case.verbatim_passed is False
    assert verify_identity("ID-R6K", (1,)).verbatim_passed is True


def test_zhuid_has_three_equal_sides():
    case = verify_identity("ID-ZHUID", (7,))
    assert len(case.extra) == 1 and case.passed
    assert case.extra[0] == case.lhs


def test_registry_ids():
    assert len(REGISTRY) == 18
