from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from supercong.exact import NonIntegral
from supercong.gamma_p import (
    GammaArgument,
    check_derivative_formula,
    check_functional_equation,
    check_reflection,
    check_taylor_shift,
    derivative_ratio_formula,
    gamma_p,
    gamma_p_derivative,
    gamma_p_derivative_ratio,
    gamma_p_int,
    gamma_p_log_derivative_at_zero,
)


def _direct(n, p, k):
    prod = 1
    for j in range(1, n):
        if j % p:
            prod *= j
    return (-1) ** n * prod % p**k


def test_gamma_int_examples():
    assert gamma_p_int(1, 7, 2).residue == 48
    assert gamma_p_int(0, 7, 2).residue == 1
    assert gamma_p_int(5, 5, 2).residue == 1


def test_gamma_lift():
    assert gamma_p(GammaArgument(Fraction(1, 3), 7), 1) == gamma_p_int(5, 7, 1)
    assert gamma_p(GammaArgument(40, 7), 2) == gamma_p_int(40, 7, 2)
    with pytest.raises(NonIntegral):
        GammaArgument(Fraction(1, 7), 7)


@pytest.mark.parametrize("p", [5, 7, 13])
@pytest.mark.parametrize("k", [1, 2])
def test_constant_on_residue_classes(p, k):
    mod = p**k
    for n in range(2 * p * p + 1):
        assert gamma_p_int(n, p, k).residue == _direct(n, p, k)
        if n + mod <= 2 * p * p:
            assert gamma_p_int(n, p, k) == gamma_p_int(n + mod, p, k)


def test_functional_equation_examples():
    assert check_functional_equation(GammaArgument(3, 7), 2)
    assert check_functional_equation(GammaArgument(7, 7), 1)
    assert check_functional_equation(GammaArgument(Fraction(1, 3), 7), 2)


def test_reflection_examples():
    assert check_reflection(GammaArgument(1, 7), 2)
    assert GammaArgument(Fraction(1, 2), 7).a0 == 4
    assert check_reflection(GammaArgument(Fraction(1, 2), 7), 1)
    assert check_reflection(GammaArgument(2, 5), 1)


def test_taylor_examples():
    for p in (5, 7, 13):
        assert check_taylor_shift(GammaArgument(1, p), 0)
    assert check_taylor_shift(GammaArgument(1, 7), 1)
    assert check_taylor_shift(GammaArgument(Fraction(1, 3), 13), 2)


def test_derivative_at_zero_is_minus_wilson_quotient():
    import math

    for p in (5, 7, 13, 19, 31):
        wilson = (math.factorial(p - 1) + 1) // p
        assert gamma_p_log_derivative_at_zero(p) == -wilson % p


def test_derivative_examples():
    # the printed constant 1 does not match the finite difference; Gamma_p'(0) does
    a = GammaArgument(1, 7)
    assert derivative_ratio_formula(a).residue == 1
    assert gamma_p_derivative_ratio(a).residue == gamma_p_log_derivative_at_zero(7)
    zero = GammaArgument(0, 7)
    assert derivative_ratio_formula(zero).residue == 1  # H_{p-1} = 0 mod p
    third = GammaArgument(Fraction(1, 3), 13)
    assert GammaArgument(Fraction(-1, 3), 13).residue(13) == 4
    assert not check_derivative_formula(third)
    assert check_derivative_formula(third, gamma_p_log_derivative_at_zero(13))


rationals = st.builds(
    Fraction, st.integers(-400, 400), st.sampled_from([1, 2, 3, 4, 5, 6, 8, 9, 10, 12])
)


@given(rationals, st.sampled_from([7, 11, 13, 19]), st.sampled_from([1, 2]))
def test_reflection_and_functional_equation(x, p, k):
    if x.denominator % p == 0:
        return
    arg = GammaArgument(x, p)
    assert check_reflection(arg, k)
    assert check_functional_equation(arg, k)


@given(rationals, rationals, st.sampled_from([7, 11, 13]))
def test_taylor_shift_property(alpha, s, p):
    if alpha.denominator % p == 0 or s.denominator % p == 0:
        return
    assert check_taylor_shift(GammaArgument(alpha, p), s)


def test_derivative_is_finite_difference():
    p = 11
    for n in range(1, 30):
        d = gamma_p_derivative(GammaArgument(n, p))
        assert (gamma_p_int(n + p, p, 2).residue - gamma_p_int(n, p, 2).residue) % (p * p) == d * p % (p * p)
