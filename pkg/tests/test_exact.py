import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from supercong.exact import (
    BaseDivisible,
    NonIntegral,
    binomial,
    fermat_quotient,
    harmonic,
    reduce_mod_pk,
    render,
    rising_factorial,
    valuation,
)
from supercong.primes import is_prime, primes_between

PRIMES = [5, 7, 11, 13]


def test_reduce_examples():
    r = reduce_mod_pk(Fraction(1, 3), 7, 2)
    assert (r.residue, r.valuation) == (33, 0)
    assert 3 * 33 % 49 == 1
    z = reduce_mod_pk(0, 7, 2)
    assert z.residue == 0 and z.is_zero and z.valuation_str() == ">=2"
    with pytest.raises(NonIntegral):
        reduce_mod_pk(Fraction(1, 7), 7, 2)


def test_valuation_examples():
    assert valuation(Fraction(49, 3), 7) == 2
    assert valuation(70, 7) == 1
    assert valuation(0, 5) == math.inf
    assert valuation(Fraction(3, 14), 7) == -1


def test_binomial_examples():
    assert binomial(8, 4) == 70
    assert all(binomial(n, 0) == 1 for n in range(10))
    assert binomial(5, 7) == 0
    assert binomial(5, -1) == 0
    assert binomial(-1, 3) == -1
    assert binomial(Fraction(-1, 2), 2) == Fraction(3, 8)


def test_rising_and_harmonic():
    assert rising_factorial(1, 5) == 120
    assert rising_factorial(Fraction(1, 3), 2) == Fraction(4, 9)
    assert rising_factorial(Fraction(5, 7), 0) == 1
    assert harmonic(0) == 0
    assert harmonic(6) == Fraction(49, 20)
    assert harmonic(2, 2) == Fraction(5, 4)


def test_fermat_quotient():
    assert fermat_quotient(2, 7) == 9
    assert fermat_quotient(3, 13) == 40880
    with pytest.raises(BaseDivisible):
        fermat_quotient(7, 7)


def test_render():
    assert render(Fraction(-3, 4)) == "-3/4"


fractions_st = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4)


@given(fractions_st, fractions_st, st.sampled_from(PRIMES), st.integers(1, 3))
def test_reduction_is_a_ring_homomorphism(a, b, p, k):
    if a.denominator % p == 0 or b.denominator % p == 0:
        return
    mod = p**k
    ra, rb = reduce_mod_pk(a, p, k).residue, reduce_mod_pk(b, p, k).residue
    assert reduce_mod_pk(a + b, p, k).residue == (ra + rb) % mod
    assert reduce_mod_pk(a * b, p, k).residue == ra * rb % mod


@given(fractions_st, fractions_st, st.sampled_from(PRIMES))
def test_valuation_is_additive(a, b, p):
    if a and b:
        assert valuation(a * b, p) == valuation(a, p) + valuation(b, p)


@given(st.integers(0, 60), st.integers(-3, 65))
def test_binomial_matches_factorials(n, m):
    expected = math.factorial(n) // (math.factorial(m) * math.factorial(n - m)) if 0 <= m <= n else 0
    assert binomial(n, m) == expected


def test_wolstenholme_oracle():
    # harmonic() against a sum built independently from Fraction
    for p in primes_between(5, 300):
        h = sum(Fraction(1, j) for j in range(1, p))
        assert harmonic(p - 1) == h
        assert reduce_mod_pk(h, p, 2).is_zero


def test_is_prime_matches_sieve():
    sieve = set(primes_between(1, 5000))
    assert all(is_prime(n) == (n in sieve) for n in range(5001))
