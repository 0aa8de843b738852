"""Exact rational arithmetic and reduction modulo prime powers.

Every quantity in the package is carried as a :class:`fractions.Fraction`
and only reduced modulo ``p**k`` at the very end, so no truncated p-adic
precision is ever tracked by hand.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

ExactRational = Fraction
Rational = Union[int, Fraction]


class NonIntegral(ValueError):
    """The value has a negative p-adic valuation, so it is not in Z_p."""


class BaseDivisible(ValueError):
    """The base of a Fermat quotient is divisible by the prime."""


@dataclass(frozen=True)
class PadicResidue:
    """A p-integral value reduced modulo ``p**k``.

    ``valuation`` is clamped to ``k``; a clamped value reads as "at least k"
    because reduction cannot tell 0 apart from ``p**k`` times a unit.
    """

    p: int
    k: int
    valuation: int
    residue: int

    @property
    def modulus(self) -> int:
        return self.p**self.k

    @property
    def is_unit(self) -> bool:
        return self.valuation == 0

    @property
    def is_zero(self) -> bool:
        return self.valuation >= self.k

    def valuation_str(self) -> str:
        return f">={self.k}" if self.is_zero else str(self.valuation)

    def __str__(self) -> str:
        return f"{self.residue} (mod {self.p}^{self.k}, v={self.valuation_str()})"


def as_fraction(q: Rational) -> Fraction:
    return q if isinstance(q, Fraction) else Fraction(q)


def render(q: Rational) -> str:
    """Canonical ``num/den`` string used in diagnostics."""
    q = as_fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(q: Rational, p: int) -> int | float:
    """p-adic valuation of ``q``; ``math.inf`` for zero."""
    q = as_fraction(q)
    if q == 0:
        return math.inf
    return _int_valuation(q.numerator, p) - _int_valuation(q.denominator, p)


def reduce_mod_pk(q: Rational, p: int, k: int) -> PadicResidue:
    """Reduce a p-integral rational modulo ``p**k``.

    Raises :class:`NonIntegral` when ``p`` divides the reduced denominator.
    """
    if k < 1:
        raise ValueError(f"precision exponent must be >= 1, got {k}")
    q = as_fraction(q)
    if q.denominator % p == 0:
        raise NonIntegral(f"{render(q)} is not a {p}-adic integer")
    mod = p**k
    residue = q.numerator * pow(q.denominator, -1, mod) % mod
    v = k if residue == 0 else min(_int_valuation(residue, p), k)
    return PadicResidue(p=p, k=k, valuation=v, residue=residue)


def residue(q: Rational, p: int, k: int) -> int:
    """Shorthand for ``reduce_mod_pk(q, p, k).residue``."""
    return reduce_mod_pk(q, p, k).residue


def binomial(n: Rational, m: int) -> Rational:
    """Binomial coefficient with a possibly negative or rational top.

    Integer tops return an ``int``; ``C(n, m) = 0`` for ``m < 0`` and for
    ``m > n >= 0``. Negative integer and non-integer tops use the falling
    factorial ``n (n-1) ... (n-m+1) / m!``.
    """
    if m < 0:
        return 0
    if isinstance(n, int) or (isinstance(n, Fraction) and n.denominator == 1):
        n = int(n)
        if n >= 0:
            return math.comb(n, m) if m <= n else 0
        return (-1) ** m * math.comb(m - n - 1, m)
    num = Fraction(1)
    for i in range(m):
        num *= n - i
    return num / math.factorial(m)


def rising_factorial(a: Rational, n: int) -> Fraction:
    """Pochhammer symbol ``(a)_n = a (a+1) ... (a+n-1)``; ``(a)_0 = 1``."""
    if n < 0:
        raise ValueError("rising factorial needs n >= 0")
    a = as_fraction(a)
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


class _HarmonicTable:
    """Prefix sums of ``1/j**order`` that grow on demand."""

    def __init__(self, order: int) -> None:
        self.order = order
        self._values = [Fraction(0)]
        self._lock = threading.Lock()

    def get(self, n: int) -> Fraction:
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            values = self._values
            while len(values) <= n:
                j = len(values)
                values.append(values[-1] + Fraction(1, j**self.order))
            return values[n]


_HARMONIC = {1: _HarmonicTable(1), 2: _HarmonicTable(2)}


def harmonic(n: int, order: int = 1) -> Fraction:
    """``H_n^{(order)} = sum_{j=1}^n 1/j**order``, with ``H_0 = 0``."""
    if n < 0:
        raise ValueError("harmonic number index must be >= 0")
    table = _HARMONIC.get(order)
    if table is None:
        return sum((Fraction(1, j**order) for j in range(1, n + 1)), Fraction(0))
    return table.get(n)


def fermat_quotient(a: int, p: int) -> Fraction:
    """``q_p(a) = (a^(p-1) - 1) / p`` as an exact integer-valued Fraction."""
    if a % p == 0:
        raise BaseDivisible(f"{a} is divisible by {p}")
    num = a ** (p - 1) - 1
    assert num % p == 0
    return Fraction(num // p)
