"""Franel numbers, Barrucand's companion sequence, Bernoulli and Euler numbers.

Bernoulli numbers follow the ``B_1 = -1/2`` convention, i.e. they solve
``sum_{k=0}^{n} C(n+1, k) B_k = 0`` with ``B_0 = 1``. Using the other
convention flips the sign of every ``B_{p-2}(1/3)`` term downstream.

Euler numbers are the integer secant numbers: ``E_0 = 1``, ``E_2 = -1``,
``E_4 = 5``, odd indices vanish.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from .exact import Rational, as_fraction


class SequenceCache:
    """Grow-on-demand tables for the sequences used by the checks.

    Population is idempotent and guarded by a lock, so concurrent readers
    always see the same values they would have computed themselves.
    """

    def __init__(self) -> None:
        self.franel: list[int] = [1, 2]
        self.companion: list[int] = [1, 3]
        self.bernoulli: list[Fraction] = [Fraction(1)]
        self.euler: list[int] = [1]
        self._lock = threading.Lock()

    def franel_upto(self, n: int) -> list[int]:
        if n >= len(self.franel):
            with self._lock:
                f = self.franel
                while len(f) <= n:
                    m = len(f) - 1
                    nxt = (7 * m * m + 7 * m + 2) * f[m] + 8 * m * m * f[m - 1]
                    q, r = divmod(nxt, (m + 1) ** 2)
                    assert r == 0
                    f.append(q)
        return self.franel

    def companion_upto(self, n: int) -> list[int]:
        if n >= len(self.companion):
            with self._lock:
                g = self.companion
                while len(g) <= n:
                    g.append(companion_g(len(g)))
        return self.companion

    def bernoulli_upto(self, n: int) -> list[Fraction]:
        if n >= len(self.bernoulli):
            with self._lock:
                b = self.bernoulli
                while len(b) <= n:
                    m = len(b)
                    if m >= 3 and m % 2:
                        b.append(Fraction(0))
                        continue
                    s = sum(
                        (math.comb(m + 1, k) * b[k] for k in range(m) if b[k]),
                        Fraction(0),
                    )
                    b.append(-s / (m + 1))
        return self.bernoulli

    def euler_upto(self, n: int) -> list[int]:
        if n >= len(self.euler):
            with self._lock:
                e = self.euler
                while len(e) <= n:
                    m = len(e)
                    if m % 2:
                        e.append(0)
                        continue
                    e.append(-sum(math.comb(m, 2 * j) * e[2 * j] for j in range(m // 2)))
        return self.euler


CACHE = SequenceCache()


def franel(n: int) -> int:
    """``f_n = sum_k C(n, k)^3`` by direct summation."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(math.comb(n, k) ** 3 for k in range(n + 1))


def franel_values(n: int) -> list[int]:
    """``[f_0, ..., f_n]`` generated by the three-term recurrence (cached)."""
    return CACHE.franel_upto(n)[: n + 1]


def check_franel_recurrence(N: int) -> bool:
    """Check ``(n+1)^2 f_{n+1} = (7n^2+7n+2) f_n + 8n^2 f_{n-1}`` for ``1 <= n < N``.

    The f values here come from direct summation, independent of the cache.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    f = [franel(n) for n in range(N + 1)]
    return all(
        (n + 1) ** 2 * f[n + 1] == (7 * n * n + 7 * n + 2) * f[n] + 8 * n * n * f[n - 1]
        for n in range(1, N)
    )


def companion_g(n: int) -> int:
    """``g_n = sum_k C(n, k)^2 C(2k, k)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(math.comb(n, k) ** 2 * math.comb(2 * k, k) for k in range(n + 1))


def check_barrucand(N: int) -> bool:
    """Check ``sum_k C(n, k) f_k = g_n`` for all ``0 <= n <= N``."""
    f = [franel(n) for n in range(N + 1)]
    return all(
        sum(math.comb(n, k) * f[k] for k in range(n + 1)) == companion_g(n)
        for n in range(N + 1)
    )


def bernoulli_number(n: int) -> Fraction:
    return CACHE.bernoulli_upto(n)[n]


def bernoulli_poly_at(n: int, x: Rational) -> Fraction:
    """``B_n(x) = sum_k C(n, k) B_k x^(n-k)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    x = as_fraction(x)
    b = CACHE.bernoulli_upto(n)
    return sum((math.comb(n, k) * b[k] * x ** (n - k) for k in range(n + 1)), Fraction(0))


def euler_number(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    if n % 2:
        return 0
    return CACHE.euler_upto(n)[n]


def legendre_p_over_3(p: int) -> int:
    """Legendre symbol ``(p/3)`` for a prime ``p > 3``."""
    if p % 3 == 0:
        raise ValueError(f"(p/3) undefined for p = {p}")
    return 1 if p % 3 == 1 else -1
