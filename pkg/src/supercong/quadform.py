"""Representation of primes ``p = 1 (mod 3)`` as ``x^2 + 3 y^2`` with ``x = 1 (mod 3)``."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt


class NotRepresentable(ValueError):
    """``p`` has no representation ``x^2 + 3y^2`` (``p = 2 mod 3``)."""


@dataclass(frozen=True)
class PrimeRepresentation:
    p: int
    x: int
    y: int

    def __post_init__(self) -> None:
        assert self.x * self.x + 3 * self.y * self.y == self.p
        assert self.x % 3 == 1 and self.y > 0

    def flipped(self) -> "PrimeRepresentation":
        """The same pair with the sign of ``x`` reversed (breaks ``x = 1 mod 3``).

        Only useful for probing that a check actually depends on the sign.
        """
        obj = object.__new__(PrimeRepresentation)
        object.__setattr__(obj, "p", self.p)
        object.__setattr__(obj, "x", -self.x)
        object.__setattr__(obj, "y", self.y)
        return obj


def sqrt_mod_prime(a: int, p: int) -> int:
    """Tonelli-Shanks square root of a quadratic residue ``a`` modulo an odd prime."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise ValueError(f"{a} is not a square modulo {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _normalize(p: int, x: int, y: int) -> PrimeRepresentation:
    # 3 | x would force 3 | p, so exactly one sign of x is 1 mod 3.
    assert x % 3 != 0
    if x % 3 != 1:
        x = -x
    return PrimeRepresentation(p, x, abs(y))


def _check_input(p: int) -> None:
    if p <= 3:
        raise ValueError(f"need a prime p > 3, got {p}")
    if p % 3 != 1:
        raise NotRepresentable(f"{p} = 2 (mod 3) is not of the form x^2 + 3y^2")


def represent(p: int) -> PrimeRepresentation:
    """Cornacchia descent on a square root of -3 modulo ``p``."""
    _check_input(p)
    r = sqrt_mod_prime(-3, p)
    if r < p - r:
        r = p - r
    a, b = p, r
    bound = isqrt(p)
    while b > bound:
        a, b = b, a % b
    rest = p - b * b
    if rest % 3:
        raise NotRepresentable(f"Cornacchia descent failed for {p}")
    y = isqrt(rest // 3)
    if 3 * y * y != rest:
        raise NotRepresentable(f"Cornacchia descent failed for {p}")
    return _normalize(p, b, y)


def represent_bruteforce(p: int) -> PrimeRepresentation:
    """Exhaustive scan over ``|x| <= sqrt(p)``; asserts the pair is unique."""
    _check_input(p)
    found = []
    for x in range(1, isqrt(p) + 1):
        rest = p - x * x
        if rest > 0 and rest % 3 == 0:
            y = isqrt(rest // 3)
            if 3 * y * y == rest:
                found.append((x, y))
    if not found:
        raise NotRepresentable(f"no representation found for {p}")
    assert len(found) == 1, f"non-unique representation for {p}: {found}"
    return _normalize(p, *found[0])
