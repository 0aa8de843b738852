"""Exact verification of the finite combinatorial identities behind the congruences.

Each registered identity evaluates both sides by direct summation in exact
rationals and compares them with ``==``; nothing is reduced modulo a prime.
Identities with a free continuous variable (``x`` in ID-KX, ``z`` in ID-21,
``k`` in ID-CYID) are additionally certified as rational-function identities
by agreeing at more sample points than their degree bound.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .exact import as_fraction, binomial, harmonic, rising_factorial
from .sequences import companion_g, franel


class UnknownIdentity(KeyError):
    pass


class ParamOutOfRange(ValueError):
    pass


class PoleSample(ValueError):
    """A sample point hit a pole of one side of a rational-function identity."""


@dataclass(frozen=True)
class IdentityCase:
    identity_id: str
    parameters: tuple
    lhs: Fraction
    rhs: Fraction
    passed: bool
    # ID-ZHUID compares three expressions; the middle ones land here.
    extra: tuple = ()
    # Outcome of the as-printed form when it differs from the checked one.
    verbatim_passed: bool | None = None


@dataclass(frozen=True)
class IdentityDefinition:
    identity_id: str
    anchor: str
    param_names: tuple[str, ...]
    sides: Callable[..., Sequence[Fraction]]
    grid: Callable[[int], Iterable[tuple]]
    limit: int
    variable: str | None = None
    poles: Callable[[int], set] | None = None
    description: str = ""
    # As-printed sides, kept when the printed display carries a misprint.
    verbatim: Callable[..., Sequence[Fraction]] | None = None


def _sum(terms: Iterable) -> Fraction:
    return sum(terms, Fraction(0))


def _t2k(n: int) -> Fraction:
    """``sum_{k=1}^n 4^k / (k^2 C(2k,k))``."""
    return _sum(Fraction(4**k, k * k * binomial(2 * k, k)) for k in range(1, n + 1))


# -- identity bodies -------------------------------------------------------


def _id21(n: int, z) -> tuple[Fraction, Fraction]:
    z = as_fraction(z)
    lhs = _sum(binomial(n, k) ** 3 * z**k for k in range(n + 1))
    rhs = _sum(
        binomial(n + k, 3 * k) * binomial(2 * k, k) * binomial(3 * k, k) * z**k * (1 + z) ** (n - 2 * k)
        for k in range(n // 2 + 1)
    )
    return lhs, rhs


def _id22(n: int):
    rhs = _sum(
        binomial(n + 2 * k, 3 * k) * binomial(2 * k, k) * binomial(3 * k, k) * Fraction(-4) ** (n - k)
        for k in range(n + 1)
    )
    return Fraction(franel(n)), rhs


def _barrucand(n: int):
    return _sum(binomial(n, k) * franel(k) for k in range(n + 1)), Fraction(companion_g(n))


def _franel_rec(n: int):
    f0, f1, f2 = franel(n - 1), franel(n), franel(n + 1)
    return Fraction((n + 1) ** 2 * f2), Fraction((7 * n * n + 7 * n + 2) * f1 + 8 * n * n * f0)


def _kx(n: int, x):
    x = as_fraction(x)
    lhs = _sum(binomial(n, k) * Fraction((-1) ** k) / (k + x) for k in range(n + 1))
    rhs = rising_factorial(1, n) / (rising_factorial(x, n + 1))
    return lhs, rhs


def _sigma_a(n: int, j: int):
    lhs = _sum((3 * k + 4) * binomial(k + j, 3 * j) for k in range(2 * j, n))
    rhs = Fraction(9 * n * j + 3 * n + 9 * j + 5, 3 * j + 2) * binomial(n + j, 3 * j + 1)
    return lhs, rhs


def _sigma_b(n: int, j: int):
    lhs = _sum((3 * k + 2) * binomial(k + 2 * j, 3 * j) for k in range(j, n))
    rhs = Fraction(9 * n * j + 3 * n + 1, 3 * j + 2) * binomial(n + 2 * j, 3 * j + 1)
    return lhs, rhs


def _sigma_c(n: int, j: int):
    lhs = _sum(binomial(k + j, 3 * j) for k in range(2 * j, n))
    return lhs, Fraction(binomial(n + j, 3 * j + 1))


def _cyid(n: int, k):
    k = as_fraction(k)
    # 1 / C(n+1+k, k) as a rational function of k
    lhs = rising_factorial(1, n + 1) / rising_factorial(k + 1, n + 1)
    rhs = (n + 1) * _sum(binomial(n, r) * Fraction((-1) ** r) / (k + r + 1) for r in range(n + 1))
    return lhs, rhs


def _zhuid(n: int):
    first = _sum(
        2 * binomial(n, j) * Fraction((-1) ** j) * (harmonic(2 * j) - harmonic(j)) / (3 * j + 1)
        for j in range(n + 1)
    )

    def prod(k: int, f) -> Fraction:
        out = Fraction(1)
        for j in range(1, k + 1):
            out *= f(j)
        return out

    second = Fraction(1, 3 * n + 1) * prod(n, lambda k: Fraction(3 * k, 3 * k - 2)) * (
        _sum(Fraction(1, k) * prod(k, lambda j: Fraction(3 * j - 2, 3 * j)) for k in range(1, n + 1))
        - _sum(
            Fraction(1, k) * prod(k, lambda j: Fraction(2 * (3 * j - 2), 3 * (2 * j - 1)))
            for k in range(1, n + 1)
        )
    )
    third = rising_factorial(1, n) / ((3 * n + 1) * rising_factorial(Fraction(1, 3), n)) * (
        _sum(rising_factorial(Fraction(1, 3), k) / (k * rising_factorial(1, k)) for k in range(1, n + 1))
        - _sum(
            rising_factorial(Fraction(1, 3), k) / (k * rising_factorial(Fraction(1, 2), k))
            for k in range(1, n + 1)
        )
    )
    return first, second, third


def _invbinom(n: int):
    lhs = _sum(Fraction((-1) ** k, (k + 1) * binomial(n, k)) for k in range(n + 1))
    alt = _sum(Fraction((-1) ** k, k * k) for k in range(1, n + 1))
    rhs = Fraction(2 * (-1) ** n - 1, n + 1) - (n + 1) * harmonic(n, 2) - 2 * (n + 1) * alt
    return lhs, rhs


def _heng(n: int):
    lhs = _sum(Fraction(4**k, k * binomial(2 * k, k)) for k in range(1, n + 1))
    return lhs, -2 + 2 * Fraction(4**n, binomial(2 * n, n))


def _important(n: int):
    lhs = _sum(Fraction(4**k, (k + n) * binomial(2 * k, k)) for k in range(1, n + 1))
    c = binomial(2 * n, n)
    rhs = -2 + 2 * Fraction(4**n, c) - Fraction(n * c, 4**n) * _t2k(n)
    return lhs, rhs


def _r6k_lhs(n: int) -> Fraction:
    inner = [Fraction(0)]
    for k in range(1, n + 1):
        inner.append(inner[-1] + Fraction(1, k * (6 * k - 1)))
    return _sum(Fraction((-1) ** r, r) * binomial(n, r) * inner[r] for r in range(1, n + 1))


def _r6k(n: int):
    # k^2 in the denominator, matching the (-1)^k/(k^2 C(-5/6,k)) sum it feeds
    rhs = harmonic(n, 2) - _sum(
        rising_factorial(1, k) / (k * k * rising_factorial(Fraction(5, 6), k)) for k in range(1, n + 1)
    )
    return _r6k_lhs(n), rhs


def _r6k_verbatim(n: int):
    rhs = harmonic(n, 2) - _sum(
        rising_factorial(1, k) / (k * rising_factorial(Fraction(5, 6), k)) for k in range(1, n + 1)
    )
    return _r6k_lhs(n), rhs


def _r2k(n: int):
    inner = [Fraction(0)]
    for k in range(1, n + 1):
        inner.append(inner[-1] + Fraction(1, k * (2 * k - 1)))
    lhs = _sum(Fraction((-1) ** r, r) * binomial(n, r) * inner[r] for r in range(1, n + 1))
    return lhs, harmonic(n, 2) - _t2k(n)


def _hshift6(m: int, r: int):
    lhs = harmonic(m) - _sum(Fraction(1, k + r) for k in range(1, m + 1))
    rhs = harmonic(r) - _sum(Fraction(1, k + m) for k in range(1, r + 1))
    return lhs, rhs


def _split_2k1k(n: int):
    lhs = _sum(Fraction(4**k, (2 * k - 1) * k * binomial(2 * k, k)) for k in range(1, n + 1))
    rhs = 2 * _sum(Fraction(4**k, (2 * k - 1) * binomial(2 * k, k)) for k in range(1, n + 1)) - _sum(
        Fraction(4**k, k * binomial(2 * k, k)) for k in range(1, n + 1)
    )
    return lhs, rhs


def _split_3j1(n: int):
    lhs = _sum(Fraction(4**j, (3 * j - 1) * j * binomial(2 * j, j)) for j in range(1, n + 1))
    rhs = 3 * _sum(Fraction(4**j, (3 * j - 1) * binomial(2 * j, j)) for j in range(1, n + 1)) - _sum(
        Fraction(4**j, j * binomial(2 * j, j)) for j in range(1, n + 1)
    )
    return lhs, rhs


# -- grids -----------------------------------------------------------------

_Z_POINTS = (Fraction(1), Fraction(-4), Fraction(2), Fraction(-1, 2), Fraction(3))


def _ns(start: int = 0):
    return lambda bound: ((n,) for n in range(start, bound + 1))


def _grid_21(bound: int):
    for n in range(bound + 1):
        for z in _Z_POINTS:
            yield (n, z)


def _grid_sigma_a(bound: int):
    return ((n, j) for n in range(bound + 1) for j in range(n // 2 + 1))


def _grid_sigma_b(bound: int):
    return ((n, j) for n in range(bound + 1) for j in range(n + 1))


def _grid_sigma_c(bound: int):
    return ((n, j) for n in range(1, bound + 1) for j in range((n - 1) // 2 + 1))


def _grid_pairs(bound: int):
    return ((a, b) for a in range(bound + 1) for b in range(bound + 1))


def _grid_kx(bound: int):
    for n in range(bound + 1):
        for x in (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(7), Fraction(-1, 5)):
            yield (n, x)


REGISTRY: dict[str, IdentityDefinition] = {}


def _register(d: IdentityDefinition) -> None:
    REGISTRY[d.identity_id] = d


_register(IdentityDefinition("ID-21", "cubic binomial sum in z", ("n", "z"), _id21, _grid_21, 40, variable="z",
                             poles=lambda n: set(),
                             description="sum C(n,k)^3 z^k as a sum over C(n+k,3k)C(2k,k)C(3k,k)"))
_register(IdentityDefinition("ID-22", "f_n via (-4)^(n-k)", ("n",), _id22, _ns(), 60,
                             description="f_n = sum C(n+2k,3k)C(2k,k)C(3k,k)(-4)^(n-k)"))
_register(IdentityDefinition("ID-BARRUCAND", "Barrucand", ("n",), _barrucand, _ns(), 100,
                             description="sum C(n,k) f_k = g_n"))
_register(IdentityDefinition("ID-FRANEL-REC", "Franel recurrence", ("n",), _franel_rec, _ns(1), 300,
                             description="(n+1)^2 f_{n+1} = (7n^2+7n+2) f_n + 8n^2 f_{n-1}"))
_register(IdentityDefinition("ID-KX", "(kx)", ("n", "x"), _kx, _grid_kx, 30, variable="x",
                             poles=lambda n: {Fraction(-i) for i in range(n + 1)},
                             description="sum C(n,k)(-1)^k/(k+x) = n!/(x(x+1)...(x+n))"))
_register(IdentityDefinition("ID-SIGMA-A", "Sigma (3k+4)", ("n", "j"), _sigma_a, _grid_sigma_a, 40,
                             description="sum_{k=2j}^{n-1} (3k+4)C(k+j,3j)"))
_register(IdentityDefinition("ID-SIGMA-B", "Sigma (3k+2)", ("n", "j"), _sigma_b, _grid_sigma_b, 40,
                             description="sum_{k=j}^{n-1} (3k+2)C(k+2j,3j)"))
_register(IdentityDefinition("ID-SIGMA-C", "Sigma C(k+j,3j)", ("n", "j"), _sigma_c, _grid_sigma_c, 60,
                             description="sum_{k=2j}^{n-1} C(k+j,3j) = C(n+j,3j+1)"))
_register(IdentityDefinition("ID-CYID", "(cyid)", ("n", "k"), _cyid, _grid_pairs, 25, variable="k",
                             poles=lambda n: {Fraction(-i) for i in range(1, n + 2)},
                             description="1/C(n+1+k,k) = (n+1) sum C(n,r)(-1)^r/(k+r+1)"))
_register(IdentityDefinition("ID-ZHUID", "(zhuid)", ("n",), _zhuid, _ns(), 30,
                             description="three expressions for sum 2C(n,j)(-1)^j(H_2j-H_j)/(3j+1)"))
_register(IdentityDefinition("ID-INVBINOM", "inverse-binomial", ("n",), _invbinom, _ns(), 40,
                             description="sum (-1)^k/((k+1)C(n,k))"))
_register(IdentityDefinition("ID-HENG", "(heng)", ("n",), _heng, _ns(), 60,
                             description="sum 4^k/(k C(2k,k)) = -2 + 2*4^n/C(2n,n)"))
_register(IdentityDefinition("ID-IMPORTANT", "(important)", ("n",), _important, _ns(), 40,
                             description="sum 4^k/((k+n)C(2k,k))"))
_register(IdentityDefinition("ID-R6K", "sum 1/(k(6k-1))", ("n",), _r6k, _ns(), 30,
                             description="sum (-1)^r/r C(n,r) sum_{k<=r} 1/(k(6k-1)); "
                             "printed with (1)_k/(k (5/6)_k), checked with k^2",
                             verbatim=_r6k_verbatim))
_register(IdentityDefinition("ID-R2K", "sum 1/(k(2k-1))", ("n",), _r2k, _ns(), 30,
                             description="sum (-1)^r/r C(n,r) sum_{k<=r} 1/(k(2k-1))"))
_register(IdentityDefinition("ID-HSHIFT-6", "harmonic shift", ("m", "r"), _hshift6, _grid_pairs, 30,
                             description="H_m - sum_{k<=m} 1/(k+r) = H_r - sum_{k<=r} 1/(k+m)"))
_register(IdentityDefinition("ID-2K1K-SPLIT", "(2k-1k)", ("n",), _split_2k1k, _ns(), 40,
                             description="partial fractions of 4^k/((2k-1)k C(2k,k))"))
_register(IdentityDefinition("ID-3J1-SPLIT", "(3j-1)", ("n",), _split_3j1, _ns(), 40,
                             description="partial fractions of 4^j/((3j-1)j C(2j,j))"))


def get_identity(identity_id: str) -> IdentityDefinition:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentity(identity_id) from None


def _validate(d: IdentityDefinition, params: tuple) -> None:
    if len(params) != len(d.param_names):
        raise ParamOutOfRange(f"{d.identity_id} takes parameters {d.param_names}, got {params}")
    for name, value in zip(d.param_names, params):
        if name == d.variable:
            continue
        if not isinstance(value, int) or value < 0:
            raise ParamOutOfRange(f"{d.identity_id}: {name}={value!r} must be a non-negative integer")
    if d.identity_id == "ID-FRANEL-REC" and params[0] < 1:
        raise ParamOutOfRange("ID-FRANEL-REC needs n >= 1")
    if d.variable is not None:
        idx = d.param_names.index(d.variable)
        if as_fraction(params[idx]) in d.poles(params[0]):
            raise PoleSample(f"{d.identity_id}: {d.variable}={params[idx]} is a pole")


def verify_identity(identity_id: str, params: Sequence) -> IdentityCase:
    """Evaluate both sides of a registered identity exactly and compare."""
    d = get_identity(identity_id)
    params = tuple(params)
    _validate(d, params)
    sides = [as_fraction(s) for s in d.sides(*params)]
    passed = all(s == sides[0] for s in sides[1:])
    verbatim_passed = None
    if d.verbatim is not None:
        printed = d.verbatim(*params)
        verbatim_passed = all(s == printed[0] for s in printed[1:])
    return IdentityCase(identity_id, params, sides[0], sides[-1], passed, tuple(sides[1:-1]), verbatim_passed)


def sample_seed() -> int:
    return int(os.environ.get("VERIFIER_SEED", "0"))


def sample_points(count: int, avoid: set, seed: int | None = None) -> list[Fraction]:
    """Deterministic distinct rational sample points avoiding ``avoid``."""
    rng = random.Random(sample_seed() if seed is None else seed)
    out: list[Fraction] = []
    seen = set(avoid)
    while len(out) < count:
        q = Fraction(rng.randint(-60, 60), rng.randint(1, 12))
        if q not in seen:
            seen.add(q)
            out.append(q)
    return out


def verify_rational_function_identity(
    identity_id: str,
    n: int,
    sample_count: int | None = None,
    samples: Sequence | None = None,
    seed: int | None = None,
) -> bool:
    """Certify a rational-function identity in its free variable for fixed ``n``.

    Both sides have numerators of degree at most ``n`` over a common
    denominator, so agreement at ``n + 2`` distinct non-pole points proves
    equality. Explicit ``samples`` that hit a pole raise :class:`PoleSample`.
    """
    d = get_identity(identity_id)
    if d.variable is None:
        raise ValueError(f"{identity_id} has no free variable")
    if samples is None:
        count = n + 2 if sample_count is None else sample_count
        if count < n + 2:
            raise ValueError(f"need at least {n + 2} samples for degree bound {n}, got {count}")
        samples = sample_points(count, d.poles(n), seed)
    else:
        samples = [as_fraction(s) for s in samples]
        if len(set(samples)) < n + 2:
            raise ValueError(f"need at least {n + 2} distinct samples for degree bound {n}")
    result = True
    for s in samples:
        params = []
        for name in d.param_names:
            params.append(s if name == d.variable else n)
        result &= verify_identity(identity_id, params).passed
    return result


@dataclass
class IdentitySummary:
    identity_id: str
    passed: int = 0
    failed: int = 0
    first_failure: tuple | None = None
    verbatim_failed: int = 0
    first_verbatim_failure: tuple | None = None


@dataclass
class IdentityReport:
    summaries: dict[str, IdentitySummary] = field(default_factory=dict)
    rational_function_certificates: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(s.failed == 0 for s in self.summaries.values())

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "identities": {
                k: {
                    "pass": s.passed,
                    "fail": s.failed,
                    "first_failure": None if s.first_failure is None else [str(v) for v in s.first_failure],
                    **(
                        {
                            "verbatim_fail": s.verbatim_failed,
                            "first_verbatim_failure": [str(v) for v in s.first_verbatim_failure],
                        }
                        if s.first_verbatim_failure is not None
                        else {}
                    ),
                }
                for k, s in sorted(self.summaries.items())
            },
        }


def sweep_identities(max_n: int | None = None, ids: Iterable[str] | None = None) -> IdentityReport:
    """Run every identity over its grid, capped at ``max_n`` when given.

    ``max_n < 1`` yields empty grids (a vacuous pass). Rational-function
    identities are also certified for each ``n`` with seeded sample points.
    """
    report = IdentityReport()
    for identity_id in sorted(REGISTRY if ids is None else ids):
        d = get_identity(identity_id)
        summary = IdentitySummary(identity_id)
        report.summaries[identity_id] = summary
        if max_n is not None and max_n < 1:
            continue
        bound = d.limit if max_n is None else min(d.limit, max_n)
        for params in sorted(d.grid(bound)):
            if d.variable is not None and as_fraction(params[d.param_names.index(d.variable)]) in d.poles(params[0]):
                continue
            case = verify_identity(identity_id, params)
            if case.verbatim_passed is False:
                summary.verbatim_failed += 1
                if summary.first_verbatim_failure is None:
                    summary.first_verbatim_failure = params
            if case.passed:
                summary.passed += 1
            else:
                summary.failed += 1
                if summary.first_failure is None:
                    summary.first_failure = params
        if d.variable is not None:
            for n in range(bound + 1):
                if verify_rational_function_identity(identity_id, n):
                    summary.passed += 1
                else:
                    summary.failed += 1
                    if summary.first_failure is None:
                        summary.first_failure = (n, "samples")
    return report
