"""Registry of congruence checks over primes.

Each check evaluates one or more :class:`Comparison` pairs exactly and then
reduces both sides modulo ``p**k``. Per-index statements (over ``j``, ``k``,
``t``, ...) yield one comparison per index; the result reports the first
failing one.

Some printed displays carry misprints (a dropped factor, a wrong index or
sign). For those the designated comparison uses the reading the surrounding
derivation consumes, and the as-printed statement is evaluated as an extra
*reading* whose outcome is written to the result note. Readings never affect
``passed``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from .exact import (
    NonIntegral,
    binomial,
    fermat_quotient,
    harmonic,
    reduce_mod_pk,
    rising_factorial,
)
from .gamma_p import (
    GammaArgument,
    derivative_ratio_formula,
    gamma_p,
    gamma_p_derivative,
    gamma_p_derivative_ratio,
    gamma_p_log_derivative_at_zero,
)
from .quadform import PrimeRepresentation, represent
from .sequences import bernoulli_poly_at, euler_number, franel_values, legendre_p_over_3

Fr = Fraction


class NotApplicable(ValueError):
    """The prime does not satisfy the check's hypotheses; it is skipped, not failed."""


class UnknownCheck(KeyError):
    pass


@dataclass(frozen=True)
class Comparison:
    label: str
    lhs: Fraction
    rhs: Fraction
    exact: bool = False
    exponent: int | None = None
    reading: str | None = None


@dataclass(frozen=True)
class CheckDefinition:
    check_id: str
    anchor: str
    quote: str
    exponent: int
    applies: Callable[[int], bool]
    applicability: str
    evaluate: Callable[["PrimeData"], list[Comparison]]
    uses_x: bool = False
    doc: str = ""

    def summary(self) -> dict:
        return {
            "check": self.check_id,
            "anchor": self.anchor,
            "modulus": f"p^{self.exponent}",
            "applicability": self.applicability,
            "uses_x": self.uses_x,
            "quote": self.quote,
        }


@dataclass(frozen=True)
class CheckResult:
    check: str
    p: int
    x: int | None
    y: int | None
    lhs: int | None
    rhs: int | None
    modulus: int
    passed: bool
    note: str | None = None

    def as_dict(self) -> dict:
        def s(v):
            return None if v is None else str(v)

        return {
            "check": self.check,
            "p": str(self.p),
            "x": s(self.x),
            "y": s(self.y),
            "lhs": s(self.lhs),
            "rhs": s(self.rhs),
            "modulus": str(self.modulus),
            "pass": self.passed,
            "note": self.note,
        }


# -- cached per-prime quantities --------------------------------------------


def C(n, k):
    return binomial(n, k)


def H(n: int) -> Fraction:
    return harmonic(n, 1)


def H2(n: int) -> Fraction:
    return harmonic(n, 2)


@lru_cache(maxsize=None)
def T(n: int) -> Fraction:
    """``sum_{k=1}^n 4^k / (k^2 C(2k,k))``."""
    if n <= 0:
        return Fr(0)
    return T(n - 1) + Fr(4**n, n * n * C(2 * n, n))


@lru_cache(maxsize=64)
def franel_sums(p: int) -> dict[str, Fraction]:
    """The four Franel sums over ``0 <= k <= p-1``, computed over a common denominator."""
    f = franel_values(p - 1)
    n = p - 1
    s2 = sum(f[k] << (n - k) for k in range(p))
    s2w = sum((3 * k + 4) * f[k] << (n - k) for k in range(p))
    s4 = sum(f[k] * (-4) ** (n - k) for k in range(p))
    s4w = sum((3 * k + 2) * f[k] * (-4) ** (n - k) for k in range(p))
    return {
        "2": Fr(s2, 2**n),
        "2w": Fr(s2w, 2**n),
        "-4": Fr(s4, (-4) ** n),
        "-4w": Fr(s4w, (-4) ** n),
    }


@lru_cache(maxsize=64)
def bernoulli_term(p: int) -> Fraction:
    """``(p/3) B_{p-2}(1/3)``."""
    return legendre_p_over_3(p) * bernoulli_poly_at(p - 2, Fr(1, 3))


@dataclass
class PrimeData:
    p: int
    rep: PrimeRepresentation | None = None
    _memo: dict = field(default_factory=dict, repr=False)

    @property
    def x(self) -> int:
        if self.rep is None:
            raise NotApplicable(f"p = {self.p} has no representation x^2 + 3y^2")
        return self.rep.x

    @property
    def m(self) -> int:
        return (self.p - 1) // 2

    @property
    def a(self) -> int:
        return (self.p - 1) // 3

    @property
    def b(self) -> int:
        return (self.p - 1) // 6

    @property
    def sign(self) -> int:
        """``(-1)^((p-1)/2)``."""
        return (-1) ** self.m

    @property
    def q2(self) -> Fraction:
        return fermat_quotient(2, self.p)

    @property
    def q3(self) -> Fraction:
        return fermat_quotient(3, self.p)

    @property
    def bern(self) -> Fraction:
        return bernoulli_term(self.p)

    @property
    def euler(self) -> int:
        return euler_number(self.p - 3)

    def memo(self, key: str, fn: Callable[[], Fraction]) -> Fraction:
        if key not in self._memo:
            self._memo[key] = fn()
        return self._memo[key]


def _sum(terms: Iterable) -> Fraction:
    return sum(terms, Fr(0))


def _poch_ratio(d: PrimeData, shift: Fraction) -> Fraction:
    """``(1)_m / (shift)_m``."""
    return rising_factorial(1, d.m) / rising_factorial(shift, d.m)


# -- predicates ---------------------------------------------------------------


def _p1mod3(p: int) -> bool:
    return p % 3 == 1 and p >= 7


def _p_gt3(p: int) -> bool:
    return p > 3


def _p_gt5(p: int) -> bool:
    return p > 5


P1MOD3 = "p = 1 (mod 3), p >= 7"
PGT3 = "p > 3"
PGT5 = "p > 5"


REGISTRY: dict[str, CheckDefinition] = {}


def check(check_id: str, anchor: str, quote: str, exponent: int, applies=_p1mod3,
          applicability: str = P1MOD3, uses_x: bool = False, doc: str = ""):
    def deco(fn):
        REGISTRY[check_id] = CheckDefinition(
            check_id, anchor, quote, exponent, applies, applicability, fn, uses_x, doc or (fn.__doc__ or "").strip()
        )
        return fn

    return deco


# -- main congruences -------------------------------------------------------------


@check("CHK-FP2", "2x - p/(2x) mod p^2", r"2x-\frac{p}{2x}\pmod{p^2}", 2, uses_x=True)
def _fp2(d: PrimeData):
    s = franel_sums(d.p)
    rhs = 2 * d.x - Fr(d.p, 2 * d.x)
    return [
        Comparison("sum f_k/2^k", s["2"], rhs),
        Comparison("sum f_k/(-4)^k", s["-4"], rhs),
    ]


@check("CHK-THM11A", "weighted sum (2^k)", r"\frac14\sum_{k=0}^{p-1}(3k+4)\frac{f_k}{2^k}", 2, uses_x=True)
def _thm11a(d: PrimeData):
    """sum (3k+4) f_k / 2^k = 4x (mod p^2), i.e. a quarter of it is x."""
    return [Comparison("sum (3k+4)f_k/2^k vs 4x", franel_sums(d.p)["2w"], Fr(4 * d.x))]


@check("CHK-THM11B", "weighted sum ((-4)^k)", r"\frac12\sum_{k=0}^{p-1}(3k+2)\frac{f_k}{(-4)^k}", 2,
       uses_x=True)
def _thm11b(d: PrimeData):
    """sum (3k+2) f_k / (-4)^k = 2x (mod p^2)."""
    return [Comparison("sum (3k+2)f_k/(-4)^k vs 2x", franel_sums(d.p)["-4w"], Fr(2 * d.x))]


@check("CHK-THM12", "2^k vs (-4)^k mod p^3",
       r"\sum_{k=0}^{p-1}\frac{f_k}{2^k}\equiv\sum_{k=0}^{p-1}\frac{f_k}{(-4)^k}\pmod{p^3}", 3)
def _thm12(d: PrimeData):
    s = franel_sums(d.p)
    return [Comparison("sum f_k/2^k vs sum f_k/(-4)^k", s["2"], s["-4"])]


# -- exact expansions of the weighted sums ------------------------------------


@check("CHK-3K4F", "(3k4f)", r"\sum_{j=0}^{(p-1)/2}\frac{\binom{2j}j\binom{3j}j}{4^j}\sum_{k=2j}^{p-1}(3k+4)\binom{k+j}{3j}",
       3, applies=_p_gt3, applicability=PGT3)
def _3k4f(d: PrimeData):
    """Exact rewriting of sum (3k+4) f_k/2^k after the Sigma summation."""
    p = d.p
    rhs = _sum(
        Fr(C(2 * j, j) * C(3 * j, j), 4**j) * Fr(9 * p * j + 3 * p + 9 * j + 5, 3 * j + 2) * C(p + j, 3 * j + 1)
        for j in range(d.m + 1)
    )
    return [Comparison("exact", franel_sums(p)["2w"], rhs, exact=True)]


@check("CHK-3K2FK", "(3k2fk)", r"\frac{\binom{2j}j\binom{3j}j\binom{p+2j}{3j+1}}{(-4)^j}\frac{9pj+3p+1}{3j+2}",
       3, applies=_p_gt3, applicability=PGT3)
def _3k2fk(d: PrimeData):
    p = d.p
    rhs = _sum(
        Fr(C(2 * j, j) * C(3 * j, j) * C(p + 2 * j, 3 * j + 1)) / Fr(-4) ** j * Fr(9 * p * j + 3 * p + 1, 3 * j + 2)
        for j in range(p)
    )
    return [Comparison("exact", franel_sums(p)["-4w"], rhs, exact=True)]


# -- per-index lemmas ----------------------------------------------------------------


@check("CHK-LEM22", "C(3j,j)C(p+j,3j+1)", r"\frac{p}{3j+1}(1-pH_{2j}+pH_j)", 3)
def _lem22(d: PrimeData):
    p = d.p
    return [
        Comparison(f"j={j}", Fr(C(3 * j, j) * C(p + j, 3 * j + 1)), Fr(p, 3 * j + 1) * (1 - p * H(2 * j) + p * H(j)))
        for j in range(d.m + 1)
        if j != d.a
    ]


@check("CHK-P2J-LOW", "(p2j) j <= (p-1)/2", r"\frac{p(-1)^j}{3j+1}(1+pH_{2j}-pH_j)", 3)
def _p2j_low(d: PrimeData):
    p = d.p
    return [
        Comparison(
            f"j={j}",
            Fr(C(3 * j, j) * C(p + 2 * j, 3 * j + 1)),
            Fr(p * (-1) ** j, 3 * j + 1) * (1 + p * H(2 * j) - p * H(j)),
        )
        for j in range(d.m + 1)
        if j != d.a
    ]


@check("CHK-P2J-HIGH", "(p2j) j >= (p+1)/2", r"\frac{2p(-1)^j}{3j+1}\pmod{p^2}", 2)
def _p2j_high(d: PrimeData):
    p = d.p
    return [
        Comparison(f"j={j}", Fr(C(3 * j, j) * C(p + 2 * j, 3 * j + 1)), Fr(2 * p * (-1) ** j, 3 * j + 1))
        for j in range(d.m + 1, p)
    ]


@check("CHK-MPT", "C((p-1)/2+pt,(p-1)/3)", r"(1+pt(H_{(p-1)/2}-H_{(p-1)/6}))", 2)
def _mpt(d: PrimeData):
    """t runs over 0, 1, 2, 3 and (p-1)/2; the statement needs 3 | p-1."""
    p, m, a = d.p, d.m, d.a
    return [
        Comparison(f"t={t}", Fr(C(m + p * t, a)), C(m, a) * (1 + p * t * (H(m) - H(d.b))))
        for t in sorted({0, 1, 2, 3, m})
    ]


# -- classical harmonic congruences ---------------------------------------------


def _sunh(check_id: str, anchor: str, quote: str, exponent: int):
    return check(check_id, anchor, quote, exponent, applies=_p_gt5, applicability=PGT5)


@_sunh("CHK-SUNH-H2FULL", "sunh: H2(p-1)", r"H_{p-1}^{(2)}\equiv0\pmod{p}", 1)
def _sunh_h2full(d: PrimeData):
    return [Comparison("H2_{p-1}", H2(d.p - 1), Fr(0))]


@_sunh("CHK-SUNH-H2HALF", "sunh: H2((p-1)/2)", r"H_{\frac{p-1}2}^{(2)}\equiv0\pmod{p}", 1)
def _sunh_h2half(d: PrimeData):
    return [Comparison("H2_{(p-1)/2}", H2(d.m), Fr(0))]


@_sunh("CHK-WOLST", "sunh: H(p-1)", r"H_{p-1}\equiv0\pmod{p^2}", 2)
def _wolst(d: PrimeData):
    return [Comparison("H_{p-1}", H(d.p - 1), Fr(0))]


@_sunh("CHK-SUNH-H2SIXTH", "sunh: H2(p/6), H2(p/3)",
       r"\frac15H_{\lfloor\frac{p}6\rfloor}^{(2)}\equiv H_{\lfloor\frac{p}3\rfloor}^{(2)}", 1)
def _sunh_h2sixth(d: PrimeData):
    p = d.p
    return [
        Comparison("H2_{p/6}/5 vs H2_{p/3}", H2(p // 6) / 5, H2(p // 3)),
        Comparison("H2_{p/3} vs (p/3)B_{p-2}(1/3)/2", H2(p // 3), d.bern / 2),
    ]


@_sunh("CHK-SUNH-H6", "sunh: H(p/6)",
       r"H_{\lfloor\frac{p}6\rfloor}\equiv-2q_p(2)-\frac32q_p(3)+pq^2_p(2)+\frac{3p}4q^2_p(3)-\frac{5p}{12}\left(\frac{p}3\right)B_{p-2}\left(\frac13\right)", 2)
def _sunh_h6(d: PrimeData):
    p, q2, q3 = d.p, d.q2, d.q3
    rhs = -2 * q2 - Fr(3, 2) * q3 + p * q2**2 + Fr(3 * p, 4) * q3**2 - Fr(5 * p, 12) * d.bern
    return [Comparison("H_{p/6}", H(p // 6), rhs)]


@_sunh("CHK-SUNH-H3", "sunh: H(p/3)",
       r"H_{\lfloor\frac{p}3\rfloor}\equiv-\frac32q_p(3)+\frac{3p}4q^2_p(3)-\frac{p}6\left(\frac{p}3\right)B_{p-2}\left(\frac13\right)", 2)
def _sunh_h3(d: PrimeData):
    p, q3 = d.p, d.q3
    return [Comparison("H_{p/3}", H(p // 3), -Fr(3, 2) * q3 + Fr(3 * p, 4) * q3**2 - Fr(p, 6) * d.bern)]


@_sunh("CHK-SUNH-HHALF", "sunh: H((p-1)/2)", r"H_{\frac{p-1}2}\equiv-2q_p(2)+pq^2_p(2)\pmod{p^2}", 2)
def _sunh_hhalf(d: PrimeData):
    return [Comparison("H_{(p-1)/2}", H(d.m), -2 * d.q2 + d.p * d.q2**2)]


@_sunh("CHK-SUNH-H23", "sunh: H(2p/3)",
       r"H_{\lfloor\frac{2p}3\rfloor}\equiv-\frac32q_p(3)+\frac{3p}4q^2_p(3)+\frac{p}3\left(\frac{p}3\right)B_{p-2}\left(\frac13\right)", 2)
def _sunh_h23(d: PrimeData):
    p, q3 = d.p, d.q3
    return [Comparison("H_{2p/3}", H(2 * p // 3), -Fr(3, 2) * q3 + Fr(3 * p, 4) * q3**2 + Fr(p, 3) * d.bern)]


@_sunh("CHK-SUNH-H4E", "sunh: H2(p/4)", r"H_{\lfloor\frac{p}4\rfloor}^{(2)}\equiv(-1)^{\frac{p-1}2}4E_{p-3}", 1)
def _sunh_h4e(d: PrimeData):
    return [Comparison("H2_{p/4}", H2(d.p // 4), Fr(d.sign * 4 * d.euler))]


# -- weighted sums: proof chain ---------------------------------------------------


def _main1_rhs(d: PrimeData) -> Fraction:
    return d.memo("main1", lambda: d.p * _sum(
        Fr(C(2 * j, j), 4**j) * Fr(9 * j + 5, (3 * j + 1) * (3 * j + 2)) for j in range(d.m + 1)
    ))


def _S1_thm1(d: PrimeData) -> Fraction:
    return d.memo("S1", lambda: d.p * _sum(
        C(d.m, j) * (-1) ** j * (Fr(2, 3 * j + 1) + Fr(1, 3 * j + 2)) for j in range(d.m + 1)
    ))


def _S2_thm1(d: PrimeData) -> Fraction:
    p, m, a = d.p, d.m, d.a
    return Fr(3 * p + 2, p + 1) * (Fr(C(2 * a, a), 4**a) - C(m, a))


def _A4(d: PrimeData) -> Fraction:
    return Fr(4 * d.p, 3 * d.p - 1) * _poch_ratio(d, Fr(1, 3))


def _A2(d: PrimeData) -> Fraction:
    return Fr(2 * d.p, 3 * d.p + 1) * _poch_ratio(d, Fr(2, 3))


@check("CHK-MAIN1", "(main1)", r"\frac{9j+5}{(3j+1)(3j+2)}", 2)
def _main1(d: PrimeData):
    return [Comparison("main1", franel_sums(d.p)["2w"], _main1_rhs(d))]


@check("CHK-EQU", "(equ)", r"\equiv S_1+S_2\pmod{p^2}", 2)
def _equ(d: PrimeData):
    return [Comparison("equ", _main1_rhs(d), _S1_thm1(d) + _S2_thm1(d))]


@check("CHK-S1KX", "(s1)", r"S_1=\frac{4p}{3p-1}\frac{(1)_{(p-1)/2}}{(1/3)_{(p-1)/2}}+\frac{2p}{3p+1}\frac{(1)_{(p-1)/2}}{(2/3)_{(p-1)/2}}", 2)
def _s1kx(d: PrimeData):
    """S_1 rewritten through the (kx) identity at x = 1/3 and x = 2/3; exact."""
    return [Comparison("exact", _S1_thm1(d), _A4(d) + _A2(d), exact=True)]


@check("CHK-4P", "(4p)", r"4x+3pxq_p(3)-\frac{p}{x}", 2, uses_x=True)
def _4p(d: PrimeData):
    x, p = d.x, d.p
    return [Comparison("4p", _A4(d), 4 * x + 3 * p * x * d.q3 - Fr(p, x))]


@check("CHK-2P", "(2p)", r"\equiv\frac{p}{x}\pmod{p^2}", 2, uses_x=True)
def _2p(d: PrimeData):
    return [Comparison("2p", _A2(d), Fr(d.p, d.x))]


@check("CHK-S1", "(s1p2)", r"4x+3pxq_p(3)\pmod{p^2}", 2, uses_x=True)
def _s1(d: PrimeData):
    return [Comparison("S1", _S1_thm1(d), 4 * d.x + 3 * d.p * d.x * d.q3)]


@check("CHK-S2", "(s2)", r"-3pxq_p(3)\pmod{p^2}", 2, uses_x=True)
def _s2(d: PrimeData):
    p, m, a = d.p, d.m, d.a
    s2 = _S2_thm1(d)
    return [
        Comparison("S2 vs 2(C(-1/2,a)-C(m,a))", s2, 2 * (C(Fr(-1, 2), a) - C(m, a))),
        Comparison("S2 vs -pC(m,a)(H_m-H_b)", s2, -p * C(m, a) * (H(m) - H(d.b))),
        Comparison("S2 vs -3pxq_p(3)", s2, -3 * p * d.x * d.q3),
    ]


def _alt_sum(d: PrimeData) -> Fraction:
    return d.memo("alt", lambda: d.p * _sum(
        C(d.m, j) * (-1) ** j * (Fr(1, 3 * j + 1) - Fr(1, 3 * j + 2)) for j in range(d.m + 1)
    ))


@check("CHK-3J13J2", "(3j13j2)", r"2x+\frac{3px}2q_p(3)-\frac{3p}{2x}", 2, uses_x=True)
def _3j13j2(d: PrimeData):
    x, p = d.x, d.p
    return [Comparison("3j13j2", _alt_sum(d), 2 * x + Fr(3 * p * x, 2) * d.q3 - Fr(3 * p, 2 * x))]


def _S3_thm1(d: PrimeData) -> Fraction:
    p, m, a = d.p, d.m, d.a
    return Fr(C(2 * a, a), (p + 1) * 4**a) - Fr(C(m, a), p + 1) - Fr(C(4 * a, 2 * a), 4 ** (2 * a))


@check("CHK-MAIN2", "(main2)", r"p\sum_{j=0}^{\frac{p-1}2}\binom{\frac{p-1}2}j(-1)^j\left(\frac{1}{3j+1}-\frac{1}{3j+2}\right)+S_3", 2)
def _main2(d: PrimeData):
    p, m = d.p, d.m
    lhs = franel_sums(p)["-4w"]
    first = _sum(
        Fr(C(2 * j, j)) / Fr(-4) ** j * Fr(p * (-1) ** j, 3 * j + 1) * Fr(9 * p * j + 3 * p + 1, 3 * j + 2)
        for j in range(m + 1)
    ) + _sum(
        Fr(C(2 * j, j)) / Fr(-4) ** j * Fr(2 * p * (-1) ** j, (3 * j + 1) * (3 * j + 2)) for j in range(m + 1, p)
    )
    return [
        Comparison("first line", lhs, first),
        Comparison("main2", lhs, _alt_sum(d) + _S3_thm1(d)),
    ]


@check("CHK-S3", "S3 evaluation", r"-\frac{3px}2q_p(3)+\frac{3p}{2x}", 2, uses_x=True)
def _s3(d: PrimeData):
    p, m, a, x = d.p, d.m, d.a, d.x
    s3 = _S3_thm1(d)
    alt = Fr(1, p + 1) * (C(Fr(-1, 2), a) - C(m, a)) - C(Fr(-1, 2), 2 * a)
    return [
        Comparison("two forms of S3", s3, alt, exact=True),
        Comparison("S3", s3, -Fr(3 * p * x, 2) * d.q3 + Fr(3 * p, 2 * x)),
    ]


@check("CHK-NEGHALF", "S3: C(-1/2,(2p-2)/3)",
       r"\frac{-3p(-1)^{(p-1)/2}}{\binom{\frac{2p-2}3}{\frac{p-1}2}}", 2)
def _neghalf(d: PrimeData):
    p, m, a = d.p, d.m, d.a
    return [
        Comparison("exact step", C(Fr(-1, 2), 2 * a),
                   d.sign * Fr(p, 2) * rising_factorial(1, m) * rising_factorial(1, (p - 7) // 6)
                   * _neghalf_tail(d) / rising_factorial(1, 2 * a), exponent=2),
        Comparison("C(-1/2,(2p-2)/3)", C(Fr(-1, 2), 2 * a), Fr(-3 * p * d.sign, C(2 * a, m))),
    ]


def _neghalf_tail(d: PrimeData) -> Fraction:
    # (p/2+1)...(p/2+(p-7)/6) / ((p-7)/6)!; congruent to 1 mod p
    p = d.p
    n = (p - 7) // 6
    return rising_factorial(Fr(p, 2) + 1, n) / rising_factorial(1, n)


# -- mod p^3 comparison: proof chain --------------------------------------------------


def _S1_thm2(d: PrimeData) -> Fraction:
    p, a = d.p, d.a
    return C(Fr(-1, 2), a) * C(p - 1, a) * C(p + a, p)


def _S2_thm2(d: PrimeData) -> Fraction:
    return C(d.m, d.a) * (1 + Fr(d.p, 2) * H(d.a))


def _S3_thm2(d: PrimeData) -> Fraction:
    p, a = d.p, d.a
    return C(Fr(-1, 2), a) * C(p - 1, a) * C(p + 2 * a, p)


def _S4_thm2(d: PrimeData) -> Fraction:
    p, a = d.p, d.a
    return C(d.m, a) * (1 + 2 * p * H(2 * a) - Fr(3, 2) * p * H(a))


def _S5(d: PrimeData) -> Fraction:
    return _S3_thm2(d) - _S4_thm2(d) + _S2_thm2(d) - _S1_thm2(d)


def _main_sum(d: PrimeData) -> Fraction:
    return d.memo("main", lambda: d.p * _sum(
        C(d.m, j) * (-1) ** j * (1 + Fr(d.p, 2) * H(j)) / (3 * j + 1) for j in range(d.m + 1)
    ))


@check("CHK-ZMAIN1", "(zmain1)", r"\frac{1-pH_{2k}+pH_k}{(3j+1)}+S_1\pmod{p^3}", 3,
       doc="The printed summand uses H_{2k}, H_k under a sum over j; evaluated with H_{2j}, H_j.")
def _zmain1(d: PrimeData):
    p, m, a = d.p, d.m, d.a
    s1 = _S1_thm2(d)
    expanded = _sum(Fr(C(2 * j, j) * C(3 * j, j), 4**j) * C(p + j, 3 * j + 1) for j in range(m + 1))
    rhs = p * _sum(
        Fr(C(2 * j, j), 4**j) * (1 - p * H(2 * j) + p * H(j)) / (3 * j + 1) for j in range(m + 1) if j != a
    ) + s1
    return [
        Comparison("two forms of S1", s1, Fr(C(2 * a, a) * C(p - 1, a) * C(p + a, p), 4**a), exact=True),
        Comparison("Sigma expansion", franel_sums(p)["2"], expanded, exact=True),
        Comparison("zmain1", franel_sums(p)["2"], rhs),
    ]


@check("CHK-MAIN", "(main)", r"\frac{\binom{\frac{p-1}2}j(-1)^j\left(1+\frac{p}2H_k\right)}{(3j+1)}+S_1-S_2", 3,
       doc="The printed summand uses H_k under a sum over j; evaluated with H_j.")
def _main(d: PrimeData):
    p, m, a = d.p, d.m, d.a
    partial = p * _sum(
        Fr(C(2 * j, j), 4**j) * (1 - p * H(2 * j) + p * H(j)) / (3 * j + 1) for j in range(m + 1) if j != a
    )
    via_ratbin = p * _sum(
        C(m, j) * (-1) ** j * (1 - p * H(2 * j) + p * H(j))
        / ((3 * j + 1) * (1 - p * _sum(Fr(1, 2 * r - 1) for r in range(1, j + 1))))
        for j in range(m + 1)
        if j != a
    )
    return [
        Comparison("substitution step", partial, via_ratbin),
        Comparison("sum minus S2", partial, _main_sum(d) - _S2_thm2(d)),
        Comparison("main", franel_sums(p)["2"], _main_sum(d) + _S1_thm2(d) - _S2_thm2(d)),
    ]


@check("CHK-2P3P", "(2p3p-11p-12)", r"\equiv\binom{\frac{p-1}2}{\frac{p-1}3}\pmod{p}", 1)
def _2p3p(d: PrimeData):
    p, m, a = d.p, d.m, d.a
    lhs = Fr(2 * p, 3 * p - 1) * _poch_ratio(d, Fr(1, 3))
    denom = _sum([]) + 1
    for i in range(m + 1):
        if i != a:
            denom *= Fr(1, 3) + i
    return [
        Comparison("exact step", lhs, rising_factorial(1, m) / denom, exact=True),
        Comparison("2p3p", lhs, Fr(C(m, a))),
    ]


def _minus4_rest(d: PrimeData) -> Fraction:
    return d.memo("m4rest", lambda: _sum(
        Fr(d.p**2 * 4**j, (3 * j - 1) * j * C(2 * j, j)) for j in range(1, d.m + 1)
    ))


def _zhu_sum(d: PrimeData) -> Fraction:
    """``sum_j C(m,j)(-1)^j (H_2j - H_j)/(3j+1)`` over ``0 <= j <= m``."""
    return d.memo("zhu", lambda: _sum(
        C(d.m, j) * (-1) ** j * (H(2 * j) - H(j)) / (3 * j + 1) for j in range(d.m + 1)
    ))


@check("CHK-ZHUYAO", "(zhuyao)", r"(-1)^j(H_{2j}-H_j)", 3)
def _zhuyao(d: PrimeData):
    p, m, a = d.p, d.m, d.a
    s = franel_sums(p)
    s3 = _S3_thm2(d)
    lhs4 = s["-4"] - s3
    step1 = p * _sum(
        Fr(C(2 * j, j) * (1 + p * H(2 * j) - p * H(j)), (3 * j + 1) * 4**j) for j in range(m + 1) if j != a
    ) + 2 * p * _sum(Fr(C(2 * j, j), (3 * j + 1) * 4**j) for j in range(m + 1, p))
    step2 = _sum(
        Fr(p * (-1) ** j * C(m, j)) * (1 + 2 * p * H(2 * j) - Fr(3, 2) * p * H(j)) / (3 * j + 1)
        for j in range(m + 1)
        if j != a
    ) + _sum(Fr(4 * p * p, 4**j * (3 * j + 1) * j * C(2 * p - 2 * j, p - j)) for j in range(m + 1, p))
    step3 = _sum(
        Fr(p * (-1) ** j * C(m, j)) * (1 + 2 * p * H(2 * j) - Fr(3, 2) * p * H(j)) / (3 * j + 1)
        for j in range(m + 1)
    ) + _minus4_rest(d) - _S4_thm2(d)
    rhs = 2 * p * p * _zhu_sum(d) + _S5(d) + _minus4_rest(d)
    return [
        Comparison("two forms of S3", s3, Fr(C(2 * a, a) * C(p - 1, a) * C(p + 2 * a, p)) / Fr(-4) ** a, exact=True),
        Comparison("(p2j) step", lhs4, step1),
        Comparison("binomial substitution", lhs4, step2),
        Comparison("S4 split", lhs4, step3),
        Comparison("zhuyao", s["-4"] - s["2"], rhs),
    ]


def _pochsum(d: PrimeData, lower: Fraction) -> Fraction:
    """``sum_{k=1}^m (1/3)_k / (k (lower)_k)``."""
    return d.memo(f"poch{lower}", lambda: _sum(
        rising_factorial(Fr(1, 3), k) / (k * rising_factorial(lower, k)) for k in range(1, d.m + 1)
    ))


@check("CHK-131", "(-1/31)", r"-\frac{p}3\sum_{k=1}^{\frac{p-1}3}\frac{4^k}{k^2\binom{2k}k}", 2)
def _131(d: PrimeData):
    p, q3 = d.p, d.q3
    lhs = _pochsum(d, Fr(1))
    binform = _sum(C(Fr(-1, 3), k) / (k * C(-1, k)) for k in range(1, d.m + 1))
    return [
        Comparison("binomial form", lhs, binform, exact=True),
        Comparison("-1/31", lhs, Fr(3, 2) * q3 - Fr(3 * p, 4) * q3**2 - Fr(p, 3) * T(d.a)),
    ]


def _split_sum(d: PrimeData) -> Fraction:
    """``sum_{k=1}^{(p-1)/3} 4^k / ((2k-1) k C(2k,k))``."""
    return _sum(Fr(4**k, (2 * k - 1) * k * C(2 * k, k)) for k in range(1, d.a + 1))


@check("CHK-1312", "(-1/3-1/2)", r"\frac{4p}3(-1)^{\frac{p-1}2}E_{p-3}", 2)
def _1312(d: PrimeData):
    p, q3 = d.p, d.q3
    lhs = _pochsum(d, Fr(1, 2))
    binform = _sum(C(Fr(-1, 3), k) / (k * C(Fr(-1, 2), k)) for k in range(1, d.m + 1))
    rhs = (Fr(4 * p, 3) * d.sign * d.euler + Fr(3, 2) * q3 - Fr(3 * p, 4) * q3**2
           - Fr(2 * p, 3) * d.sign * _split_sum(d))
    return [
        Comparison("binomial form", lhs, binform, exact=True),
        Comparison("-1/3-1/2", lhs, rhs),
    ]


@check("CHK-P121312", "(p-121312)", r"+\frac{p}3\sum_{k=1}^{\frac{p-1}6}\frac{4^k}{k^2\binom{2k}k}", 2)
def _p121312(d: PrimeData):
    p, q3 = d.p, d.q3
    return [Comparison("p-121312", _pochsum(d, Fr(1, 2)), Fr(3, 2) * q3 - Fr(3 * p, 4) * q3**2 + Fr(p, 3) * T(d.b))]


@check("CHK-DIYIGE", "(diyige)", r"2p^2\sum_{j=0}^{\frac{p-1}2}", 3)
def _diyige(d: PrimeData):
    p, m, a = d.p, d.m, d.a
    both = T(a) + T(d.b)
    return [
        Comparison("difference of the two sums", _pochsum(d, Fr(1)) - _pochsum(d, Fr(1, 2)), -Fr(p, 3) * both,
                   exponent=2),
        Comparison("diyige", 2 * p * p * _zhu_sum(d), -Fr(p * p, 3) * C(m, a) * both),
    ]


def _inv_binom_sum(m: int, lo: int, hi: int) -> Fraction:
    return _sum(Fr((-1) ** k, (k + 1) * C(m, k)) for k in range(lo, hi + 1))


@check("CHK-P132K1", "(p-132k-1)", r"\frac{(-1)^k}{(k+1)\binom{\frac{p-1}2}{k}}", 1)
def _p132k1(d: PrimeData):
    p, m, a, b = d.p, d.m, d.a, d.b
    s = (-1) ** ((p + 1) // 2)
    lhs = 2 * _sum(Fr(4**k, (2 * k - 1) * C(2 * k, k)) for k in range(1, a + 1))
    step1 = 2 * _sum(Fr((-1) ** k, (2 * k - 1) * C(m, k)) for k in range(1, a + 1))
    step2 = s * _inv_binom_sum(m, b, (p - 3) // 2)
    step3 = s * (_inv_binom_sum(m, 0, (p - 3) // 2) - _inv_binom_sum(m, 0, (p - 7) // 6))
    return [
        Comparison("binomial substitution", lhs, step1),
        Comparison("reindexing", lhs, step2),
        Comparison("split", step2, step3, exact=True),
    ]


@check("CHK-P32", "(p-32)", r"(-1)^{\frac{p-1}2}2E_{p-3}\pmod p", 1)
def _p32(d: PrimeData):
    return [Comparison("p-32", _inv_binom_sum(d.m, 0, (d.p - 3) // 2),
                       Fr(2 * (d.sign - 1) - d.sign * 2 * d.euler))]


def _neg56_sum(d: PrimeData) -> Fraction:
    return d.memo("neg56", lambda: _sum(
        Fr((-1) ** k) / (k * k * C(Fr(-5, 6), k)) for k in range(1, d.m + 1)
    ))


@check("CHK-P76", "(p-7)/6 partial sum",
       r"\frac{(-1)^{\frac{p-1}2}}{x}-2-\frac12\sum_{k=1}^{\frac{p-1}6}\frac{4^k}{k^2\binom{2k}k}", 1, uses_x=True)
def _p76(d: PrimeData):
    x, p = d.x, d.p
    lhs = _inv_binom_sum(d.m, 0, (p - 7) // 6)
    return [
        Comparison("via C(-5/6,k)", lhs,
                   Fr(d.sign, x) - 2 - Fr(5, 4) * d.bern - Fr(1, 2) * _neg56_sum(d)),
        Comparison("p-7/6", lhs, Fr(d.sign, x) - 2 - Fr(1, 2) * T(d.b)),
    ]


@check("CHK-NEG56", "C(-5/6,k) sum",
       r"\sum_{k=1}^{\frac{p-1}6}\frac{4^k}{k^2\binom{2k}k}-\frac52\left(\frac{p}3\right)B_{p-2}\left(\frac13\right)", 1)
def _neg56(d: PrimeData):
    return [Comparison("neg56", _neg56_sum(d), T(d.b) - Fr(5, 2) * d.bern)]


@check("CHK-HSHIFT6", "1/(k(6k-1)) shift", r"-\sum_{k=1}^r\frac1{k(6k-1)}\pmod p", 1,
       doc="r runs over 1 <= r <= p-1-(p-1)/6, where every denominator k+r is prime to p.")
def _hshift6(d: PrimeData):
    p, b = d.p, d.b
    out = []
    inner = Fr(0)
    for r in range(1, p - b):
        inner += Fr(1, r * (6 * r - 1))
        out.append(Comparison(f"r={r}", H(b) - _sum(Fr(1, k + r) for k in range(1, b + 1)), -inner))
    return out


@check("CHK-HSHIFT2", "1/(k(2k-1)) shift", r"-\sum_{k=1}^r\frac1{k(2k-1)}\pmod p", 1,
       applies=_p_gt3, applicability=PGT3,
       doc="r runs over 1 <= r <= (p-1)/2, where every denominator k+r is prime to p.")
def _hshift2(d: PrimeData):
    p, m = d.p, d.m
    out = []
    inner = Fr(0)
    for r in range(1, m + 1):
        inner += Fr(1, r * (2 * r - 1))
        out.append(Comparison(f"r={r}", H(m) - _sum(Fr(1, k + r) for k in range(1, m + 1)), -inner))
    return out


@check("CHK-P13", "(p-13)", r"-2+\frac1x+2E_{p-3}", 1, uses_x=True,
       doc="The printed left side 2 sum 4^k/(2k-1) drops the C(2k,k) of the preceding display; "
           "checked with it restored, other readings reported in the note.")
def _p13(d: PrimeData):
    a = d.a
    rhs = -2 + Fr(1, d.x) + 2 * d.euler - Fr(1, 2) * d.sign * T(d.b)
    restored = 2 * _sum(Fr(4**k, (2 * k - 1) * C(2 * k, k)) for k in range(1, a + 1))
    verbatim = 2 * _sum(Fr(4**k, 2 * k - 1) for k in range(1, a + 1))
    with_k = 2 * _split_sum(d)
    return [
        Comparison("p-13 with C(2k,k)", restored, rhs),
        Comparison("verbatim", verbatim, rhs, reading="verbatim 4^k/(2k-1)"),
        Comparison("k C(2k,k)", with_k, rhs, reading="4^k/((2k-1)k C(2k,k))"),
    ]


@check("CHK-HENG-P", "(heng) at n=(p-1)/3", r"\equiv-2+\frac{2}{\binom{\frac{p-1}2}{\frac{p-1}3}}\equiv-2+\frac1x\pmod p",
       1, uses_x=True)
def _heng_p(d: PrimeData):
    lhs = _sum(Fr(4**k, k * C(2 * k, k)) for k in range(1, d.a + 1))
    return [
        Comparison("via C(m,a)", lhs, -2 + Fr(2, C(d.m, d.a))),
        Comparison("via x", lhs, -2 + Fr(1, d.x)),
    ]


@check("CHK-2K1K-P", "(2k-1k) combined with (p-13)",
       r"\equiv2E_{p-3}-\frac12(-1)^{\frac{p-1}2}\sum_{k=1}^{\frac{p-1}6}\frac{4^k}{k^2\binom{2k}k}\pmod p", 1)
def _2k1k_p(d: PrimeData):
    return [Comparison("2k-1k", _split_sum(d), 2 * d.euler - Fr(1, 2) * d.sign * T(d.b))]


@check("CHK-EASY", "(easy)", r"-2+2(-1)^{\frac{p-1}2}\pmod p", 1)
def _easy(d: PrimeData):
    return [Comparison("easy", _sum(Fr(4**j, j * C(2 * j, j)) for j in range(1, d.m + 1)), Fr(-2 + 2 * d.sign))]


@check("CHK-P133J1", "(p-133j-1)", r"-2+\frac1x+\frac13\binom{\frac{p-1}2}{\frac{p-1}3}", 1, uses_x=True)
def _p133j1(d: PrimeData):
    m, a, x = d.m, d.a, d.x
    lhs = 3 * _sum(Fr(4**j, (3 * j - 1) * C(2 * j, j)) for j in range(1, a + 1))
    shifted = _sum(Fr(4**j, (j + a) * C(2 * j, j)) for j in range(1, a + 1))
    c = C(Fr(-1, 2), a)
    return [
        Comparison("3j-1 to j+(p-1)/3", lhs, shifted),
        Comparison("via C(-1/2,a)", lhs, -2 + Fr(2) / c + Fr(1, 3) * c * T(a)),
        Comparison("p-133j-1", lhs, -2 + Fr(1, x) + Fr(1, 3) * C(m, a) * T(a)),
    ]


def _upper_3j1(d: PrimeData) -> Fraction:
    """``3 sum_{j=(p+2)/3}^{(p-1)/2} 4^j / ((3j-1) C(2j,j))``."""
    return 3 * _sum(Fr(4**j, (3 * j - 1) * C(2 * j, j)) for j in range((d.p + 2) // 3, d.m + 1))


def _sub_sum(d: PrimeData) -> Fraction:
    c = (d.p + 5) // 6
    return _sum(Fr(4**j, (j + c) * C(2 * j, j)) for j in range(1, c + 1))


@check("CHK-P23", "(p+2/3)", r"2(-1)^{\frac{p-1}2}-\frac1x+\frac13\binom{\frac{p-1}2}{\frac{p-1}3}", 1, uses_x=True)
def _p23(d: PrimeData):
    p, m, a, x = d.p, d.m, d.a, d.x
    s = (-1) ** ((p + 1) // 2)
    c = (p + 5) // 6
    n = (p - 7) // 6
    lhs = _upper_3j1(d)
    return [
        Comparison("reflection j -> (p-1)/2-j", lhs,
                   3 * _sum(Fr((-1) ** (m - j), (3 * (m - j) - 1) * C(m, j)) for j in range(n + 1))),
        Comparison("6j+5 form", lhs, 6 * s * _sum(Fr(4**j, (6 * j + 5) * C(2 * j, j)) for j in range(n + 1))),
        Comparison("j+(p+5)/6 form", lhs, s * _sum(Fr(4**j, (j + c) * C(2 * j, j)) for j in range(n + 1))),
        Comparison("p+2/3", lhs, Fr(6, 5) * s + s * _sub_sum(d) + Fr(3, C(m, a))),
        Comparison("successor display", lhs, 2 * d.sign - Fr(1, x) + Fr(1, 3) * C(m, a) * T(d.b)),
    ]


@check("CHK-P56SUB", "(important) at n=(p+5)/6",
       r"-\frac{16}5+\frac{5(-1)^{\frac{p-1}6}}{2x}-\frac{(-1)^{\frac{p-1}6}}{6x}\sum_{k=1}^{\frac{p-1}6}\frac{4^k}{k^2\binom{2k}k}",
       1, uses_x=True,
       doc="The printed coefficient (-1)^((p-1)/6)/(6x) of the last sum is inconsistent with the next "
           "display; checked with (-1)^((p-1)/6) C((p-1)/2,(p-1)/3)/3, the printed one is a reading.")
def _p56sub(d: PrimeData):
    x = d.x
    sb = (-1) ** d.b
    lhs = _sub_sum(d)
    head = -Fr(16, 5) + Fr(5 * sb, 2 * x)
    return [
        Comparison("coefficient C(m,a)/3", lhs, head - sb * Fr(C(d.m, d.a), 3) * T(d.b)),
        Comparison("verbatim", lhs, head - Fr(sb, 6 * x) * T(d.b), reading="verbatim 1/(6x)"),
    ]


@check("CHK-3J1FULL", "(3j-1) mod p",
       r"\frac13\binom{\frac{p-1}2}{\frac{p-1}3}\left(\sum_{k=1}^{\frac{p-1}3}\frac{4^k}{k^2\binom{2k}k}+\sum_{k=1}^{\frac{p-1}6}\frac{4^k}{k^2\binom{2k}k}\right)",
       1)
def _3j1full(d: PrimeData):
    m, a = d.m, d.a
    both = T(a) + T(d.b)
    three = 3 * _sum(Fr(4**j, (3 * j - 1) * C(2 * j, j)) for j in range(1, m + 1))
    return [
        Comparison("3 sum 4^j/((3j-1)C(2j,j))", three, -2 + 2 * d.sign + Fr(1, 3) * C(m, a) * both),
        Comparison("3j1full", _minus4_rest(d) / d.p**2, Fr(1, 3) * C(m, a) * both),
    ]


def _binexp(p: int, n: int) -> Fraction:
    return 1 + p * H(n) + Fr(p * p, 2) * (H(n) ** 2 - H2(n))


@check("CHK-BINEXP-A", "C(p+(2p-2)/3) expansion",
       r"1+pH_{\frac{2p-2}3}+\frac{p^2}2\left(H_{\frac{2p-2}3}^2-H_{\frac{2p-2}3}^{(2)}\right)", 3,
       doc="Printed as C(p+(2p-2)/3, (p-1)/3); the expansion and S_3 need the lower index (2p-2)/3.")
def _binexp_a(d: PrimeData):
    p, a = d.p, d.a
    return [
        Comparison("C(p+2a,2a)", Fr(C(p + 2 * a, 2 * a)), _binexp(p, 2 * a)),
        Comparison("verbatim", Fr(C(p + 2 * a, a)), _binexp(p, 2 * a), reading="verbatim C(p+2a,a)"),
    ]


@check("CHK-BINEXP-B", "C(p+(p-1)/3) expansion",
       r"1+pH_{\frac{p-1}3}+\frac{p^2}2\left(H_{\frac{p-1}3}^2-H_{\frac{p-1}3}^{(2)}\right)", 3)
def _binexp_b(d: PrimeData):
    p, a = d.p, d.a
    return [Comparison("C(p+a,a)", Fr(C(p + a, a)), _binexp(p, a))]


@check("CHK-BINDIFF", "binomial difference", r"p^2\left(\frac{p}3\right)B_{p-2}\left(\frac13\right)\pmod{p^3}", 3)
def _bindiff(d: PrimeData):
    p, a = d.p, d.a
    diff = Fr(C(p + 2 * a, 2 * a) - C(p + a, a))
    return [
        Comparison("first step", diff, p * (H(2 * a) - H(a)) + Fr(p * p, 2) * (H2(a) - H2(2 * a))),
        Comparison("bindiff", diff, p * p * d.bern),
        Comparison("verbatim", Fr(C(p + 2 * a, a) - C(p + a, a)), p * p * d.bern, reading="verbatim C(p+2a,a)"),
    ]


@check("CHK-2PH", "2p(H difference)", r"-p^2\left(\frac{p}3\right)B_{p-2}\left(\frac13\right)", 3)
def _2ph(d: PrimeData):
    p, a = d.p, d.a
    return [Comparison("2ph", 2 * p * (H(a) - H(2 * a)), -p * p * d.bern)]


@check("CHK-S5", "S5", r"S_5\equiv0\pmod{p^3}", 3)
def _s5(d: PrimeData):
    p, m, a = d.p, d.m, d.a
    tail = 2 * p * C(m, a) * (H(a) - H(2 * a))
    expanded = C(Fr(-1, 2), a) * C(p - 1, a) * (C(p + 2 * a, 2 * a) - C(p + a, a)) + tail
    printed = C(Fr(-1, 2), a) * C(p - 1, a) * (C(p + 2 * a, a) - C(p + a, a)) + tail
    return [
        Comparison("expanded form", _S5(d), expanded, exact=True),
        Comparison("S5", _S5(d), Fr(0)),
        Comparison("verbatim", printed, Fr(0), reading="verbatim C(p+2a,a)"),
    ]


@check("CHK-ZHUP3", "(zhup3)", r"\equiv S_5\pmod{p^3}", 3)
def _zhup3(d: PrimeData):
    s = franel_sums(d.p)
    return [Comparison("zhup3", s["-4"] - s["2"], _S5(d))]


# -- standalone facts ---------------------------------------------------------------


@check("CHK-CENTRALBIN", "C(2k,k) = 0 mod p", r"\binom{2k}k\equiv0\pmod p", 1, applies=_p_gt3, applicability=PGT3)
def _centralbin(d: PrimeData):
    return [Comparison(f"k={k}", Fr(C(2 * k, k)), Fr(0)) for k in range(d.m + 1, d.p)]


@check("CHK-JBIN2P", "jC(2j,j)C(2p-2j,p-j)", r"j\binom{2j}j\binom{2p-2j}{p-j}\equiv2p\pmod{p^2}", 2,
       applies=_p_gt3, applicability=PGT3)
def _jbin2p(d: PrimeData):
    p = d.p
    return [Comparison(f"j={j}", Fr(j * C(2 * j, j) * C(2 * p - 2 * j, p - j)), Fr(2 * p)) for j in range(d.m + 1, p)]


@check("CHK-H2SYM", "H2 reflection", r"H_{p-1-k}^{(2)}\equiv H_k^{(2)}\pmod p", 1, applies=_p_gt3,
       applicability=PGT3,
       doc="As printed the sign is wrong: H2_{p-1-k} = -H2_k (mod p), which is what the binomial "
           "difference step needs. Checked with the minus sign; the printed form is a reading.")
def _h2sym(d: PrimeData):
    p = d.p
    out = [Comparison(f"k={k}", H2(p - 1 - k), -H2(k)) for k in range(p)]
    out += [Comparison(f"k={k}", H2(p - 1 - k), H2(k), reading="verbatim +H2_k") for k in range(p)]
    return out


@check("CHK-RATBIN", "C(2k,k)/(-4)^k", r"\frac{\binom{2k}k}{(-4)^k}\equiv\frac{\binom{(p-1)/2}k}{(1-p\sum_{j=1}^k\frac1{2j-1})}",
       2, applies=_p_gt3, applicability=PGT3)
def _ratbin(d: PrimeData):
    p = d.p
    out = []
    odd = Fr(0)
    for k in range(d.m + 1):
        if k:
            odd += Fr(1, 2 * k - 1)
        out.append(Comparison(f"k={k}", Fr(C(2 * k, k)) / Fr(-4) ** k, C(d.m, k) / (1 - p * odd)))
    return out


# -- p-adic Gamma ----------------------------------------------------------------------


def _gamma_grid(p: int) -> list[Fraction]:
    pts = {Fr(n) for n in range(0, 2 * p + 1)}
    for den in (2, 3, 4, 5, 6):
        if den % p == 0:
            continue
        for num in range(-2 * den, 2 * den + 1):
            pts.add(Fr(num, den))
    return sorted(pts)


def _gval(alpha: Fraction, p: int, k: int) -> int:
    return gamma_p(GammaArgument(alpha, p), k).residue


@check("CHK-GAMMA-REFL", "(Gammap1xx)", r"\Gamma_p(1-x)\Gamma_p(x)=(-1)^{a_0(x)}", 2, applies=_p_gt3,
       applicability=PGT3)
def _gamma_refl(d: PrimeData):
    p = d.p
    return [
        Comparison(f"x={x}", Fr(_gval(1 - x, p, 2) * _gval(x, p, 2)), Fr((-1) ** GammaArgument(x, p).a0))
        for x in _gamma_grid(p)
    ]


@check("CHK-GAMMA-FUNC", "(Gammap)", r"\frac{\Gamma_p(x+1)}{\Gamma_p(x)}", 2, applies=_p_gt3, applicability=PGT3)
def _gamma_func(d: PrimeData):
    p = d.p
    out = []
    for x in _gamma_grid(p):
        factor = -x if x.numerator % p else Fr(-1)
        out.append(Comparison(f"x={x}", Fr(_gval(x + 1, p, 2)), factor * _gval(x, p, 2)))
    return out


@check("CHK-GAMMA-TAYLOR", "(Gammap2)", r"\Gamma_p(\alpha+ps)\equiv\Gamma_p(\alpha)+ps\Gamma^{'}_p(\alpha)\pmod{p^2}",
       2, applies=_p_gt3, applicability=PGT3)
def _gamma_taylor(d: PrimeData):
    p = d.p
    out = []
    for alpha in _gamma_grid(p)[::3]:
        deriv = gamma_p_derivative(GammaArgument(alpha, p))
        for s in (Fr(0), Fr(1), Fr(2), Fr(-1), Fr(1, 2), Fr(2, 3)):
            out.append(Comparison(f"alpha={alpha},s={s}", Fr(_gval(alpha + p * s, p, 2)),
                                  _gval(alpha, p, 2) + p * s * deriv))
    return out


@check("CHK-GAMMA-DERIV", "(Gammap')", r"\equiv1+H_{p-\langle-\alpha\rangle_p-1}\pmod{p}", 1, applies=_p_gt3,
       applicability=PGT3,
       doc="Checked verbatim against the finite-difference derivative. The constant that makes it hold "
           "is Gamma_p'(0) (minus the Wilson quotient), reported as a reading.")
def _gamma_deriv(d: PrimeData):
    p = d.p
    g0 = gamma_p_log_derivative_at_zero(p)
    out = []
    for alpha in [Fr(n) for n in range(p)] + [x for x in _gamma_grid(p) if x.denominator > 1]:
        arg = GammaArgument(alpha, p)
        ratio = Fr(gamma_p_derivative_ratio(arg).residue)
        out.append(Comparison(f"alpha={alpha}", ratio, Fr(derivative_ratio_formula(arg, 1).residue)))
        out.append(Comparison(f"alpha={alpha}", ratio, Fr(derivative_ratio_formula(arg, g0).residue),
                              reading="constant Gamma_p'(0)"))
    return out


# -- public API ---------------------------------------------------------------------------


def list_checks() -> list[CheckDefinition]:
    return [REGISTRY[k] for k in sorted(REGISTRY)]


def get_check(check_id: str) -> CheckDefinition:
    try:
        return REGISTRY[check_id]
    except KeyError:
        raise UnknownCheck(check_id) from None


def _reduce(value: Fraction, p: int, k: int) -> int | None:
    try:
        return reduce_mod_pk(value, p, k).residue
    except NonIntegral:
        return None


def _outcome(c: Comparison, p: int, k: int) -> tuple[bool, int | None, int | None]:
    lhs, rhs = _reduce(c.lhs, p, k), _reduce(c.rhs, p, k)
    if c.exact:
        return c.lhs == c.rhs, lhs, rhs
    return lhs is not None and lhs == rhs, lhs, rhs


def run_check(check_id: str, p: int, rep: PrimeRepresentation | None = None) -> CheckResult:
    """Evaluate one check at one prime.

    Raises :class:`NotApplicable` when ``p`` falls outside the check's hypotheses.
    ``rep`` overrides the representation of ``p`` (only useful for probing).
    """
    d = get_check(check_id)
    if not d.applies(p):
        raise NotApplicable(f"{check_id} requires {d.applicability}; got p = {p}")
    if rep is None and p > 3 and p % 3 == 1:
        rep = represent(p)
    data = PrimeData(p, rep)
    comparisons = d.evaluate(data)

    shown = None
    first_fail = None
    readings: dict[str, list] = {}
    for c in comparisons:
        k = c.exponent or d.exponent
        ok, lhs, rhs = _outcome(c, p, k)
        if c.reading is not None:
            state = readings.setdefault(c.reading, [True, None])
            if not ok and state[0]:
                state[0], state[1] = False, c.label
            continue
        if shown is None:
            shown = (lhs, rhs, p**k)
        if not ok and first_fail is None:
            first_fail = c
            shown = (lhs, rhs, p**k)

    notes = []
    if first_fail is not None:
        text = f"first failure at {first_fail.label}"
        if shown[0] is None or shown[1] is None:
            text += " (not p-integral)"
        notes.append(text)
    for name in sorted(readings):
        ok, label = readings[name]
        notes.append(f"reading '{name}': " + ("pass" if ok else f"FAIL at {label}"))

    assert shown is not None, f"{check_id} produced no designated comparison at p = {p}"
    x = y = None
    if d.uses_x and rep is not None:
        x, y = rep.x, rep.y
    return CheckResult(
        check=check_id,
        p=p,
        x=x,
        y=y,
        lhs=shown[0],
        rhs=shown[1],
        modulus=shown[2],
        passed=first_fail is None,
        note="; ".join(notes) or None,
    )
