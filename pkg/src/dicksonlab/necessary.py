"""Necessary conditions on n for E_n(1, x) to permute F_q, and the lemmas behind them.

Each filter returns ``(applicable, verdict)``: a filter whose hypotheses fail
at (n, q) says nothing, which is different from saying "pass".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, gcd

from .dickson import f_int
from .exceptions import HypothesisViolation
from .field import FieldElement, FieldSpec
from .quad import QuadElement

FILTERS = ("thm31", "thm33", "thm34_35")

_PERIOD6 = (1, 1, 0, -1, -1, 0)


def period6_value(n: int) -> int:
    """E_n(1, 1) as an integer in {-1, 0, 1}; the sequence has period 6."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _PERIOD6[n % 6]


def thm31_check(n: int, p: int) -> bool:
    """p = 2: 3 | n + 1. Odd p: n not 0 or 1 mod 6. Compares E_n(1, 0) with E_n(1, 1)."""
    if p == 2:
        return (n + 1) % 3 == 0
    return n % 6 not in (0, 1)


def thm33_check(n: int, q: int, p: int) -> tuple[bool, bool]:
    """For n = 2m + 1 with p not dividing m + 1: m odd and gcd(m, q - 1) = 1."""
    if p == 2 or n % 2 == 0:
        return False, False
    m = (n - 1) // 2
    if (m + 1) % p == 0:
        return False, False
    return True, m % 2 == 1 and gcd(m, q - 1) == 1


def thm34_35_check(n: int, q: int, p: int) -> tuple[bool, bool]:
    """For p > 3 and n = 1 mod 4: gcd(n + 1, q^2 - 1) is 6 if 3 | n + 1, else 2."""
    if p <= 3 or n % 4 != 1:
        return False, False
    target = 6 if (n + 1) % 3 == 0 else 2
    return True, gcd(n + 1, q * q - 1) == target


def lemma31_verify(n: int, q: int) -> bool:
    """gcd(n+1, q-1) * gcd(n+1, q+1) == 2 gcd(n+1, q^2-1) for odd q and n = 1 mod 4."""
    if q % 2 == 0 or n < 1 or n % 4 != 1:
        raise HypothesisViolation("need odd q and n = 1 (mod 4)")
    return gcd(n + 1, q - 1) * gcd(n + 1, q + 1) == 2 * gcd(n + 1, q * q - 1)


def lemma32_verify(theta: QuadElement, spec: FieldSpec) -> bool:
    """With y = (theta+1)/(theta-1): y^2 in F_q  <=>  theta^(q+1) = 1 or theta^(q-1) = 1."""
    F = spec.quad
    th = theta.pair
    if th in ((0, 0), (1, 0)):
        raise HypothesisViolation("theta must avoid 0 and 1")
    q = spec.q
    y = F.div(F.add(th, (1, 0)), F.sub(th, (1, 0)))
    lhs = F.mul(y, y)[1] == 0
    rhs = F.pow(th, q + 1) == (1, 0) or F.pow(th, q - 1) == (1, 0)
    return lhs == rhs


def self_reciprocal_check(m: int, x: FieldElement) -> bool:
    """f_{2m+2}(x) == x^m f_{2m+2}(1/x) for x != 0."""
    if not x:
        raise HypothesisViolation("x must be nonzero")
    spec = x.spec
    lhs = f_int(spec, 2 * m + 2, x.value)
    rhs = spec.mul(spec.pow(x.value, m), f_int(spec, 2 * m + 2, spec.inv(x.value)))
    return lhs == rhs


def f_at_minus_one(m: int) -> int:
    """f_{2m+2}(-1) over the integers; vanishes exactly when m is odd."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return sum((-1) ** j * comb(2 * m + 2, 2 * j + 1) for j in range(m + 1))


def f_at_one(m: int) -> int:
    """f_{2m+2}(1) over the integers (equals 2^(2m+1))."""
    return sum(comb(2 * m + 2, 2 * j + 1) for j in range(m + 1))


@dataclass(frozen=True)
class FilterReport:
    n: int
    applicable: frozenset[str] = field(default_factory=frozenset)
    passed: frozenset[str] = field(default_factory=frozenset)

    @property
    def overall(self) -> bool:
        return self.applicable == self.passed

    def flags(self) -> dict[str, tuple[bool, bool]]:
        return {name: (name in self.applicable, name in self.passed) for name in FILTERS}


def filter_report(n: int, q: int, p: int) -> FilterReport:
    results = {
        "thm31": (True, thm31_check(n, p)),
        "thm33": thm33_check(n, q, p),
        "thm34_35": thm34_35_check(n, q, p),
    }
    applicable = frozenset(k for k, (app, _) in results.items() if app)
    passed = frozenset(k for k, (app, ok) in results.items() if app and ok)
    return FilterReport(n, applicable, passed)


def filter_candidates(q: int, p: int, n_max: int) -> list[FilterReport]:
    """Reports for n = 1 .. n_max. Survivors always include every true PP exponent."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return [filter_report(n, q, p) for n in range(1, n_max + 1)]
