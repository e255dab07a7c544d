"""Evaluation of the Dickson families and of the reversed second-kind E_n(1, x).

``E_n(1, x)`` is reachable by five independent routes:

* the definitional binomial sum (:func:`eval_direct`),
* the three-term recursion ``E_n = E_{n-1} - x E_{n-2}`` (:func:`eval_E1_recursive`),
* the closed form ``(y^(n+1) - (1-y)^(n+1)) / (2y - 1)`` with ``x = y(1-y)``,
  computed in F_{q^2} (:func:`eval_E1_functional`),
* ``2^(-n) f_{n+1}(1 - 4x)`` (:func:`eval_E1_via_f`),
* the n-th coefficient of ``1 / (1 - t + x t^2)`` (:func:`genfun_coeffs`).

Routes that divide by 2 exist only in odd characteristic. In characteristic
2 one has ``E_n(1, x(1-x)) = x^(n+1) + (1-x)^(n+1) = D_{n+1}(1, x(1-x))``;
that relation is not exposed as an operation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .exceptions import CharacteristicError, HypothesisViolation
from .field import FieldElement, FieldSpec, _check_same
from .numtheory import binom_mod_p
from .quad import solve_parameterization
from .series import CoeffSeq

DIRECT_MAX = 10**6
RECURSIVE_MAX = 10**7
GENFUN_MAX = 10**6


class Family(enum.Enum):
    D_FIRST_KTH = "D_first_kind_kth"  # D_{n,k}(x, a)
    D_REVERSED_KTH = "D_reversed_kth"  # D_{n,k}(a, x)
    E_SECOND = "E_second"  # E_n(x, a)
    E_REVERSED = "E_reversed"  # E_n(a, x)


@dataclass(frozen=True)
class FamilyTag:
    family: Family
    k: int = 1

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("kind parameter k must be >= 0")
        if self.family in (Family.E_SECOND, Family.E_REVERSED) and self.k != 1:
            raise ValueError("second-kind families have k = 1")


E_REVERSED = FamilyTag(Family.E_REVERSED)
E_SECOND = FamilyTag(Family.E_SECOND)


@dataclass(frozen=True)
class EvalRequest:
    n: int
    a: FieldElement
    x: FieldElement
    family: FamilyTag = E_REVERSED

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        _check_same(self.a.spec, self.x.spec)


def _require_odd(spec: FieldSpec, what: str) -> None:
    if spec.p == 2:
        raise CharacteristicError(f"{what} needs odd characteristic")


# ---------------------------------------------------------------------------
# definitional sums


def dickson_coeff(n: int, i: int, k: int, p: int) -> int:
    """(n - k i)/(n - i) * C(n - i, i) mod p, as the integer C(n-i, i) - (k-1) C(n-i-1, i-1).

    The rational factor never needs a modular division this way; at n = 0 the
    value is 2 - k.
    """
    if n == 0:
        return (2 - k) % p
    c = binom_mod_p(n - i, i, p)
    if k != 1 and i >= 1:
        c -= (k - 1) * binom_mod_p(n - i - 1, i - 1, p)
    return c % p


def _dickson_sum(spec: FieldSpec, n: int, k: int, lead: int, param: int) -> int:
    # sum_i coeff_i * (-param)^i * lead^(n - 2i)
    p = spec.p
    mparam = spec.neg(param)
    if lead == 0:
        if n % 2:
            return 0
        return spec.mul(spec.embed(dickson_coeff(n, n // 2, k, p)), spec.pow(mparam, n // 2))
    z = spec.mul(mparam, spec.pow(lead, -2))
    total, zi = 0, 1
    add, mul, embed = spec.add, spec.mul, spec.embed
    for i in range(n // 2 + 1):
        c = dickson_coeff(n, i, k, p)
        if c:
            total = add(total, mul(embed(c), zi))
        zi = mul(zi, z)
    return mul(total, spec.pow(lead, n))


def eval_direct(req: EvalRequest) -> FieldElement:
    """Evaluate the requested family by its definitional binomial sum."""
    if req.n > DIRECT_MAX:
        raise ValueError(f"n = {req.n} is too large for direct evaluation; use eval_E1_functional")
    spec = req.a.spec
    fam, k = req.family.family, req.family.k
    a, x = req.a.value, req.x.value
    if fam is Family.E_REVERSED:
        v = _dickson_sum(spec, req.n, 1, a, x)
    elif fam is Family.E_SECOND:
        v = _dickson_sum(spec, req.n, 1, x, a)
    elif fam is Family.D_REVERSED_KTH:
        v = _dickson_sum(spec, req.n, k, a, x)
    else:
        v = _dickson_sum(spec, req.n, k, x, a)
    return FieldElement(spec, v)


def E(n: int, a: FieldElement, x: FieldElement) -> FieldElement:
    """Shorthand for the direct evaluation of E_n(a, x)."""
    return eval_direct(EvalRequest(n, a, x))


# ---------------------------------------------------------------------------
# E_n(1, x) routes


def e1_recursive_int(spec: FieldSpec, n: int, x: int) -> int:
    prev, cur = 1, 1  # E_0, E_1
    if n == 0:
        return 1
    sub, mul = spec.sub, spec.mul
    for _ in range(n - 1):
        prev, cur = cur, sub(cur, mul(x, prev))
    return cur


def eval_E1_recursive(n: int, x: FieldElement) -> FieldElement:
    if n > RECURSIVE_MAX:
        raise ValueError(f"n = {n} is too large for the recursion; use eval_E1_functional")
    return FieldElement(x.spec, e1_recursive_int(x.spec, n, x.value))


def e1_sequences(spec: FieldSpec, n_max: int) -> list[list[int]]:
    """table[x][n] = E_n(1, x) for every x encoding and 0 <= n <= n_max."""
    sub, mul = spec.sub, spec.mul
    table = []
    for x in range(spec.q):
        seq = [1, 1]
        for _ in range(n_max - 1):
            seq.append(sub(seq[-1], mul(x, seq[-2])))
        table.append(seq[: n_max + 1])
    return table


def quarter_value_int(spec: FieldSpec, n: int) -> int:
    p = spec.p
    return (n + 1) * pow(2, -n, p) % p


def quarter_value(n: int, spec: FieldSpec) -> FieldElement:
    """E_n(1, 1/4) = (n + 1) / 2^n, reducing n mod p and mod p - 1 separately."""
    _require_odd(spec, "quarter_value")
    return FieldElement(spec, quarter_value_int(spec, n))


def e1_functional_int(spec: FieldSpec, n: int, x: int) -> int:
    if x == spec.quarter():
        return quarter_value_int(spec, n)
    y, ybar = solve_parameterization(FieldElement(spec, x))
    F = spec.quad
    num = F.sub(F.pow(y.pair, n + 1), F.pow(ybar.pair, n + 1))
    den = F.sub(F.add(y.pair, y.pair), (1, 0))
    c0, c1 = F.div(num, den)
    if c1:
        raise AssertionError(f"E_{n}(1, {spec.render(x)}) left F_q")
    return c0


def eval_E1_functional(n: int, x: FieldElement) -> FieldElement:
    """E_n(1, x) in O(log n) through the y-parameterization; any n >= 0."""
    _require_odd(x.spec, "eval_E1_functional")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return FieldElement(x.spec, e1_functional_int(x.spec, n, x.value))


def f_int(spec: FieldSpec, m: int, x: int) -> int:
    p = spec.p
    add, mul, embed = spec.add, spec.mul, spec.embed
    total, xj = 0, 1
    for j in range((m - 1) // 2 + 1):
        c = binom_mod_p(m, 2 * j + 1, p)
        if c:
            total = add(total, mul(embed(c), xj))
        xj = mul(xj, x)
    return total


def eval_f(m: int, x: FieldElement) -> FieldElement:
    """f_m(x) = sum_j C(m, 2j+1) x^j."""
    if m > DIRECT_MAX:
        raise ValueError(f"m = {m} is too large for direct evaluation")
    return FieldElement(x.spec, f_int(x.spec, m, x.value))


def eval_E1_via_f(n: int, x: FieldElement) -> FieldElement:
    spec = x.spec
    _require_odd(spec, "eval_E1_via_f")
    if n >= DIRECT_MAX:
        raise ValueError(f"n = {n} is too large for the f-route; use eval_E1_functional")
    arg = spec.sub(1, spec.mul(spec.embed(4), x.value))
    val = f_int(spec, n + 1, arg)
    return FieldElement(spec, spec.mul(val, spec.embed(pow(2, -n, spec.p))))


def eval_E_a0(n: int, x: FieldElement) -> FieldElement:
    """E_n(0, x): zero for odd n, (-x)^k for n = 2k."""
    if n % 2:
        return x.spec.zero
    return FieldElement(x.spec, x.spec.pow(x.spec.neg(x.value), n // 2))


def reduce_index(n: int, q: int) -> int:
    """Representative of n mod q^2 - 1 in [1, q^2 - 1]; n = 0 stays 0.

    Valid for evaluation at x != 1/4 only.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 0
    return (n - 1) % (q * q - 1) + 1


def genfun_coeffs(x: FieldElement, N: int) -> CoeffSeq:
    """Coefficients 0..N of 1 / (1 - t + x t^2)."""
    if N > GENFUN_MAX:
        raise ValueError(f"series order {N} exceeds {GENFUN_MAX}")
    spec = x.spec
    denom = CoeffSeq(spec, (1, spec.neg(1), x.value))
    return denom.inverse(N + 1)


# ---------------------------------------------------------------------------
# identity checks


def identity_thm21(n: int, a: FieldElement, b: FieldElement, x: FieldElement) -> bool:
    """E_n(a, x) == (a/b)^n E_n(b, (b/a)^2 x)."""
    if not a or not b:
        raise HypothesisViolation("a and b must be nonzero")
    lhs = E(n, a, x)
    ratio = b / a
    rhs = (a / b) ** n * E(n, b, ratio * ratio * x)
    return lhs == rhs


def _e1_any(n: int, x: FieldElement) -> FieldElement:
    if n <= RECURSIVE_MAX:
        return eval_E1_recursive(n, x)
    return eval_E1_functional(n, x)


def identity_thm22_frobenius(n: int, r: int, x: FieldElement) -> bool:
    """E_{n p^r - 1}(1, x) == E_{n-1}(1, x)^(p^r) (1 - 4x)^((p^r - 1)/2), gcd(p, n) = 1."""
    spec = x.spec
    _require_odd(spec, "identity_thm22_frobenius")
    p = spec.p
    if n < 1 or r < 1 or gcd(p, n) != 1:
        raise HypothesisViolation("need n >= 1, r >= 1 and gcd(p, n) = 1")
    pr = p**r
    lhs = _e1_any(n * pr - 1, x)
    base = E(n - 1, spec.one, x)
    rhs = base**pr * (1 - 4 * x) ** ((pr - 1) // 2)
    return lhs == rhs


def identity_prop23(k: int, x: FieldElement) -> bool:
    """E_{p^k - 1}(1, x) == (1 - 4x)^((p^k - 1)/2)."""
    spec = x.spec
    _require_odd(spec, "identity_prop23")
    if k < 1:
        raise HypothesisViolation("k must be >= 1")
    pk = spec.p**k
    return _e1_any(pk - 1, x) == (1 - 4 * x) ** ((pk - 1) // 2)
