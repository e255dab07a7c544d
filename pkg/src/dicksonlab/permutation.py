"""Permutation tests for maps of F_q, in particular x -> E_n(1, x).

Three independent deciders:

* exhaustive image counting,
* the power-sum criterion: f permutes F_q iff sum_a f(a)^i is 0 for
  0 <= i <= q-2 and -1 for i = q-1,
* the 2-to-1 criterion on (F_q u V) minus {1/2}, where
  V = {z in F_{q^2} : z^q = 1 - z}.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Sequence

from .dickson import quarter_value_int
from .exceptions import CharacteristicError, HypothesisViolation
from .field import FieldElement, FieldSpec
from .quad import QuadElement

Witness = tuple[FieldElement, FieldElement] | FieldElement | int | tuple[QuadElement, ...] | None


@dataclass(frozen=True)
class PPVerdict:
    """Outcome of one permutation test.

    ``witness`` is None when ``is_pp`` holds. Otherwise: a colliding pair for
    ``exhaustive``; the least failing exponent i for ``power_sum``; for
    ``two_to_one`` either the points of a fiber whose size is not 2 or the
    single point hitting the forbidden value.
    """

    is_pp: bool
    method: str
    witness: Witness = None

    def __bool__(self) -> bool:
        return self.is_pp


Callback = Callable[[FieldElement], FieldElement]


def _images(f: Callback, spec: FieldSpec) -> list[int]:
    out = []
    for v in range(spec.q):
        y = f(FieldElement(spec, v))
        out.append(y.value)
    return out


def verdict_from_images(images: Sequence[int], spec: FieldSpec) -> PPVerdict:
    """Exhaustive decision from the image list ``images[x]`` (encodings)."""
    seen: dict[int, int] = {}
    for x, y in enumerate(images):
        if y in seen:
            pair = (FieldElement(spec, seen[y]), FieldElement(spec, x))
            return PPVerdict(False, "exhaustive", pair)
        seen[y] = x
    return PPVerdict(True, "exhaustive")


def is_pp_exhaustive(f: Callback, spec: FieldSpec) -> PPVerdict:
    """Count images; reports the first collision in enumeration order."""
    return verdict_from_images(_images(f, spec), spec)


def power_sum_from_images(images: Sequence[int], spec: FieldSpec) -> PPVerdict:
    q = spec.q
    add, mul = spec.add, spec.mul
    minus_one = spec.neg(1)
    powers = [1] * q  # f(a)^i, with 0^0 = 1
    for i in range(q):
        if i:
            powers = [mul(w, y) for w, y in zip(powers, images)]
        total = 0
        for w in powers:
            total = add(total, w)
        if total != (minus_one if i == q - 1 else 0):
            return PPVerdict(False, "power_sum", i)
    return PPVerdict(True, "power_sum")


def is_pp_power_sum(f: Callback, spec: FieldSpec) -> PPVerdict:
    """Power-sum criterion; the witness is the least violating exponent."""
    return power_sum_from_images(_images(f, spec), spec)


# ---------------------------------------------------------------------------
# the 2-to-1 criterion


@dataclass(frozen=True)
class VSet:
    spec: FieldSpec
    members: tuple[QuadElement, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def base_members(self) -> list[QuadElement]:
        """Members with zero u-coordinate."""
        return [z for z in self.members if z.in_base()]


# full scan of F_{q^2} up to this size; beyond it V = {1/2 + c u}
SCAN_LIMIT = 2**16


def build_V(spec: FieldSpec) -> VSet:
    """All z in F_{q^2} with z^q = 1 - z, in enumeration order."""
    if spec.p == 2:
        raise CharacteristicError("V needs 1/2, which does not exist in characteristic 2")
    F = spec.quad
    q = spec.q
    if q * q <= SCAN_LIMIT:
        members = [
            QuadElement(F, *z) for z in F.pairs() if F.pow(z, q) == F.sub((1, 0), z)
        ]
    else:
        half = spec.half()
        members = [QuadElement(F, half, c) for c in range(q)]
    return VSet(spec, tuple(members))


def e1_closed_form(n: int, y: tuple[int, int], spec: FieldSpec) -> tuple[int, int]:
    """(y^(n+1) - (1-y)^(n+1)) / (2y - 1) in F_{q^2}; y != 1/2."""
    F = spec.quad
    ybar = F.sub((1, 0), y)
    num = F.sub(F.pow(y, n + 1), F.pow(ybar, n + 1))
    return F.div(num, F.sub(F.add(y, y), (1, 0)))


def thm23_domain(spec: FieldSpec, vset: VSet | None = None) -> list[tuple[int, int]]:
    """(F_q u V) minus {1/2}, F_q first; always 2q - 2 points."""
    vset = vset or build_V(spec)
    half = spec.half()
    dom = [(v, 0) for v in range(spec.q) if v != half]
    dom += [z.pair for z in vset if z.pair != (half, 0)]
    return dom


def check_thm23(n: int, spec: FieldSpec, vset: VSet | None = None) -> PPVerdict:
    """E_n(1, .) permutes F_q iff y -> f(y) is 2-to-1 on the domain and never hits (n+1)/2^n."""
    if spec.p == 2:
        raise CharacteristicError("the 2-to-1 criterion needs odd characteristic")
    F = spec.quad
    forbidden = (quarter_value_int(spec, n), 0)
    fibers: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for y in thm23_domain(spec, vset):
        val = e1_closed_form(n, y, spec)
        if val == forbidden:
            return PPVerdict(False, "two_to_one", (QuadElement(F, *y),))
        fibers.setdefault(val, []).append(y)
    for pts in fibers.values():
        if len(pts) != 2:
            return PPVerdict(False, "two_to_one", tuple(QuadElement(F, *y) for y in pts))
    return PPVerdict(True, "two_to_one")


# ---------------------------------------------------------------------------
# closed-form classifications


def classify_E_a0(n: int, q: int) -> bool:
    """E_n(0, x) permutes F_q iff n = 2k with gcd(k, q - 1) = 1 (and k >= 1)."""
    if n % 2:
        return False
    k = n // 2
    # k = 0 is the constant 1, never a permutation although gcd(0, 1) = 1 when q = 2
    return k >= 1 and gcd(k, q - 1) == 1


def corollary21_check(k: int, spec: FieldSpec) -> bool:
    """E_{p^k - 1}(1, x) permutes F_q iff gcd((p^k - 1)/2, q - 1) = 1, for 1 <= k <= e."""
    if spec.p == 2:
        raise CharacteristicError("corollary needs odd characteristic")
    if not 1 <= k <= spec.e:
        raise HypothesisViolation(f"k must lie in [1, {spec.e}]")
    return gcd((spec.p**k - 1) // 2, spec.q - 1) == 1
