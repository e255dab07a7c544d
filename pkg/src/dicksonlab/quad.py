"""The quadratic extension F_{q^2} = F_q[u]/(u^2 - nu), nu a non-square of F_q.

F_q sits inside as the elements with zero u-coordinate, so moving between
the two fields is free. Frobenius ``z -> z^q`` is conjugation
``c0 + c1 u -> c0 - c1 u`` because ``u^q = nu^((q-1)/2) u = -u``.
"""

from __future__ import annotations

from typing import Iterator

from .exceptions import CharacteristicError, FieldError
from .field import FieldElement, FieldSpec, _check_same
from .numtheory import prime_factors

Pair = tuple[int, int]

# F_{q^2} log tables are built up to this many elements
TABLE_MAX = 2**16


class QuadField:
    """Pair-level arithmetic on F_{q^2}; pairs hold F_q encodings."""

    def __init__(self, base: FieldSpec):
        if base.p == 2:
            raise CharacteristicError("F_q[u]/(u^2 - nu) needs odd characteristic")
        self.base = base
        self.nu = base.nu
        self.size = base.q * base.q
        self._table_cache: tuple | None | bool = False

    def add(self, a: Pair, b: Pair) -> Pair:
        f = self.base
        return f.add(a[0], b[0]), f.add(a[1], b[1])

    def sub(self, a: Pair, b: Pair) -> Pair:
        f = self.base
        return f.sub(a[0], b[0]), f.sub(a[1], b[1])

    def neg(self, a: Pair) -> Pair:
        return self.base.neg(a[0]), self.base.neg(a[1])

    def mul(self, a: Pair, b: Pair) -> Pair:
        f = self.base
        a0, a1 = a
        b0, b1 = b
        if a1 == 0 and b1 == 0:
            return f.mul(a0, b0), 0
        c0 = f.add(f.mul(a0, b0), f.mul(self.nu, f.mul(a1, b1)))
        c1 = f.add(f.mul(a0, b1), f.mul(a1, b0))
        return c0, c1

    def norm(self, a: Pair) -> int:
        f = self.base
        return f.sub(f.mul(a[0], a[0]), f.mul(self.nu, f.mul(a[1], a[1])))

    def inv(self, a: Pair) -> Pair:
        f = self.base
        n = self.norm(a)
        if n == 0:
            raise ZeroDivisionError("inverse of zero in F_{q^2}")
        ninv = f.inv(n)
        return f.mul(a[0], ninv), f.neg(f.mul(a[1], ninv))

    def div(self, a: Pair, b: Pair) -> Pair:
        return self.mul(a, self.inv(b))

    def pow(self, a: Pair, n: int) -> Pair:
        """a^n with 0^0 = 1; log-table lookup when the tables exist."""
        tables = self._tables()
        if tables is None:
            return self._pow_sm(a, n)
        exp, log = tables
        if a == (0, 0):
            if n < 0:
                raise ZeroDivisionError("negative power of zero in F_{q^2}")
            return (1, 0) if n == 0 else (0, 0)
        return exp[log[self.encode(a)] * n % (self.size - 1)]

    def _pow_sm(self, a: Pair, n: int) -> Pair:
        if n < 0:
            a, n = self.inv(a), -n
        result: Pair = (1, 0)
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def _tables(self) -> tuple[list[Pair], list[int]] | None:
        # exp/log over a generator of F_{q^2}^*, built on first use
        if self._table_cache is False:
            if self.size > TABLE_MAX:
                self._table_cache = None
            else:
                order = self.size - 1
                cofactors = [order // r for r in prime_factors(order)]
                g = next(
                    z
                    for z in self.pairs()
                    if z != (0, 0) and all(self._pow_sm(z, c) != (1, 0) for c in cofactors)
                )
                exp: list[Pair] = []
                log = [0] * self.size
                z: Pair = (1, 0)
                for k in range(order):
                    exp.append(z)
                    log[self.encode(z)] = k
                    z = self.mul(z, g)
                self._table_cache = (exp, log)
        return self._table_cache

    def conj(self, a: Pair) -> Pair:
        return a[0], self.base.neg(a[1])

    def encode(self, a: Pair) -> int:
        return a[0] + self.base.q * a[1]

    def decode(self, v: int) -> Pair:
        c1, c0 = divmod(v, self.base.q)
        return c0, c1

    def pairs(self) -> Iterator[Pair]:
        q = self.base.q
        for v in range(q * q):
            yield v % q, v // q

    def sqrt(self, a: Pair) -> Pair | None:
        """A square root of a, the enumeration-smaller of +-s, or None."""
        f = self.base
        a0, a1 = a
        if a1 == 0:
            r = f.sqrt(a0)
            if r is not None:
                root = (r, 0)
            else:
                # a0/nu is a square of F_q, and u^2 = nu
                root = (0, f.sqrt(f.div(a0, self.nu)))
        else:
            s = f.sqrt(self.norm(a))
            if s is None:
                return None
            inv2 = f.half()
            for cand in (s, f.neg(s)):
                x0 = f.sqrt(f.mul(f.add(a0, cand), inv2))
                if x0:
                    root = (x0, f.div(a1, f.add(x0, x0)))
                    break
            else:
                raise AssertionError("norm is a square but no root found")
        if self.mul(root, root) != a:
            raise AssertionError(f"sqrt self-check failed for {a}")
        other = self.neg(root)
        return min(root, other, key=self.encode)

    def render(self, a: Pair) -> str:
        return f"{self.base.render(a[0])}|{self.base.render(a[1])}"


class QuadElement:
    """c0 + c1*u in F_{q^2}; c0, c1 are F_q encodings."""

    __slots__ = ("field", "c0", "c1")

    def __init__(self, field: QuadField, c0: int, c1: int = 0):
        self.field = field
        self.c0 = c0
        self.c1 = c1

    @classmethod
    def lift(cls, x: FieldElement) -> QuadElement:
        return cls(x.spec.quad, x.value, 0)

    @property
    def pair(self) -> Pair:
        return self.c0, self.c1

    @property
    def spec(self) -> FieldSpec:
        return self.field.base

    def in_base(self) -> bool:
        return self.c1 == 0

    def to_base(self) -> FieldElement:
        if self.c1:
            raise FieldError(f"{self} does not lie in F_{self.spec.q}")
        return FieldElement(self.spec, self.c0)

    def _other(self, other) -> Pair:
        if isinstance(other, QuadElement):
            _check_same(self.spec, other.spec)
            return other.pair
        if isinstance(other, FieldElement):
            _check_same(self.spec, other.spec)
            return other.value, 0
        if isinstance(other, int):
            return other % self.spec.p, 0
        return NotImplemented

    def _wrap(self, pr: Pair) -> QuadElement:
        return QuadElement(self.field, pr[0], pr[1])

    def __add__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else self._wrap(self.field.add(self.pair, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else self._wrap(self.field.sub(self.pair, b))

    def __rsub__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else self._wrap(self.field.sub(b, self.pair))

    def __mul__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else self._wrap(self.field.mul(self.pair, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else self._wrap(self.field.div(self.pair, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        return b if b is NotImplemented else self._wrap(self.field.div(b, self.pair))

    def __neg__(self):
        return self._wrap(self.field.neg(self.pair))

    def __pow__(self, n: int):
        return self._wrap(self.field.pow(self.pair, n))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (QuadElement, FieldElement, int)):
            return self.pair == self._other(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.pair)

    def __str__(self) -> str:
        return self.field.render(self.pair)

    def __repr__(self) -> str:
        return f"GF({self.spec.q}^2)({self.c0}, {self.c1})"


def quad_elements(spec: FieldSpec) -> list[QuadElement]:
    F = spec.quad
    return [QuadElement(F, c0, c1) for c0, c1 in F.pairs()]


def sqrt_in_q2(a: QuadElement | FieldElement) -> QuadElement | None:
    """Square root in F_{q^2}; every element of F_q has one."""
    if isinstance(a, FieldElement):
        a = QuadElement.lift(a)
    r = a.field.sqrt(a.pair)
    return None if r is None else QuadElement(a.field, *r)


def solve_parameterization(x: FieldElement) -> tuple[QuadElement, QuadElement]:
    """Roots (y, 1 - y) of y(1 - y) = x, with y = (1 + sqrt(1 - 4x)) / 2.

    At x = 1/4 both roots equal 1/2.
    """
    spec = x.spec
    if spec.p == 2:
        raise CharacteristicError("the y-parameterization divides by 2")
    F = spec.quad
    disc = spec.sub(1, spec.mul(spec.embed(4), x.value))
    s = F.sqrt((disc, 0))
    half = spec.half()
    y = (spec.mul(spec.add(1, s[0]), half), spec.mul(s[1], half))
    other = F.sub((1, 0), y)
    return QuadElement(F, *y), QuadElement(F, *other)
