"""Arithmetic in F_q = F_p[t]/(m(t)).

Elements are encoded as integers ``sum c_i p^i`` where ``c_i`` is the
coefficient of ``t^i``. The encoding doubles as the enumeration order, so
``0, 1, ..., p-1`` are the prime-subfield elements and come first. Hot
loops work on these integers through the ``FieldSpec`` methods; the
``FieldElement`` wrapper is the public, operator-friendly face.

Multiplication, inversion and powering go through exp/log tables over a
primitive element; extension-field addition uses Zech logarithms. All
tables are built once at construction, after which a ``FieldSpec`` is
never mutated.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from typing import Callable, Iterator, Sequence

from .exceptions import CharacteristicError, FieldError, FieldMismatchError, GuardExceeded
from .numtheory import has_root, is_irreducible, is_prime, pmod, pmul, ppowmod, prime_factors

DEFAULT_GUARD = 2**16


def _encode(digits: Sequence[int], p: int) -> int:
    v = 0
    for c in reversed(digits):
        v = v * p + c
    return v


def _decode(v: int, p: int, e: int) -> tuple[int, ...]:
    out = []
    for _ in range(e):
        v, c = divmod(v, p)
        out.append(c)
    return tuple(out)


class FieldSpec:
    """Immutable description of F_{p^e} together with its lookup tables.

    Build through :func:`make_field`, which validates the parameters and
    caches instances.
    """

    def __init__(self, p: int, e: int, modulus: Sequence[int]):
        self.p = p
        self.e = e
        self.modulus = tuple(modulus)
        self.q = q = p**e
        self.order = q - 1

        gen = self._find_generator()
        exp = [0] * (2 * (q - 1) + 1)
        log = [-1] * q
        cur = [1]
        for i in range(q - 1):
            v = _encode(cur, p)
            if log[v] != -1:
                raise FieldError(f"modulus {self.modulus} does not give a field")
            exp[i] = exp[i + q - 1] = v
            log[v] = i
            cur = pmod(pmul(cur, gen, p), list(self.modulus), p)
        exp[2 * (q - 1)] = 1
        self._exp = exp
        self._log = log
        self.generator = _encode(gen, p)
        self._bind_ops()

        self.nu = None
        if p != 2:
            # smallest element whose log is odd, i.e. a non-square
            self.nu = next(v for v in range(1, q) if log[v] % 2 == 1)

    def _find_generator(self) -> list[int]:
        p, q, m = self.p, self.q, list(self.modulus)
        if q == 2:
            return [1]
        factors = prime_factors(q - 1)
        for v in range(2, q):
            g = list(_decode(v, p, self.e))
            while g and g[-1] == 0:
                g.pop()
            if all(ppowmod(g, (q - 1) // r, m, p) != [1] for r in factors):
                return g
        raise FieldError(f"modulus {self.modulus} does not give a field")

    def _bind_ops(self) -> None:
        p, q, n = self.p, self.q, self.q - 1
        exp, log = self._exp, self._log

        def mul(a: int, b: int) -> int:
            if a == 0 or b == 0:
                return 0
            return exp[log[a] + log[b]]

        def inv(a: int) -> int:
            if a == 0:
                raise ZeroDivisionError("inverse of zero in F_%d" % q)
            return exp[n - log[a]]

        def power(a: int, k: int) -> int:
            if a == 0:
                if k < 0:
                    raise ZeroDivisionError("negative power of zero")
                return 1 if k == 0 else 0
            return exp[log[a] * k % n]

        if self.e == 1:
            self.add = lambda a, b: (a + b) % p
            self.sub = lambda a, b: (a - b) % p
            self.neg = lambda a: (-a) % p
            self.mul = lambda a, b: a * b % p
        else:
            zech = [-1] * n
            for k in range(n):
                v = exp[k]
                c0 = v % p
                zech[k] = log[v - c0 + (c0 + 1) % p]
            half = n // 2 if p != 2 else 0

            def add(a: int, b: int) -> int:
                if a == 0:
                    return b
                if b == 0:
                    return a
                la = log[a]
                z = zech[(log[b] - la) % n]
                return 0 if z == -1 else exp[(la + z) % n]

            def neg(a: int) -> int:
                return a if a == 0 or p == 2 else exp[log[a] + half]

            self.add = add
            self.neg = neg
            self.sub = lambda a, b: add(a, neg(b))
            self.mul = mul
        self.inv = inv
        self.pow = power
        self.div = lambda a, b: mul(a, inv(b))

    # -- element helpers -------------------------------------------------

    def embed(self, k: int) -> int:
        """Image of the integer k in the prime subfield."""
        return k % self.p

    def coeffs(self, v: int) -> tuple[int, ...]:
        return _decode(v, self.p, self.e)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.e or any(not 0 <= c < self.p for c in coeffs):
            raise FieldError(f"{list(coeffs)} is not an element of F_{self.q}")
        return _encode(coeffs, self.p)

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    def exp(self, k: int) -> int:
        return self._exp[k % self.order]

    def is_square(self, a: int) -> bool:
        return a == 0 or self.p == 2 or self._log[a] % 2 == 0

    def sqrt(self, a: int) -> int | None:
        """Square root in F_q itself, enumeration-smaller of the two, or None."""
        if a == 0:
            return 0
        if self.p == 2:
            # squaring is bijective; sqrt = a^(q/2)
            return self.pow(a, self.q // 2)
        la = self._log[a]
        if la % 2:
            return None
        r = self._exp[la // 2]
        return min(r, self.neg(r))

    def half(self) -> int:
        if self.p == 2:
            raise CharacteristicError("1/2 does not exist in characteristic 2")
        return self.inv(2 % self.p)

    def quarter(self) -> int:
        if self.p == 2:
            raise CharacteristicError("1/4 does not exist in characteristic 2")
        return self.inv(4 % self.p)

    def render(self, v: int) -> str:
        """Canonical text form: little-endian coefficients joined by '.'."""
        return ".".join(str(c) for c in self.coeffs(v))

    def parse(self, text: str) -> int:
        """Inverse of :meth:`render`; also accepts 'a/b' for prime-subfield fractions."""
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                if int(den) % self.p == 0:
                    raise FieldError(f"denominator of {text!r} vanishes mod {self.p}")
                return self.div(self.embed(int(num)), self.embed(int(den)))
            digits = [int(c) for c in text.split(".")]
        except ValueError as exc:
            raise FieldError(f"cannot parse {text!r} as an element of F_{self.q}") from exc
        if len(digits) == 1:
            return self.embed(digits[0])
        return self.from_coeffs(digits)

    # -- public face -----------------------------------------------------

    def __call__(self, value: int | Sequence[int] | FieldElement) -> FieldElement:
        """Coerce an integer (prime subfield) or a coefficient sequence into the field."""
        if isinstance(value, FieldElement):
            _check_same(self, value.spec)
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        return FieldElement(self, self.from_coeffs(list(value)))

    def element(self, v: int) -> FieldElement:
        """Wrap a raw encoding."""
        return FieldElement(self, v)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, v) for v in range(self.q)]

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @cached_property
    def quad(self):
        """The quadratic extension F_q[u]/(u^2 - nu)."""
        from .quad import QuadField

        return QuadField(self)

    def to_json(self) -> dict:
        out = {"p": self.p, "e": self.e, "q": self.q, "modulus": list(self.modulus)}
        out["nu"] = list(self.coeffs(self.nu)) if self.nu is not None else None
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, e={self.e}, modulus={list(self.modulus)})"


def _check_same(a: FieldSpec, b: FieldSpec) -> None:
    if a is not b and a != b:
        raise FieldMismatchError(f"cannot combine elements of {a!r} and {b!r}")


class FieldElement:
    """An element of F_q, stored as its integer encoding."""

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value: int):
        self.spec = spec
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            _check_same(self.spec, other.spec)
            return other.value
        if isinstance(other, int):
            return other % self.spec.p
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.div(b, self.value))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __pow__(self, n: int):
        return FieldElement(self.spec, self.spec.pow(self.value, n))

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.value == other.value and self.spec == other.spec
        if isinstance(other, int):
            return self.value == other % self.spec.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __lt__(self, other: FieldElement) -> bool:
        return self.value < other.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return self.spec.render(self.value)

    def __repr__(self) -> str:
        return f"GF({self.spec.q})({self})"


# ---------------------------------------------------------------------------
# module-level operations


@lru_cache(maxsize=64)
def _cached_field(p: int, e: int, modulus: tuple[int, ...]) -> FieldSpec:
    return FieldSpec(p, e, modulus)


def _lowest_irreducible(p: int, e: int) -> tuple[int, ...]:
    if e == 1:
        return (0, 1)
    for low in range(p**e):
        f = list(_decode(low, p, e)) + [1]
        if f[0] == 0:
            continue
        if e <= 3:
            if not has_root(f, p):
                return tuple(f)
        elif is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


def make_field(
    p: int,
    e: int = 1,
    modulus_override: Sequence[int] | None = None,
    *,
    force: bool = False,
    guard: int = DEFAULT_GUARD,
) -> FieldSpec:
    """Construct F_{p^e}.

    The modulus is the lowest monic irreducible in enumeration order unless
    ``modulus_override`` (little-endian, monic, degree e) is supplied. Fields
    with ``q > guard`` are refused unless ``force`` is set.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError("p must be prime")
    if not isinstance(e, int) or e < 1:
        raise FieldError("e must be a positive integer")
    if p**e > guard and not force:
        raise GuardExceeded(f"q = {p}^{e} exceeds the guard {guard}; pass force=True")
    if modulus_override is None:
        modulus = _lowest_irreducible(p, e)
    else:
        modulus = tuple(int(c) % p for c in modulus_override)
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {e}")
        if not is_irreducible(list(modulus), p):
            raise FieldError(f"modulus {list(modulus)} is reducible over F_{p}")
    return _cached_field(p, e, modulus)


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Binary field operation named by ``op`` in {'add', 'sub', 'mul', 'div'}."""
    ops: dict[str, Callable] = {
        "add": FieldElement.__add__,
        "sub": FieldElement.__sub__,
        "mul": FieldElement.__mul__,
        "div": FieldElement.__truediv__,
    }
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    if not isinstance(b, FieldElement) or not isinstance(a, FieldElement):
        raise TypeError("arith expects two FieldElements")
    _check_same(a.spec, b.spec)
    return ops[op](a, b)


def power(a: FieldElement, n: int) -> FieldElement:
    """a**n by square-and-multiply, with 0**0 = 1."""
    spec = a.spec
    result, base = 1, a.value
    if n < 0:
        base, n = spec.inv(base), -n
    while n:
        if n & 1:
            result = spec.mul(result, base)
        base = spec.mul(base, base)
        n >>= 1
    return FieldElement(spec, result)


def enumerate_field(spec: FieldSpec) -> Iterator[FieldElement]:
    """All q elements in enumeration order."""
    for v in range(spec.q):
        yield FieldElement(spec, v)
