"""Dense coefficient sequences over F_q: polynomials and truncated power series."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import FieldElement, FieldSpec, _check_same


@dataclass(frozen=True)
class CoeffSeq:
    """Coefficients indexed by exponent from 0; ``values`` hold F_q encodings.

    The logical length is ``len(values)``; trailing zeros are kept so that
    degree bounds stay explicit.
    """

    spec: FieldSpec
    values: tuple[int, ...]

    @classmethod
    def from_ints(cls, spec: FieldSpec, ints: Iterable[int]) -> CoeffSeq:
        return cls(spec, tuple(spec.embed(c) for c in ints))

    @classmethod
    def from_elements(cls, spec: FieldSpec, elems: Sequence[FieldElement]) -> CoeffSeq:
        for x in elems:
            _check_same(spec, x.spec)
        return cls(spec, tuple(x.value for x in elems))

    @classmethod
    def monomial(cls, spec: FieldSpec, deg: int, coef: int = 1) -> CoeffSeq:
        return cls(spec, (0,) * deg + (coef,))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> FieldElement:
        return FieldElement(self.spec, self.values[i])

    def coeff(self, i: int) -> int:
        """Raw coefficient of t^i; zero outside the stored range."""
        return self.values[i] if 0 <= i < len(self.values) else 0

    def degree(self) -> int:
        """Index of the last nonzero coefficient, -1 for the zero sequence."""
        for i in range(len(self.values) - 1, -1, -1):
            if self.values[i]:
                return i
        return -1

    def __add__(self, other: CoeffSeq) -> CoeffSeq:
        _check_same(self.spec, other.spec)
        n = max(len(self), len(other))
        add = self.spec.add
        return CoeffSeq(self.spec, tuple(add(self.coeff(i), other.coeff(i)) for i in range(n)))

    def __neg__(self) -> CoeffSeq:
        neg = self.spec.neg
        return CoeffSeq(self.spec, tuple(neg(c) for c in self.values))

    def __sub__(self, other: CoeffSeq) -> CoeffSeq:
        return self + (-other)

    def __mul__(self, other: CoeffSeq) -> CoeffSeq:
        """Schoolbook product; length len(a) + len(b) - 1."""
        _check_same(self.spec, other.spec)
        if not self.values or not other.values:
            return CoeffSeq(self.spec, ())
        f = self.spec
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.values):
            if a == 0:
                continue
            for j, b in enumerate(other.values):
                if b:
                    out[i + j] = f.add(out[i + j], f.mul(a, b))
        return CoeffSeq(f, tuple(out))

    def scale(self, c: int) -> CoeffSeq:
        mul = self.spec.mul
        return CoeffSeq(self.spec, tuple(mul(c, v) for v in self.values))

    def truncate(self, n: int) -> CoeffSeq:
        """Keep exactly n coefficients (padding with zeros if needed)."""
        vals = self.values[:n] + (0,) * max(0, n - len(self.values))
        return CoeffSeq(self.spec, vals)

    def inverse(self, n: int) -> CoeffSeq:
        """First n coefficients of the power-series inverse; needs a unit constant term."""
        f = self.spec
        a = self.values
        if not a or a[0] == 0:
            raise ZeroDivisionError("power series with zero constant term is not invertible")
        inv0 = f.inv(a[0])
        out = [0] * n
        for m in range(n):
            acc = 1 if m == 0 else 0
            for k in range(1, min(m, len(a) - 1) + 1):
                if a[k]:
                    acc = f.sub(acc, f.mul(a[k], out[m - k]))
            out[m] = f.mul(acc, inv0)
        return CoeffSeq(f, tuple(out))

    def __str__(self) -> str:
        return "[" + ", ".join(self.spec.render(v) for v in self.values) + "]"
