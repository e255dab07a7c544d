"""The table S_n = sum_{a in F_q} E_n(1, a), n = 1 .. q^2 - 1.

Two routes:

``sum_table_thm41``
    Build the coefficients b_i of -1 - (t - t^q)^(q-1) in closed form, form
    the right-hand side c of

        (t^q - t^(q-1) - 1) * sum_n d_n t^n
            = (1 - t^q + t^(q-1)) * sum_{i=1}^{q^2-1} t^i
              - (t^(2q-2) + sum_{k=1}^{q-1} (t-1)^(q-1-k) t^(2k) 4^(-k)) * sum_i b_i t^i,

    solve for d by the index recursion, and return S_n = d_n + (n+1)/2^n.

``sum_table_bruteforce``
    Sum the three-term recursion over every a.

Every S_n lies in the prime subfield. All sequences here are CoeffSeq over
the target field F_q with prime-subfield entries.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .dickson import quarter_value_int
from .exceptions import CharacteristicError, GuardExceeded, InconsistencyError
from .field import FieldElement, FieldSpec
from .numtheory import binom_mod_p
from .series import CoeffSeq

SUMS_GUARD = 64


def _check(spec: FieldSpec, force: bool = False) -> None:
    if spec.p == 2:
        raise CharacteristicError("the sum table machinery needs odd characteristic")
    if spec.q > SUMS_GUARD and not force:
        raise GuardExceeded(f"q = {spec.q} exceeds the sums guard {SUMS_GUARD}")


def compute_b(spec: FieldSpec) -> CoeffSeq:
    """b_0 .. b_{q^2-q}: with i = alpha + beta q, b_i = (-1)^(beta+1) C(q-1, beta)
    when alpha + beta = q - 1, b_0 = -1, zero otherwise."""
    if spec.p == 2:
        raise CharacteristicError("compute_b needs odd characteristic")
    q, p = spec.q, spec.p
    b = [0] * (q * q - q + 1)
    for i in range(len(b)):
        beta, alpha = divmod(i, q)
        if alpha + beta == q - 1:
            b[i] = (-1) ** (beta + 1) * binom_mod_p(q - 1, beta, p)
        elif alpha == beta == 0:
            b[i] = -1
    return CoeffSeq.from_ints(spec, b)


def b_expansion_oracle(spec: FieldSpec) -> CoeffSeq:
    """-1 - (t - t^q)^(q-1) by repeated polynomial multiplication."""
    q = spec.q
    factor = CoeffSeq.from_ints(spec, [0, 1] + [0] * (q - 2) + [-1])
    acc = CoeffSeq(spec, (1,))
    for _ in range(q - 1):
        acc = acc * factor
    return (-acc - CoeffSeq(spec, (1,))).truncate(q * q - q + 1)


def compute_c(spec: FieldSpec, b: CoeffSeq | None = None) -> CoeffSeq:
    """c_0 .. c_{q^2+q-1} of the right-hand side; c_0 is checked to vanish."""
    _check(spec, force=True)
    q = spec.q
    b = compute_b(spec) if b is None else b
    first = CoeffSeq.from_ints(spec, [1] + [0] * (q - 2) + [1, -1])  # 1 + t^(q-1) - t^q
    ones = CoeffSeq.from_ints(spec, [0] + [1] * (q * q - 1))  # t + ... + t^(q^2-1)
    bracket = CoeffSeq.monomial(spec, 2 * (q - 1))
    t_minus_1 = CoeffSeq.from_ints(spec, [-1, 1])
    inv4 = spec.quarter()
    for k in range(1, q):
        term = CoeffSeq(spec, (1,))
        for _ in range(q - 1 - k):
            term = term * t_minus_1
        term = term * CoeffSeq.monomial(spec, 2 * k, spec.pow(inv4, k))
        bracket = bracket + term
    c = (first * ones - bracket * b).truncate(q * q + q)
    if c.coeff(0) != 0:
        raise InconsistencyError("constant term of the right-hand side is nonzero")
    return c


def solve_d(c: CoeffSeq, q: int) -> CoeffSeq:
    """Solve (t^q - t^(q-1) - 1) D(t) = C(t) for D = sum_{n=1}^{q^2-1} d_n t^n.

    Uses the five-line index recursion, audits that every d_n is written
    exactly once, then re-checks all q^2 + q - 1 coefficient equations
    (the system is over-determined).
    """
    spec = c.spec
    add, sub = spec.add, spec.sub
    cc = c.coeff
    N = q * q - 1
    d = [None] * (N + 1)

    def put(i: int, v: int) -> None:
        if d[i] is not None:
            raise InconsistencyError(f"d_{i} assigned twice")
        d[i] = v

    for j in range(1, q):
        put(j, spec.neg(cc(j)))
    put(q, sub(cc(1), cc(q)))
    for l in range(1, q - 1):
        # d_{lq + q - 1} reads d_{lq}, so the multiple of q goes first
        if l >= 2:
            i = l * q
            put(i, sub(sub(d[i - q], d[i - q + 1]), cc(i)))
        for j in range(1, q):
            i = l * q + j
            put(i, sub(sub(d[i - q], d[i - q + 1]), cc(i)))
    for j in range(q):
        acc = 0
        for i in range(j, q):
            acc = add(acc, cc(q * q + i))
        put(q * q - q + j, acc)

    missing = [i for i in range(1, N + 1) if d[i] is None]
    if missing:
        raise InconsistencyError(f"d indices never assigned: {missing}")
    d[0] = 0
    D = CoeffSeq(spec, tuple(d))

    lhs = CoeffSeq.from_ints(spec, [-1] + [0] * (q - 2) + [-1, 1]) * D
    for i in range(q * q + q):
        if lhs.coeff(i) != cc(i):
            raise InconsistencyError(f"coefficient equation for t^{i} violated")
    return D


@dataclass(frozen=True)
class SumTable:
    """S_1 .. S_{q^2-1}; ``values[n-1]`` is S_n."""

    spec: FieldSpec
    values: tuple[int, ...]
    method: str

    def __post_init__(self):
        if len(self.values) != self.spec.q**2 - 1:
            raise ValueError("a sum table has exactly q^2 - 1 entries")

    @property
    def q(self) -> int:
        return self.spec.q

    def S(self, n: int) -> FieldElement:
        return FieldElement(self.spec, self.values[n - 1])

    def rows(self) -> list[dict]:
        r = self.spec.render
        return [{"n": n, "S": r(v), "method": self.method} for n, v in enumerate(self.values, 1)]

    def to_json(self) -> str:
        doc = {"field": self.spec.to_json(), "method": self.method, "rows": self.rows()}
        return json.dumps(doc, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["n", "S", "method"], lineterminator="\n")
        w.writeheader()
        w.writerows(self.rows())
        return buf.getvalue()


def sum_table_thm41(spec: FieldSpec, force: bool = False) -> SumTable:
    _check(spec, force)
    q = spec.q
    D = solve_d(compute_c(spec), q)
    vals = tuple(spec.add(D.coeff(n), quarter_value_int(spec, n)) for n in range(1, q * q))
    return SumTable(spec, vals, "thm41")


def sum_table_bruteforce(spec: FieldSpec, force: bool = False) -> SumTable:
    if spec.q > SUMS_GUARD and not force:
        raise GuardExceeded(f"q = {spec.q} exceeds the sums guard {SUMS_GUARD}")
    q = spec.q
    N = q * q - 1
    add, sub, mul = spec.add, spec.sub, spec.mul
    totals = [0] * (N + 1)
    for a in range(q):
        prev, cur = 1, 1
        totals[1] = add(totals[1], 1)
        for n in range(2, N + 1):
            prev, cur = cur, sub(cur, mul(a, prev))
            totals[n] = add(totals[n], cur)
    return SumTable(spec, tuple(totals[1:]), "brute_force")


@dataclass(frozen=True)
class RecurrenceCheck:
    ok: bool
    family: int | None = None
    indices: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def thm41_recurrence_check(table: SumTable, c: CoeffSeq) -> RecurrenceCheck:
    """Check the five families of relations directly on the S values.

    Returns the first violated family (1-5) and the (l, j) or j indices.
    """
    spec = table.spec
    q, p = spec.q, spec.p
    add, sub, mul, embed = spec.add, spec.sub, spec.mul, spec.embed
    cc = c.coeff

    def S(n):
        return table.values[n - 1]

    def frac(num, n):  # num / 2^n in F_p
        return embed(num * pow(2, -n, p))

    for j in range(1, q):
        if S(j) != add(spec.neg(cc(j)), frac(j + 1, j)):
            return RecurrenceCheck(False, 1, (j,))
    if S(q) != add(sub(cc(1), cc(q)), frac(1, q)):
        return RecurrenceCheck(False, 2, (q,))
    for l in range(1, q - 1):
        for j in range(1, q):
            n = l * q + j
            rhs = sub(sub(S(n - q), S(n - q + 1)), cc(n))
            rhs = sub(rhs, frac(pow(2, q - 1) * j - j - 1, n))
            if S(n) != rhs:
                return RecurrenceCheck(False, 3, (l, j))
    for l in range(2, q - 1):
        n = l * q
        rhs = add(sub(sub(S(n - q), S(n - q + 1)), cc(n)), frac(1, n))
        if S(n) != rhs:
            return RecurrenceCheck(False, 4, (l,))
    for j in range(q):
        acc = 0
        for i in range(j, q):
            acc = add(acc, cc(q * q + i))
        if S(q * q - q + j) != add(acc, frac(j + 1, q * q - q + j)):
            return RecurrenceCheck(False, 5, (j,))
    return RecurrenceCheck(True)
