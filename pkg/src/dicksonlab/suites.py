"""Property suites run by ``dicksonlab verify`` for one configured field.

Every suite is deterministic and returns a :class:`SuiteResult`; the first
counterexample found is kept as a JSON-friendly payload.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import comb
from typing import Callable

from . import charsums, dickson, necessary, permutation
from .field import FieldElement, FieldSpec
from .numtheory import binom_mod_p
from .quad import QuadElement, quad_elements, solve_parameterization
from .series import CoeffSeq


@dataclass
class SuiteResult:
    name: str
    status: str  # pass | fail | skip
    checked: int = 0
    counterexample: dict | None = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_json(self) -> dict:
        return asdict(self)


@dataclass
class SuiteOptions:
    n_eval: int = 300
    n_identity: int = 30
    lemma31_max: int = 10**4
    self_recip_m: int = 50
    f_values_m: int = 200
    period_max: int = 600


class _Counter:
    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.bad: dict | None = None

    def check(self, ok: bool, **payload) -> bool:
        self.checked += 1
        if not ok and self.bad is None:
            self.bad = {k: _jsonable(v) for k, v in payload.items()}
        return ok

    def result(self) -> SuiteResult:
        status = "pass" if self.bad is None else "fail"
        return SuiteResult(self.name, status, self.checked, self.bad)


def _jsonable(v):
    if isinstance(v, (FieldElement, QuadElement)):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _skip(name: str, why: str) -> SuiteResult:
    return SuiteResult(name, "skip", note=why)


def _sample(spec: FieldSpec, limit: int = 27) -> list[FieldElement]:
    # exhaustive for small fields; otherwise the first `limit` plus the generator powers
    if spec.q <= limit:
        return spec.elements()
    picks = set(range(limit)) | {spec.exp(k) for k in range(0, spec.q - 1, max(1, spec.q // limit))}
    return [spec.element(v) for v in sorted(picks)]


# ---------------------------------------------------------------------------


def suite_field(spec: FieldSpec, opts: SuiteOptions) -> SuiteResult:
    c = _Counter("field")
    els = _sample(spec)
    p, q = spec.p, spec.q
    for a in els:
        c.check(a**q == a, rule="a^q = a", a=a)
        if a:
            c.check(a * a.inverse() == 1, rule="inverse", a=a)
        for b in els:
            c.check((a + b) ** p == a**p + b**p, rule="frobenius additive", a=a, b=b)
            c.check((a * b) ** p == a**p * b**p, rule="frobenius multiplicative", a=a, b=b)
            for d in els[:9]:
                c.check((a * b) * d == a * (b * d), rule="associativity", a=a, b=b, c=d)
                c.check(a * (b + d) == a * b + a * d, rule="distributivity", a=a, b=b, c=d)
    allx = spec.elements()
    for k in range(q):
        total = spec.zero
        for u in allx:
            total += u**k
        c.check(total == (-1 if k == q - 1 else 0), rule="power sum", k=k)
    for n in range(200):
        for k in range(n + 2):
            c.check(binom_mod_p(n, k, p) == comb(n, k) % p, rule="lucas", n=n, k=k)
    return c.result()


def suite_quad(spec: FieldSpec, opts: SuiteOptions) -> SuiteResult:
    if spec.p == 2:
        return _skip("quad", "characteristic 2")
    c = _Counter("quad")
    F = spec.quad
    q = spec.q
    if q * q <= 4096:
        squares = {}
        for z in F.pairs():
            squares.setdefault(F.mul(z, z), []).append(z)
        for z in F.pairs():
            r = F.sqrt(z)
            if z in squares:
                c.check(r is not None and F.mul(r, r) == z, rule="sqrt", z=list(z))
                c.check(r == min(squares[z], key=F.encode), rule="sqrt tie-break", z=list(z))
            else:
                c.check(r is None, rule="non-square", z=list(z))
            c.check(F.pow(z, q * q) == z, rule="z^(q^2) = z", z=list(z))
    for x in spec.elements():
        y1, y2 = solve_parameterization(x)
        c.check(y1 * y2 == x and y1 + y2 == 1, rule="y(1-y) = x", x=x)
    return c.result()


def suite_evaluators(spec: FieldSpec, opts: SuiteOptions) -> SuiteResult:
    c = _Counter("evaluators")
    odd = spec.p != 2
    one = spec.one
    table = dickson.e1_sequences(spec, opts.n_eval)
    for x in _sample(spec):
        g = dickson.genfun_coeffs(x, opts.n_eval)
        for n in range(opts.n_eval + 1):
            ref = spec.element(table[x.value][n])
            routes = {"direct": dickson.E(n, one, x), "genfun": g[n]}
            if odd:
                routes["via_f"] = dickson.eval_E1_via_f(n, x)
                routes["functional"] = dickson.eval_E1_functional(n, x)
            for name, v in routes.items():
                c.check(v == ref, route=name, n=n, x=x, got=v, expected=ref)
        c.check(dickson.eval_E1_recursive(opts.n_eval, spec.zero) == 1, rule="E_n(1,0) = 1")
    return c.result()


def suite_functional(spec: FieldSpec, opts: SuiteOptions) -> SuiteResult:
    if spec.p == 2:
        return _skip("functional", "characteristic 2")
    c = _Counter("functional")
    q = spec.q
    quarter = spec.element(spec.quarter())
    big = [2**40 + 7 * j for j in range(5)] + [3**25, 10**12 + 1, 2**63 - 1]
    for x in _sample(spec):
        for n in big:
            got = dickson.eval_E1_functional(n, x)
            if x == quarter:
                exp = dickson.quarter_value(n, spec)
            else:
                exp = dickson.eval_E1_recursive(dickson.reduce_index(n, q), x)
            c.check(got == exp, n=n, x=x, got=got, expected=exp)
    return c.result()


def suite_genfun(spec: FieldSpec, opts: SuiteOptions) -> SuiteResult:
    c = _Counter("genfun")
    N = 120
    for x in spec.elements():
        denom = CoeffSeq(spec, (1, spec.neg(1), x.value))
        prod = (denom * dickson.genfun_coeffs(x, N)).truncate(N + 1)
        c.check(prod.values == (1,) + (0,) * N, x=x)
    return c.result()


def suite_period6(spec: FieldSpec, opts: SuiteOptions) -> SuiteResult:
    c = _Counter("period6")
    seq = dickson.e1_sequences(spec, opts.period_max)[1]
    for n, v in enumerate(seq):
        c.check(v == spec.embed(necessary.period6_value(n)), n=n)
    return c.result()


def _nonzero_sample(spec: FieldSpec) -> list[FieldElement]:
    nz = [x for x in spec.elements() if x]
    return nz if spec.q <= 9 else nz[:4]


def suite_thm21(spec: FieldSpec, opts: SuiteOptions) -> SuiteResult:
    c = _Counter("thm21")
    xs = spec.elements() if spec.q <= 9 else _sample(spec, 9)
    for a in _nonzero_sample(spec):
        for b in _nonzero_sample(spec):
            for n in range(opts.n_identity + 1):
                for x in xs:
                    c.check(dickson.identity_thm21(n, a, b, x), n=n, a=a, b=b, x=x)
    return c.result()


def suite_thm22(spec: FieldSpec, opts: SuiteOptions) -> SuiteResult:
    if spec.p == 2:
        return _skip("thm22", "characteristic 2")
    c = _Counter("thm22")
    xs = spec.elements() if spec.q <= 9 else _sample(spec, 9)
    for n in range(1, opts.n_identity + 1):
        if n % spec.p == 0:
            continue
        for r in (1, 2):
            for x in xs:
                c.check(dickson.identity_thm22_frobenius(n, r, x), n=n, r=r, x=x)
    return c.result()


def suite_prop23(spec: FieldSpec, opts: SuiteOptions) -> SuiteResult:
    if spec.p == 2:
        return _skip("prop23", "characteristic 2")
    c = _Counter("prop23")
    for k in range(1, spec.e + 1):
        for x in spec.elements():
            c.check(dickson.identity_prop23(k, x), k=k, x=x)
        n = spec.p**k - 1
        images = [dickson.e1_recursive_int(spec, n, x) for x in range(spec.q)]
        exhaustive = permutation.verdict_from_images(images, spec).is_pp
        c.check(permutation.corollary21_check(k, spec) == exhaustive, rule="corollary", k=k)
    return c.result()


def suite_vset(spec: FieldSpec, opts: SuiteOptions) -> SuiteResult:
    if spec.p == 2:
        return _skip("vset", "characteristic 2")
    c = _Counter("vset")
    V = permutation.build_V(spec)
    q = spec.q
    c.check(len(V) == q, rule="|V| = q", size=len(V))
    base = V.base_members()
    c.check(len(base) == 1 and base[0] == spec.element(spec.half()), rule="V cap F_q = {1/2}")
    for z in V:
        c.check(z**q + z == 1, rule="z^q + z = 1", z=z)
    c.check(len(permutation.thm23_domain(spec, V)) == 2 * q - 2, rule="domain size")
    return c.result()


def suite_pp(spec: FieldSpec, opts: SuiteOptions) -> SuiteResult:
    c = _Counter("pp")
    q = spec.q
    n_top = q * q - 1
    table = dickson.e1_sequences(spec, n_top)
    V = permutation.build_V(spec) if spec.p != 2 else None
    for n in range(n_top + 1):
        images = [table[x][n] for x in range(q)]
        ex = permutation.verdict_from_images(images, spec).is_pp
        ps = permutation.power_sum_from_images(images, spec).is_pp
        c.check(ex == ps, rule="power_sum", n=n, exhaustive=ex)
        if V is not None:
            tt = permutation.check_thm23(n, spec, V).is_pp
            c.check(ex == tt, rule="two_to_one", n=n, exhaustive=ex)
        a0 = [spec.pow(spec.neg(x), n // 2) if n % 2 == 0 else 0 for x in range(q)]
        c.check(
            permutation.verdict_from_images(a0, spec).is_pp == permutation.classify_E_a0(n, q),
            rule="E_n(0, x)",
            n=n,
        )
    return c.result()


def suite_filters(spec: FieldSpec, opts: SuiteOptions) -> SuiteResult:
    c = _Counter("filters")
    q, p = spec.q, spec.p
    table = dickson.e1_sequences(spec, q * q - 1)
    for n in range(1, q * q):
        images = [table[x][n] for x in range(q)]
        if permutation.verdict_from_images(images, spec).is_pp:
            rep = necessary.filter_report(n, q, p)
            c.check(rep.overall, n=n, applicable=sorted(rep.applicable), passed=sorted(rep.passed))
    return c.result()


def suite_lemma31(spec: FieldSpec, opts: SuiteOptions) -> SuiteResult:
    if spec.p == 2:
        return _skip("lemma31", "characteristic 2")
    c = _Counter("lemma31")
    for n in range(1, opts.lemma31_max + 1, 4):
        c.check(necessary.lemma31_verify(n, spec.q), n=n)
    return c.result()


def suite_lemma32(spec: FieldSpec, opts: SuiteOptions) -> SuiteResult:
    if spec.p == 2:
        return _skip("lemma32", "characteristic 2")
    if spec.q > 64:
        return _skip("lemma32", "q^2 scan limited to q <= 64")
    c = _Counter("lemma32")
    for th in quad_elements(spec):
        if th.pair in ((0, 0), (1, 0)):
            continue
        c.check(necessary.lemma32_verify(th, spec), theta=th)
    return c.result()


def suite_fpoly(spec: FieldSpec, opts: SuiteOptions) -> SuiteResult:
    c = _Counter("fpoly")
    for m in range(opts.self_recip_m + 1):
        for x in spec.elements():
            if x:
                c.check(necessary.self_reciprocal_check(m, x), rule="self-reciprocal", m=m, x=x)
    for m in range(opts.f_values_m + 1):
        c.check(necessary.f_at_one(m) == 2 ** (2 * m + 1), rule="f(1)", m=m)
        c.check((necessary.f_at_minus_one(m) == 0) == (m % 2 == 1), rule="f(-1)", m=m)
    return c.result()


def suite_prop41(spec: FieldSpec, opts: SuiteOptions) -> SuiteResult:
    if spec.p == 2:
        return _skip("prop41", "characteristic 2")
    c = _Counter("prop41")
    b, oracle = charsums.compute_b(spec), charsums.b_expansion_oracle(spec)
    for i in range(len(b)):
        c.check(b.coeff(i) == oracle.coeff(i), i=i)
    return c.result()


def suite_sums(spec: FieldSpec, opts: SuiteOptions) -> SuiteResult:
    if spec.p == 2:
        return _skip("sums", "characteristic 2")
    if spec.q > charsums.SUMS_GUARD:
        return _skip("sums", f"q above the sums guard {charsums.SUMS_GUARD}")
    c = _Counter("sums")
    c_seq = charsums.compute_c(spec)
    thm = charsums.sum_table_thm41(spec)
    brute = charsums.sum_table_bruteforce(spec)
    for n in range(1, spec.q**2):
        c.check(thm.S(n) == brute.S(n), n=n, thm41=thm.S(n), brute=brute.S(n))
    rec = charsums.thm41_recurrence_check(thm, c_seq)
    c.check(rec.ok, rule="recurrences", family=rec.family, indices=list(rec.indices))
    return c.result()


SUITES: dict[str, Callable[[FieldSpec, SuiteOptions], SuiteResult]] = {
    "field": suite_field,
    "quad": suite_quad,
    "evaluators": suite_evaluators,
    "functional": suite_functional,
    "genfun": suite_genfun,
    "period6": suite_period6,
    "thm21": suite_thm21,
    "thm22": suite_thm22,
    "prop23": suite_prop23,
    "vset": suite_vset,
    "pp": suite_pp,
    "filters": suite_filters,
    "lemma31": suite_lemma31,
    "lemma32": suite_lemma32,
    "fpoly": suite_fpoly,
    "prop41": suite_prop41,
    "sums": suite_sums,
}


def run_suites(spec: FieldSpec, names: list[str] | None = None, opts: SuiteOptions | None = None):
    opts = opts or SuiteOptions()
    names = names or list(SUITES)
    return [SUITES[name](spec, opts) for name in names]
