"""Integer helpers and dense polynomial arithmetic over the prime field F_p.

Polynomials are little-endian lists of residues: ``[c0, c1, ..., cd]`` is
``c0 + c1 t + ... + cd t^d``. The zero polynomial is ``[]``.
"""

from __future__ import annotations

from functools import lru_cache

# Deterministic Miller-Rabin witnesses, valid for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1 by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


TABLE_MAX_P = 1024


@lru_cache(maxsize=None)
def _binom_table(p: int) -> tuple[tuple[int, ...], ...]:
    # Pascal triangle mod p for 0 <= k <= n < p
    rows = [(1,)]
    for n in range(1, p):
        prev = rows[-1]
        rows.append((1,) + tuple((prev[k - 1] + prev[k]) % p for k in range(1, n)) + (1,))
    return tuple(rows)


def _small_binom(n: int, k: int, p: int) -> int:
    # C(n, k) mod p for 0 <= k <= n < p, so every denominator is a unit
    k = min(k, n - k)
    num = den = 1
    for j in range(k):
        num = num * (n - j) % p
        den = den * (j + 1) % p
    return num * pow(den, -1, p) % p


def binom_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem. Zero when k > n or k < 0."""
    if k < 0 or k > n:
        return 0
    # the cached table has ~p^2/2 entries; large primes use the product formula per digit
    table = _binom_table(p) if p <= TABLE_MAX_P else None
    result = 1
    while k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        result = result * (table[ni][ki] if table else _small_binom(ni, ki, p)) % p
        n //= p
        k //= p
    return result


# ---------------------------------------------------------------------------
# polynomials over F_p


def ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(a: list[int], b: list[int], p: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return ptrim(out)


def psub(a: list[int], b: list[int], p: int) -> list[int]:
    return padd(a, [(-c) % p for c in b], p)


def pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return ptrim([c % p for c in out])


def pdivmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    b = ptrim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = ptrim([c % p for c in a])
    if len(a) < len(b):
        return [], a
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * (len(a) - len(b) + 1)
    rem = list(a)
    for shift in range(len(a) - len(b), -1, -1):
        coef = rem[shift + len(b) - 1] * inv_lead % p
        quot[shift] = coef
        if coef:
            for j, bj in enumerate(b):
                rem[shift + j] = (rem[shift + j] - coef * bj) % p
    return ptrim(quot), ptrim(rem[: len(b) - 1])


def pmod(a: list[int], b: list[int], p: int) -> list[int]:
    return pdivmod(a, b, p)[1]


def pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd (or [] when both are zero)."""
    a, b = ptrim([c % p for c in a]), ptrim([c % p for c in b])
    while b:
        a, b = b, pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def ppowmod(a: list[int], n: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = pmod(a, m, p)
    while n:
        if n & 1:
            result = pmod(pmul(result, base, p), m, p)
        base = pmod(pmul(base, base, p), m, p)
        n >>= 1
    return result


def is_irreducible(f: list[int], p: int) -> bool:
    """Ben-Or test: f of degree d is irreducible iff gcd(f, t^(p^i) - t) = 1 for i <= d/2."""
    f = ptrim([c % p for c in f])
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    t = [0, 1]
    frob = t
    for _ in range(d // 2):
        frob = ppowmod(frob, p, f, p)
        if len(pgcd(f, psub(frob, t, p), p)) != 1:
            return False
    return True


def has_root(f: list[int], p: int) -> bool:
    for r in range(p):
        acc = 0
        for c in reversed(f):
            acc = (acc * r + c) % p
        if acc == 0:
            return True
    return False
