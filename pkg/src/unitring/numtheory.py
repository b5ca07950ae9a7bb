"""Integer oracles: primality, factorization, discrete logarithms.

Factor and DiscLog are treated as oracles by the unit-group pipeline; the
implementations here are the classical desk-scale ones (trial division,
Pollard rho with Brent cycle detection, Miller-Rabin, Pohlig-Hellman with
baby-step/giant-step).
"""

from __future__ import annotations

import math
import random
from typing import Callable, TypeVar

from .errors import NotInSubgroup

T = TypeVar("T")

_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
# Deterministic Miller-Rabin witness set for n < 3.3 * 10**24 (covers 2**64).
_MR_BASES = _SMALL_PRIMES
_TRIAL_BOUND = 10_000


def _sieve(n: int) -> list[int]:
    flags = bytearray([1]) * (n + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(n) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i, f in enumerate(flags) if f]


_TRIAL_PRIMES = _sieve(_TRIAL_BOUND)


def _mr_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int, seed: int = 0) -> bool:
    """Miller-Rabin; deterministic below 2**64, error < 2**-80 above."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 1 << 64:
        return all(_mr_round(n, d, s, a) for a in _MR_BASES)
    if not all(_mr_round(n, d, s, a) for a in _MR_BASES):
        return False
    rng = random.Random(seed ^ n)
    return all(_mr_round(n, d, s, rng.randrange(2, n - 1)) for _ in range(40))


def _brent(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite n."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g, r, q = 1, 1, 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor(n: int, seed: int = 0) -> dict[int, int]:
    """Factor n >= 1 into {prime: exponent}, sorted by prime."""
    if n < 1:
        raise ValueError("factor expects n >= 1")
    out: dict[int, int] = {}
    for p in _TRIAL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    rng = random.Random(seed)
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m, seed):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        f = _brent(m, rng)
        stack += [f, m // f]
    return dict(sorted(out.items()))


def totient(n: int) -> int:
    phi = n
    for p in factor(n):
        phi = phi // p * (p - 1)
    return phi


def multiplicative_order(
    x: T, group_order: int, mul: Callable[[T, T], T], one: T, fac: dict[int, int] | None = None
) -> int:
    """Order of x in a group whose exponent divides group_order."""
    fac = factor(group_order) if fac is None else fac
    order = group_order
    for p, e in fac.items():
        for _ in range(e):
            if power(x, order // p, mul, one) == one:
                order //= p
            else:
                break
    return order


def power(x: T, e: int, mul: Callable[[T, T], T], one: T) -> T:
    result = one
    while e:
        if e & 1:
            result = mul(result, x)
        e >>= 1
        if e:
            x = mul(x, x)
    return result


def _bsgs(base: T, target: T, order: int, mul, inv, one, key) -> int | None:
    m = math.isqrt(order) + 1
    table = {}
    cur = one
    for j in range(m):
        table.setdefault(key(cur), j)
        cur = mul(cur, base)
    giant = power(inv(base), m, mul, one)
    gamma = target
    for i in range(m):
        j = table.get(key(gamma))
        if j is not None:
            return (i * m + j) % order
        gamma = mul(gamma, giant)
    return None


def pohlig_hellman(
    base: T,
    target: T,
    order: int,
    mul: Callable[[T, T], T],
    inv: Callable[[T], T],
    one: T,
    key: Callable[[T], object] = lambda x: x,
    fac: dict[int, int] | None = None,
) -> int:
    """Solve base**x == target where base has the given order.

    Raises NotInSubgroup when a prime-power residue has no solution.
    """
    fac = factor(order) if fac is None else fac
    residues, moduli = [], []
    for p, e in fac.items():
        pe = p**e
        cofactor = order // pe
        g = power(base, cofactor, mul, one)  # order p**e
        h = power(target, cofactor, mul, one)
        gamma = power(g, p ** (e - 1), mul, one)  # order p
        x = 0
        for k in range(e):
            hk = power(mul(power(inv(g), x, mul, one), h), p ** (e - 1 - k), mul, one)
            d = _bsgs(gamma, hk, p, mul, inv, one, key)
            if d is None:
                raise NotInSubgroup("target is not a power of base")
            x += d * p**k
        if key(power(g, x, mul, one)) != key(h):
            raise NotInSubgroup("target is not a power of base")
        residues.append(x)
        moduli.append(pe)
    x = crt(residues, moduli)
    if key(power(base, x, mul, one)) != key(target):
        raise NotInSubgroup("target is not a power of base")
    return x


def crt(residues: list[int], moduli: list[int]) -> int:
    x, m = 0, 1
    for r, n in zip(residues, moduli):
        t = ((r - x) * pow(m, -1, n)) % n
        x += m * t
        m *= n
    return x % m if m > 1 else 0
