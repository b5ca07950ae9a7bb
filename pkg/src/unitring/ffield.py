"""Finite fields F_p(alpha) and polynomials over them.

Polynomials are plain lists of FFElement, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).
"""

from __future__ import annotations

import random
from functools import cached_property
from typing import Iterator, Sequence

from . import numtheory
from .errors import NotInSubgroup


class FiniteField:
    """The field F_p[x]/(f) with f monic irreducible of degree m."""

    def __init__(self, p: int, modulus: Sequence[int] | None = None, check: bool = True):
        if not numtheory.is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        self.p = p
        if modulus is None:
            modulus = [0, 1]
        mod = [int(c) % p for c in modulus]
        while mod and mod[-1] == 0:
            mod.pop()
        if len(mod) < 2 or mod[-1] != 1:
            raise ValueError("defining polynomial must be monic of degree >= 1")
        self.modulus = tuple(mod)
        self.m = len(mod) - 1
        self.q = p**self.m
        # x**(m+i) reduced, for i = 0 .. m-2
        red = []
        cur = [(-c) % p for c in mod[:-1]]
        for _ in range(max(self.m - 1, 0)):
            red.append(tuple(cur))
            lead = cur[-1]
            cur = [0] + cur[:-1]
            cur = [(a - lead * b) % p for a, b in zip(cur, mod[:-1])]
        red.append(tuple(cur))
        self._red = red
        if check and self.m > 1:
            if not is_irreducible([self.prime_field.elem(c) for c in mod]):
                raise ValueError(f"{list(mod)} is not irreducible over F_{p}")

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self.p == other.p and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"

    @cached_property
    def prime_field(self) -> "FiniteField":
        return self if self.m == 1 else FiniteField(self.p)

    # -- raw arithmetic on coefficient tuples -------------------------------

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _mul(self, a, b):
        p, m = self.p, self.m
        if m == 1:
            return ((a[0] * b[0]) % p,)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        out = prod[:m]
        for i, c in enumerate(prod[m:]):
            if c:
                out = [o + c * r for o, r in zip(out, self._red[i])]
        return tuple(o % p for o in out)

    # -- element constructors -------------------------------------------------

    def elem(self, value) -> "FFElement":
        if isinstance(value, FFElement):
            if value.field == self:
                return value
            if value.field.p != self.p or value.field.m != 1:
                raise ValueError(f"cannot coerce {value!r} into {self!r}")
            value = value.c[0]
        if isinstance(value, int):
            c = [value % self.p] + [0] * (self.m - 1)
        else:
            v = [int(x) % self.p for x in value]
            if len(v) > self.m:
                raise ValueError("too many coefficients")
            c = v + [0] * (self.m - len(v))
        return FFElement(self, tuple(c))

    def __call__(self, value) -> "FFElement":
        return self.elem(value)

    @cached_property
    def zero(self) -> "FFElement":
        return self.elem(0)

    @cached_property
    def one(self) -> "FFElement":
        return self.elem(1)

    @cached_property
    def gen(self) -> "FFElement":
        """The class of x, i.e. alpha."""
        if self.m == 1:
            return self.elem(-self.modulus[0])
        return self.elem([0, 1])

    def from_code(self, code: int) -> "FFElement":
        c = []
        for _ in range(self.m):
            code, r = divmod(code, self.p)
            c.append(r)
        return FFElement(self, tuple(c))

    def elements(self) -> Iterator["FFElement"]:
        for i in range(self.q):
            yield self.from_code(i)

    def random(self, rng: random.Random) -> "FFElement":
        return self.from_code(rng.randrange(self.q))

    def power_basis(self) -> list["FFElement"]:
        return [self.elem([0] * i + [1]) for i in range(self.m)]


class FFElement:
    __slots__ = ("field", "c")

    def __init__(self, field: FiniteField, c: tuple):
        self.field = field
        self.c = c

    def __add__(self, other):
        other = self._coerce(other)
        return FFElement(self.field, self.field._add(self.c, other.c))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return FFElement(self.field, self.field._sub(self.c, other.c))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        p = self.field.p
        return FFElement(self.field, tuple((-x) % p for x in self.c))

    def __mul__(self, other):
        other = self._coerce(other)
        return FFElement(self.field, self.field._mul(self.c, other.c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return numtheory.power(self, e, FFElement.__mul__, self.field.one)

    def inverse(self) -> "FFElement":
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        k = self.field
        if k.m == 1:
            return FFElement(k, (pow(self.c[0], -1, k.p),))
        return self ** (k.q - 2)

    def _coerce(self, other):
        if isinstance(other, FFElement):
            return other
        return self.field.elem(other)

    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.elem(other)
        if not isinstance(other, FFElement):
            return NotImplemented
        return self.c == other.c and self.field == other.field

    def __hash__(self):
        return hash(self.c)

    @property
    def code(self) -> int:
        p = self.field.p
        return sum(x * p**i for i, x in enumerate(self.c))

    def __int__(self):
        return self.code

    def __repr__(self):
        if self.field.m == 1:
            return str(self.c[0])
        terms = []
        for i, x in enumerate(self.c):
            if x:
                mono = "1" if i == 0 else ("a" if i == 1 else f"a^{i}")
                terms.append(mono if x == 1 and i else f"{x}" if i == 0 else f"{x}*{mono}")
        return "+".join(reversed(terms)) or "0"


# ---------------------------------------------------------------------------
# polynomials over a finite field

def _trim(f):
    while f and f[-1].is_zero():
        f.pop()
    return f


def poly(k: FiniteField, coeffs: Sequence) -> list[FFElement]:
    return _trim([k.elem(c) for c in coeffs])


def padd(f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        if i < len(f) and i < len(g):
            out.append(f[i] + g[i])
        else:
            out.append(f[i] if i < len(f) else g[i])
    return _trim(out)


def psub(f, g):
    return padd(f, [-c for c in g])


def pmul(f, g):
    if not f or not g:
        return []
    k = f[0].field
    out = [k.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a.is_zero():
            continue
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return _trim(out)


def pscale(f, c):
    return _trim([a * c for a in f])


def pdivmod(f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    k = g[0].field
    inv_lead = g[-1].inverse()
    dq = len(f) - len(g)
    if dq < 0:
        return [], f
    q = [k.zero] * (dq + 1)
    for i in range(dq, -1, -1):
        c = f[i + len(g) - 1] * inv_lead
        q[i] = c
        if not c.is_zero():
            for j, b in enumerate(g):
                f[i + j] = f[i + j] - c * b
    return _trim(q), _trim(f[: len(g) - 1])


def pmod(f, g):
    return pdivmod(f, g)[1]


def monic(f):
    return pscale(f, f[-1].inverse()) if f else f


def pgcd(f, g):
    while g:
        f, g = g, pmod(f, g)
    return monic(f)


def pderiv(f):
    return _trim([c * i for i, c in enumerate(f)][1:])


def ppowmod(f, e: int, mod):
    k = mod[0].field
    result = [k.one]
    base = pmod(f, mod)
    while e:
        if e & 1:
            result = pmod(pmul(result, base), mod)
        e >>= 1
        if e:
            base = pmod(pmul(base, base), mod)
    return result


def peval(f, x):
    acc = x.field.zero
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _x(k):
    return [k.zero, k.one]


def is_irreducible(f) -> bool:
    """Rabin's test for a polynomial of positive degree."""
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    f = monic(f)
    k = f[0].field
    x = _x(k)
    if ppowmod(x, k.q**n, f) != pmod(x, f):
        return False
    for r in numtheory.factor(n):
        h = psub(ppowmod(x, k.q ** (n // r), f), x)
        if len(pgcd(h, f)) != 1:
            return False
    return True


def _pth_root(c: FFElement) -> FFElement:
    k = c.field
    return c ** (k.q // k.p)


def squarefree_decomposition(f) -> list[tuple[list, int]]:
    """Return [(g, e)] with f = prod g**e, each g squarefree, monic f."""
    k = f[0].field
    out = []

    def rec(f, mult):
        if len(f) <= 1:
            return
        d = pderiv(f)
        if not d:
            # f = g(x^p)
            g = [_pth_root(c) for c in f[:: k.p]]
            rec(g, mult * k.p)
            return
        c = pgcd(f, d)
        w = pdivmod(f, c)[0]
        i = 1
        while len(w) > 1:
            y = pgcd(w, c)
            z = pdivmod(w, y)[0]
            if len(z) > 1:
                out.append((monic(z), i * mult))
            i += 1
            w = y
            c = pdivmod(c, y)[0]
        if len(c) > 1:
            g = [_pth_root(a) for a in c[:: k.p]]
            rec(g, mult * k.p)

    rec(monic(f), 1)
    return out


def distinct_degree(f) -> list[tuple[list, int]]:
    """Split a squarefree monic f into products of equal-degree irreducibles."""
    k = f[0].field
    out = []
    x = _x(k)
    h = pmod(x, f)
    d = 0
    while 2 * (d + 1) <= len(f) - 1:
        d += 1
        h = ppowmod(h, k.q, f)
        g = pgcd(psub(h, x), f)
        if len(g) > 1:
            out.append((g, d))
            f = pdivmod(f, g)[0]
            h = pmod(h, f)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def equal_degree(f, d: int, rng: random.Random) -> list[list]:
    n = len(f) - 1
    if n == d:
        return [f]
    k = f[0].field
    while True:
        a = _trim([k.random(rng) for _ in range(n)])
        if len(a) < 2:
            continue
        if k.p == 2:
            t = pmod(a, f)
            acc = t
            for _ in range(k.m * d - 1):
                t = pmod(pmul(t, t), f)
                acc = padd(acc, t)
            b = acc
        else:
            b = psub(ppowmod(a, (k.q**d - 1) // 2, f), [k.one])
        g = pgcd(b, f)
        if 1 < len(g) < len(f):
            return equal_degree(g, d, rng) + equal_degree(pdivmod(f, g)[0], d, rng)


def factor_poly(f, seed: int = 0) -> list[tuple[list, int]]:
    """Factor a monic polynomial into [(irreducible monic, multiplicity)]."""
    if len(f) < 2:
        raise ValueError("factor_poly expects degree >= 1")
    rng = random.Random(seed)
    out = []
    for g, e in squarefree_decomposition(f):
        for h, d in distinct_degree(g):
            for irr in equal_degree(h, d, rng):
                out.append((irr, e))
    out.sort(key=lambda t: (len(t[0]), [c.code for c in t[0]]))
    return out


def random_irreducible(k: FiniteField, degree: int, rng: random.Random) -> list:
    while True:
        f = [k.random(rng) for _ in range(degree)] + [k.one]
        if is_irreducible(f):
            return f


def extension_field(p: int, m: int, seed: int = 0) -> FiniteField:
    """A field of order p**m defined by a random irreducible polynomial."""
    if m == 1:
        return FiniteField(p)
    f = random_irreducible(FiniteField(p), m, random.Random(seed))
    return FiniteField(p, [c.c[0] for c in f], check=False)


def conway_like_field(q: int) -> FiniteField:
    """Deterministic field of order q: lexicographically first irreducible."""
    fac = numtheory.factor(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, m), = fac.items()
    if m == 1:
        return FiniteField(p)
    k = FiniteField(p)
    for code in range(p**m):
        low = []
        c = code
        for _ in range(m):
            c, r = divmod(c, p)
            low.append(r)
        f = [k.elem(x) for x in low] + [k.one]
        if is_irreducible(f):
            return FiniteField(p, low + [1], check=False)
    raise AssertionError("no irreducible polynomial found")


# ---------------------------------------------------------------------------
# multiplicative group oracles

def _unit_order_factorization(k: FiniteField) -> dict[int, int]:
    return numtheory.factor(k.q - 1)


def element_order(x: FFElement) -> int:
    k = x.field
    return numtheory.multiplicative_order(x, k.q - 1, FFElement.__mul__, k.one, _unit_order_factorization(k))


def primitive_root(k: FiniteField) -> FFElement:
    """Smallest (by code) generator of the multiplicative group of k."""
    n = k.q - 1
    fac = _unit_order_factorization(k)
    for code in range(1, k.q):
        g = k.from_code(code)
        if all(g ** (n // r) != k.one for r in fac) or n == 1:
            return g
    raise AssertionError("unreachable: multiplicative group is cyclic")


def discrete_log(k: FiniteField, base: FFElement, target: FFElement) -> int:
    """Return x with base**x == target, 0 <= x < ord(base)."""
    if base.is_zero() or target.is_zero():
        raise NotInSubgroup("zero is not in the multiplicative group")
    order = element_order(base)
    return numtheory.pohlig_hellman(
        base, target, order, FFElement.__mul__, FFElement.inverse, k.one,
        key=lambda e: e.c, fac=numtheory.factor(order),
    )


def minimal_polynomial_coeffs(k: FiniteField, x: FFElement) -> list[int]:
    """Minimal polynomial over the prime field of x, as ints low->high."""
    from .linalg import first_dependency_mod_p

    p = k.p
    powers = [k.one.c]
    cur = k.one
    while True:
        cur = cur * x
        powers.append(cur.c)
        dep = first_dependency_mod_p(powers, p)
        if dep is not None:
            return dep
