"""Finite rings given by an additive group prod Z/d_i and structure constants.

T[i, j] holds the coordinate vector of g_i * g_j.  Elements are numpy
vectors of coordinates reduced modulo d.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
import scipy.sparse as sp

from .abgrp import FinAbGroup, Lattice, LatticeQuotient, lcm_all, solve_left_mod
from .errors import NotAGroup, RingValidationError, TooLarge
from .linalg import rref_mod_p, solve_left_mod_p
from .numtheory import crt, factor

_FLOAT_EXACT = 1 << 52
_SPARSE_FROM = 24


def imatmul(A: np.ndarray, B: np.ndarray, bound: int) -> np.ndarray:
    """Exact integer A @ B when entries are in [0, bound); float BLAS if safe."""
    k = A.shape[-1]
    if A.dtype == object or B.dtype == object:
        return A.dot(B) if A.ndim == 2 else np.dot(A, B)
    worst = k * (bound - 1) ** 2
    if worst < _FLOAT_EXACT:
        return np.rint(A.astype(np.float64) @ B.astype(np.float64)).astype(np.int64)
    if worst < (1 << 62):
        return A @ B
    return np.array(A, dtype=object).dot(np.array(B, dtype=object))


class FinRing:
    """Finite ring with validated structure constants."""

    def __init__(self, d: Sequence[int], T, one, name: str = "R", validate: bool = True):
        self.d = tuple(int(x) for x in d)
        if any(x < 2 for x in self.d):
            raise RingValidationError("additive orders must be at least 2")
        self.r = len(self.d)
        self.M = lcm_all(self.d) if self.r else 1
        self.big = self.M >= (1 << 20)
        dt = object if self.big else np.int64
        self._dmod = np.array(self.d, dtype=dt)
        T = np.array(T, dtype=dt).reshape(self.r, self.r, self.r) % self._dmod if self.r else np.zeros((0, 0, 0), dtype=dt)
        self.T = T
        self.one = self.elem(one)
        self.name = name
        self._Tsparse = None
        if self.r and not self.big:
            self._Tflat = T.reshape(self.r * self.r, self.r)
            self._Tsparse = sp.csr_matrix(self._Tflat.T) if self.r >= _SPARSE_FROM else None
            if self._Tsparse is not None:
                r = self.r
                # left_matrix(a).ravel() = _TL @ a, right_matrix(b).ravel() = _TR @ b
                self._TL = sp.csr_matrix(T.transpose(1, 2, 0).reshape(r * r, r))
                self._TR = sp.csr_matrix(T.transpose(0, 2, 1).reshape(r * r, r))
        if validate:
            self.validate()

    # -- basic arithmetic -------------------------------------------------
    @property
    def order(self) -> int:
        return math.prod(self.d)

    @property
    def additive(self) -> FinAbGroup:
        return FinAbGroup(self.d)

    @property
    def prime_power(self):
        """(p, e) when the additive exponent is p^e, else None."""
        if self.r == 0:
            return None
        f = factor(self.M)
        if len(f) != 1:
            return None
        return next(iter(f.items()))

    def elem(self, coords) -> np.ndarray:
        if self.r == 0:
            return np.zeros(0, dtype=np.int64)
        dt = object if self.big else np.int64
        if not self.big:
            v = np.asarray(coords)
            if v.dtype == object:
                v = np.array([int(c) % di for c, di in zip(v, self.d)], dtype=np.int64)
            return v.astype(np.int64) % self._dmod
        return np.array([int(c) % di for c, di in zip(coords, self.d)], dtype=dt)

    @property
    def zero(self) -> np.ndarray:
        return self.elem([0] * self.r)

    def basis(self, i: int) -> np.ndarray:
        v = [0] * self.r
        v[i] = 1
        return self.elem(v)

    def add(self, a, b):
        return (a + b) % self._dmod

    def sub(self, a, b):
        return (a - b) % self._dmod

    def neg(self, a):
        return (-a) % self._dmod

    def scale(self, k: int, a):
        return (k * a) % self._dmod

    def mul(self, a, b):
        if self.r == 0:
            return self.zero
        if self.big:
            return np.tensordot(np.tensordot(a, self.T, 1), b, ([0], [0])) % self._dmod
        o = np.outer(a, b).ravel()
        if self._Tsparse is not None:
            v = self._Tsparse @ o
        else:
            v = o @ self._Tflat
        return np.asarray(v, dtype=np.int64) % self._dmod

    def pow(self, a, e: int):
        if e < 0:
            inv = self.inverse(a)
            if inv is None:
                raise ZeroDivisionError("not a unit")
            a, e = inv, -e
        out = self.one
        while e:
            if e & 1:
                out = self.mul(out, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return out

    def key(self, a) -> tuple:
        return tuple(int(x) for x in a)

    def eq(self, a, b) -> bool:
        return bool(np.array_equal(np.asarray(a) % self._dmod, np.asarray(b) % self._dmod))

    def is_zero(self, a) -> bool:
        return not np.any(np.asarray(a) % self._dmod)

    def left_matrix(self, a) -> np.ndarray:
        """M with a*x = x @ M."""
        if not self.big and self._Tsparse is not None:
            return np.asarray(self._TL @ np.asarray(a, dtype=np.int64)).reshape(self.r, self.r) % self._dmod
        return np.tensordot(a, self.T, 1) % self._dmod

    def right_matrix(self, b) -> np.ndarray:
        """N with x*b = x @ N."""
        if not self.big and self._Tsparse is not None:
            return np.asarray(self._TR @ np.asarray(b, dtype=np.int64)).reshape(self.r, self.r) % self._dmod
        return np.tensordot(self.T, b, ([1], [0])) % self._dmod

    def mul_rows(self, X, b):
        """Row-wise x*b for the rows of X."""
        return imatmul(np.asarray(X), self.right_matrix(b), self.M) % self._dmod

    def lmul_rows(self, a, X):
        """Row-wise a*x for the rows of X."""
        return imatmul(np.asarray(X), self.left_matrix(a), self.M) % self._dmod

    @property
    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.T, self.T.transpose(1, 0, 2)))

    # -- units ---------------------------------------------------------
    def inverse(self, x):
        """Two-sided inverse of x, or None when x is not a unit."""
        if self.r == 0:
            return self.zero
        x = self.elem(x)
        one = self.one
        Rx = self.right_matrix(x)  # y @ Rx = y*x
        pp = self.prime_power
        y = None
        if pp is not None and all(di == self.M for di in self.d):
            p, e = pp
            y0 = solve_left_mod_p(Rx % p, one % p, p)
            if y0 is None:
                return None
            y = self.elem(y0)
            two = self.scale(2, one)
            for _ in range(e.bit_length() + 1):
                u = self.mul(y, x)
                if self.eq(u, one):
                    break
                y = self.mul(self.sub(two, u), y)
        else:
            sol = solve_left_mod(Rx, one, self.d, self.d)
            if sol is None:
                return None
            y = self.elem(sol)
        if not self.eq(self.mul(y, x), one):
            return None
        assert self.eq(self.mul(x, y), one), "left inverse is not a right inverse"
        return y

    def is_unit(self, x) -> bool:
        return self.inverse(x) is not None

    # -- enumeration -----------------------------------------------------
    def elements(self, limit: int = 1 << 16) -> np.ndarray:
        """All elements as rows (mixed radix order)."""
        if self.order > limit:
            raise TooLarge(f"ring of order {self.order} exceeds enumeration guard {limit}")
        if self.r == 0:
            return np.zeros((1, 0), dtype=np.int64)
        grids = np.meshgrid(*[np.arange(di) for di in self.d], indexing="ij")
        return np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)

    def codes(self, X) -> np.ndarray:
        """Mixed-radix integer code of each row (inverse of ``elements`` order)."""
        X = np.asarray(X, dtype=np.int64)
        code = np.zeros(X.shape[0], dtype=np.int64)
        for i, di in enumerate(self.d):
            code = code * di + X[:, i]
        return code

    def random(self, rng: random.Random):
        return self.elem([rng.randrange(di) for di in self.d])

    def random_unit(self, rng: random.Random, tries: int = 10_000):
        for _ in range(tries):
            x = self.random(rng)
            if self.is_unit(x):
                return x
        raise RuntimeError("no unit found by sampling")

    # -- validation --------------------------------------------------------
    def validate(self):
        r, d, T = self.r, self._dmod, self.T
        if r == 0:
            return
        for i in range(r):
            if np.any((self.d[i] * T[i]) % d) or np.any((self.d[i] * T[:, i]) % d):
                raise RingValidationError(f"multiplication not well defined on generator {i}")
        one = self.one
        I = np.eye(r, dtype=T.dtype)
        if not np.array_equal(self.left_matrix(one), I) or not np.array_equal(self.right_matrix(one), I):
            raise RingValidationError("unity does not act as identity")
        if not self._associative():
            raise RingValidationError("multiplication is not associative on generators")

    def _associative(self) -> bool:
        r, T = self.r, self.T
        if self.big:
            for i in range(r):
                for j in range(r):
                    for k in range(r):
                        lhs = self.mul(T[i, j], self.basis(k))
                        rhs = self.mul(self.basis(i), T[j, k])
                        if not self.eq(lhs, rhs):
                            return False
            return True
        if r <= 12:
            lhs = np.einsum("ijl,lkm->ijkm", T, T)
            rhs = np.einsum("jkl,ilm->ijkm", T, T)
            return not np.any((lhs - rhs) % self._dmod)
        A = sp.csr_matrix(T.reshape(r * r, r))
        # (g_i g_j) g_k : rows (i, j), cols (k, m)
        lhs = (A @ sp.csr_matrix(T.reshape(r, r * r))).tocoo()
        # g_i (g_j g_k) : rows (j, k), cols (i, m) via P[l, (i, m)] = T[i, l, m]
        P = sp.csr_matrix(T.transpose(1, 0, 2).reshape(r, r * r))
        rhs = (A @ P).tocoo()

        def canon(i, j, k, m, v):
            v = v % np.array(self.d, dtype=np.int64)[m]
            keep = v != 0
            idx = ((i * r + j) * r + k) * r + m
            idx, v = idx[keep], v[keep]
            o = np.argsort(idx)
            return idx[o], v[o]

        li, lj = np.divmod(lhs.row, r)
        lk, lm = np.divmod(lhs.col, r)
        rj, rk = np.divmod(rhs.row, r)
        ri, rm = np.divmod(rhs.col, r)
        a = canon(li, lj, lk, lm, lhs.data.astype(np.int64))
        b = canon(ri, rj, rk, rm, rhs.data.astype(np.int64))
        return bool(np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1]))

    def __repr__(self):
        return f"FinRing({self.name}, order={self.order}, d={self.d})"


@dataclass
class RingHom:
    """Additive map given by the matrix of generator images, with a preimage procedure."""

    source: FinRing
    target: FinRing
    images: np.ndarray
    preimage_fn: Callable | None = None

    def __call__(self, x):
        if self.target.r == 0:
            return self.target.zero
        if self.source.r == 0:
            return self.target.zero
        return self.target.elem(imatmul(np.asarray(x).reshape(1, -1), self.images, max(self.source.M, self.target.M))[0])

    def preimage(self, y):
        if self.preimage_fn is None:
            raise NotImplementedError("no preimage procedure")
        return self.preimage_fn(y)

    def check(self, rng: random.Random, pairs: int = 50) -> bool:
        S, R = self.source, self.target
        if not R.eq(self(S.one), R.one):
            return False
        for _ in range(pairs):
            a, b = S.random(rng), S.random(rng)
            if not R.eq(self(S.mul(a, b)), R.mul(self(a), self(b))):
                return False
            if not R.eq(self(S.add(a, b)), R.add(self(a), self(b))):
                return False
        return True


# ---------------------------------------------------------------------------
# ideals

def _span(R: FinRing, rows) -> Lattice:
    rows = np.asarray(rows)
    if rows.size == 0:
        return Lattice.from_generators(R.d, [])
    if R.prime_power is not None and R.prime_power[1] == 1 and not R.big:
        p = R.M
        E, piv = rref_mod_p(rows.reshape(-1, R.r), p)
        basis = np.zeros((R.r, R.r), dtype=np.int64)
        for k, c in enumerate(piv):
            basis[c] = E[k]
        for c in set(range(R.r)) - set(piv):
            basis[c, c] = p
        return Lattice(R.d, basis)
    return Lattice.from_generators(R.d, [list(x) for x in rows.reshape(-1, R.r)])


class Ideal:
    """Two-sided ideal stored as a canonical lattice."""

    def __init__(self, ring: FinRing, lattice: Lattice):
        self.ring = ring
        self.lattice = lattice

    @property
    def order(self) -> int:
        return self.lattice.order

    def contains(self, x) -> bool:
        return self.lattice.contains(x)

    def generators(self) -> np.ndarray:
        gens = self.lattice.generators()
        if not len(gens):
            return np.zeros((0, self.ring.r), dtype=np.int64)
        return np.array([self.ring.elem(g) for g in gens])

    def is_zero(self) -> bool:
        return self.lattice.is_zero()

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.lattice == other.lattice

    def __hash__(self):
        return hash(self.lattice)

    def __repr__(self):
        return f"Ideal(order={self.order})"


def ideal_from(R: FinRing, gens) -> Ideal:
    """Smallest two-sided ideal containing gens."""
    rows = np.asarray(list(gens), dtype=np.int64).reshape(-1, R.r) if R.r else np.zeros((0, 0), dtype=np.int64)
    L = _span(R, rows)
    while True:
        G = np.array(L.generators(), dtype=np.int64).reshape(-1, R.r) if R.r else rows
        if G.shape[0] == 0:
            return Ideal(R, L)
        # b_i * g = g @ T[i]; g * b_i = g @ T[:, i]
        left = imatmul(G, R.T.transpose(1, 0, 2).reshape(R.r, R.r * R.r), R.M).reshape(-1, R.r, R.r)
        right = imatmul(G, R.T.reshape(R.r, R.r * R.r), R.M).reshape(-1, R.r, R.r)
        new = np.concatenate([G, left.reshape(-1, R.r), right.reshape(-1, R.r)]) % R._dmod
        L2 = _span(R, new)
        if L2 == L:
            return Ideal(R, L)
        L = L2


def ideal_mul(I: Ideal, J: Ideal) -> Ideal:
    """I*J spanned by products of additive generators."""
    R = I.ring
    A, B = I.generators(), J.generators()
    if A.shape[0] == 0 or B.shape[0] == 0:
        return Ideal(R, Lattice.from_generators(R.d, []))
    # a*b = b @ left_matrix(a); left_matrix(a)[j, k] = sum_i a_i T[i, j, k]
    LA = imatmul(A, R.T.reshape(R.r, R.r * R.r), R.M).reshape(-1, R.r, R.r) % R._dmod
    prods = np.concatenate([imatmul(B, LA[a], R.M) for a in range(A.shape[0])]) % R._dmod
    return Ideal(R, _span(R, prods))


def ideal_pow_2k(I: Ideal, k: int) -> Ideal:
    for _ in range(k):
        I = ideal_mul(I, I)
    return I


def ideal_add(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.ring, I.lattice + J.lattice)


def zero_ideal(R: FinRing) -> Ideal:
    return Ideal(R, Lattice.from_generators(R.d, []))


def whole_ideal(R: FinRing) -> Ideal:
    return Ideal(R, Lattice.full(R.d))


# ---------------------------------------------------------------------------
# quotients and decomposition

def _projection_data(R: FinRing, I: Ideal):
    q = LatticeQuotient(Lattice.full(R.d), I.lattice)
    s = q.invariants
    if not s:
        return q, s, np.zeros((R.r, 0), dtype=np.int64), np.zeros((0, R.r), dtype=np.int64)
    V = q._V % q._s
    big = max(max(s), R.M) >= (1 << 20)
    P = np.array(V, dtype=object if big else np.int64)
    L = np.array([R.elem(q.lift(np.eye(len(s), dtype=np.int64)[k])) for k in range(len(s))])
    return q, s, P, L


def quotient_ring(R: FinRing, I: Ideal, name: str | None = None) -> tuple[FinRing, RingHom]:
    """R/I with the projection; preimage returns a coset representative."""
    q, s, P, L = _projection_data(R, I)
    rq = len(s)
    bound = max(max(s, default=1), R.M)
    sm = np.array(s, dtype=P.dtype) if rq else None
    if rq == 0:
        S = FinRing((), np.zeros((0, 0, 0)), [], name=name or f"{R.name}/I")
        return S, RingHom(R, S, P, lambda y: R.zero)
    # products of lifted basis elements
    X = imatmul(L, R.T.reshape(R.r, R.r * R.r), R.M).reshape(rq, R.r, R.r) % R._dmod
    Tq = np.zeros((rq, rq, rq), dtype=P.dtype)
    for a in range(rq):
        prod_rows = imatmul(L, X[a], R.M) % R._dmod  # row b is lift_a * lift_b
        Tq[a] = imatmul(prod_rows, P, bound) % sm
    one = imatmul(R.one.reshape(1, -1), P, bound)[0] % sm
    # a quotient by a two-sided ideal is a ring, so validation is skipped
    S = FinRing(s, Tq, one, name=name or f"{R.name}/I", validate=False)

    def pre(y):
        y = np.asarray(y)
        return R.elem(imatmul(y.reshape(1, -1).astype(L.dtype), L, bound)[0])

    return S, RingHom(R, S, P, pre)


@dataclass
class PComponent:
    p: int
    ring: FinRing
    hom: RingHom
    idempotent: int  # integer congruent to 1 mod p^e and 0 mod the other primary parts


def p_decomposition(R: FinRing) -> list[PComponent]:
    """R = prod R_p with R_p = R / p^{e_p} R, e_p the p-valuation of the additive exponent."""
    if R.r == 0:
        return []
    fac = factor(R.M)
    if len(fac) == 1:
        p = next(iter(fac))
        ident = RingHom(R, R, np.eye(R.r, dtype=np.int64), lambda y: R.elem(y))
        return [PComponent(p, R, ident, 1)]
    out = []
    for p, e in fac.items():
        pe = p**e
        I = Ideal(R, Lattice.from_generators(R.d, [[pe if j == i else 0 for j in range(R.r)] for i in range(R.r)]))
        S, hom = quotient_ring(R, I, name=f"{R.name}_{p}")
        eps = crt([1 if q == p else 0 for q in fac], [q**f for q, f in fac.items()])
        out.append(PComponent(p, S, hom, eps))
    return out


def assemble(R: FinRing, comps: Sequence[PComponent], parts) -> np.ndarray:
    """Inverse of the decomposition: the x in R with image parts[k] in each component."""
    x = R.zero
    for c, y in zip(comps, parts):
        x = R.add(x, R.scale(c.idempotent, c.hom.preimage(y)))
    return x


# ---------------------------------------------------------------------------
# constructors

def make_zmod(n: int) -> FinRing:
    n = int(n)
    if n < 1:
        raise RingValidationError("Z/n needs n >= 1")
    if n == 1:
        return FinRing((), np.zeros((0, 0, 0)), [], name="Z/1")
    return FinRing((n,), [[[1]]], [1], name=f"Z/{n}")


def make_field_ring(k) -> FinRing:
    """F_q as an F_p-algebra on the power basis 1, x, ..., x^{m-1}."""
    p, m = k.p, k.m
    basis = k.power_basis()
    T = np.zeros((m, m, m), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            T[i, j] = (basis[i] * basis[j]).c
    R = FinRing((p,) * m, T, [1] + [0] * (m - 1), name=f"GF({k.q})")
    R.field = k
    return R


def make_matrix_ring(S: FinRing, n: int) -> FinRing:
    """Mat_n(S); basis index (a*n + b)*r + i stands for E_ab * s_i."""
    n = int(n)
    if n < 1:
        raise RingValidationError("matrix size must be >= 1")
    r = S.r
    R = n * n * r
    T = np.zeros((R, R, R), dtype=S.T.dtype)
    idx = lambda a, b, i: (a * n + b) * r + i
    for a in range(n):
        for b in range(n):
            for c in range(n):
                # E_ab E_bc = E_ac
                for i in range(r):
                    T[idx(a, b, i), idx(b, c, 0) : idx(b, c, 0) + r, idx(a, c, 0) : idx(a, c, 0) + r] = S.T[i]
    one = np.zeros(R, dtype=S.T.dtype)
    for a in range(n):
        one[idx(a, a, 0) : idx(a, a, 0) + r] = S.one
    out = FinRing(S.d * (n * n), T, one, name=f"Mat{n}({S.name})")
    out.matrix_of = (S, n)
    return out


def check_cayley(table) -> tuple[np.ndarray, int]:
    """Validate a Cayley table; return it as an array and the identity index."""
    t = np.asarray(table, dtype=np.int64)
    g = t.shape[0]
    if t.ndim != 2 or t.shape != (g, g) or g == 0:
        raise NotAGroup("Cayley table must be a non-empty square")
    if t.min() < 0 or t.max() >= g:
        raise NotAGroup("Cayley table entries out of range")
    ar = np.arange(g)
    ids = [e for e in range(g) if np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar)]
    if not ids:
        raise NotAGroup("no identity element")
    e = ids[0]
    for row in t:
        if len(set(row.tolist())) != g:
            raise NotAGroup("some element has no inverse")
    # associativity: (ab)c == a(bc)
    lhs = t[t[:, :, None], np.arange(g)[None, None, :]]
    rhs = t[np.arange(g)[:, None, None], t[None, :, :]]
    if not np.array_equal(lhs, rhs):
        raise NotAGroup("multiplication is not associative")
    return t, e


def make_group_ring(S: FinRing, cayley) -> FinRing:
    """S[G]; basis index h*r + i stands for h * s_i."""
    t, e = check_cayley(cayley)
    g, r = t.shape[0], S.r
    R = g * r
    T = np.zeros((R, R, R), dtype=S.T.dtype)
    for a in range(g):
        for b in range(g):
            c = t[a, b]
            for i in range(r):
                T[a * r + i, b * r : (b + 1) * r, c * r : (c + 1) * r] = S.T[i]
    one = np.zeros(R, dtype=S.T.dtype)
    one[e * r : (e + 1) * r] = S.one
    out = FinRing(S.d * g, T, one, name=f"{S.name}[G{g}]")
    out.group_table = t
    return out


def make_product(*rings: FinRing) -> FinRing:
    if not rings:
        raise RingValidationError("empty product")
    ds = sum((S.d for S in rings), ())
    R = len(ds)
    big = any(S.big for S in rings)
    T = np.zeros((R, R, R), dtype=object if big else np.int64)
    one = []
    off = 0
    for S in rings:
        T[off : off + S.r, off : off + S.r, off : off + S.r] = S.T
        one += [int(x) for x in S.one]
        off += S.r
    return FinRing(ds, T, one, name=" x ".join(S.name for S in rings))


def make_poly_quotient(m: int, f: Sequence[int]) -> FinRing:
    """(Z/m)[x]/(f) for monic f given by ascending coefficients."""
    m = int(m)
    if m < 2:
        raise RingValidationError("modulus must be >= 2")
    f = [int(c) % m for c in f]
    while f and f[-1] == 0:
        f.pop()
    if not f or f[-1] != 1:
        raise RingValidationError("polynomial must be monic modulo m")
    n = len(f) - 1
    if n == 0:
        return FinRing((), np.zeros((0, 0, 0)), [], name=f"(Z/{m})[x]/(1)")
    # reductions of x^k for k < 2n - 1
    powers = []
    cur = [1] + [0] * (n - 1)
    for _ in range(2 * n - 1):
        powers.append(cur)
        top = cur[-1]
        cur = [0] + cur[:-1]
        cur = [(c - top * f[i]) % m for i, c in enumerate(cur)]
    T = np.array([[powers[i + j] for j in range(n)] for i in range(n)], dtype=object if m >= (1 << 20) else np.int64)
    return FinRing((m,) * n, T, [1] + [0] * (n - 1), name=f"(Z/{m})[x]/({','.join(map(str, f))})")


# ---------------------------------------------------------------------------
# brute-force oracles

UNIT_GUARD = 1 << 16
RADICAL_GUARD = 1 << 12


def brute_force_units(R: FinRing) -> np.ndarray:
    """Exhaustive scan of all elements with the unit test."""
    if R.order > UNIT_GUARD:
        raise TooLarge(f"|R| = {R.order} exceeds {UNIT_GUARD}")
    E = R.elements(UNIT_GUARD)
    keep = [k for k in range(E.shape[0]) if R.inverse(E[k]) is not None]
    return E[keep]


def brute_force_radical(R: FinRing) -> Ideal:
    """x is in J(R) iff 1 - a*x is a unit for every a."""
    if R.order > RADICAL_GUARD:
        raise TooLarge(f"|R| = {R.order} exceeds {RADICAL_GUARD}")
    E = R.elements(RADICAL_GUARD)
    units = set(R.codes(brute_force_units(R)).tolist())
    unit_mask = np.zeros(R.order, dtype=bool)
    unit_mask[list(units)] = True
    rad = []
    chunk = 64
    for x in E:
        P = R.right_matrix(x)  # a*x = a @ P
        ok = True
        for s in range(0, E.shape[0], chunk):
            C = (R.one - imatmul(E[s : s + chunk], P, R.M)) % R._dmod
            if not unit_mask[R.codes(C)].all():
                ok = False
                break
        if ok:
            rad.append(x)
    return Ideal(R, _span(R, np.array(rad)))
