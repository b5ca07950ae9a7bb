"""Structure of finite-dimensional algebras over F_p.

Radical by twisted trace conditions, center, splitting of the center into
fields by idempotents, and explicit isomorphisms of simple components with
matrix rings over finite fields.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .errors import NotPAnnihilated, NotPRing, NotSemisimple, SplitFailure
from .ffield import FiniteField, factor_poly, pmul, poly
from .finring import _FLOAT_EXACT, FinRing, Ideal, _span, imatmul, make_field_ring, make_matrix_ring, make_product, quotient_ring
from .linalg import coordinates_mod_p, first_dependency_mod_p, inv_mod_p, left_kernel_mod_p, row_basis_mod_p
from .numtheory import is_prime


class FpAlgebra:
    """Associative unital algebra over F_p with structure constants C[i, j] = b_i b_j."""

    def __init__(self, p: int, C, one):
        self.p = p
        self.C = np.asarray(C, dtype=np.int64) % p
        self.dim = self.C.shape[0]
        self.one = np.asarray(one, dtype=np.int64) % p
        self._Cflat = self.C.reshape(self.dim, self.dim * self.dim)
        # float copy for BLAS, exact while dim * (p - 1)^2 < 2^52
        exact = self.dim * (p - 1) ** 2 < _FLOAT_EXACT
        self._Cf = self._Cflat.astype(np.float64) if exact and self.dim else None

    def mul(self, a, b):
        return imatmul(np.asarray(b).reshape(1, -1), self.left_matrix(a), self.p)[0] % self.p

    def left_matrix(self, a):
        """L with a*x = x @ L."""
        n = self.dim
        if self._Cf is not None:
            L = np.rint(np.asarray(a, dtype=np.float64) @ self._Cf).astype(np.int64)
        else:
            L = imatmul(np.asarray(a).reshape(1, -1), self._Cflat, self.p)[0]
        return L.reshape(n, n) % self.p

    def right_matrix(self, b):
        """N with x*b = x @ N."""
        return np.tensordot(self.C, b, ([1], [0])) % self.p

    def mul_rows(self, X, b):
        return imatmul(np.asarray(X), self.right_matrix(b), self.p) % self.p

    def lmul_rows(self, a, X):
        return imatmul(np.asarray(X), self.left_matrix(a), self.p) % self.p

    def random(self, rng: random.Random):
        return np.array([rng.randrange(self.p) for _ in range(self.dim)], dtype=np.int64)

    def random_in(self, basis, rng: random.Random):
        c = np.array([rng.randrange(self.p) for _ in range(basis.shape[0])], dtype=np.int64)
        return (c @ basis) % self.p

    def power(self, x, e: int):
        out = self.one
        while e:
            if e & 1:
                out = self.mul(out, x)
            e >>= 1
            if e:
                x = self.mul(x, x)
        return out


def algebra_from_pring(R: FinRing) -> FpAlgebra:
    """The F_p-algebra on the additive generators of a ring with pR = 0.

    The coordinate maps in both directions are the identity on coordinate vectors.
    """
    if R.r == 0:
        raise NotPAnnihilated("the zero ring has no characteristic prime")
    p = R.d[0]
    if not is_prime(p) or any(di != p for di in R.d):
        raise NotPAnnihilated(f"additive orders {R.d} are not all one prime")
    return FpAlgebra(p, R.T, R.one)


# ---------------------------------------------------------------------------
# radical

def _twisted_traces(Ls: np.ndarray, p: int, i: int) -> np.ndarray:
    """(Tr(L~^(p^i)) mod p^(i+1)) / p^i for a stack of matrices, L~ the integer lift."""
    mod = p ** (i + 1)
    n = Ls.shape[-1]
    exact = n * (mod - 1) ** 2 < (1 << 52)
    dt = np.float64 if exact else np.int64
    base = (Ls % mod).astype(dt)
    X = None
    e = p**i
    while e:
        if e & 1:
            X = base.copy() if X is None else np.fmod(np.matmul(X, base), mod) if exact else np.matmul(X, base) % mod
        e >>= 1
        if e:
            base = np.fmod(np.matmul(base, base), mod) if exact else np.matmul(base, base) % mod
    t = np.rint(np.trace(X, axis1=1, axis2=2)).astype(np.int64) % mod
    assert not np.any(t % (p**i)), "twisted trace not divisible by p^i"
    return t // p**i


def radical_fp(A: FpAlgebra) -> np.ndarray:
    """Row basis (rref) of the Jacobson radical.

    I_{-1} = A and I_i = {x in I_{i-1} : g_i(x y) = 0 for all y}, where g_i
    is the twisted trace; the chain stops at i = floor(log_p dim).
    """
    p, n = A.p, A.dim
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    top = 0
    while p ** (top + 1) <= n:
        top += 1
    I = np.eye(n, dtype=np.int64)
    Cflat = A.C.reshape(n, n * n)
    for i in range(top + 1):
        if I.shape[0] == 0:
            break
        # row k of Ls[s] is v_s * b_k, which is also the left regular matrix of v_s
        Ls = imatmul(I, Cflat, p).reshape(I.shape[0], n, n) % p
        # g_i is linear on the ideal I_{i-1}
        phi = _twisted_traces(Ls, p, i)
        # I is in rref, so coordinates inside I are read off at the pivot columns
        piv = [int(np.nonzero(row)[0][0]) for row in I]
        G = (Ls[:, :, piv] @ phi) % p
        K = left_kernel_mod_p(G, p)
        I = row_basis_mod_p((K @ I) % p, p, n) if K.shape[0] else np.zeros((0, n), dtype=np.int64)
    return I


def center(A: FpAlgebra) -> np.ndarray:
    """Row basis of {x : x b = b x for every basis b}."""
    n, p = A.dim, A.p
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    # x*b_k = x @ C[:, k, :], b_k*x = x @ C[k]
    blocks = [(A.C[:, k, :] - A.C[k]) % p for k in range(n)]
    return row_basis_mod_p(left_kernel_mod_p(np.concatenate(blocks, axis=1), p), p, n)


def _is_nilpotent_rows(A: FpAlgebra, basis: np.ndarray) -> bool:
    """Powers of the span shrink to zero."""
    cur = basis
    for _ in range(A.dim + 1):
        if cur.shape[0] == 0:
            return True
        prods = np.concatenate([A.lmul_rows(a, basis) for a in cur]) % A.p
        nxt = row_basis_mod_p(prods, A.p, A.dim)
        if nxt.shape[0] >= cur.shape[0]:
            return nxt.shape[0] == 0
        cur = nxt
    return cur.shape[0] == 0


def jacobson_radical(R: FinRing) -> Ideal:
    """J(R) for a p-ring: the preimage of the radical of R/pR."""
    pp = R.prime_power
    if pp is None:
        if R.r == 0:
            return Ideal(R, _span(R, np.zeros((0, 0), dtype=np.int64)))
        raise NotPRing(f"{R.name} does not have prime power order")
    p, e = pp
    pR = Ideal(R, _span(R, (p * np.eye(R.r, dtype=np.int64)) % R._dmod))
    if e == 1:
        S, proj = R, None
    else:
        S, proj = quotient_ring(R, pR)
    if S.r == 0:
        return pR
    A = algebra_from_pring(S)
    J = radical_fp(A)
    if proj is None:
        return Ideal(R, _span(R, J))
    lifts = np.array([proj.preimage(v) for v in J]).reshape(-1, R.r)
    gens = np.concatenate([lifts, (p * np.eye(R.r, dtype=np.int64)) % R._dmod])
    return Ideal(R, _span(R, gens))


# ---------------------------------------------------------------------------
# Wedderburn decomposition

def _min_poly(A: FpAlgebra, x, e) -> list[int]:
    """Minimal polynomial (ascending, monic) of x in the unital algebra with identity e."""
    powers = [e % A.p]
    while True:
        powers.append(A.mul(powers[-1], x))
        c = first_dependency_mod_p(np.array(powers), A.p)
        if c is not None:
            return c


def _poly_at(A: FpAlgebra, coeffs, x, e):
    """sum c_i x^i with x^0 = e."""
    out = np.zeros(A.dim, dtype=np.int64)
    cur = e
    for c in coeffs:
        out = (out + int(c) * cur) % A.p
        cur = A.mul(cur, x)
    return out


def _split_idempotents(A: FpAlgebra, x, e, k: FiniteField) -> list[np.ndarray] | None:
    """Orthogonal idempotents summing to e from the primary decomposition of minpoly(x)."""
    f = _min_poly(A, x, e)
    fac = factor_poly(poly(k, f))
    if len(fac) < 2:
        return None
    from .ffield import pdivmod

    parts = []
    for g, mult in fac:
        gm = [k.one]
        for _ in range(mult):
            gm = pmul(gm, g)
        parts.append(gm)
    full = poly(k, f)
    idems = []
    for j, gj in enumerate(parts):
        cof, rem = pdivmod(full, gj)
        assert all(c.is_zero() for c in rem)
        # u * cof = 1 mod gj gives the CRT coefficient
        u = _poly_inverse_mod(cof, gj, k)
        h = pmul(u, cof)
        _, h = pdivmod(h, full)
        idems.append(_poly_at(A, [int(c) for c in h], x, e))
    return idems


def _poly_inverse_mod(a, m, k):
    """Inverse of a modulo m over the field k (extended Euclid)."""
    from .ffield import pdivmod, psub

    r0, r1 = m, pdivmod(a, m)[1]
    s0, s1 = [], [k.one]
    while r1 and not all(c.is_zero() for c in r1):
        q, r = pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1))
    # r0 is a nonzero constant
    c = r0[0].inverse()
    return [c * t for t in s0]


def _block_basis(A: FpAlgebra, e, f):
    """Row basis of e A f."""
    n = A.dim
    left = A.lmul_rows(e, np.eye(n, dtype=np.int64))  # e*b_i
    both = np.array([A.mul(row, f) for row in left])
    return row_basis_mod_p(both, A.p, n)


@dataclass
class SimpleComponent:
    field: FiniteField
    n: int
    idempotent: np.ndarray
    theta: np.ndarray  # generator of the component's center, acting as the field generator
    vbasis: np.ndarray  # k-basis of the module A*eps, as algebra elements


@dataclass
class WedderburnData:
    algebra: FpAlgebra
    components: list[SimpleComponent]
    target: FinRing
    forward: np.ndarray  # dim x dim over F_p: coordinates in target
    backward: np.ndarray

    def to_target(self, x):
        return (np.asarray(x) @ self.forward) % self.algebra.p

    def from_target(self, y):
        return (np.asarray(y) @ self.backward) % self.algebra.p

    def offsets(self) -> list[int]:
        out, off = [], 0
        for c in self.components:
            out.append(off)
            off += c.n * c.n * c.field.m
        return out


def _central_fields(A: FpAlgebra, Z: np.ndarray, rng: random.Random, tries: int):
    """Split 1 into central primitive idempotents; return (e, theta, minpoly) triples."""
    p = A.p
    kp = FiniteField(p)
    todo = [A.one]
    done = []
    budget = tries
    while todo:
        e = todo.pop()
        eZ = row_basis_mod_p(np.array([A.mul(e, z) for z in Z]), p, A.dim)
        dz = eZ.shape[0]
        if dz == 1:
            done.append((e, e, [0, 1]))
            continue
        while True:
            if budget <= 0:
                raise SplitFailure("could not split the center into fields")
            budget -= 1
            x = A.random_in(eZ, rng)
            f = _min_poly(A, x, e)
            if len(f) - 1 == dz and len(factor_poly(poly(kp, f))) == 1 and factor_poly(poly(kp, f))[0][1] == 1:
                done.append((e, x, f))
                break
            idems = _split_idempotents(A, x, e, kp)
            if idems is not None:
                todo.extend(idems)
                break
    return done


def _primitive_idempotent(A: FpAlgebra, e, m: int, rng: random.Random, tries: int):
    """A primitive idempotent inside the simple block eA, i.e. dim(eps A eps) = m."""
    kp = FiniteField(A.p)
    eps = e
    budget = tries
    while True:
        B = _block_basis(A, eps, eps)
        if B.shape[0] == m:
            return eps
        if budget <= 0:
            raise SplitFailure("no primitive idempotent found")
        budget -= 1
        y = A.random_in(B, rng)
        idems = _split_idempotents(A, y, eps, kp)
        if idems is None:
            continue
        # keep the smallest piece
        idems.sort(key=lambda u: _block_basis(A, u, u).shape[0])
        eps = idems[0]


def wedderburn(A: FpAlgebra, seed: int = 0, check: bool = True) -> WedderburnData:
    """Explicit isomorphism of a semisimple algebra with a product of matrix rings over fields."""
    p, dim = A.p, A.dim
    rng = random.Random(seed)
    if check and radical_fp(A).shape[0]:
        raise NotSemisimple("the algebra has a nonzero radical")
    tries = 20 * max(dim, 1)
    Z = center(A)
    comps = []
    for e, theta, f in _central_fields(A, Z, rng, tries):
        m = len(f) - 1
        k = FiniteField(p, f) if m > 1 else FiniteField(p)
        block = _block_basis(A, e, e)
        n2 = block.shape[0] // m
        n = int(round(n2**0.5))
        if n * n * m != block.shape[0]:
            raise SplitFailure("component dimension is not n^2 [k:F_p]")
        eps = _primitive_idempotent(A, e, m, rng, tries) if n > 1 else e
        # module V = (eA) eps, a k-space of dimension n with theta acting as the field generator
        V = _block_basis(A, e, eps)
        thetas = [e]
        for _ in range(1, m):
            thetas.append(A.mul(thetas[-1], theta))
        chosen: list[np.ndarray] = []
        span = np.zeros((0, dim), dtype=np.int64)
        for v in V:
            cand = np.array([A.mul(t, v) for t in thetas])
            if row_basis_mod_p(np.concatenate([span, cand]), p, dim).shape[0] > span.shape[0]:
                chosen.append(v)
                span = row_basis_mod_p(np.concatenate([span, cand]), p, dim)
            if len(chosen) == n:
                break
        if len(chosen) != n:
            raise SplitFailure("module is not free of the expected rank")
        comps.append(SimpleComponent(k, n, e, theta, np.array(chosen)))
    target = make_product(*[make_matrix_ring(make_field_ring(c.field), c.n) for c in comps])
    forward = np.zeros((dim, target.r), dtype=np.int64)
    off = 0
    for c in comps:
        m = c.field.m
        thetas = [c.idempotent]
        for _ in range(1, m):
            thetas.append(A.mul(thetas[-1], c.theta))
        # F_p-basis of V ordered (i, t): theta^t v_i
        Vb = np.array([A.mul(t, v) for v in c.vbasis for t in thetas])
        for s in range(dim):
            b = np.eye(dim, dtype=np.int64)[s]
            imgs = np.array([A.mul(b, v) for v in c.vbasis])  # b * v_j
            co = coordinates_mod_p(Vb, imgs, p).reshape(c.n, c.n, m)  # [j, i, t]
            # matrix entry (i, j) has field coordinates co[j, i, :]
            forward[s, off : off + c.n * c.n * m] = co.transpose(1, 0, 2).reshape(-1)
        off += c.n * c.n * m
    if off != dim:
        raise SplitFailure("component dimensions do not add up")
    backward = inv_mod_p(forward, p)
    W = WedderburnData(A, comps, target, forward, backward)
    if check:
        verify_wedderburn(W)
    return W


def verify_wedderburn(W: WedderburnData) -> None:
    """Check multiplicativity on all basis pairs and that unity maps to unity."""
    A, T, p = W.algebra, W.target, W.algebra.p
    n = A.dim
    F = W.forward
    if not np.array_equal(W.to_target(A.one), T.one % p):
        raise SplitFailure("unity is not preserved")
    # phi(b_s b_t) vs phi(b_s) phi(b_t)
    lhs = imatmul(A.C.reshape(n * n, n), F, p) % p
    FT = imatmul(F, T.T.reshape(T.r, T.r * T.r), p).reshape(n, T.r, T.r) % p  # row s: left matrix of phi(b_s)
    rhs = np.einsum("tj,sjk->stk", F.astype(np.float64), FT.astype(np.float64))
    rhs = np.rint(rhs).astype(np.int64).reshape(n * n, T.r) % p
    if not np.array_equal(lhs, rhs):
        raise SplitFailure("Wedderburn map is not multiplicative")
