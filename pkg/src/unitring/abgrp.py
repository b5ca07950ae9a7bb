"""Finite abelian groups Z/d_1 x ... x Z/d_n and integer lattice machinery.

Subgroups of such a group are handled as full-rank lattices L in Z^n that
contain the relation lattice d_1 Z + ... + d_n Z.  Such lattices contain
M Z^n for M = lcm(d_i), so all reductions happen modulo M.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import InfiniteGroup

_INT64_SAFE = 1 << 31


def _dtype(M: int):
    return np.int64 if M < _INT64_SAFE else object


def lcm_all(values: Iterable[int]) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


# ---------------------------------------------------------------------------
# Smith normal form over Z

@dataclass
class SNFResult:
    S: np.ndarray
    U: np.ndarray | None
    V: np.ndarray
    Vinv: np.ndarray

    @property
    def diagonal(self) -> list[int]:
        k = min(self.S.shape)
        return [int(self.S[i, i]) for i in range(k)]


def _eye_obj(n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out if n else np.zeros((0, 0), dtype=object)


def snf(A, transforms: bool = True) -> SNFResult:
    """Smith normal form S = U A V with unimodular U, V.

    Pivots on the entry of least absolute value; entries are Python ints.
    With ``transforms=False`` the left transform is not accumulated.
    """
    A = np.array(A, dtype=object)
    if A.ndim != 2:
        A = A.reshape(len(A), -1)
    m, n = A.shape
    U = _eye_obj(m) if transforms else None
    V = _eye_obj(n)
    Vinv = _eye_obj(n)

    def swap_rows(i, j):
        if i != j:
            A[[i, j]] = A[[j, i]]
            if U is not None:
                U[[i, j]] = U[[j, i]]

    def swap_cols(i, j):
        if i != j:
            A[:, [i, j]] = A[:, [j, i]]
            V[:, [i, j]] = V[:, [j, i]]
            Vinv[[i, j]] = Vinv[[j, i]]

    t = 0
    while t < min(m, n):
        sub = A[t:, t:]
        nz = np.argwhere(sub != 0)
        if nz.size == 0:
            break
        absvals = [abs(sub[i, j]) for i, j in nz]
        i, j = nz[int(np.argmin(absvals))]
        swap_rows(t, t + i)
        swap_cols(t, t + j)
        while True:
            piv = A[t, t]
            q = np.array([x // piv for x in A[t + 1 :, t]], dtype=object)
            if q.size and any(q):
                A[t + 1 :] -= np.outer(q, A[t])
                if U is not None:
                    U[t + 1 :] -= np.outer(q, U[t])
            q = np.array([x // piv for x in A[t, t + 1 :]], dtype=object)
            if q.size and any(q):
                A[:, t + 1 :] -= np.outer(A[:, t], q)
                V[:, t + 1 :] -= np.outer(V[:, t], q)
                Vinv[t] += q @ Vinv[t + 1 :]
            col = A[t + 1 :, t]
            row = A[t, t + 1 :]
            cand = [(abs(x), 0, k) for k, x in enumerate(col) if x != 0]
            cand += [(abs(x), 1, k) for k, x in enumerate(row) if x != 0]
            if cand:
                _, kind, k = min(cand)
                if kind == 0:
                    swap_rows(t, t + 1 + k)
                else:
                    swap_cols(t, t + 1 + k)
                continue
            rest = A[t + 1 :, t + 1 :]
            bad = np.argwhere(np.vectorize(lambda x: x % piv != 0, otypes=[bool])(rest)) if rest.size else []
            if len(bad):
                i = bad[0][0]
                A[t] += A[t + 1 + i]
                if U is not None:
                    U[t] += U[t + 1 + i]
                continue
            break
        if A[t, t] < 0:
            A[t] = -A[t]
            if U is not None:
                U[t] = -U[t]
        t += 1
    return SNFResult(A, U, V, Vinv)


# ---------------------------------------------------------------------------
# Hermite normal form modulo M

def hnf_mod(rows, ncols: int, M: int) -> np.ndarray:
    """HNF basis (ncols x ncols, upper triangular) of rowspan(rows) + M Z^ncols."""
    dt = _dtype(M)
    if ncols == 1:
        g = math.gcd(M, *(int(v) for v in np.asarray(rows, dtype=object).reshape(-1)))
        return np.array([[g]], dtype=dt)
    if len(rows):
        A = np.array(rows, dtype=object).reshape(-1, ncols) % M
        A = A.astype(dt)
    else:
        A = np.zeros((0, ncols), dtype=dt)
    A = A[np.any(A != 0, axis=1)] if A.size else A
    out = np.zeros((ncols, ncols), dtype=dt)
    for j in range(ncols):
        e = np.zeros((1, ncols), dtype=dt)
        e[0, j] = M
        A = np.concatenate([A, e])
        while True:
            nz = np.nonzero(A[:, j])[0]
            if nz.size <= 1:
                break
            vals = A[nz, j]
            i0 = nz[int(np.argmin(vals))]
            piv = A[i0].copy()
            others = nz[nz != i0]
            q = A[others, j] // piv[j]
            A[others] = (A[others] - q.reshape(-1, 1) * piv.reshape(1, -1)) % M
        i0 = int(nz[0])
        prow = A[i0].copy()
        h = prow[j]
        out[j] = prow
        A = np.delete(A, i0, axis=0)
        extra = ((M // h) * prow) % M
        if extra.any():
            A = np.concatenate([A, extra.reshape(1, -1)])
        if A.size:
            A = A[np.any(A != 0, axis=1)]
    for j in range(ncols):
        h = out[j, j]
        for i in range(j):
            c = out[i, j] // h
            if c:
                out[i] = (out[i] - c * out[j]) % M
    return out


def tri_coords(B: np.ndarray, x, M: int):
    """Coordinates c with c B = x modulo M Z^n, or None if x is not in the lattice."""
    n = B.shape[0]
    dt = B.dtype
    x = np.array(x, dtype=object).reshape(n) % M
    x = x.astype(dt)
    c = np.zeros(n, dtype=dt)
    for j in range(n):
        v = x[j]
        if v:
            h = B[j, j]
            if v % h:
                return None
            cj = v // h
            c[j] = cj
            x = (x - cj * B[j]) % M
    return c


class Lattice:
    """Full-rank lattice containing diag(d) Z^n; represents a subgroup of prod Z/d_i."""

    def __init__(self, d: Sequence[int], basis: np.ndarray):
        self.d = tuple(int(x) for x in d)
        self.M = lcm_all(self.d)
        self.basis = basis

    @classmethod
    def from_generators(cls, d: Sequence[int], gens) -> "Lattice":
        d = tuple(int(x) for x in d)
        n = len(d)
        M = lcm_all(d)
        rows = [list(g) for g in gens]
        rows += [[d[i] if j == i else 0 for j in range(n)] for i in range(n)]
        return cls(d, hnf_mod(rows, n, M))

    @classmethod
    def full(cls, d: Sequence[int]) -> "Lattice":
        n = len(d)
        M = lcm_all(d)
        return cls(d, np.eye(n, dtype=np.int64) if M < _INT64_SAFE else _eye_obj(n))

    @property
    def n(self) -> int:
        return len(self.d)

    @cached_property
    def index(self) -> int:
        """[Z^n : L]."""
        return math.prod(int(self.basis[i, i]) for i in range(self.n))

    @cached_property
    def order(self) -> int:
        """Order of the subgroup L / diag(d) Z^n."""
        return math.prod(self.d) // self.index

    def contains(self, x) -> bool:
        return tri_coords(self.basis, x, self.M) is not None

    def coords(self, x):
        return tri_coords(self.basis, x, self.M)

    def generators(self) -> list[np.ndarray]:
        """Nonzero reduced basis rows (as subgroup elements)."""
        out = []
        dd = np.array(self.d, dtype=object)
        for row in self.basis:
            r = (np.array(row, dtype=object) % dd).astype(np.int64 if self.M < _INT64_SAFE else object)
            if r.any():
                out.append(r)
        return out

    def __add__(self, other: "Lattice") -> "Lattice":
        assert self.d == other.d
        return Lattice.from_generators(self.d, list(self.basis) + list(other.basis))

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.d == other.d and np.array_equal(self.basis, other.basis)

    def __hash__(self):
        return hash((self.d, self.basis.tobytes()))

    def is_zero(self) -> bool:
        return self.order == 1

    def contains_lattice(self, other: "Lattice") -> bool:
        return all(self.contains(r) for r in other.basis)


@dataclass
class LatticeQuotient:
    """The abelian group big / small for lattices small <= big in Z^n.

    ``proj`` maps a vector of big to SNF coordinates; ``lift`` maps back.
    """

    big: Lattice
    small: Lattice
    invariants: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        big, small = self.big, self.small
        n, M = big.n, big.M
        rows = []
        for r in small.basis:
            c = big.coords(r)
            if c is None:
                raise ValueError("small lattice is not contained in big lattice")
            rows.append(c)
        # M e_k lies in small, but its big-coordinates are not multiples of M
        # when big is a proper sublattice; add them (modulo later ones) as relations
        B = big.basis
        for k in range(n):
            h = int(B[k, k])
            if h == 1:
                continue
            x = (-(M // h) * np.array(B[k], dtype=object)) % M
            x[k] = 0
            c = [int(v) for v in big.coords(x)]
            c[k] = (c[k] + M // h) % M
            rows.append(c)
        H = hnf_mod(rows, n, M)
        res = snf(H, transforms=False)
        diag = res.diagonal
        self._keep = [i for i, s in enumerate(diag) if s != 1]
        self.invariants = tuple(int(diag[i]) for i in self._keep)
        dt = _dtype(max(M, max(self.invariants, default=1)))
        self._V = np.array(res.V[:, self._keep], dtype=object)
        self._Vinv = np.array(res.Vinv[self._keep], dtype=object)
        self._s = np.array(self.invariants, dtype=object)
        self._dt = dt

    @cached_property
    def group(self) -> "FinAbGroup":
        return FinAbGroup(self.invariants)

    def proj(self, x) -> tuple[int, ...]:
        c = self.big.coords(x)
        if c is None:
            raise ValueError("vector not in the big lattice")
        if not self._keep:
            return ()
        y = (np.array(c, dtype=object) @ self._V) % self._s
        return tuple(int(v) for v in y)

    def lift(self, y) -> np.ndarray:
        n = self.big.n
        if not self._keep:
            return np.zeros(n, dtype=np.int64)
        c = np.array([int(v) for v in y], dtype=object) @ self._Vinv
        x = (c @ np.array(self.big.basis, dtype=object)) % np.array(self.big.d, dtype=object)
        return x.astype(np.int64) if self.big.M < _INT64_SAFE else x


# ---------------------------------------------------------------------------
# finite abelian groups

class FinAbGroup:
    """Z/d_1 x ... x Z/d_n with elements as coordinate tuples."""

    def __init__(self, d: Sequence[int] = ()):
        d = tuple(int(x) for x in d)
        if any(x < 1 for x in d):
            raise ValueError("diagonal orders must be positive")
        self.d = d

    def __repr__(self):
        return f"FinAbGroup({list(self.d)})"

    def __eq__(self, other):
        return isinstance(other, FinAbGroup) and self.invariants == other.invariants

    def __hash__(self):
        return hash(self.invariants)

    @property
    def ngens(self) -> int:
        return len(self.d)

    @property
    def order(self) -> int:
        return math.prod(self.d)

    @cached_property
    def invariants(self) -> tuple[int, ...]:
        """Canonical divisor chain with 1s stripped."""
        return invariant_factors(self.d)

    @property
    def exponent(self) -> int:
        return lcm_all(self.d)

    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.d)

    def reduce(self, x) -> tuple[int, ...]:
        return tuple(int(a) % m for a, m in zip(x, self.d))

    def add(self, x, y):
        return tuple((a + b) % m for a, b, m in zip(x, y, self.d))

    def neg(self, x):
        return tuple((-a) % m for a, m in zip(x, self.d))

    def sub(self, x, y):
        return tuple((a - b) % m for a, b, m in zip(x, y, self.d))

    def scale(self, k: int, x):
        return tuple((k * a) % m for a, m in zip(x, self.d))

    def elements(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*[range(m) for m in self.d])

    def random(self, rng):
        return tuple(rng.randrange(m) for m in self.d)

    def element_order(self, x) -> int:
        return lcm_all(m // math.gcd(a, m) for a, m in zip(x, self.d))

    def subgroup(self, gens) -> Lattice:
        return Lattice.from_generators(self.d, gens)


def invariant_factors(d: Sequence[int]) -> tuple[int, ...]:
    d = [int(x) for x in d if int(x) != 1]
    if not d:
        return ()
    if all(d[i] % d[i - 1] == 0 for i in range(1, len(d))):
        return tuple(d)
    # primary decomposition, then recombine into a chain
    from .numtheory import factor

    powers: dict[int, list[int]] = {}
    for x in d:
        if x == 0:
            raise InfiniteGroup("zero diagonal entry")
        for p, e in factor(x).items():
            powers.setdefault(p, []).append(p**e)
    length = max(len(v) for v in powers.values())
    chain = [1] * length
    for p, v in powers.items():
        v.sort()
        for i, pe in enumerate(v):
            chain[length - len(v) + i] *= pe
    return tuple(c for c in chain if c != 1)


class AbHom:
    """Homomorphism given by images of the source generators (matrix rows)."""

    def __init__(self, source: FinAbGroup | None, target: FinAbGroup, matrix):
        self.source = source
        self.target = target
        rows = len(source.d) if source is not None else len(matrix)
        M = np.array(matrix, dtype=object)
        self.matrix = M.reshape(rows, target.ngens) if M.size else np.zeros((rows, target.ngens), dtype=object)
        if source is not None:
            for di, row in zip(source.d, self.matrix):
                if any(target.scale(di, row)):
                    raise ValueError("homomorphism is not well defined")

    def __call__(self, x):
        if self.target.ngens == 0:
            return ()
        v = np.array([int(a) for a in x], dtype=object) @ self.matrix if len(x) else np.zeros(self.target.ngens, dtype=object)
        return self.target.reduce(v)

    def kernel(self) -> Lattice:
        """ker as a subgroup of the source.

        The graph {(xF + s z, x)} is put in row echelon form with the target
        columns first; the rows whose target part vanishes span the kernel.
        """
        t, s = self.source.d, self.target.d
        n, m = len(t), len(s)
        if n == 0:
            return Lattice.full(())
        M = lcm_all(t + s)
        rows = [[int(v) for v in self.matrix[i]] + [1 if j == i else 0 for j in range(n)] for i in range(n)]
        rows += [[s[i] if j == i else 0 for j in range(m)] + [0] * n for i in range(m)]
        H = hnf_mod(rows, m + n, M)
        return Lattice.from_generators(t, H[m:, m:])

    def preimage(self, y):
        """Some x with self(x) == y, or None if y is not in the image."""
        drows = self.source.d if self.source is not None else None
        return solve_left_mod(self.matrix, y, self.target.d, drows)


class QuotientMap(AbHom):
    def __init__(self, source, quotient: LatticeQuotient):
        self.quotient = quotient
        target = quotient.group
        n = quotient.big.n
        images = [quotient.proj(np.eye(n, dtype=np.int64)[i]) for i in range(n)]
        super().__init__(source, target, images if n else np.zeros((0, target.ngens)))

    def __call__(self, x):
        return self.quotient.proj(x)

    def preimage(self, y):
        return tuple(int(v) for v in self.quotient.lift(y))


def solve_left_mod(A, b, dcols: Sequence[int], drows: Sequence[int] | None = None):
    """Find y in Z^rows with y A = b (mod dcols columnwise); None if impossible."""
    A = np.array(A, dtype=object)
    rows, m = A.shape
    if m == 0:
        return (0,) * rows
    M = lcm_all(list(dcols) + list(drows or []))
    aug = []
    for i in range(rows):
        aug.append(list(A[i]) + [int(i == j) for j in range(rows)])
    for k in range(m):
        aug.append([dcols[k] if j == k else 0 for j in range(m)] + [0] * rows)
    if drows is not None:
        for i in range(rows):
            aug.append(list(A[i] * drows[i]) + [drows[i] if j == i else 0 for j in range(rows)])
    H = hnf_mod(aug, m + rows, M)
    v = np.array([int(x) for x in b] + [0] * rows, dtype=object) % M
    for j in range(m):
        if v[j]:
            h = H[j, j]
            if v[j] % h:
                return None
            v = (v - (v[j] // h) * np.array(H[j], dtype=object)) % M
    y = (-v[m:]) % M
    if drows is not None:
        y = np.array([int(a) % di for a, di in zip(y, drows)], dtype=object)
    check = (y @ A) if rows else np.zeros(m, dtype=object)
    if any((int(c) - int(t)) % dk for c, t, dk in zip(check, b, dcols)):
        return None
    return tuple(int(a) for a in y)


def from_relations(ngens: int, relations) -> tuple[FinAbGroup, QuotientMap]:
    """Z^ngens / rowspace(relations) as a finite abelian group in SNF coordinates."""
    R = np.array(relations, dtype=object).reshape(-1, ngens) if ngens else np.zeros((0, 0), dtype=object)
    if ngens == 0:
        q = LatticeQuotient(Lattice.full(()), Lattice.full(()))
        return q.group, QuotientMap(None, q)
    if R.shape[0] < ngens:
        raise InfiniteGroup("fewer relations than generators")
    res = snf(R, transforms=False)
    diag = res.diagonal
    if len(diag) < ngens or any(s == 0 for s in diag):
        raise InfiniteGroup("relation matrix has a zero invariant factor")
    M = lcm_all(diag)
    d = (M,) * ngens
    big = Lattice.full(d)
    small = Lattice.from_generators(d, list(R))
    q = LatticeQuotient(big, small)
    return q.group, QuotientMap(None, q)


def quotient(G: FinAbGroup, H: Iterable) -> tuple[FinAbGroup, QuotientMap]:
    """G / <H> with the projection (and its preimage) in SNF coordinates."""
    big = Lattice.full(G.d)
    small = Lattice.from_generators(G.d, list(H))
    q = LatticeQuotient(big, small)
    return q.group, QuotientMap(G, q)


def abelian_effective_presentation(A: FinAbGroup):
    """<x_1..x_r | x_i^{d_i}, [x_i, x_j]> on the diagonal generators of A."""
    from .fpgrp import AbelianBlackBox, EffectivePresentation, FpGroup, Word

    r = A.ngens
    relators = [Word.letter(i + 1, A.d[i]) for i in range(r)]
    relators += [Word.commutator(i + 1, j + 1) for i in range(r) for j in range(i + 1, r)]
    group = AbelianBlackBox(A)
    gens = [tuple(int(i == j) % A.d[j] for j in range(r)) for i in range(r)]

    def dlog(x):
        return Word([(i + 1, int(c)) for i, c in enumerate(x)])

    def exp(w):
        acc = [0] * r
        for g, e in w:
            acc[g - 1] += e
        return A.reduce(acc)

    return EffectivePresentation(group, FpGroup(r, relators), gens, dlog, exp)
