"""Unit groups of finite rings: SL_n/GL_n over finite fields, unipotent units,
semisimple units, the full unit group, its abelianization, and K_1.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .abgrp import AbHom, FinAbGroup, Lattice, LatticeQuotient, abelian_effective_presentation, lcm_all
from .algstruct import _block_basis, _central_fields, algebra_from_pring, center, jacobson_radical, wedderburn
from .errors import NotDeterminantOne, NotInSubgroup, NotNilpotent
from .ffield import FFElement, FiniteField, discrete_log, primitive_root
from .finring import (
    FinRing,
    Ideal,
    assemble,
    ideal_mul,
    imatmul,
    make_field_ring,
    make_matrix_ring,
    p_decomposition,
    quotient_ring,
    zero_ideal,
)
from .fpgrp import (
    BlackBoxGroup,
    chain_extensions,
    EffectivePresentation,
    FpGroup,
    GroupMap,
    Word,
    abelianized_invariants,
    direct_product_presentation,
    extend_presentation,
    transport,
    trivial_presentation,
)


# ---------------------------------------------------------------------------
# black boxes

class UnitGroup(BlackBoxGroup):
    """R^x with elements as coordinate vectors."""

    def __init__(self, R: FinRing):
        self.R = R

    def mul(self, a, b):
        return self.R.mul(a, b)

    def inv(self, a):
        y = self.R.inverse(a)
        if y is None:
            raise ValueError("not a unit")
        return y

    @property
    def one(self):
        return self.R.one

    def key(self, a):
        return self.R.key(a)

    def contains(self, a) -> bool:
        return self.R.is_unit(a)


class FieldUnits(BlackBoxGroup):
    def __init__(self, k: FiniteField):
        self.k = k

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return a.inverse()

    @property
    def one(self):
        return self.k.one

    def key(self, a):
        return a.code


class MatrixGroup(UnitGroup):
    """GL_n(k) realized inside the ring Mat_n(k) on the basis E_ab * theta^t."""

    def __init__(self, k: FiniteField, n: int):
        self.k, self.n = k, n
        super().__init__(make_matrix_ring(make_field_ring(k), n))

    def to_mat(self, x) -> list[list[FFElement]]:
        n, m, k = self.n, self.k.m, self.k
        return [[k.elem([int(c) for c in x[(a * n + b) * m : (a * n + b + 1) * m]]) for b in range(n)] for a in range(n)]

    def from_mat(self, M) -> np.ndarray:
        n, m = self.n, self.k.m
        v = np.zeros(n * n * m, dtype=np.int64)
        for a in range(n):
            for b in range(n):
                v[(a * n + b) * m : (a * n + b + 1) * m] = self.k.elem(M[a][b]).c
        return v

    def det(self, x) -> FFElement:
        return mat_det(self.to_mat(x), self.k)

    def transvection(self, i: int, j: int, c) -> np.ndarray:
        M = identity_mat(self.k, self.n)
        M[i][j] = self.k.elem(c)
        return self.from_mat(M)

    def diag(self, entries) -> np.ndarray:
        M = identity_mat(self.k, self.n)
        for i, e in enumerate(entries):
            M[i][i] = self.k.elem(e)
        return self.from_mat(M)


def identity_mat(k: FiniteField, n: int):
    return [[k.one if a == b else k.zero for b in range(n)] for a in range(n)]


def mat_det(M, k: FiniteField) -> FFElement:
    A = [row[:] for row in M]
    n = len(A)
    det = k.one
    for c in range(n):
        piv = next((r for r in range(c, n) if not A[r][c].is_zero()), None)
        if piv is None:
            return k.zero
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det = det * A[c][c]
        inv = A[c][c].inverse()
        for r in range(c + 1, n):
            f = A[r][c] * inv
            if not f.is_zero():
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return det


def gl_order(q: int, n: int) -> int:
    return math.prod(q**n - q**i for i in range(n))


# ---------------------------------------------------------------------------
# fields and elementary matrices

def field_units_presentation(k: FiniteField) -> EffectivePresentation:
    """<x | x^(q-1)> on a primitive root; the trivial presentation for F_2."""
    G = FieldUnits(k)
    if k.q == 2:
        return trivial_presentation(G)
    w = primitive_root(k)
    q1 = k.q - 1

    def dlog(u):
        return Word.letter(1, discrete_log(k, w, u))

    def exp(word):
        return w ** (sum(e for _, e in word) % q1)

    return EffectivePresentation(G, FpGroup(1, [Word.letter(1, q1)]), [w], dlog, exp, trace={"kind": "field", "q": k.q})


def elementary_ops(M, k: FiniteField) -> list[tuple[int, int, FFElement]]:
    """Transvections (i, j, c) with M = e_{i1 j1}(c1) ... e_{is js}(cs); needs det M = 1."""
    n = len(M)
    A = [[k.elem(x) for x in row] for row in M]
    if mat_det(A, k) != k.one:
        raise NotDeterminantOne("matrix does not have determinant 1")
    ops = []  # left multiplications applied to A

    def addrow(i, j, c):
        # row_i += c * row_j, i.e. A <- e_ij(c) A
        if c.is_zero():
            return
        A[i] = [x + c * y for x, y in zip(A[i], A[j])]
        ops.append((i, j, c))

    for j in range(n - 1):
        if A[j][j] != k.one:
            below = next((i for i in range(j + 1, n) if not A[i][j].is_zero()), None)
            if below is None:
                # column j below the diagonal is zero, so A[j][j] != 0; copy it down
                addrow(j + 1, j, k.one)
                below = j + 1
            addrow(j, below, (k.one - A[j][j]) / A[below][j])
        for i in range(n):
            if i != j and not A[i][j].is_zero():
                addrow(i, j, -A[i][j])
    j = n - 1
    assert A[j][j] == k.one
    for i in range(n - 1):
        if not A[i][j].is_zero():
            addrow(i, j, -A[i][j])
    # e_s ... e_1 M = I  =>  M = e_1^{-1} ... e_s^{-1}
    return [(i, j, -c) for i, j, c in ops]


def _coeffs(c: FFElement) -> list[int]:
    return [int(x) for x in c.c]


def elementary_word(M, k: FiniteField) -> Word:
    """Word in the generators e_ij(alpha^t) of the Steinberg presentation (n >= 3 numbering)."""
    n = len(M)
    m = k.m
    idx = _steinberg_index(n, m)
    letters = []
    for i, j, c in elementary_ops(M, k):
        for t, ct in enumerate(_coeffs(c)):
            if ct:
                letters.append((idx[(i, j, t)], ct))
    return Word(letters)


def _steinberg_index(n: int, m: int) -> dict:
    idx = {}
    for i in range(n):
        for j in range(n):
            if i != j:
                for t in range(m):
                    idx[(i, j, t)] = len(idx) + 1
    return idx


def sl_n_presentation(k: FiniteField, n: int) -> EffectivePresentation:
    """Effective presentation of SL_n(k), n >= 2."""
    if n < 2:
        raise ValueError("SL_n needs n >= 2")
    G = MatrixGroup(k, n)
    if n == 2:
        return _sl2_presentation(k, G)
    m, p = k.m, k.p
    basis = k.power_basis()
    idx = _steinberg_index(n, m)
    gens = [None] * len(idx)
    for (i, j, t), g in idx.items():
        gens[g - 1] = G.transvection(i, j, basis[t])

    def e_word(i, j, c: FFElement) -> Word:
        return Word((idx[(i, j, t)], ct) for t, ct in enumerate(_coeffs(c)) if ct)

    rels: list[Word] = []
    pos = [(i, j) for i in range(n) for j in range(n) if i != j]
    for i, j in pos:
        for s in range(m):
            rels.append(Word.letter(idx[(i, j, s)], p))
            for t in range(s + 1, m):
                rels.append(Word.commutator(idx[(i, j, s)], idx[(i, j, t)]))
    for a, (i, j) in enumerate(pos):
        for kk, l in pos[a + 1 :]:
            if j != kk and i != l:
                for s in range(m):
                    for t in range(m):
                        rels.append(Word.commutator(idx[(i, j, s)], idx[(kk, l, t)]))
    for i, j in pos:
        for l in range(n):
            if l != i and l != j:
                for s in range(m):
                    for t in range(m):
                        c = e_word(i, l, basis[s] * basis[t])
                        rels.append(Word.commutator(idx[(i, j, s)], idx[(j, l, t)]) * c.inverse())
    assert len(rels) <= 4 * n**4 * m**3

    def dlog(x):
        return elementary_word(G.to_mat(x), k)

    trace = {"kind": "SL", "n": n, "q": k.q, "ngens": len(gens), "nrelators": len(rels)}
    return EffectivePresentation(G, FpGroup(len(gens), rels), gens, dlog, trace=trace)


def _sl2_presentation(k: FiniteField, G: MatrixGroup) -> EffectivePresentation:
    """SL_2(k) on tau = e12(1), delta = diag(w^-1, w), U = [[0,-1],[1,0]]."""
    from .linalg import inv_mod_p

    p, m, q = k.p, k.m, k.q
    w = primitive_root(k) if q > 2 else k.one
    one, zero = k.one, k.zero
    tau = G.transvection(0, 1, one)
    delta = G.diag([w.inverse(), w])
    U = G.from_mat([[zero, -one], [one, zero]])
    gens = [tau, delta, U]
    TAU, DEL, UU = 1, 2, 3
    # coordinates in the F_p-basis w^(2i), i < m
    w2 = w * w
    B = np.array([(w2**i).c for i in range(m)], dtype=np.int64)
    Binv = inv_mod_p(B, p)

    def coords(c: FFElement) -> list[int]:
        return [int(x) for x in (np.array(c.c, dtype=np.int64) @ Binv) % p]

    def T(i: int, e: int = 1) -> Word:
        # delta^-i tau delta^i = e12(w^(2i))
        return Word([(DEL, -i), (TAU, e), (DEL, i)])

    def e12(c: FFElement) -> Word:
        out = Word()
        for i, ci in enumerate(coords(c)):
            if ci:
                out = out * T(i, ci)
        return out

    def e21(c: FFElement) -> Word:
        return Word.letter(UU, -1) * e12(-c) * Word.letter(UU, 1)

    def delta_power(lam: FFElement) -> int:
        return 0 if q == 2 else discrete_log(k, w, lam)

    rels = [Word.letter(TAU, p)]
    rels += [Word([(TAU, 1)]) * T(j) * Word([(TAU, -1)]) * T(j).inverse() for j in range(1, m)]
    rels.append(T(m) * e12(w2**m).inverse())
    rels.append(Word.letter(DEL, q - 1))
    rels.append(Word.letter(UU, 2) * Word.letter(DEL, -delta_power(-one)))
    rels.append(Word([(UU, -1), (DEL, 1), (UU, 1), (DEL, 1)]))
    reps = [one] if q % 2 == 0 else [one, w]
    for a in reps:
        b = -(a.inverse())
        lhs = G.mul(G.mul(U, G.transvection(0, 1, a)), G.inv(U))
        eb = G.transvection(0, 1, b)
        D = G.mul(G.mul(G.mul(G.inv(eb), lhs), G.inv(eb)), G.inv(U))
        Dm = G.to_mat(D)
        assert Dm[0][1].is_zero() and Dm[1][0].is_zero() and Dm[0][0] * Dm[1][1] == one
        j = delta_power(Dm[1][1])
        rhs = e12(b) * Word.letter(DEL, j) * Word.letter(UU, 1) * e12(b)
        rels.append(Word([(UU, 1)]) * e12(a) * Word([(UU, -1)]) * rhs.inverse())
    rels = [r for r in rels if r]

    def dlog(x):
        out = Word()
        for i, j, c in elementary_ops(G.to_mat(x), k):
            out = out * (e12(c) if (i, j) == (0, 1) else e21(c))
        return out

    trace = {"kind": "SL", "n": 2, "q": q, "ngens": 3, "nrelators": len(rels)}
    return EffectivePresentation(G, FpGroup(3, rels), gens, dlog, trace=trace)


def gl_n_presentation(k: FiniteField, n: int, check: bool = True) -> EffectivePresentation:
    """GL_n(k) from 1 -> SL_n(k) -> GL_n(k) -det-> k^x -> 1."""
    G = MatrixGroup(k, n)
    K = field_units_presentation(k)
    if n == 1:
        return transport(
            K,
            G,
            lambda x: k.elem([int(c) for c in x]),
            lambda u: np.array(u.c, dtype=np.int64),
            trace={"kind": "GL", "n": 1, "q": k.q, "ngens": K.ngens, "nrelators": len(K.relators)},
        )
    S = sl_n_presentation(k, n)
    S.group = G  # same black box
    iota = GroupMap(G, G, lambda x: x, lambda x: _in_sl(G, x))
    pi = GroupMap(G, K.group, G.det, lambda u: G.diag([u] + [k.one] * (n - 1)))
    P = extend_presentation(S, K, G, iota, pi, check=check)
    P.trace = {"kind": "GL", "n": n, "q": k.q, "ngens": P.ngens, "nrelators": len(P.relators), "SL": S.trace}
    return P


def _in_sl(G: MatrixGroup, x):
    if G.det(x) != G.k.one:
        raise NotInSubgroup("determinant is not 1")
    return x


# ---------------------------------------------------------------------------
# unipotent units

class _Layer:
    """The quotient I/I' (I' = I^2 or a smaller ideal) with vectorized projection."""

    def __init__(self, R: FinRing, top: Ideal, low: Ideal):
        self.R = R
        self.q = LatticeQuotient(top.lattice, low.lattice)
        self.A = self.q.group
        self.s = np.array(self.A.d, dtype=np.int64)
        self.B = np.array(top.lattice.basis, dtype=np.int64)
        self.V = np.array(self.q._V, dtype=object) % np.array(self.q._s, dtype=object) if self.A.ngens else None
        self.V = self.V.astype(np.int64) if self.V is not None else None
        one = R.one
        # generator x_j of (1+I)/(1+I') is 1 - lift(e_j)
        self.gens = [R.sub(one, R.elem(self.q.lift(np.eye(self.A.ngens, dtype=np.int64)[j]))) for j in range(self.A.ngens)]
        self._invmats: dict = {}

    @property
    def ngens(self) -> int:
        return self.A.ngens

    def proj_many(self, X) -> np.ndarray:
        """SNF coordinates of the rows of X (vectors of the top lattice) modulo the low lattice."""
        X = np.asarray(X, dtype=np.int64) % self.R._dmod
        M = self.R.M
        n = self.B.shape[0]
        c = np.zeros((X.shape[0], n), dtype=np.int64)
        x = X.copy()
        for j in range(n):
            h = int(self.B[j, j])
            v = x[:, j]
            if np.any(v % h):
                raise NotInSubgroup("vector outside the layer's ideal")
            cj = v // h
            c[:, j] = cj
            if cj.any():
                x = (x - np.outer(cj, self.B[j])) % M
        if not self.ngens:
            return np.zeros((X.shape[0], 0), dtype=np.int64)
        return imatmul(c, self.V, max(M, int(self.s.max()))) % self.s

    def pi(self, u) -> tuple:
        return tuple(int(v) for v in self.proj_many(self.R.sub(self.R.one, u).reshape(1, -1))[0])

    def inv_power_matrix(self, j: int, c: int) -> np.ndarray:
        """Left-multiplication matrix of x_j^(-c)."""
        key = (j, c)
        if key not in self._invmats:
            R = self.R
            g = R.pow(R.inverse(self.gens[j]), c)
            self._invmats[key] = R.left_matrix(g)
        return self._invmats[key]


def _nilpotent_filtration(R: FinRing, I: Ideal) -> list[Ideal]:
    """[I, I^2, I^4, ...] down to the last nonzero power."""
    out = []
    cur = I
    steps = 0
    limit = max(R.order.bit_length(), 1) + 1
    while not cur.is_zero():
        out.append(cur)
        steps += 1
        if steps > limit:
            raise NotNilpotent("ideal powers do not reach zero")
        nxt = ideal_mul(cur, cur)
        if nxt == cur:
            raise NotNilpotent("ideal is idempotent and nonzero")
        cur = nxt
    return out


def _peeler(R: FinRing, layers: list[_Layer], offsets: list[int]):
    """Batched dlog for 1 + I_top: peel layers from the top down.

    Mirrors the extension dlog: w' = abelian dlog of the top layer image,
    then continue with exp(w'^-1) * g one layer lower.
    """

    def dlog_many(elems: list) -> list[Word]:
        if not elems:
            return []
        U = np.array([R.elem(u) for u in elems], dtype=np.int64)
        letters: list[list] = [[] for _ in elems]
        for layer, off in zip(layers, offsets):
            if not layer.ngens:
                continue
            Y = layer.proj_many((R.one - U) % R._dmod)
            for row, y in enumerate(Y.tolist()):
                letters[row].extend((off + j + 1, c) for j, c in enumerate(y) if c)
            for j in range(layer.ngens):
                col = Y[:, j]
                for c in np.unique(col[col != 0]).tolist():
                    rows = np.nonzero(col == c)[0]
                    U[rows] = imatmul(U[rows], layer.inv_power_matrix(j, c), R.M) % R._dmod
        if np.any(U != R.one):
            raise NotInSubgroup("element is not in 1 + I")
        return [Word(l) for l in letters]

    return dlog_many


def unipotent_layer(R: FinRing, I: Ideal) -> EffectivePresentation:
    """(1+I)/(1+I^2) through the isomorphism with I/I^2, a -> 1 - a."""
    low = ideal_mul(I, I)
    if low == I and not I.is_zero():
        raise NotNilpotent("I = I^2 is nonzero")
    layer = _Layer(R, I, low)
    A = abelian_effective_presentation(layer.A)
    group = _LayerGroup(R, layer)
    return transport(A, group, layer.pi, lambda y: group.lift(y), trace={"kind": "layer", "ngens": A.ngens, "exponent_bound": layer.A.exponent})


class _LayerGroup(UnitGroup):
    """Units of 1+I compared modulo 1+I^2."""

    def __init__(self, R: FinRing, layer: _Layer):
        super().__init__(R)
        self.layer = layer

    def key(self, a):
        return self.layer.pi(a)

    def lift(self, y):
        return self.R.sub(self.R.one, self.R.elem(self.layer.q.lift(y)))


def unipotent_presentation(R: FinRing, I: Ideal, check: bool = True) -> EffectivePresentation:
    """Effective presentation of 1 + I for a nilpotent ideal I."""
    G = UnitGroup(R)
    powers = _nilpotent_filtration(R, I)
    if not powers:
        P = trivial_presentation(G)
        P.trace = {"kind": "unipotent", "layers": [], "ngens": 0, "nrelators": 0, "exponent_bound": 1}
        return P
    k = len(powers)
    zero = zero_ideal(R)
    # bottom layer first: level l has top ideal powers[k - l]
    layers = []
    for l in range(1, k + 1):
        top = powers[k - l]
        low = powers[k - l + 1] if l > 1 else zero
        layers.append(_Layer(R, top, low))
    specs = []
    for l, layer in enumerate(layers, start=1):
        A = abelian_effective_presentation(layer.A)
        low_ideal = powers[k - l + 1] if l > 1 else zero

        def pre_in(u, low_ideal=low_ideal):
            if not low_ideal.contains(R.sub(u, R.one)):
                raise NotInSubgroup("unit not in the lower layer")
            return u

        # level l carries layers l, l-1, ..., 1; top layer generators come first
        level = layers[:l][::-1]
        offs = np.cumsum([0] + [L.ngens for L in level])[:-1].tolist()
        specs.append(
            {
                "group": G,
                "quotient": A,
                "pi": GroupMap(G, A.group, layer.pi, lambda y, layer=layer: R.sub(R.one, R.elem(layer.q.lift(y)))),
                "iota": GroupMap(G, G, lambda u: u, pre_in, preimage_many=lambda us: us),
                "dlog_many": _peeler(R, level, offs),
                "check": check,
            }
        )
    P = chain_extensions(specs)
    expo = math.prod(L.A.exponent for L in layers)
    P.trace.update({"kind": "unipotent", "exponent_bound": expo, "order": math.prod(L.A.order for L in layers)})
    return P


# ---------------------------------------------------------------------------
# semisimple rings and p-rings

def semisimple_units(S: FinRing, seed: int = 0, check: bool = True) -> EffectivePresentation:
    """S^x for a semisimple ring with pS = 0, through S = prod Mat_{n_i}(k_i)."""
    G = UnitGroup(S)
    if S.r == 0:
        P = trivial_presentation(G)
        P.trace = {"kind": "semisimple", "components": [], "ngens": 0, "nrelators": 0, "exponent_bound": 1}
        return P
    W = wedderburn(algebra_from_pring(S), seed=seed, check=check)
    factors = [gl_n_presentation(c.field, c.n, check=check) for c in W.components]
    prod = direct_product_presentation(*factors)
    bounds = np.cumsum([0] + [c.n * c.n * c.field.m for c in W.components]).tolist()
    p = W.algebra.p

    def forward(u):
        y = W.to_target(np.asarray(u, dtype=np.int64))
        return tuple(y[bounds[i] : bounds[i + 1]] for i in range(len(factors)))

    def backward(parts):
        return S.elem(W.from_target(np.concatenate([np.asarray(x, dtype=np.int64) for x in parts])) % p)

    types = [{"q": c.field.q, "n": c.n} for c in W.components]
    trace = {
        "kind": "semisimple",
        "components": types,
        "factors": [f.trace for f in factors],
        "ngens": prod.ngens,
        "nrelators": len(prod.relators),
        "exponent_bound": lcm_all(gl_order(t["q"], t["n"]) for t in types),
    }
    return transport(prod, G, forward, backward, trace=trace)


def pring_units(R: FinRing, seed: int = 0, check: bool = True) -> EffectivePresentation:
    """R^x for a ring of prime power order from 1 -> 1+J -> R^x -> (R/J)^x -> 1."""
    J = jacobson_radical(R)
    G = UnitGroup(R)
    if J.is_zero():
        P = semisimple_units(R, seed=seed, check=check)
        P.group = G
        return P
    S, hom = quotient_ring(R, J, name=f"{R.name}/J")
    top = semisimple_units(S, seed=seed, check=check)
    low = unipotent_presentation(R, J, check=check)

    def in_one_plus_j(u):
        if not J.contains(R.sub(u, R.one)):
            raise NotInSubgroup("unit is not congruent to 1 modulo the radical")
        return u

    iota = GroupMap(G, G, lambda u: u, in_one_plus_j, preimage_many=lambda us: us)
    pi = GroupMap(G, top.group, hom, hom.preimage)
    P = extend_presentation(low, top, G, iota, pi, check=check, rng=random.Random(seed))
    P.trace = {
        "kind": "pring",
        "radical_order": J.order,
        "semisimple": top.trace,
        "unipotent": low.trace,
        "ngens": P.ngens,
        "nrelators": len(P.relators),
        "exponent_bound": top.trace["exponent_bound"] * low.trace["exponent_bound"],
    }
    return P


# ---------------------------------------------------------------------------
# arbitrary finite rings

@dataclass
class UnitGroupResult:
    ring: FinRing
    presentation: EffectivePresentation
    trace: dict = field(default_factory=dict)

    @property
    def exponent_bound(self) -> int:
        return self.trace.get("exponent_bound", 1)


def unit_group(R: FinRing, seed: int = 0, check: bool = True) -> UnitGroupResult:
    """Effective presentation of R^x via the primary decomposition R = prod R_p."""
    G = UnitGroup(R)
    comps = p_decomposition(R)
    if not comps:
        P = trivial_presentation(G)
        P.trace = {"kind": "zero ring", "ngens": 0, "nrelators": 0, "exponent_bound": 1}
        return UnitGroupResult(R, P, P.trace)
    if len(comps) == 1:
        P = pring_units(R, seed=seed, check=check)
        trace = {"kind": "units", "primes": [comps[0].p], "components": [P.trace], "ngens": P.ngens,
                 "nrelators": len(P.relators), "exponent_bound": P.trace["exponent_bound"]}
        P.trace = trace
        return UnitGroupResult(R, P, trace)
    parts = [pring_units(c.ring, seed=seed, check=check) for c in comps]
    prod = direct_product_presentation(*parts)
    trace = {
        "kind": "units",
        "primes": [c.p for c in comps],
        "components": [q.trace for q in parts],
        "ngens": prod.ngens,
        "nrelators": len(prod.relators),
        "exponent_bound": lcm_all(q.trace["exponent_bound"] for q in parts),
    }
    P = transport(prod, G, lambda u: tuple(c.hom(u) for c in comps), lambda ys: assemble(R, comps, ys), trace=trace)
    return UnitGroupResult(R, P, trace)


def semisimple_types(S: FinRing, seed: int = 0) -> list[tuple[int, int]]:
    """(q, n) for each simple factor Mat_n(F_q) of a semisimple ring with pS = 0.

    Only the center is split; no matrix units are constructed.
    """
    if S.r == 0:
        return []
    A = algebra_from_pring(S)
    rng = random.Random(seed)
    out = []
    Z = center(A)
    if Z.shape[0] == A.dim:  # commutative: all factors are fields
        for e, theta, f in _central_fields(A, Z, rng, 20 * max(A.dim, 1)):
            out.append((A.p ** (len(f) - 1), 1))
        return out
    for e, theta, f in _central_fields(A, Z, rng, 20 * max(A.dim, 1)):
        m = len(f) - 1
        n = int(round((_block_basis(A, e, e).shape[0] // m) ** 0.5))
        out.append((A.p**m, n))
    return out


def unit_group_order(R: FinRing, seed: int = 0) -> int:
    """|R^x| = prod_p |J_p| * prod |GL_n(F_q)| over the simple factors of R_p/J_p."""
    total = 1
    for c in p_decomposition(R):
        J = jacobson_radical(c.ring)
        S, _ = quotient_ring(c.ring, J) if not J.is_zero() else (c.ring, None)
        total *= J.order
        for q, n in semisimple_types(S, seed=seed):
            total *= gl_order(q, n)
    return total


# ---------------------------------------------------------------------------
# abelianization and K_1

@dataclass
class AbelianQuotientResult:
    """A surjection R^x -> A onto a finite abelian group, with a preimage procedure."""

    ring: FinRing
    group: FinAbGroup
    forward_many: Callable[[list], list]
    preimage: Callable[[tuple], np.ndarray]
    kernel: dict
    trace: dict = field(default_factory=dict)

    @property
    def invariants(self) -> tuple[int, ...]:
        return self.group.invariants

    def forward(self, u) -> tuple[int, ...]:
        return self.forward_many([u])[0]


def unit_abelianization(R: FinRing, seed: int = 0, check: bool = True, units: UnitGroupResult | None = None) -> AbelianQuotientResult:
    """R^x -> R^x / [R^x, R^x] read off the relator matrix of a unit-group presentation."""
    res = units or unit_group(R, seed=seed, check=check)
    P = res.presentation
    A, amap = abelianized_invariants(P.fp, exponent_bound=res.exponent_bound)

    def forward_many(us):
        return [amap(w) for w in P.dlog_many(list(us))]

    def preimage(y):
        return P.exp(amap.lift(y))

    trace = {"units": res.trace, "ngens": P.ngens, "nrelators": len(P.relators)}
    return AbelianQuotientResult(R, A, forward_many, preimage, {"kind": "commutator subgroup"}, trace)


def diagonal_embedding(R: FinRing, S: FinRing, n: int = 3):
    """a -> diag(a, 1, ..., 1) from R into Mat_n(R) in its coordinates."""
    r = R.r

    def embed(a):
        x = S.zero.copy()
        x[0:r] = a
        for i in range(1, n):
            x[(i * n + i) * r : (i * n + i + 1) * r] = R.one
        return x

    return embed


def k1(R: FinRing, seed: int = 0, check: bool = True) -> AbelianQuotientResult:
    """K_1(R) as ab(R^x) / ker(ab(R^x) -> ab(GL_3(R)))."""
    abR = unit_abelianization(R, seed=seed, check=check)
    S = make_matrix_ring(R, 3)
    abS = unit_abelianization(S, seed=seed, check=check)
    embed = diagonal_embedding(R, S, 3)
    A = abR.group
    lifts = [abR.preimage(tuple(1 if j == i else 0 for j in range(A.ngens))) for i in range(A.ngens)]
    images = abS.forward_many([embed(u) for u in lifts])
    fbar = AbHom(A, abS.group, images if images else np.zeros((0, abS.group.ngens)))
    ker = fbar.kernel()
    q = LatticeQuotient(Lattice.full(A.d), ker)
    kernel_group = LatticeQuotient(ker, Lattice.from_generators(A.d, [])).group

    def forward_many(us):
        return [q.proj(y) for y in abR.forward_many(us)]

    def preimage(y):
        return abR.preimage(tuple(int(v) % m for v, m in zip(q.lift(y), A.d)))

    trace = {"ab": list(A.invariants), "ab_matrix_ring": list(abS.invariants), "units": abR.trace}
    kernel = {"kind": "ker f", "invariants": list(kernel_group.invariants)}
    return AbelianQuotientResult(R, q.group, forward_many, preimage, kernel, trace)



def radical(R: FinRing) -> Ideal:
    """J(R) for any finite ring, assembled from the radicals of its primary components."""
    comps = p_decomposition(R)
    gens = []
    for c in comps:
        J = jacobson_radical(c.ring)
        gens += [R.scale(c.idempotent, c.hom.preimage(g)) for g in J.generators()]
    return Ideal(R, Lattice.from_generators(R.d, gens))
