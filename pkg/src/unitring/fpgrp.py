"""Words, finitely presented groups, black box groups and effective presentations.

An effective presentation bundles a finite presentation <X | T> of a black
box group G with a discrete logarithm G -> words and an exponential map
words -> G inducing mutually inverse isomorphisms.  The central
construction is ``extend_presentation``: given 1 -> N -> G -> H -> 1 and
effective presentations of N and H, build one of G on the disjoint union of
the generators.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Sequence

import numpy as np

from .abgrp import FinAbGroup, Lattice, LatticeQuotient, from_relations
from .errors import IndexOutOfRange, InfiniteAbelianization, InfiniteGroup, NotExact


class Word:
    """Free-reduced word: a tuple of (generator index >= 1, nonzero exponent)."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[tuple[int, int]] = ()):
        stack: list[list[int]] = []
        for g, e in letters:
            g, e = int(g), int(e)
            if g < 1:
                raise IndexOutOfRange(f"generator index {g} < 1")
            if e == 0:
                continue
            if stack and stack[-1][0] == g:
                stack[-1][1] += e
                if stack[-1][1] == 0:
                    stack.pop()
            else:
                stack.append([g, e])
        self.letters = tuple((g, e) for g, e in stack)

    @classmethod
    def letter(cls, g: int, e: int = 1) -> "Word":
        return cls([(g, e)])

    @classmethod
    def commutator(cls, a: int, b: int) -> "Word":
        """[a, b] = a b a^-1 b^-1."""
        return cls([(a, 1), (b, 1), (a, -1), (b, -1)])

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word((g, -e) for g, e in reversed(self.letters))

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return self.inverse() ** (-k)
        out = Word()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def shift(self, offset: int) -> "Word":
        if not offset:
            return self
        return Word((g + offset, e) for g, e in self.letters)

    def restrict(self, lo: int, hi: int, offset: int = 0) -> "Word":
        """Keep letters with lo <= index <= hi, reindexed by -offset."""
        return Word((g - offset, e) for g, e in self.letters if lo <= g <= hi)

    def max_index(self) -> int:
        return max((g for g, _ in self.letters), default=0)

    def exponent_vector(self, ngens: int) -> list[int]:
        v = [0] * ngens
        for g, e in self.letters:
            v[g - 1] += e
        return v

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        if not self.letters:
            return "Word(1)"
        return "Word(" + " ".join(f"x{g}" if e == 1 else f"x{g}^{e}" for g, e in self.letters) + ")"

    def to_json(self) -> list[list[int]]:
        return [[g, e] for g, e in self.letters]

    @classmethod
    def from_json(cls, data) -> "Word":
        return cls((int(g), int(e)) for g, e in data)


@dataclass
class FpGroup:
    ngens: int
    relators: list[Word] = field(default_factory=list)

    def __post_init__(self):
        for r in self.relators:
            if r.max_index() > self.ngens:
                raise IndexOutOfRange(f"relator {r} uses a generator beyond {self.ngens}")

    def to_json(self) -> dict:
        return {"ngens": self.ngens, "relators": [r.to_json() for r in self.relators]}

    @classmethod
    def from_json(cls, data) -> "FpGroup":
        return cls(int(data["ngens"]), [Word.from_json(r) for r in data["relators"]])

    def relator_matrix(self) -> list[list[int]]:
        return [r.exponent_vector(self.ngens) for r in self.relators]


# ---------------------------------------------------------------------------
# black box groups

class BlackBoxGroup:
    """Group with multiply, invert and equality; ``key`` is a canonical hashable form."""

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def key(self, a):
        return a

    def eq(self, a, b) -> bool:
        return self.key(a) == self.key(b)

    def is_one(self, a) -> bool:
        return self.eq(a, self.one)

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result


class AbelianBlackBox(BlackBoxGroup):
    def __init__(self, A: FinAbGroup):
        self.A = A

    def mul(self, a, b):
        return self.A.add(a, b)

    def inv(self, a):
        return self.A.neg(a)

    @property
    def one(self):
        return self.A.zero()

    def key(self, a):
        return tuple(a)


class ProductBlackBox(BlackBoxGroup):
    def __init__(self, factors: Sequence[BlackBoxGroup]):
        self.factors = list(factors)

    def mul(self, a, b):
        return tuple(G.mul(x, y) for G, x, y in zip(self.factors, a, b))

    def inv(self, a):
        return tuple(G.inv(x) for G, x in zip(self.factors, a))

    @property
    def one(self):
        return tuple(G.one for G in self.factors)

    def key(self, a):
        return tuple(G.key(x) for G, x in zip(self.factors, a))


@dataclass
class GroupMap:
    source: BlackBoxGroup
    target: BlackBoxGroup
    forward: Callable[[Any], Any]
    preimage: Callable[[Any], Any]
    preimage_many: Callable[[list], list] | None = None

    def __call__(self, x):
        return self.forward(x)

    def preimages(self, xs: list) -> list:
        if self.preimage_many is not None:
            return self.preimage_many(xs)
        return [self.preimage(x) for x in xs]


def word_eval(group: BlackBoxGroup, w: Word, images: Sequence, inv_images: Sequence | None = None):
    """Evaluate w at the given generator images (binary powering)."""
    acc = group.one
    n = len(images)
    for g, e in w:
        if g > n:
            raise IndexOutOfRange(f"generator {g} but only {n} images")
        if e > 0:
            base = images[g - 1]
        else:
            base = inv_images[g - 1] if inv_images is not None else group.inv(images[g - 1])
            e = -e
        acc = group.mul(acc, base if e == 1 else group.pow(base, e))
    return acc


class EffectivePresentation:
    """Presentation <X | T> of a black box group with dlog and exp."""

    def __init__(
        self,
        group: BlackBoxGroup,
        fp: FpGroup,
        gens: Sequence,
        dlog: Callable[[Any], Word],
        exp: Callable[[Word], Any] | None = None,
        trace: dict | None = None,
    ):
        if len(gens) != fp.ngens:
            raise ValueError("number of generator images does not match the presentation")
        self.group = group
        self.fp = fp
        self.gens = list(gens)
        self._dlog = dlog
        self._exp = exp
        self._gens_inv = None
        self._dlog_many = None
        self.trace = trace or {}

    @property
    def ngens(self) -> int:
        return self.fp.ngens

    @property
    def relators(self) -> list[Word]:
        return self.fp.relators

    @property
    def gens_inv(self):
        if self._gens_inv is None:
            self._gens_inv = [self.group.inv(g) for g in self.gens]
        return self._gens_inv

    def dlog(self, g) -> Word:
        if self.ngens == 0:
            return Word()
        return self._dlog(g)

    def dlog_many(self, elems: list) -> list[Word]:
        if self.ngens == 0:
            return [Word() for _ in elems]
        if self._dlog_many is not None:
            return self._dlog_many(elems)
        return [self._dlog(g) for g in elems]

    def set_dlog(self, dlog_many: Callable[[list], list[Word]]):
        """Install a batched dlog; single-element dlog goes through it too."""
        self._dlog_many = dlog_many
        self._dlog = lambda g: dlog_many([g])[0]

    def exp(self, w: Word):
        if self._exp is not None:
            return self._exp(w)
        return word_eval(self.group, w, self.gens, self.gens_inv)

    def random_element(self, rng: random.Random, length: int = 12):
        """exp of a random word (uniformity is not claimed)."""
        if self.ngens == 0:
            return self.group.one
        w = Word((rng.randrange(1, self.ngens + 1), rng.choice([-1, 1]) * rng.randrange(1, 4)) for _ in range(length))
        return self.exp(w)


def trivial_presentation(group: BlackBoxGroup) -> EffectivePresentation:
    return EffectivePresentation(group, FpGroup(0, []), [], lambda g: Word(), lambda w: group.one)


def transport(
    pres: EffectivePresentation,
    group: BlackBoxGroup,
    forward: Callable[[Any], Any],
    backward: Callable[[Any], Any],
    trace: dict | None = None,
) -> EffectivePresentation:
    """Move a presentation of H to G along an isomorphism forward: G -> H."""
    out = EffectivePresentation(
        group,
        pres.fp,
        [backward(g) for g in pres.gens],
        lambda u: pres.dlog(forward(u)),
        lambda w: backward(pres.exp(w)),
        trace=pres.trace if trace is None else trace,
    )
    if pres._dlog_many is not None:
        out.set_dlog(lambda us: pres.dlog_many([forward(u) for u in us]))
    return out


# ---------------------------------------------------------------------------
# extensions

def extend_presentation(
    pres_n: EffectivePresentation,
    pres_h: EffectivePresentation,
    G: BlackBoxGroup,
    iota: GroupMap,
    pi: GroupMap,
    check: bool = True,
    rng: random.Random | None = None,
) -> EffectivePresentation:
    """Effective presentation of G from 1 -> N -iota-> G -pi-> H -> 1.

    Generators are X (lifts of H's generators) followed by Y (images of N's
    generators).  Relators: w_r for r in T, the relators U of N, and
    w_{x,y}^-1 x y x^-1 for x in X, y in Y.
    """
    nx, ny = pres_h.ngens, pres_n.ngens
    gx = [pi.preimage(h) for h in pres_h.gens]
    gy = [iota(n) for n in pres_n.gens]
    if check:
        _spot_check_exact(pres_n, pres_h, G, iota, pi, gx, rng or random.Random(0))
    images = gx + gy
    inv_images = [G.inv(g) for g in images]

    def exp(w: Word):
        return word_eval(G, w, images, inv_images)

    def dlog_n_of(g) -> Word:
        if G.is_one(g):
            return Word()
        n = iota.preimage(g)
        return pres_n.dlog(n).shift(nx)

    # elements of N whose dlogs enter the relators, resolved in one batch
    targets = [word_eval(G, r, gx, inv_images[:nx]) for r in pres_h.relators]
    pairs = [(i, j) for i in range(nx) for j in range(ny)]
    targets += [G.mul(G.mul(gx[i], gy[j]), inv_images[i]) for i, j in pairs]
    if pres_n.ngens:
        words = [w.shift(nx) for w in pres_n.dlog_many(iota.preimages(targets))]
    else:
        for t in targets:
            if not G.is_one(t):
                raise NotExact("element expected in the trivial kernel")
        words = [Word() for _ in targets]
    nt = len(pres_h.relators)
    relators: list[Word] = [words[a].inverse() * r for a, r in enumerate(pres_h.relators)]
    relators += [s.shift(nx) for s in pres_n.relators]
    for a, (i, j) in enumerate(pairs):
        relators.append(words[nt + a].inverse() * Word([(i + 1, 1), (nx + j + 1, 1), (i + 1, -1)]))
    relators = [r for r in relators if r]
    bound = len(pres_n.relators) + len(pres_h.relators) + nx * ny
    assert len(relators) <= bound and nx + ny <= pres_n.ngens + pres_h.ngens

    def dlog(g) -> Word:
        wp = pres_h.dlog(pi(g))
        gp = G.mul(exp(wp.inverse()), g)
        return wp * dlog_n_of(gp)

    def dlog_many(gs: list) -> list[Word]:
        wps = pres_h.dlog_many([pi(g) for g in gs])
        gps = [G.mul(exp(wp.inverse()), g) for wp, g in zip(wps, gs)]
        if not pres_n.ngens:
            return wps
        tails = pres_n.dlog_many(iota.preimages(gps))
        return [wp * t.shift(nx) for wp, t in zip(wps, tails)]

    trace = {
        "kind": "extension",
        "ngens": nx + ny,
        "nrelators": len(relators),
        "relator_bound": bound,
        "kernel": pres_n.trace,
        "quotient": pres_h.trace,
    }
    out = EffectivePresentation(G, FpGroup(nx + ny, relators), images, dlog, exp, trace=trace)
    out._dlog_many = dlog_many
    return out


def _spot_check_exact(pres_n, pres_h, G, iota, pi, gx, rng, pairs: int = 50):
    H = pres_h.group
    for h, g in zip(pres_h.gens, gx):
        if not H.eq(pi(g), h):
            raise NotExact("pi-preimage does not map back")
    for n in pres_n.gens:
        if not H.is_one(pi(iota(n))):
            raise NotExact("pi o iota is not trivial on a generator of N")
        if not pres_n.group.eq(iota.preimage(iota(n)), n):
            raise NotExact("iota-preimage does not round-trip")
    if pres_n.ngens:
        N = pres_n.group
        for _ in range(pairs):
            a = pres_n.random_element(rng, 4)
            b = pres_n.random_element(rng, 4)
            if not G.eq(iota(N.mul(a, b)), G.mul(iota(a), iota(b))):
                raise NotExact("iota is not a homomorphism")


def chain_extensions(layers: Sequence[dict], G0_check: bool = True) -> EffectivePresentation:
    """Iterate extend_presentation along 1 = G_0 <= G_1 <= ... <= G_l.

    Each layer is a dict with keys ``group`` (G_i), ``quotient`` (effective
    presentation of A_i), ``pi`` (GroupMap G_i -> A_i) and ``iota``
    (GroupMap G_{i-1} -> G_i).  The first layer's kernel is trivial.
    """
    pres = None
    sizes = []
    for i, layer in enumerate(layers):
        G = layer["group"]
        if pres is None:
            pres = trivial_presentation(layer.get("kernel_group", G))
        pres = extend_presentation(pres, layer["quotient"], G, layer["iota"], layer["pi"], check=layer.get("check", True))
        if layer.get("dlog_many") is not None:
            pres.set_dlog(layer["dlog_many"])
        sizes.append({"ngens": layer["quotient"].ngens, "nrelators": len(layer["quotient"].relators)})
    if pres is None:
        raise ValueError("chain_extensions needs at least one layer")
    n = max((max(s["ngens"], 1) for s in sizes), default=1)
    n = max([n] + [int(np.ceil(np.sqrt(max(s["nrelators"], 1)))) for s in sizes])
    l = len(layers)
    assert pres.ngens <= l * n and len(pres.relators) <= 2 * l * l * n * n
    pres.trace = {"kind": "chain", "layers": sizes, "ngens": pres.ngens, "nrelators": len(pres.relators), "n": n}
    return pres


def direct_product_presentation(*presentations: EffectivePresentation) -> EffectivePresentation:
    """Presentation of A_1 x ... x A_k: blocks of generators, their relators, cross commutators."""
    group = ProductBlackBox([p.group for p in presentations])
    offsets = []
    total = 0
    for p in presentations:
        offsets.append(total)
        total += p.ngens
    relators: list[Word] = []
    gens = []
    for k, p in enumerate(presentations):
        relators += [r.shift(offsets[k]) for r in p.relators]
        for g in p.gens:
            elem = [q.group.one for q in presentations]
            elem[k] = g
            gens.append(tuple(elem))
    for a in range(len(presentations)):
        for b in range(a + 1, len(presentations)):
            for i in range(presentations[a].ngens):
                for j in range(presentations[b].ngens):
                    relators.append(Word.commutator(offsets[a] + i + 1, offsets[b] + j + 1))

    def dlog(x) -> Word:
        w = Word()
        for k, p in enumerate(presentations):
            w = w * p.dlog(x[k]).shift(offsets[k])
        return w

    def exp(w: Word):
        return tuple(
            p.exp(w.restrict(offsets[k] + 1, offsets[k] + p.ngens, offsets[k])) for k, p in enumerate(presentations)
        )

    def dlog_many(xs) -> list[Word]:
        out = [Word() for _ in xs]
        for k, p in enumerate(presentations):
            for i, w in enumerate(p.dlog_many([x[k] for x in xs])):
                out[i] = out[i] * w.shift(offsets[k])
        return out

    trace = {"kind": "product", "factors": [p.trace for p in presentations], "ngens": total, "nrelators": len(relators)}
    out = EffectivePresentation(group, FpGroup(total, relators), gens, dlog, exp, trace=trace)
    if any(p._dlog_many is not None for p in presentations):
        out.set_dlog(dlog_many)
    return out


# ---------------------------------------------------------------------------
# abelianization

class AbelianizationMap:
    """Word -> coordinates in the abelianization, with lifting back to words."""

    def __init__(self, ngens: int, quotient: LatticeQuotient):
        self.ngens = ngens
        self.quotient = quotient
        self.group = quotient.group

    def __call__(self, w: Word) -> tuple[int, ...]:
        if self.ngens == 0:
            return ()
        return self.quotient.proj(w.exponent_vector(self.ngens))

    def from_vector(self, v) -> tuple[int, ...]:
        if self.ngens == 0:
            return ()
        return self.quotient.proj(v)

    def lift(self, y) -> Word:
        v = self.quotient.lift(y)
        return Word((i + 1, int(c)) for i, c in enumerate(v))


def abelianized_invariants(P: FpGroup, exponent_bound: int | None = None) -> tuple[FinAbGroup, AbelianizationMap]:
    """Abelian invariants of P from its relator exponent matrix.

    When ``exponent_bound`` is given it must be a multiple of the exponent of
    the abelianization; row reduction then happens modulo it.
    """
    n = P.ngens
    if n == 0:
        q = LatticeQuotient(Lattice.full(()), Lattice.full(()))
        return q.group, AbelianizationMap(0, q)
    rows = P.relator_matrix()
    if exponent_bound is None:
        try:
            _, qmap = from_relations(n, rows if rows else np.zeros((0, n), dtype=int))
        except InfiniteGroup as exc:
            raise InfiniteAbelianization(str(exc)) from exc
        q = qmap.quotient
    else:
        d = (int(exponent_bound),) * n
        q = LatticeQuotient(Lattice.full(d), Lattice.from_generators(d, rows))
    return q.group, AbelianizationMap(n, q)


def coset_enumeration_order(P: FpGroup, max_cosets: int = 200_000) -> int:
    from .todd_coxeter import enumerate_cosets

    return enumerate_cosets(P, max_cosets)


def orbit_closure(group: BlackBoxGroup, gens: Sequence, limit: int) -> dict:
    """All products of the generators (BFS), keyed by group.key; raises if beyond limit."""
    from .errors import TooLarge

    one = group.one
    seen = {group.key(one): one}
    frontier = [one]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = group.mul(x, g)
                k = group.key(y)
                if k not in seen:
                    seen[k] = y
                    if len(seen) > limit:
                        raise TooLarge(f"closure exceeds {limit} elements")
                    nxt.append(y)
        frontier = nxt
    return seen
